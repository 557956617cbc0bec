"""Closed-form multiplier structures and extremality verdicts.

Each ``multiplier_*`` function implements one structure theorem and refuses
inputs outside its hypotheses; :func:`multiplier` picks the most specific
applicable one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Sequence

from .exponents import (
    ClassRow,
    beta,
    d_exponent,
    e_exponent,
    f_exponent,
    g_exponent,
    h_value,
    nested_tail,
    witt,
)
from .groups import (
    AbelianStructure,
    Condition,
    GroupSpec,
    PPowerOrder,
    Theorem,
    check_hypotheses,
    order_of,
)

__all__ = [
    "HypothesisError",
    "MultiplierReport",
    "multiplier_abelian_nilpotent",
    "multiplier_abelian_polynilpotent",
    "multiplier_product_c_nilpotent",
    "multiplier_product_polynilpotent",
    "multiplier_multiproduct_polynilpotent",
    "multiplier",
    "Verdict",
    "ExtremalVerdict",
    "is_extremal",
    "elementary_reference_classes",
]


class HypothesisError(ValueError):
    def __init__(self, theorem: Theorem, conditions: Sequence[Condition]):
        self.theorem = theorem
        self.conditions = tuple(conditions)
        failed = "; ".join(f"{c.name} ({c.detail})" for c in self.violated)
        super().__init__(f"{theorem.label} does not apply: {failed}")

    @property
    def violated(self) -> tuple[Condition, ...]:
        return tuple(c for c in self.conditions if not c.satisfied)


@dataclass(frozen=True)
class MultiplierReport:
    structure: AbelianStructure
    order: object
    theorem: Theorem
    exponents: dict[str, tuple[tuple[int, int], ...]]
    conditions: tuple[Condition, ...] = ()
    agrees_with: tuple[Theorem, ...] = field(default=())

    @property
    def p_exponent(self) -> int | None:
        return self.order.exponent if isinstance(self.order, PPowerOrder) else None

    def summary(self) -> str:
        theorems = "/".join(t.value for t in (self.theorem,) + self.agrees_with)
        label = f"Thm {theorems}" + (" agree" if self.agrees_with else "")
        return f"{self.structure}, order {self.order}, {label}"


def _require(g: GroupSpec, row, theorem: Theorem) -> tuple[Condition, ...]:
    conds = tuple(check_hypotheses(g, row, theorem))
    if not all(c.satisfied for c in conds):
        raise HypothesisError(theorem, conds)
    return conds


def _prime_hint(g: GroupSpec) -> int | None:
    pe = g.p_exponents()
    return pe[0] if pe else None


def _ladder(g: GroupSpec, seq: dict[int, int], base: int) -> AbelianStructure:
    """Z^(seq[base]) + Z_{r_1}^(seq[base+1]-seq[base]) + ... for the torsion r_i of g."""
    summands = []
    for j, r in enumerate(g.torsion_orders, start=1):
        summands.append((r, seq[base + j] - seq[base + j - 1]))
    return AbelianStructure.from_summands(seq[base], summands)


def _report(g, structure, theorem, name, seq, conds, agrees=()) -> MultiplierReport:
    return MultiplierReport(
        structure=structure,
        order=order_of(structure, _prime_hint(g)),
        theorem=theorem,
        exponents={name: tuple(sorted(seq.items()))},
        conditions=conds,
        agrees_with=tuple(agrees),
    )


def multiplier_abelian_nilpotent(g: GroupSpec, c: int) -> MultiplierReport:
    """c-nilpotent multiplier of a finite abelian group Z_{n_1} + ... + Z_{n_k}."""
    conds = _require(g, (c,), Theorem.T2_7)
    orders = g.torsion_orders
    b = {i: witt(c + 1, i) for i in range(1, len(orders) + 1)}
    summands = [(orders[i - 1], b[i] - b[i - 1]) for i in range(2, len(orders) + 1)]
    structure = AbelianStructure.from_summands(0, summands)
    return _report(g, structure, Theorem.T2_7, "b", b, conds)


def multiplier_abelian_polynilpotent(g: GroupSpec, row) -> MultiplierReport:
    """Polynilpotent multiplier of Z^(m) + Z_{n_1} + ... + Z_{n_k}."""
    row = ClassRow(row)
    conds = _require(g, row, Theorem.T2_11)
    m, k = g.free_rank, len(g.torsion_orders)
    seq = {i: beta(row, i) for i in range(m, m + k + 1)}
    return _report(g, _ladder(g, seq, m), Theorem.T2_11, "beta", seq, conds)


def _product_class(g: GroupSpec) -> int:
    n = g.uniform_class
    if n is None:
        raise HypothesisError(
            Theorem.T2_14, [Condition("uniform product", False, f"classes {g.classes}")]
        )
    return n


def multiplier_product_c_nilpotent(g: GroupSpec, c: int, case: Theorem | None = None) -> MultiplierReport:
    """c-nilpotent multiplier of Z *n* ... *n* Z *n* Z_{r_1} *n* ... *n* Z_{r_t}.

    c >= n uses the f-exponents, n >= c the g-exponents; at n == c both are
    computed when their hypotheses hold and must agree.  ``case`` restricts
    the computation to one of T2_13, T2_15i, T2_15ii.
    """
    n = _product_class(g)
    m, t = g.free_rank, len(g.torsion_orders)
    if case is not None:
        candidates = [Theorem(case)]
        if candidates[0] not in (Theorem.T2_13, Theorem.T2_15i, Theorem.T2_15ii):
            raise ValueError(f"{candidates[0].label} is not a c-nilpotent product theorem")
    else:
        candidates = [Theorem.T2_13, Theorem.T2_15ii] if c >= n else []
        candidates += [Theorem.T2_15i] if n >= c else []
    results = {}
    failures = {}
    for thm in candidates:
        try:
            conds = _require(g, (c,), thm)
        except HypothesisError as exc:
            failures[thm] = exc
            continue
        if thm is Theorem.T2_15i:
            name, seq = "g", {k: g_exponent(c, n, m + k) for k in range(t + 1)}
        else:
            name, seq = "f", {k: f_exponent(c, n, m + k) for k in range(t + 1)}
        results[thm] = _report(g, _ladder(g, seq, 0), thm, name, seq, conds)
    if not results:
        raise next(iter(failures.values()))
    structures = {r.structure for r in results.values()}
    assert len(structures) == 1, f"theorems disagree on {g}, c={c}: {results}"
    if n == c and Theorem.T2_15ii in results and Theorem.T2_15i in results:
        primary = Theorem.T2_15ii
    elif Theorem.T2_13 in results:
        primary = Theorem.T2_13
    else:
        primary = next(iter(results))
    others = tuple(t for t in results if t is not primary)
    rep = results[primary]
    return MultiplierReport(rep.structure, rep.order, primary, rep.exponents, rep.conditions, others)


def multiplier_product_polynilpotent(g: GroupSpec, row) -> MultiplierReport:
    """Polynilpotent multiplier of a uniform nth nilpotent product (c_1 >= n)."""
    row = ClassRow(row)
    n = _product_class(g)
    conds = _require(g, row, Theorem.T2_14)
    m, t = g.free_rank, len(g.torsion_orders)
    seq = {i: d_exponent(row, n, i) for i in range(m, m + t + 1)}
    return _report(g, _ladder(g, seq, m), Theorem.T2_14, "d", seq, conds)


def multiplier_multiproduct_polynilpotent(g: GroupSpec, row) -> MultiplierReport:
    """Polynilpotent multiplier of A_1 *n_1* A_2 *n_2* ... *n_k* A_{k+1}."""
    row = ClassRow(row)
    conds = _require(g, row, Theorem.T2_16)
    classes = g.class_list
    t, k = g.free_rank, len(g.factors) - 1
    if k < 1:
        # a single cyclic factor: nothing to commute
        return _report(g, AbelianStructure(), Theorem.T2_16, "e", {0: 0}, conds)
    e = {0: e_exponent(row, classes, t, 0)}
    for i in range(max(t, 1), k + 1):
        e[i] = e_exponent(row, classes, t, i)
    summands = []
    prev = e[0]
    for i, modulus in zip(range(t, k + 1), g.torsion_orders):
        cur = e[i] if i >= 1 else e[0]
        summands.append((modulus, cur - prev))
        prev = cur
    structure = AbelianStructure.from_summands(e[0], summands)
    return _report(g, structure, Theorem.T2_16, "e", e, conds)


def multiplier(g: GroupSpec, row) -> MultiplierReport:
    """Dispatch to the most specific structure theorem for ``g`` and ``row``."""
    row = ClassRow(row)
    n = g.uniform_class
    if n == 1:
        if len(row) == 1 and g.is_finite:
            return multiplier_abelian_nilpotent(g, row.head)
        return multiplier_abelian_polynilpotent(g, row)
    if n is None:
        return multiplier_multiproduct_polynilpotent(g, row)
    if len(row) == 1:
        return multiplier_product_c_nilpotent(g, row.head)
    return multiplier_product_polynilpotent(g, row)


# -- extremality -------------------------------------------------------------


class Verdict(str, enum.Enum):
    ATTAINS = "attains maximum"
    DOES_NOT_ATTAIN = "does not attain"
    HYPOTHESES_VIOLATED = "hypotheses violated"


@dataclass(frozen=True)
class ExtremalVerdict:
    verdict: Verdict
    theorem: Theorem
    p: int | None
    alphas: tuple[int, ...]
    target_exponent: int | None
    actual_exponent: int | None
    conditions: tuple[Condition, ...]

    @property
    def elementary(self) -> bool:
        return bool(self.alphas) and all(a == 1 for a in self.alphas)

    @property
    def consistent(self) -> bool:
        """The verdict agrees with 'attains iff elementary' (vacuous when refused)."""
        if self.verdict is Verdict.HYPOTHESES_VIOLATED:
            return True
        return (self.verdict is Verdict.ATTAINS) == self.elementary


def elementary_reference_classes(classes: Sequence[int], m: int) -> tuple[int, ...]:
    """Class sequence of length m-1 for the m-copy comparison group.

    The given prefix is kept and padded by repeating its last class.
    """
    classes = tuple(classes)
    if m <= 1:
        return ()
    if not classes:
        raise ValueError("cannot extend an empty class list")
    if len(classes) >= m - 1:
        return classes[: m - 1]
    return classes + (classes[-1],) * (m - 1 - len(classes))


def _multiproduct_target(row: ClassRow, ref: tuple[int, ...], m: int) -> int:
    """e_{m-1} for Z_p *n_1* ... *n_{m-1}* Z_p, checked against the literal h_0 reading."""
    if m <= 1:
        return 0
    via_pipeline = e_exponent(row, ref, 0, m - 1)
    # literal sum from j=0 with n_0 := n_1; h_0 is the empty difference chi(1)-chi(0)
    h0 = sum(witt(row.head + lam, 1) - witt(row.head + lam, 0) for lam in range(1, ref[0] + 1))
    literal = nested_tail(row.tail, h0 + sum(h_value(row, ref, j) for j in range(1, m)))
    assert via_pipeline == literal, (via_pipeline, literal)
    return via_pipeline


def is_extremal(g: GroupSpec, row, reference_classes: Sequence[int] | None = None) -> ExtremalVerdict:
    """Compare the multiplier order of a cyclic p-group product with its maximum.

    The maximum is p^beta_m (direct sums), p^d_m (uniform class n <= c_1),
    p^g_m (c-nilpotent, n >= c), or p^e_{m-1} (mixed classes), where m is the
    total exponent.  For mixed classes the comparison group uses
    ``reference_classes`` (default: :func:`elementary_reference_classes`).
    """
    row = ClassRow(row)
    pe = g.p_exponents()
    n = g.uniform_class
    if n == 1:
        theorem = Theorem.C3_4
    elif n is None:
        theorem = Theorem.T3_2
    elif row.head >= n:
        theorem = Theorem.T3_1
    elif len(row) == 1:
        theorem = Theorem.T3_3
    else:
        theorem = Theorem.T3_1
    conds = tuple(check_hypotheses(g, row, theorem))
    alphas = pe[1] if pe else ()
    p = pe[0] if pe else None
    if not all(c.satisfied for c in conds):
        return ExtremalVerdict(Verdict.HYPOTHESES_VIOLATED, theorem, p, alphas, None, None, conds)
    m = sum(alphas)
    if theorem is Theorem.C3_4:
        target = beta(row, m)
        report = multiplier_abelian_polynilpotent(g, row)
    elif theorem is Theorem.T3_1:
        target = d_exponent(row, n, m)
        report = multiplier_product_polynilpotent(g, row)
        if len(row) == 1 and n == row.head:
            assert target == g_exponent(row.head, n, m)
    elif theorem is Theorem.T3_3:
        target = g_exponent(row.head, n, m)
        report = multiplier_product_c_nilpotent(g, row.head)
        # the m-copy instance under the n >= c structure theorem reaches g_m
        elementary = multiplier_product_c_nilpotent(GroupSpec.p_group(p, (1,) * m, n), row.head)
        assert elementary.p_exponent == target, (elementary.p_exponent, target)
    else:
        ref = tuple(reference_classes) if reference_classes is not None else None
        if ref is None:
            ref = elementary_reference_classes(g.class_list, m)
        if len(ref) != max(m - 1, 0) or tuple(ref[: len(g.class_list)]) != g.class_list:
            raise ValueError(
                f"reference classes {ref} must have length {m - 1} and start with {g.class_list}"
            )
        target = _multiproduct_target(row, ref, m)
        report = multiplier_multiproduct_polynilpotent(g, row)
    actual = report.p_exponent
    verdict = Verdict.ATTAINS if actual == target else Verdict.DOES_NOT_ATTAIN
    return ExtremalVerdict(verdict, theorem, p, alphas, target, actual, conds)
