"""Exhaustive desk-scale checks of the extremality and bound claims.

Every check yields :class:`CheckRecord` objects; failures are recorded, not
raised.  Sweeps are exhaustive up to explicit caps and never sampled.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator, Sequence

from .engine import HypothesisError, Verdict, is_extremal, multiplier
from .exponents import ClassRow, beta, d_exponent, witt
from .groups import GroupSpec, Theorem
from .hall import ResourceLimitError, nested_count_containing, nested_hall_count

__all__ = [
    "PASS",
    "FAIL",
    "OUT_OF_HYPOTHESIS",
    "SKIPPED",
    "CheckRecord",
    "Report",
    "partitions",
    "ClassificationReport",
    "classify_extremal",
    "EqualityI",
    "check_equality_I",
    "find_inequality_counterexample",
    "check_bounds",
    "verify_difference_monotonicity",
    "extremality_records",
    "equality_records",
    "counterexample_records",
]

PASS, FAIL, OUT_OF_HYPOTHESIS, SKIPPED = "pass", "fail", "out_of_hypothesis", "skipped"
DEFAULT_MAX_M = 7


@dataclass(frozen=True)
class CheckRecord:
    check: str
    input: dict
    relation: str
    lhs: object
    rhs: object
    status: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, default=_jsonable)


def _jsonable(obj):
    if isinstance(obj, (tuple, frozenset, set)):
        return list(obj)
    return str(obj)


def _record(check, inputs, relation, lhs, rhs, ok, note="") -> CheckRecord:
    return CheckRecord(check, dict(inputs), relation, lhs, rhs, PASS if ok else FAIL, note)


@dataclass
class Report:
    records: list[CheckRecord] = field(default_factory=list)
    caps: dict = field(default_factory=dict)

    def extend(self, records: Iterable[CheckRecord]) -> "Report":
        self.records.extend(records)
        return self

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, OUT_OF_HYPOTHESIS: 0, SKIPPED: 0}
        for r in self.records:
            out[r.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return not any(r.status == FAIL for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def to_jsonl(self) -> str:
        lines = [r.to_json() for r in self.records]
        lines.append(json.dumps({"summary": self.counts(), "caps": self.caps, "ok": self.ok}, sort_keys=True))
        return "\n".join(lines)


def partitions(m: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``m`` as nonincreasing tuples, in reverse lexicographic order."""
    if m < 0:
        raise ValueError("m must be >= 0")

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    yield from rec(m, m)


# -- extremality ---------------------------------------------------------------


@dataclass(frozen=True)
class ClassificationReport:
    p: int
    m: int
    row: ClassRow
    n: int
    theorem: Theorem
    target_exponent: int
    orders: tuple[tuple[tuple[int, ...], int], ...]  # (partition, p-exponent of the multiplier)

    @property
    def max_exponent(self) -> int:
        return max(e for _, e in self.orders)

    @property
    def maximizers(self) -> tuple[tuple[int, ...], ...]:
        top = self.max_exponent
        return tuple(part for part, e in self.orders if e == top)

    @property
    def unique_elementary_maximizer(self) -> bool:
        return self.maximizers == ((1,) * self.m,) and self.max_exponent == self.target_exponent

    def attaining(self) -> tuple[tuple[int, ...], ...]:
        return tuple(part for part, e in self.orders if e == self.target_exponent)

    def records(self) -> list[CheckRecord]:
        inputs = {"p": self.p, "m": self.m, "row": tuple(self.row), "n": self.n}
        out = []
        for part, e in self.orders:
            elementary = all(a == 1 for a in part)
            out.append(
                _record(
                    "extremal",
                    {**inputs, "partition": part},
                    "exponent == target iff elementary",
                    e,
                    self.target_exponent,
                    (e == self.target_exponent) == elementary and e <= self.target_exponent,
                )
            )
        return out


def classify_extremal(p: int, m: int, row, n: int = 1) -> ClassificationReport:
    """Multiplier order of every Z_{p^a1} *n* ... *n* Z_{p^at} with sum(a) = m."""
    row = ClassRow(row)
    if m < 1:
        raise ValueError("m must be >= 1")
    orders = []
    target = theorem = None
    for part in partitions(m):
        v = is_extremal(GroupSpec.p_group(p, part, n), row)
        if v.verdict is Verdict.HYPOTHESES_VIOLATED:
            raise HypothesisError(v.theorem, v.conditions)
        target, theorem = v.target_exponent, v.theorem
        orders.append((part, v.actual_exponent))
    return ClassificationReport(p, m, row, n, theorem, target, tuple(orders))


def extremality_records(p: int, m_max: int, row, n: int = 1) -> list[CheckRecord]:
    out = []
    for m in range(1, m_max + 1):
        try:
            rep = classify_extremal(p, m, row, n)
        except HypothesisError as exc:
            out.append(
                CheckRecord(
                    "extremal",
                    {"p": p, "m": m, "row": tuple(ClassRow(row)), "n": n},
                    "hypotheses",
                    None,
                    None,
                    OUT_OF_HYPOTHESIS,
                    str(exc),
                )
            )
            continue
        out.extend(rep.records())
    return out


# -- the corrected abelian argument ---------------------------------------------


@dataclass(frozen=True)
class EqualityI:
    c: int
    partition: tuple[int, ...]
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_equality_I(c: int, partition: Sequence[int]) -> EqualityI:
    """Both sides of the telescoped order identity for Z_{p^a1} + ... + Z_{p^ad}.

    lhs = sum_{i=d+1}^{n} (b_i - b_{i-1}); rhs = sum_{i=2}^{d} (a_i - 1)(b_i - b_{i-1}),
    with b_i = chi_{c+1}(i) and n = sum(a).
    """
    part = tuple(partition)
    if not part or any(a < 1 for a in part) or any(a < b for a, b in zip(part, part[1:])):
        raise ValueError(f"not a partition: {part}")
    n, d = sum(part), len(part)
    b = [witt(c + 1, i) for i in range(n + 1)]
    lhs = sum(b[i] - b[i - 1] for i in range(d + 1, n + 1))
    rhs = sum((part[i - 1] - 1) * (b[i] - b[i - 1]) for i in range(2, d + 1))
    return EqualityI(c, part, lhs, rhs)


def find_inequality_counterexample(c: int, bound: int = 100) -> tuple[int, int, int] | None:
    """Smallest i <= bound with i * chi_{c+1}(i) >= chi_{c+1}(i+1), as (i, lhs, rhs)."""
    for i in range(1, bound + 1):
        lhs, rhs = i * witt(c + 1, i), witt(c + 1, i + 1)
        if lhs >= rhs:
            return i, lhs, rhs
    return None


# -- bounds ------------------------------------------------------------------------


def check_bounds(p: int, m_max: int, row) -> list[CheckRecord]:
    """Order bounds for every abelian group of order p^m, m <= m_max.

    For abelian G the verbal subgroup and derived subgroup are trivial, so
    the bounds constrain the multiplier alone.
    """
    row = ClassRow(row)
    out = []
    elem_cache: dict[int, int] = {}

    def elem(k: int) -> int:
        if k not in elem_cache:
            elem_cache[k] = multiplier(GroupSpec.p_group(p, (1,) * k), row).p_exponent if k else 0
        return elem_cache[k]

    for m in range(1, m_max + 1):
        for part in partitions(m):
            e = multiplier(GroupSpec.p_group(p, part), row).p_exponent
            d = len(part)
            inputs = {"p": p, "m": m, "row": tuple(row), "partition": part}
            lo, hi = beta(row, d), beta(row, m)
            out.append(_record("polynilpotent_bounds", inputs, "beta_d <= e <= beta_m", e, (lo, hi), lo <= e <= hi))
            lo_e, hi_e = elem(d), elem(m)
            out.append(
                _record(
                    "elementary_sandwich",
                    inputs,
                    "e(Z_p^d) <= e <= e(Z_p^m)",
                    e,
                    (lo_e, hi_e),
                    lo_e <= e <= hi_e,
                )
            )
            if len(row) == 1:
                c = row.head
                lo, hi = witt(c + 1, d), witt(c + 1, m)
                out.append(_record("nilpotent_bounds", inputs, "chi_{c+1}(d) <= e <= chi_{c+1}(m)", e, (lo, hi), lo <= e <= hi))
            if tuple(row) == (1,):
                lo, hi = d * (d - 1) // 2, m * (m - 1) // 2
                out.append(_record("schur_bounds", inputs, "d(d-1)/2 <= e <= m(m-1)/2", e, (lo, hi), lo <= e <= hi))
            elementary = all(a == 1 for a in part)
            out.append(
                _record(
                    "upper_tightness",
                    inputs,
                    "e == beta_m iff elementary",
                    e == beta(row, m),
                    elementary,
                    (e == beta(row, m)) == elementary,
                )
            )
    return out


# -- monotonicity of the d-differences ----------------------------------------------


def verify_difference_monotonicity(row, n: int, i_max: int, use_hall: bool = True) -> list[CheckRecord]:
    """d_j - d_{j-1} >= d_i - d_{i-1} for 2 <= i <= j <= i_max.

    With ``use_hall`` the differences are recomputed by enumerating the nested
    commutator sets, both as |A_s(i)| - |A_s(i-1)| and as the number of
    elements of A_s(i) involving x_i.  Cap overruns are recorded as skipped.
    """
    row = ClassRow(row)
    inputs = {"row": tuple(row), "n": n, "i_max": i_max}
    d = [d_exponent(row, n, i) for i in range(i_max + 1)]
    diff = [None] + [d[i] - d[i - 1] for i in range(1, i_max + 1)]
    violation = None
    for i in range(2, i_max + 1):
        for j in range(i, i_max + 1):
            if diff[j] < diff[i]:
                violation = (i, j)
                break
        if violation:
            break
    out = [
        _record(
            "difference_monotonicity",
            inputs,
            "d_j - d_{j-1} >= d_i - d_{i-1}",
            diff[violation[1]] if violation else diff[2:],
            diff[violation[0]] if violation else None,
            violation is None,
            f"first violation at (i, j) = {violation}" if violation else "",
        )
    ]
    if not use_hall:
        return out
    for i in range(1, i_max + 1):
        rec_inputs = {**inputs, "i": i}
        try:
            count = nested_hall_count(row, n, i)
            containing = nested_count_containing(row, n, i)
        except ResourceLimitError as exc:
            out.append(CheckRecord("nested_hall", rec_inputs, "|A_s| == d_i", None, d[i], SKIPPED, str(exc)))
            continue
        out.append(_record("nested_hall", rec_inputs, "|A_s| == d_i", count, d[i], count == d[i]))
        out.append(
            _record(
                "nested_hall_difference",
                rec_inputs,
                "#{a in A_s : x_i occurs in a} == d_i - d_{i-1}",
                containing,
                diff[i],
                containing == diff[i],
            )
        )
    return out


# -- named suites used by the CLI -------------------------------------------------


def equality_records(n_max: int = 8, c_max: int = 3) -> list[CheckRecord]:
    out = []
    for c in range(1, c_max + 1):
        for n in range(1, n_max + 1):
            for part in partitions(n):
                r = check_equality_I(c, part)
                elementary = all(a == 1 for a in part)
                out.append(
                    _record(
                        "equality_I",
                        {"c": c, "partition": part},
                        "holds iff elementary",
                        (r.lhs, r.rhs),
                        elementary,
                        r.holds == elementary,
                    )
                )
    return out


def counterexample_records(c_max: int = 4, bound: int = 100) -> list[CheckRecord]:
    out = []
    for c in range(1, c_max + 1):
        hit = find_inequality_counterexample(c, bound)
        out.append(
            _record(
                "inequality_counterexample",
                {"c": c, "bound": bound},
                "exists i: i*chi_{c+1}(i) >= chi_{c+1}(i+1)",
                hit,
                None,
                hit is not None,
                f"i={hit[0]}: {hit[1]} >= {hit[2]}" if hit else "none found",
            )
        )
    return out
