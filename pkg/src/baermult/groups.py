"""Symbolic groups, computed abelian structures, and the group grammar.

Grammar (whitespace ignored)::

    group    := sum | product
    sum      := term ("+" term)*
    product  := term (prodop term)*
    prodop   := "*" INT "*"
    term     := "Z" | "Z^" INT | "Z_" INT | "Z_{" INT ("^" INT)? "}"
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sympy import factorint, isprime, primerange

from .exponents import ClassRow

__all__ = [
    "Theorem",
    "CyclicFactor",
    "GroupSpec",
    "VarietySpec",
    "AbelianStructure",
    "PPowerOrder",
    "CompositeOrder",
    "InfiniteOrder",
    "INFINITE",
    "GroupSyntaxError",
    "GroupInvariantError",
    "Condition",
    "parse_group",
    "render_group",
    "check_hypotheses",
    "order_of",
]


class Theorem(str, enum.Enum):
    T2_7 = "2.7"
    T2_11 = "2.11"
    T2_13 = "2.13"
    T2_14 = "2.14"
    T2_15i = "2.15(i)"
    T2_15ii = "2.15(ii)"
    T2_16 = "2.16"
    T3_1 = "3.1"
    T3_2 = "3.2"
    T3_3 = "3.3"
    C3_4 = "C3.4"

    @property
    def label(self) -> str:
        return f"Cor {self.value[1:]}" if self.value.startswith("C") else f"Thm {self.value}"


class GroupSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GroupInvariantError(ValueError):
    """A well-formed group expression that breaks a structural requirement."""

    def __init__(self, condition: str, message: str):
        super().__init__(f"{condition}: {message}")
        self.condition = condition


# -- groups -----------------------------------------------------------------


@dataclass(frozen=True)
class CyclicFactor:
    order: int | None = None  # None means infinite cyclic

    def __post_init__(self):
        if self.order is not None and self.order < 1:
            raise ValueError(f"cyclic order must be positive, got {self.order}")

    @property
    def infinite(self) -> bool:
        return self.order is None

    def __str__(self) -> str:
        return "Z" if self.order is None else f"Z_{self.order}"


Z = CyclicFactor()


@dataclass(frozen=True)
class GroupSpec:
    """Nilpotent product of cyclic groups in canonical (chain) form.

    ``classes`` is either one product class for every join, or a tuple with
    one class per adjacent pair of factors.  Class 1 is the direct sum.
    """

    factors: tuple[CyclicFactor, ...]
    classes: int | tuple[int, ...] = 1

    def __post_init__(self):
        factors = tuple(self.factors)
        classes = self.classes
        if isinstance(classes, int):
            if classes < 1:
                raise GroupInvariantError("class", f"product class must be >= 1, got {classes}")
        else:
            classes = tuple(int(c) for c in classes)
            if len(classes) != max(len(factors) - 1, 0):
                raise GroupInvariantError(
                    "class",
                    f"{len(factors)} factors need {max(len(factors) - 1, 0)} classes, got {len(classes)}",
                )
        # trivial factors sit at the tail of a chain; drop them with their joins
        keep = len(factors)
        while keep and factors[keep - 1].order == 1:
            keep -= 1
        if any(f.order == 1 for f in factors[:keep]):
            raise GroupInvariantError("divisibility", "Z_1 may only appear after all nontrivial factors")
        factors = factors[:keep]
        if not isinstance(classes, int):
            classes = classes[: max(keep - 1, 0)]
            if any(c < 1 for c in classes):
                raise GroupInvariantError("class", f"product classes must be >= 1, got {classes}")
            if classes and len(set(classes)) == 1:
                classes = classes[0]
            elif not classes:
                classes = 1 if not self.classes else self.classes[0]
        object.__setattr__(self, "factors", factors)
        object.__setattr__(self, "classes", classes)
        self._validate()

    def _validate(self) -> None:
        seen_finite = False
        for f in self.factors:
            if f.infinite and seen_finite:
                raise GroupInvariantError("ordering", "infinite factors must precede finite factors")
            seen_finite |= not f.infinite
        orders = self.torsion_orders
        for a, b in zip(orders, orders[1:]):
            if a % b:
                raise GroupInvariantError(
                    "divisibility", f"chain violated: {b} does not divide {a}"
                )
        cl = self.class_list
        for a, b in zip(cl, cl[1:]):
            if a < b:
                raise GroupInvariantError(
                    "monotone classes", f"product classes must be nonincreasing, got {cl}"
                )

    # -- constructors --

    @classmethod
    def abelian(cls, free_rank: int = 0, torsion: Sequence[int] = ()) -> "GroupSpec":
        return cls((Z,) * free_rank + tuple(CyclicFactor(r) for r in torsion), 1)

    @classmethod
    def product(cls, free_rank: int, torsion: Sequence[int], classes) -> "GroupSpec":
        return cls((Z,) * free_rank + tuple(CyclicFactor(r) for r in torsion), classes)

    @classmethod
    def p_group(cls, p: int, alphas: Sequence[int], classes=1) -> "GroupSpec":
        """Z_{p^a1} *n* Z_{p^a2} ... with the same prime p and a1 >= a2 >= ... >= 1."""
        if not isprime(p):
            raise GroupInvariantError("prime", f"{p} is not prime")
        alphas = tuple(alphas)
        if any(a < 1 for a in alphas):
            raise GroupInvariantError("exponents", f"exponents must be >= 1, got {alphas}")
        if any(a < b for a, b in zip(alphas, alphas[1:])):
            raise GroupInvariantError("exponents", f"exponents must be nonincreasing, got {alphas}")
        return cls(tuple(CyclicFactor(p**a) for a in alphas), classes)

    # -- views --

    @property
    def free_rank(self) -> int:
        return sum(f.infinite for f in self.factors)

    @property
    def torsion_orders(self) -> tuple[int, ...]:
        return tuple(f.order for f in self.factors if not f.infinite)

    @property
    def class_list(self) -> tuple[int, ...]:
        if isinstance(self.classes, int):
            return (self.classes,) * max(len(self.factors) - 1, 0)
        return self.classes

    @property
    def uniform_class(self) -> int | None:
        return self.classes if isinstance(self.classes, int) else None

    @property
    def is_abelian(self) -> bool:
        return self.classes == 1 or len(self.factors) <= 1

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def p_exponents(self) -> tuple[int, tuple[int, ...]] | None:
        """(p, alphas) when every factor is Z_{p^a} for one prime p, else None."""
        if not self.factors or not self.is_finite:
            return None
        primes = set()
        alphas = []
        for r in self.torsion_orders:
            f = factorint(r)
            if len(f) != 1:
                return None
            ((q, a),) = f.items()
            primes.add(q)
            alphas.append(a)
        if len(primes) != 1:
            return None
        return primes.pop(), tuple(alphas)

    def __str__(self) -> str:
        return render_group(self)


@dataclass(frozen=True)
class VarietySpec:
    row: ClassRow

    def __post_init__(self):
        object.__setattr__(self, "row", ClassRow(self.row))


# -- structures and orders --------------------------------------------------


@dataclass(frozen=True)
class PPowerOrder:
    p: int
    exponent: int

    def __post_init__(self):
        if not isprime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.exponent < 0:
            raise ValueError("exponent must be >= 0")

    @property
    def value(self) -> int:
        return self.p**self.exponent

    def __str__(self) -> str:
        return f"{self.p}^{self.exponent}"


@dataclass(frozen=True)
class CompositeOrder:
    factorization: tuple[tuple[int, int], ...]

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.factorization)

    def __str__(self) -> str:
        return " * ".join(f"{p}^{e}" for p, e in self.factorization)


@dataclass(frozen=True)
class InfiniteOrder:
    def __str__(self) -> str:
        return "infinite"


INFINITE = InfiniteOrder()


@dataclass(frozen=True)
class AbelianStructure:
    """Z^(free_rank) + sum of Z_modulus^(multiplicity), canonically ordered.

    Moduli are stored in decreasing order; equal moduli merge and zero
    multiplicities are dropped.  The stored moduli need not form a full
    divisibility chain (Z_9 + Z_4 is kept as is).
    """

    free_rank: int = 0
    torsion: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")
        merged: dict[int, int] = {}
        for modulus, mult in self.torsion:
            if mult < 0:
                raise ValueError(f"negative multiplicity {mult} for Z_{modulus}")
            if modulus < 1:
                raise ValueError(f"bad modulus {modulus}")
            if modulus == 1 or mult == 0:
                continue
            merged[modulus] = merged.get(modulus, 0) + mult
        object.__setattr__(self, "torsion", tuple(sorted(merged.items(), reverse=True)))

    @classmethod
    def from_summands(cls, free_rank: int, summands: Iterable[tuple[int, int]]) -> "AbelianStructure":
        return cls(free_rank, tuple(summands))

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^({self.free_rank})")
        for modulus, mult in self.torsion:
            parts.append(f"Z_{modulus}" if mult == 1 else f"Z_{modulus}^({mult})")
        return " + ".join(parts) if parts else "0"


def order_of(a: AbelianStructure, prime: int | None = None):
    """Order of ``a``: INFINITE, a PPowerOrder, or a CompositeOrder.

    ``prime`` names the prime used for the trivial group (default 2).
    """
    if a.free_rank:
        return INFINITE
    total: dict[int, int] = {}
    for modulus, mult in a.torsion:
        for q, e in factorint(modulus).items():
            total[q] = total.get(q, 0) + e * mult
    if not total:
        return PPowerOrder(prime or 2, 0)
    if len(total) == 1:
        ((q, e),) = total.items()
        return PPowerOrder(q, e)
    return CompositeOrder(tuple(sorted(total.items())))


# -- hypotheses -------------------------------------------------------------


@dataclass(frozen=True)
class Condition:
    name: str
    satisfied: bool
    detail: str

    def __str__(self) -> str:
        mark = "ok" if self.satisfied else "VIOLATED"
        return f"[{mark}] {self.name}: {self.detail}"


def _coprime_conditions(modulus: int | None, bound: int, label: str) -> list[Condition]:
    if modulus is None:
        return [Condition(f"coprime primes <= {bound}", True, "no finite factors")]
    out = []
    for q in primerange(2, bound + 1):
        g = math.gcd(q, modulus)
        out.append(
            Condition(
                f"gcd({q},{label})=1",
                g == 1,
                f"gcd({q},{modulus}) = {g}" + ("" if g == 1 else " != 1"),
            )
        )
    if not out:
        out.append(Condition(f"coprime primes <= {bound}", True, "no primes in range"))
    return out


def _class_condition(name: str, lhs: int, rhs: int, lhs_label: str, rhs_label: str) -> Condition:
    ok = lhs >= rhs
    rel = ">=" if ok else "<"
    return Condition(name, ok, f"{lhs_label}={lhs} {rel} {rhs_label}={rhs}")


def _structure_conditions(g: GroupSpec) -> list[Condition]:
    # GroupSpec construction already enforces these; they are reported for completeness.
    return [
        Condition("ordering", True, "infinite factors precede finite ones"),
        Condition("divisibility chain", True, " | ".join(map(str, g.torsion_orders)) or "no torsion"),
    ]


def check_hypotheses(g: GroupSpec, v: VarietySpec | ClassRow | Sequence[int], theorem: Theorem) -> list[Condition]:
    """Evaluate every hypothesis of ``theorem`` for ``g`` and the variety ``v``."""
    row = v.row if isinstance(v, VarietySpec) else ClassRow(v)
    theorem = Theorem(theorem)
    conds = _structure_conditions(g)
    r1 = g.torsion_orders[0] if g.torsion_orders else None
    n = g.uniform_class
    if theorem in (Theorem.T2_7, Theorem.T2_11, Theorem.C3_4):
        conds.append(Condition("abelian", g.is_abelian, f"product class {g.classes}"))
        if theorem is Theorem.T2_7:
            conds.append(Condition("finite", g.is_finite, f"free rank {g.free_rank}"))
            conds.append(Condition("single class", len(row) == 1, f"row length {len(row)}"))
    elif theorem in (Theorem.T2_13, Theorem.T2_14, Theorem.T2_15i, Theorem.T2_15ii, Theorem.T3_1, Theorem.T3_3):
        conds.append(Condition("uniform product", n is not None, f"classes {g.classes}"))
        n = n if n is not None else max(g.class_list)
        if theorem in (Theorem.T2_13, Theorem.T2_15i, Theorem.T2_15ii, Theorem.T3_3):
            conds.append(Condition("single class", len(row) == 1, f"row length {len(row)}"))
        c = row.head
        if theorem in (Theorem.T2_15i, Theorem.T3_3):
            conds.append(_class_condition("n >= c", n, c, "n", "c"))
            conds += _coprime_conditions(r1, n + c, "r_1")
        elif theorem is Theorem.T2_15ii:
            conds.append(_class_condition("c >= n", c, n, "c", "n"))
            conds += _coprime_conditions(r1, n + c, "r_1")
        else:
            conds.append(_class_condition("c_1 >= n", c, n, "c_1", "n"))
            conds += _coprime_conditions(r1, n, "r_1")
    elif theorem in (Theorem.T2_16, Theorem.T3_2):
        cl = g.class_list
        n1 = cl[0] if cl else (g.classes if isinstance(g.classes, int) else 1)
        conds.append(Condition("monotone classes", True, f"classes {cl}"))
        conds.append(_class_condition("c_1 >= n_1", row.head, n1, "c_1", "n_1"))
        conds += _coprime_conditions(r1, n1, "m_{t+1}")
    if theorem in (Theorem.T3_1, Theorem.T3_2, Theorem.T3_3, Theorem.C3_4):
        pe = g.p_exponents()
        conds.append(
            Condition(
                "cyclic p-group factors",
                pe is not None,
                f"p={pe[0]}, alphas={pe[1]}" if pe else "factors are not all Z_{p^a} for one prime p",
            )
        )
    return conds


# -- grammar ----------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<brace>Z_\{(?P<bbase>\d+)(?:\^(?P<bexp>\d+))?\})"
    r"|(?P<tors>Z_(?P<tval>\d+))"
    r"|(?P<pow>Z\^(?P<pval>\d+))"
    r"|(?P<z>Z)"
    r"|(?P<prod>\*\s*(?P<cls>\d+)\s*\*)"
    r"|(?P<plus>\+)"
    r")"
)


def _tokens(text: str):
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            return
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GroupSyntaxError(f"unexpected {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        yield m.lastgroup, m, start
        pos = m.end()


def parse_group(text: str) -> GroupSpec:
    """Parse a group expression such as ``"Z^2 + Z_4 + Z_2"`` or ``"Z_9 *2* Z_3"``."""
    terms: list[tuple[tuple[CyclicFactor, ...], int]] = []
    ops: list[tuple[str, int | None, int]] = []
    expect_term = True
    for kind, m, pos in _tokens(text):
        if expect_term:
            if kind == "brace":
                base = int(m["bbase"])
                order = base ** int(m["bexp"]) if m["bexp"] else base
                item = (CyclicFactor(order),)
            elif kind == "tors":
                order = int(m["tval"])
                if order < 1:
                    raise GroupSyntaxError("cyclic order must be positive", pos)
                item = (CyclicFactor(order),)
            elif kind == "pow":
                if int(m["pval"]) < 1:
                    raise GroupSyntaxError("Z^k needs k >= 1", pos)
                item = (Z,) * int(m["pval"])
            elif kind == "z":
                item = (Z,)
            else:
                raise GroupSyntaxError("expected a term", pos)
            terms.append((item, pos))
            expect_term = False
        else:
            if kind == "plus":
                ops.append(("+", None, pos))
            elif kind == "prod":
                cls = int(m["cls"])
                if cls < 1:
                    raise GroupSyntaxError("product class must be >= 1", pos)
                ops.append(("*", cls, pos))
            else:
                raise GroupSyntaxError("expected '+' or '*n*'", pos)
            expect_term = True
    if not terms:
        raise GroupSyntaxError("empty expression", len(text))
    if expect_term:
        raise GroupSyntaxError("expression ends with an operator", len(text))
    kinds = {k for k, _, _ in ops}
    if len(kinds) > 1:
        pos = next(p for k, _, p in ops if k != ops[0][0])
        raise GroupSyntaxError("cannot mix '+' and '*n*' at one level", pos)
    op_classes = [1 if k == "+" else c for k, c, _ in ops]
    factors: list[CyclicFactor] = []
    classes: list[int] = []
    for idx, (item, _) in enumerate(terms):
        if idx:
            classes.append(op_classes[idx - 1])
        # Z^k inside a product joins its copies with the class of the next operator
        inner = op_classes[idx] if idx < len(op_classes) else (op_classes[idx - 1] if op_classes else 1)
        for j, f in enumerate(item):
            if j:
                classes.append(inner)
            factors.append(f)
    return GroupSpec(tuple(factors), tuple(classes) if classes else 1)


def render_group(g: GroupSpec) -> str:
    """Canonical text for ``g``; ``parse_group(render_group(g)) == g``."""
    if not g.factors:
        return "Z_1"
    names = [str(f) for f in g.factors]
    if g.classes == 1:
        m = g.free_rank
        head = [] if m == 0 else (["Z"] if m == 1 else [f"Z^{m}"])
        return " + ".join(head + names[m:])
    out = [names[0]]
    for cls, name in zip(g.class_list, names[1:]):
        out.append(f"*{cls}*")
        out.append(name)
    return " ".join(out)
