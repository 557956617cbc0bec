"""Integer exponent formulas built on the Witt count of basic commutators.

Every function here is pure and works on unbounded Python ints.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from sympy import divisors, factorint

__all__ = [
    "ClassRow",
    "mobius",
    "witt",
    "beta",
    "nested_tail",
    "d_exponent",
    "f_exponent",
    "g_exponent",
    "u_value",
    "h_value",
    "e_exponent",
]


class ClassRow(tuple):
    """Class row (c_1, ..., c_s) of a polynilpotent variety."""

    def __new__(cls, classes: int | Sequence[int]):
        if isinstance(classes, int):
            classes = (classes,)
        classes = tuple(int(c) for c in classes)
        if not classes:
            raise ValueError("class row must be nonempty")
        if any(c < 1 for c in classes):
            raise ValueError(f"every class in a row must be >= 1, got {classes}")
        return super().__new__(cls, classes)

    @property
    def head(self) -> int:
        return self[0]

    @property
    def tail(self) -> tuple[int, ...]:
        return tuple(self[1:])

    def __repr__(self) -> str:
        return f"ClassRow({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(str(c) for c in self)


def _row(row) -> ClassRow:
    return row if isinstance(row, ClassRow) else ClassRow(row)


def mobius(d: int) -> int:
    if d < 1:
        raise ValueError(f"mobius is defined for d >= 1, got {d}")
    exps = factorint(d).values()
    if any(e > 1 for e in exps):
        return 0
    return -1 if len(exps) % 2 else 1


@lru_cache(maxsize=None)
def _witt(w: int, n: int) -> int:
    total = sum(mobius(d) * n ** (w // d) for d in divisors(w))
    q, r = divmod(total, w)
    assert r == 0, f"Witt sum not divisible: w={w}, n={n}, sum={total}"
    return q


def witt(w: int, n: int) -> int:
    """Number of basic commutators of weight ``w`` on ``n`` letters."""
    if w < 1:
        raise ValueError(f"weight must be >= 1, got {w}")
    if n < 0:
        raise ValueError(f"letter count must be >= 0, got {n}")
    return _witt(int(w), int(n))


def nested_tail(row_tail: Sequence[int], x: int) -> int:
    """Apply chi_{c_2+1}, ..., chi_{c_s+1} to ``x`` in that order."""
    for c in row_tail:
        x = witt(c + 1, x)
    return x


def beta(row, i: int) -> int:
    row = _row(row)
    return nested_tail(row.tail, witt(row.head + 1, i))


def _check_product_class(c: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"product class must be >= 1, got {n}")
    if c < n:
        raise ValueError(f"need c_1 >= n, got c_1={c} < n={n}")


def d_exponent(row, n: int, i: int) -> int:
    row = _row(row)
    _check_product_class(row.head, n)
    inner = sum(witt(row.head + j, i) for j in range(1, n + 1))
    return nested_tail(row.tail, inner)


def f_exponent(c: int, n: int, letters: int) -> int:
    """Sum of chi_{c+i}(letters) for i = 1..n; the c >= n case."""
    if not c >= n >= 1:
        raise ValueError(f"f_exponent needs c >= n >= 1, got c={c}, n={n}")
    return sum(witt(c + i, letters) for i in range(1, n + 1))


def g_exponent(c: int, n: int, letters: int) -> int:
    """Sum of chi_{n+i}(letters) for i = 1..c; the n >= c case."""
    if not n >= c >= 1:
        raise ValueError(f"g_exponent needs n >= c >= 1, got c={c}, n={n}")
    return sum(witt(n + i, letters) for i in range(1, c + 1))


def _check_classes(row: ClassRow, classes: Sequence[int]) -> tuple[int, ...]:
    classes = tuple(int(n) for n in classes)
    if any(n < 1 for n in classes):
        raise ValueError(f"product classes must be >= 1, got {classes}")
    if any(a < b for a, b in zip(classes, classes[1:])):
        raise ValueError(f"product classes must be nonincreasing, got {classes}")
    if classes and row.head < classes[0]:
        raise ValueError(f"need c_1 >= n_1, got c_1={row.head} < n_1={classes[0]}")
    return classes


def h_value(row, classes: Sequence[int], j: int) -> int:
    """Count of new commutators gained by adding letter j+1 through class n_j."""
    row = _row(row)
    classes = _check_classes(row, classes)
    if not 1 <= j <= len(classes):
        raise IndexError(f"h_j needs 1 <= j <= {len(classes)}, got {j}")
    c1 = row.head
    return sum(
        witt(c1 + lam, j + 1) - witt(c1 + lam, j) for lam in range(1, classes[j - 1] + 1)
    )


def u_value(row, classes: Sequence[int], t: int) -> int:
    """Inner exponent for the free part Z *n_1* ... *n_{t-1}* Z (t copies)."""
    row = _row(row)
    classes = _check_classes(row, classes)
    if t < 0 or t > len(classes) + 1:
        raise IndexError(f"t must lie in 0..{len(classes) + 1}, got {t}")
    # n_0 is undefined; for t <= 1 every term is chi_w(0) or chi_w(1) with w >= 2.
    if t <= 1:
        return 0
    c1 = row.head
    n = (None,) + classes  # 1-based
    total = sum(witt(c1 + j, t) for j in range(1, n[t - 1] + 1))
    for i in range(1, t - 1):
        total += sum(witt(c1 + j, i + 1) for j in range(n[i + 1] + 1, n[i] + 1))
    return total


def e_exponent(row, classes: Sequence[int], t: int, i: int) -> int:
    """e_i for a multiple product with ``t`` free factors and classes (n_1..n_k).

    ``i == 0`` gives e_0 (the free rank); otherwise t <= i <= k.
    """
    row = _row(row)
    classes = _check_classes(row, classes)
    k = len(classes)
    u = u_value(row, classes, t)
    if i == 0:
        return nested_tail(row.tail, u)
    if not t <= i <= k:
        raise IndexError(f"e_i needs i == 0 or {t} <= i <= {k}, got {i}")
    # h_0 vanishes: chi_w(1) - chi_w(0) = 0 for w >= 2.
    inner = u + sum(h_value(row, classes, j) for j in range(max(t, 1), i + 1))
    return nested_tail(row.tail, inner)
