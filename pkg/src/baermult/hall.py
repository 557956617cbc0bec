"""Brute-force enumeration of basic commutators (a Hall basis).

This module never calls the Witt formula; it is the independent side of
every count check.  Basis order: ascending weight, then by (left, right)
position.  Only counts are meaningful across orderings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

__all__ = [
    "BasicCommutator",
    "HallTable",
    "ResourceLimitError",
    "hall_basis",
    "iter_hall_basis",
    "count_containing",
    "nested_hall_levels",
    "nested_hall_count",
    "nested_count_containing",
    "default_caps",
]

ENV_MAX_ALPHABET = "BAERMULT_MAX_ALPHABET"
ENV_MAX_WEIGHT = "BAERMULT_MAX_WEIGHT"


class ResourceLimitError(RuntimeError):
    pass


def default_caps() -> tuple[int, int]:
    """(max alphabet, max weight), overridable through the environment."""
    return (
        int(os.environ.get(ENV_MAX_ALPHABET, 2000)),
        int(os.environ.get(ENV_MAX_WEIGHT, 8)),
    )


@dataclass(frozen=True)
class BasicCommutator:
    letter: int | None = None
    left: "BasicCommutator | None" = None
    right: "BasicCommutator | None" = None
    weight: int = field(default=1, compare=False)

    @classmethod
    def leaf(cls, letter: int) -> "BasicCommutator":
        if letter < 1:
            raise ValueError("letters are numbered from 1")
        return cls(letter=letter)

    @classmethod
    def node(cls, left: "BasicCommutator", right: "BasicCommutator") -> "BasicCommutator":
        return cls(left=left, right=right, weight=left.weight + right.weight)

    @property
    def is_leaf(self) -> bool:
        return self.letter is not None

    def letters(self) -> frozenset[int]:
        if self.is_leaf:
            return frozenset((self.letter,))
        return self.left.letters() | self.right.letters()

    def render(self, names: Sequence[str] | None = None) -> str:
        if self.is_leaf:
            return names[self.letter - 1] if names else f"x{self.letter}"
        return f"[{self.left.render(names)},{self.right.render(names)}]"

    __str__ = render


class HallTable:
    """Hall basis on ``letters`` letters, built weight by weight.

    Elements are integer ids in basis order.  Each id carries its weight,
    its left/right ids (-1 for letters) and a bitmask of letters used.
    """

    def __init__(self, letters: int, max_alphabet: int | None = None, max_weight: int | None = None):
        cap_a, cap_w = default_caps()
        self.max_alphabet = cap_a if max_alphabet is None else max_alphabet
        self.max_weight = cap_w if max_weight is None else max_weight
        if letters < 0:
            raise ValueError("letter count must be >= 0")
        if letters > self.max_alphabet:
            raise ResourceLimitError(
                f"alphabet of size {letters} exceeds cap {self.max_alphabet} ({ENV_MAX_ALPHABET})"
            )
        self.n = letters
        self.weight: list[int] = [1] * letters
        self.left: list[int] = [-1] * letters
        self.right: list[int] = [-1] * letters
        self.mask: list[int] = [1 << i for i in range(letters)]
        self.levels: list[list[int]] = [[], list(range(letters))]

    def _extend(self, w: int) -> None:
        new = []
        for wl in range(1, w):
            for u in self.levels[wl]:
                ul = self.left[u]
                ur = self.right[u]
                for v in self.levels[w - wl]:
                    if v >= u:
                        break
                    if ul >= 0 and ur > v:
                        continue
                    new.append((u, v))
        new.sort()
        ids = []
        for u, v in new:
            ids.append(len(self.weight))
            self.weight.append(w)
            self.left.append(u)
            self.right.append(v)
            self.mask.append(self.mask[u] | self.mask[v])
        self.levels.append(ids)

    def level(self, w: int) -> list[int]:
        if w < 1:
            raise ValueError("weight must be >= 1")
        if w > self.max_weight:
            raise ResourceLimitError(
                f"weight {w} exceeds cap {self.max_weight} ({ENV_MAX_WEIGHT})"
            )
        while len(self.levels) <= w:
            self._extend(len(self.levels))
        return self.levels[w]

    def element(self, idx: int) -> BasicCommutator:
        if self.left[idx] < 0:
            return BasicCommutator.leaf(idx + 1)
        return BasicCommutator.node(self.element(self.left[idx]), self.element(self.right[idx]))

    def contains(self, idx: int, letter: int) -> bool:
        return bool(self.mask[idx] >> (letter - 1) & 1)


def iter_hall_basis(letters: int, weight: int, **caps) -> Iterator[BasicCommutator]:
    table = HallTable(letters, **caps)
    for idx in table.level(weight):
        yield table.element(idx)


def hall_basis(letters: int, weight: int, **caps) -> list[BasicCommutator]:
    """All basic commutators of exactly ``weight`` on x_1 < ... < x_letters."""
    return list(iter_hall_basis(letters, weight, **caps))


def count_containing(letters: int, weight: int, letter: int, **caps) -> int:
    """Number of weight-``weight`` basis elements in which x_letter occurs."""
    if not 1 <= letter <= letters:
        raise IndexError(f"letter index must lie in 1..{letters}, got {letter}")
    table = HallTable(letters, **caps)
    return sum(table.contains(idx, letter) for idx in table.level(weight))


def _check_row(row: Sequence[int], n: int) -> tuple[int, ...]:
    row = tuple(row)
    if not row or any(c < 1 for c in row):
        raise ValueError(f"bad class row {row}")
    if not 1 <= n <= row[0]:
        raise ValueError(f"need c_1 >= n >= 1, got c_1={row[0]}, n={n}")
    return row


def nested_hall_levels(row: Sequence[int], n: int, i: int, **caps) -> list[list[int]]:
    """Letter masks of the sets A_1, ..., A_s.

    A_1: basic commutators of weights c_1+1..c_1+n on x_1..x_i.
    A_k: basic commutators of weight c_k+1 on the ordered alphabet A_{k-1}.
    Each element is recorded by the bitmask of original letters it involves.
    """
    row = _check_row(row, n)
    table = HallTable(i, **caps)
    masks = [table.mask[idx] for w in range(row[0] + 1, row[0] + n + 1) for idx in table.level(w)]
    out = [masks]
    for c in row[1:]:
        inner = HallTable(len(masks), **caps)
        new = []
        for idx in inner.level(c + 1):
            m = 0
            sub = inner.mask[idx]
            pos = 0
            while sub:
                if sub & 1:
                    m |= masks[pos]
                sub >>= 1
                pos += 1
            new.append(m)
        masks = new
        out.append(masks)
    return out


def nested_hall_count(row: Sequence[int], n: int, i: int, **caps) -> int:
    """|A_s| by enumeration; matches the d-exponent when the theory holds."""
    return len(nested_hall_levels(row, n, i, **caps)[-1])


def nested_count_containing(row: Sequence[int], n: int, i: int, **caps) -> int:
    """Elements of A_s (built on x_1..x_i) in which x_i occurs."""
    if i < 1:
        return 0
    bit = 1 << (i - 1)
    return sum(1 for m in nested_hall_levels(row, n, i, **caps)[-1] if m & bit)
