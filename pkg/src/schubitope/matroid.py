"""Schubert matroids SM_n(S) on the ground set [n].

Subsets are handled internally as bitmasks (element i is bit i-1); the
public functions accept and return ordinary sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .combinatorics import from_mask, to_mask

__all__ = [
    "SchubertMatroid", "gale_leq", "bases", "bases_by_filter", "rank",
    "spanning_sets", "indicator", "subset_key",
]


def gale_leq(t: Iterable[int], s: Iterable[int]) -> bool:
    """T precedes S in Gale order: equal size and sorted entries a_i <= b_i."""
    a = sorted(t)
    b = sorted(s)
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def subset_key(s: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Canonical order on subsets: by size, then lexicographically."""
    t = tuple(sorted(s))
    return len(t), t


def indicator(subset: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(subset)
    return tuple(1 if i in s else 0 for i in range(1, n + 1))


@dataclass(frozen=True)
class SchubertMatroid:
    n: int
    S: frozenset[int]

    def __post_init__(self):
        s = frozenset(int(i) for i in self.S)
        if any(not 1 <= i <= self.n for i in s):
            raise ValueError(f"{sorted(s)} is not a subset of [{self.n}]")
        object.__setattr__(self, "S", s)

    @property
    def rank_total(self) -> int:
        return len(self.S)

    @cached_property
    def basis_masks(self) -> tuple[int, ...]:
        # recursive descent: pick a_1 <= b_1, then a_2 in (a_1, b_2], ...
        b = sorted(self.S)
        k = len(b)
        out: list[int] = []

        def descend(pos: int, low: int, mask: int):
            if pos == k:
                out.append(mask)
                return
            for a in range(low, b[pos] + 1):
                descend(pos + 1, a + 1, mask | (1 << (a - 1)))

        descend(0, 1, 0)
        return tuple(sorted(out, key=lambda m: subset_key(from_mask(m))))

    @cached_property
    def loops(self) -> frozenset[int]:
        """Elements in no basis, i.e. those above max(S)."""
        top = max(self.S, default=0)
        return frozenset(range(top + 1, self.n + 1))

    def rank_mask(self, mask: int) -> int:
        return max(bin(mask & b).count("1") for b in self.basis_masks)

    @cached_property
    def spanning_masks(self) -> tuple[int, ...]:
        r = self.rank_total
        masks = [m for m in range(1 << self.n) if self.rank_mask(m) == r]
        return tuple(sorted(masks, key=lambda m: subset_key(from_mask(m))))

    def dual_basis_masks(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple(full ^ b for b in self.basis_masks)


def bases(m: SchubertMatroid) -> list[frozenset[int]]:
    """All T with T <= S in Gale order, sorted by size then lexicographically."""
    return [from_mask(b) for b in m.basis_masks]


def bases_by_filter(m: SchubertMatroid) -> list[frozenset[int]]:
    """Same set as ``bases``, found by testing every |S|-subset of [n]."""
    found = [
        frozenset(t) for t in combinations(range(1, m.n + 1), len(m.S))
        if gale_leq(t, m.S)
    ]
    return sorted(found, key=subset_key)


def rank(m: SchubertMatroid, subset: Iterable[int]) -> int:
    return m.rank_mask(to_mask(subset))


def spanning_sets(m: SchubertMatroid, loopless: bool = False) -> list[frozenset[int]]:
    """Subsets of [n] containing a basis.

    With ``loopless=True`` only spanning sets avoiding the loops of the
    matroid are returned, i.e. the spanning sets of the matroid with its
    loops deleted.  Column polytopes of Grothendieck supports use this form.
    """
    out = [from_mask(s) for s in m.spanning_masks]
    if loopless:
        out = [s for s in out if not (s & m.loops)]
    return out
