"""
Lattice points of Schubitopes, matroid polytopes and Newton polytopes.

Two independent routes produce the lattice points of a dilated Schubitope
``t S_D``:

* the H-description, scanning integer vectors against the theta_D(I)
  inequalities (``dilated_schubitope_points``);
* Minkowski sums of t-fold sums of basis indicator vectors, one factor per
  column (``dilated_minkowski_points``), which is complete because matroid
  base polytopes have the integer decomposition property.

Vertex and hull membership questions go through the exact LP in ``lp``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .combinatorics import Composition, Diagram, _as_comp
from .lp import convex_combination
from .matroid import SchubertMatroid, indicator, spanning_sets

__all__ = [
    "LatticePointSet", "GPBounds", "SupportChecks",
    "dilated_schubitope_points", "dilated_minkowski_points",
    "base_vertex_sets", "spanning_vertex_sets", "spanning_polytope_points",
    "is_vertex", "vertices", "lattice_free_check", "hull_lattice_points",
    "dilated_hull_points", "affine_dimension", "subset_sum_bounds",
    "region_points", "gp_certificate", "support_property_checks", "key_closures",
]

Point = tuple[int, ...]


@dataclass(frozen=True)
class LatticePointSet:
    """Finite set of integer vectors of length ``dim`` in lexicographic order."""
    dim: int
    points: tuple[Point, ...] = ()

    def __post_init__(self):
        pts = sorted(set(tuple(int(x) for x in p) for p in self.points))
        for p in pts:
            if len(p) != self.dim:
                raise ValueError(f"point {p} does not have length {self.dim}")
        object.__setattr__(self, "points", tuple(pts))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(p) in self._lookup

    @property
    def _lookup(self) -> frozenset[Point]:
        cached = self.__dict__.get("_set")
        if cached is None:
            cached = frozenset(self.points)
            self.__dict__["_set"] = cached
        return cached

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.points]


# -- packed vectors -------------------------------------------------------
# Nonnegative vectors with entries < base pack into one int, most
# significant coordinate first, so that vector addition is int addition and
# numeric order is lexicographic order.

def _pack(p: Sequence[int], base: int) -> int:
    v = 0
    for x in p:
        v = v * base + x
    return v


def _unpack(v: int, base: int, n: int) -> Point:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        v, out[i] = divmod(v, base)
    return tuple(out)


def _self_sum(packed: Iterable[int], t: int) -> set[int]:
    layer = {0}
    vs = set(packed)
    for _ in range(t):
        layer = {a + b for a in layer for b in vs}
    return layer


def dilated_minkowski_points(factors: Sequence[Sequence[Sequence[int]]], t: int) -> LatticePointSet:
    """Lattice points of t(conv V_1 + ... + conv V_k) as sums of t points from each V_j.

    Each factor is dilated by repeated self-addition, then factors are added
    one at a time; every intermediate layer is deduplicated.
    """
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    factors = [list(f) for f in factors]
    if not factors:
        raise ValueError("need at least one factor")
    n = len(factors[0][0])
    for f in factors:
        if not f:
            return LatticePointSet(n)
        if any(x < 0 for v in f for x in v):
            raise ValueError("factor vertices must be nonnegative")
    top = max(max(max(v) for v in f) for f in factors)
    base = t * len(factors) * max(top, 1) + 1
    total = {0}
    for f in factors:
        layer = _self_sum((_pack(v, base) for v in f), t)
        total = {a + b for a in total for b in layer}
    return LatticePointSet(n, tuple(_unpack(v, base, n) for v in sorted(total)))


def base_vertex_sets(d: Diagram) -> list[list[Point]]:
    """Indicator vectors of the bases of SM_n(D_j), column by column."""
    out = []
    for col in d.columns:
        m = SchubertMatroid(d.n, col)
        out.append([_mask_vector(b, d.n) for b in m.basis_masks])
    return out


def spanning_vertex_sets(d: Diagram, loopless: bool = True) -> list[list[Point]]:
    """Indicator vectors of spanning sets of SM_n(D_j), column by column."""
    return [
        [indicator(s, d.n) for s in spanning_sets(SchubertMatroid(d.n, col), loopless=loopless)]
        for col in d.columns
    ]


def _mask_vector(mask: int, n: int) -> Point:
    return tuple((mask >> i) & 1 for i in range(n))


def spanning_polytope_points(m: SchubertMatroid, t: int, loopless: bool = False) -> LatticePointSet:
    """Lattice points of t P_sp(M), as t-fold sums of spanning-set indicator vectors."""
    vecs = [indicator(s, m.n) for s in spanning_sets(m, loopless=loopless)]
    return dilated_minkowski_points([vecs], t)


# -- regions cut out by subset-sum bounds ---------------------------------

def subset_sum_bounds(points: Iterable[Sequence[int]], n: int) -> tuple[list[int], list[int]]:
    """For every I (as bitmask) the min and max of sum_{i in I} x_i over the points."""
    size = 1 << n
    lo: list[int] | None = None
    hi: list[int] | None = None
    for p in points:
        sums = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            sums[mask] = sums[mask ^ low] + p[low.bit_length() - 1]
        if lo is None:
            lo, hi = sums, list(sums)
        else:
            for mask in range(size):
                s = sums[mask]
                if s < lo[mask]:
                    lo[mask] = s
                elif s > hi[mask]:
                    hi[mask] = s
    if lo is None:
        raise ValueError("no points")
    return lo, hi


def region_points(n: int, lo: Sequence[int], hi: Sequence[int]) -> list[Point]:
    """All integer x with lo[I] <= sum_{i in I} x_i <= hi[I] for every I.

    Coordinates are fixed left to right.  When coordinate i is placed, every
    constraint whose largest element is i gets checked exactly; constraints
    that still involve unplaced coordinates are used for look-ahead pruning
    against the bounds on the remaining block.
    """
    full = (1 << n) - 1
    if not lo[0] <= 0 <= hi[0]:
        return []
    if n == 0:
        return [()]
    for mask in range(1 << n):
        if lo[mask] > hi[mask]:
            return []
    sums = [0] * (1 << n)
    x = [0] * n
    out: list[Point] = []

    def place(i: int):
        bit = 1 << i
        prefix = bit - 1  # masks over coordinates < i
        rest = full ^ (prefix | bit)  # coordinates > i
        a, b = lo[bit], hi[bit]
        sub = prefix
        while True:
            s = sums[sub]
            if lo[sub | bit] - s > a:
                a = lo[sub | bit] - s
            if hi[sub | bit] - s < b:
                b = hi[sub | bit] - s
            if sub == 0:
                break
            sub = (sub - 1) & prefix
        for v in range(a, b + 1):
            x[i] = v
            ok = True
            sub = prefix
            while True:
                sums[sub | bit] = sums[sub] + v
                if sub == 0:
                    break
                sub = (sub - 1) & prefix
            if rest:
                placed = prefix | bit
                sub = placed
                while True:
                    s = sums[sub]
                    if lo[sub | rest] - s > hi[rest] or hi[sub | rest] - s < lo[rest]:
                        ok = False
                        break
                    if sub == 0:
                        break
                    sub = (sub - 1) & placed
            if not ok:
                continue
            if i == n - 1:
                out.append(tuple(x))
            else:
                place(i + 1)

    place(0)
    return out


def _schubitope_bounds(d: Diagram, t: int) -> tuple[list[int], list[int]]:
    n = d.n
    full = (1 << n) - 1
    total = t * d.size
    theta = d.theta_table
    hi = [t * theta[m] for m in range(1 << n)]
    # sum over I = total - sum over the complement, which is at most t*theta(complement)
    lo = [max(0, total - t * theta[full ^ m]) for m in range(1 << n)]
    lo[0] = hi[0] = 0
    lo[full] = hi[full] = total
    return lo, hi


@lru_cache(maxsize=4096)
def _schubitope_points_cached(d: Diagram, t: int) -> LatticePointSet:
    lo, hi = _schubitope_bounds(d, t)
    return LatticePointSet(d.n, tuple(region_points(d.n, lo, hi)))


def dilated_schubitope_points(d: Diagram, t: int) -> LatticePointSet:
    """Integer alpha >= 0 with sum alpha = t #D and sum_{i in I} alpha_i <= t theta_D(I)."""
    if t < 0:
        raise ValueError("dilation must be nonnegative")
    return _schubitope_points_cached(d, t)


# -- vertices and hulls -----------------------------------------------------

def is_vertex(p: Sequence[int], L: LatticePointSet) -> bool:
    """True iff p is not a convex combination of the other points of L."""
    p = tuple(p)
    if p not in L:
        raise ValueError(f"{p} is not in the point set")
    others = [q for q in L.points if q != p]
    return convex_combination(others, p) is None


def vertices(L: LatticePointSet) -> list[Point]:
    return [p for p in L.points if is_vertex(p, L)]


def lattice_free_check(L: LatticePointSet) -> tuple[bool, Point | None]:
    """Every point of L is a vertex of conv(L); otherwise the first non-vertex."""
    for p in L.points:
        if not is_vertex(p, L):
            return False, p
    return True, None


def dilated_hull_points(S: Iterable[Sequence[int]], t: int) -> LatticePointSet:
    """Lattice points of t conv(S).

    Candidates come from the region cut out by the subset-sum bounds of S
    (valid inequalities for conv(S), so nothing is lost).  Candidates that
    are sums of t points of S are accepted outright; the rest are decided by
    the exact LP.
    """
    pts = sorted(set(tuple(p) for p in S))
    if not pts:
        raise ValueError("empty support")
    n = len(pts[0])
    if t == 0:
        return LatticePointSet(n, ((0,) * n,))
    lo, hi = subset_sum_bounds(pts, n)
    candidates = region_points(n, [t * v for v in lo], [t * v for v in hi])
    shift = [min(p[i] for p in pts) for i in range(n)]
    top = max(max(p[i] - shift[i] for p in pts) for i in range(n))
    base = t * max(top, 1) + 1
    sums = _self_sum((_pack([a - s for a, s in zip(p, shift)], base) for p in pts), t)
    scaled = [tuple(t * a for a in p) for p in pts]
    keep = []
    for c in candidates:
        if any(a - t * s < 0 for a, s in zip(c, shift)):
            continue
        if _pack([a - t * s for a, s in zip(c, shift)], base) in sums:
            keep.append(c)
        elif convex_combination(scaled, c) is not None:
            keep.append(c)
    return LatticePointSet(n, tuple(keep))


def hull_lattice_points(S: Iterable[Sequence[int]]) -> LatticePointSet:
    """All integer points of conv(S)."""
    return dilated_hull_points(S, 1)


def affine_dimension(points: Iterable[Sequence[int]]) -> int:
    """Dimension of the affine hull; -1 for no points.

    Exact integer elimination on differences from the first point.
    """
    pts = [list(p) for p in points]
    if not pts:
        return -1
    p0 = pts[0]
    rows = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    rows = [r for r in rows if any(r)]
    rank = 0
    ncols = len(p0)
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col]
            if f:
                rows[r] = [pr[col] * x - f * y for x, y in zip(rows[r], pr)]
        rank += 1
    return rank


# -- generalized polymatroid certificate ------------------------------------

@dataclass(frozen=True)
class GPBounds:
    """Lower and upper subset-sum bounds, indexed by bitmask of I."""
    n: int
    y: tuple[int, ...]
    z: tuple[int, ...]

    def as_dict(self) -> dict:
        from .combinatorics import from_mask
        keys = [sorted(from_mask(m)) for m in range(1 << self.n)]
        return {
            "y": [[k, v] for k, v in zip(keys, self.y)],
            "z": [[k, v] for k, v in zip(keys, self.z)],
        }


def gp_certificate(L: LatticePointSet) -> tuple[bool, GPBounds, str | None]:
    """Check that (min, max) subset sums over L form a paramodular pair cutting out L.

    Returns ``(ok, bounds, reason)``; ``reason`` names the first failed test.
    Passing certifies that conv(L) is a generalized polymatroid whose lattice
    points are exactly L.
    """
    if not len(L):
        raise ValueError("empty point set")
    n = L.dim
    lo, hi = subset_sum_bounds(L.points, n)
    bounds = GPBounds(n, tuple(lo), tuple(hi))
    size = 1 << n
    for a in range(size):
        for b in range(a + 1, size):
            u, v = a | b, a & b
            if lo[u] + lo[v] < lo[a] + lo[b]:
                return False, bounds, "y is not supermodular"
            if hi[u] + hi[v] > hi[a] + hi[b]:
                return False, bounds, "z is not submodular"
    for i in range(size):
        for j in range(size):
            if hi[i] - lo[j] < hi[i & ~j] - lo[j & ~i]:
                return False, bounds, "cross inequality fails"
    if tuple(region_points(n, lo, hi)) != L.points:
        return False, bounds, "bounded region has other lattice points"
    return True, bounds, None


# -- support properties -------------------------------------------------------

@dataclass(frozen=True)
class SupportChecks:
    interval_closed: bool
    degree_raising: bool
    unique_max: bool
    snp: bool

    def all(self) -> bool:
        return self.interval_closed and self.degree_raising and self.unique_max and self.snp

    def as_dict(self) -> dict[str, bool]:
        return {
            "interval_closed": self.interval_closed,
            "degree_raising": self.degree_raising,
            "unique_max": self.unique_max,
            "snp": self.snp,
        }


def _box(lo: Point, hi: Point):
    if not lo:
        yield ()
        return
    for v in range(lo[0], hi[0] + 1):
        for rest in _box(lo[1:], hi[1:]):
            yield (v,) + rest


def support_property_checks(S: Iterable[Sequence[int]]) -> SupportChecks:
    pts = sorted(set(tuple(p) for p in S))
    if not pts:
        raise ValueError("empty support")
    members = set(pts)
    n = len(pts[0])

    def leq(a, b):
        return all(x <= y for x, y in zip(a, b))

    interval_closed = True
    for a in pts:
        for b in pts:
            if a != b and leq(a, b) and not all(g in members for g in _box(a, b)):
                interval_closed = False
                break
        if not interval_closed:
            break

    top = max(sum(p) for p in pts)
    degree_raising = True
    for p in pts:
        if sum(p) < top and not any(
            p[:i] + (p[i] + 1,) + p[i + 1:] in members for i in range(n)
        ):
            degree_raising = False
            break

    maximal = [p for p in pts if not any(q != p and leq(p, q) for q in pts)]
    unique_max = len(maximal) == 1
    snp = hull_lattice_points(pts).points == tuple(pts)
    return SupportChecks(interval_closed, degree_raising, unique_max, snp)


# -- key polynomial closures --------------------------------------------------

def key_closures(alpha) -> tuple[frozenset[Point], frozenset[Point]]:
    """Closures of alpha under the swap moves t_{i,j} and the moves m_{i,j}.

    t_{i,j} exchanges entries i < j when beta_i < beta_j.  m_{i,j} replaces
    beta by beta + e_i - e_j when beta_i <= beta_j - 2.  The first result is
    the closure under swaps only, the second under both kinds of move.
    """
    start = _as_comp(alpha).parts

    def closure(with_m: bool) -> frozenset[Point]:
        seen = {start}
        todo = deque([start])
        while todo:
            b = todo.popleft()
            n = len(b)
            for i in range(n):
                for j in range(i + 1, n):
                    nxt = []
                    if b[i] < b[j]:
                        c = list(b)
                        c[i], c[j] = c[j], c[i]
                        nxt.append(tuple(c))
                    if with_m and b[i] <= b[j] - 2:
                        c = list(b)
                        c[i] += 1
                        c[j] -= 1
                        nxt.append(tuple(c))
                    for c in nxt:
                        if c not in seen:
                            seen.add(c)
                            todo.append(c)
        return frozenset(seen)

    return closure(False), closure(True)
