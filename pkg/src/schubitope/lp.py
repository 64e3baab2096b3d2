"""Exact feasibility for ``A x = b, x >= 0`` over the rationals.

Phase-1 simplex on a dense tableau of Fractions.  Pivoting follows Bland's
rule (lowest eligible column enters, ties in the ratio test go to the lowest
basic variable), which guarantees termination and makes every run
bit-for-bit reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = ["feasible_point", "convex_combination", "in_convex_hull"]


def feasible_point(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Return some x >= 0 with A x = b, or None when the system is infeasible."""
    m = len(A)
    k = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * k
    # rows: [A | I_artificial | b], with b made nonnegative
    width = k + m
    T: list[list[Fraction]] = []
    for r in range(m):
        sign = -1 if b[r] < 0 else 1
        row = [Fraction(sign * a) for a in A[r]]
        row.extend(Fraction(1 if c == r else 0) for c in range(m))
        row.append(Fraction(sign * b[r]))
        T.append(row)
    basis = list(range(k, k + m))
    # reduced costs for minimising the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for r in range(m):
        for c in range(k):
            cost[c] -= T[r][c]
        cost[width] -= T[r][width]

    while True:
        enter = next((c for c in range(width) if cost[c] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r in range(m):
            a = T[r][enter]
            if a > 0:
                ratio = T[r][width] / a
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:  # cannot happen in phase 1: objective is bounded below
            raise RuntimeError("phase-1 problem reported unbounded")
        _pivot(T, cost, leave, enter)
        basis[leave] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * k
    for r, v in enumerate(basis):
        if v < k:
            x[v] = T[r][width]
    return x


def _pivot(T, cost, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        row[:] = [v / p for v in row]
    for other in T:
        if other is row:
            continue
        f = other[c]
        if f:
            other[:] = [u - f * v for u, v in zip(other, row)]
    f = cost[c]
    if f:
        cost[:] = [u - f * v for u, v in zip(cost, row)]


def convex_combination(points: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Weights lambda >= 0 summing to 1 with sum(lambda_k * points[k]) == target."""
    if not points:
        return None
    dim = len(target)
    A = [[p[i] for p in points] for i in range(dim)]
    A.append([1] * len(points))
    b = list(target) + [1]
    return feasible_point(A, b)


def in_convex_hull(points: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    return convex_combination(points, target) is not None
