"""Ehrhart polynomials by exact interpolation of lattice-point counts."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .combinatorics import Diagram
from .matroid import SchubertMatroid, indicator, spanning_sets
from .polytope import (
    affine_dimension, base_vertex_sets, dilated_hull_points,
    dilated_minkowski_points, dilated_schubitope_points,
)

__all__ = [
    "EhrhartPolynomial", "EhrhartMismatch", "ehrhart", "FactorizationResult",
    "ehrhart_factorization_check", "schubitope_ehrhart", "vertex_set_ehrhart",
    "base_polytope_ehrhart", "spanning_polytope_ehrhart", "hull_ehrhart",
]


class EhrhartMismatch(RuntimeError):
    """Interpolated polynomial disagrees with a held-out count."""


@dataclass(frozen=True)
class EhrhartPolynomial:
    """Coefficients from the constant term upward, trailing zeros removed."""
    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @classmethod
    def one(cls) -> EhrhartPolynomial:
        return cls((Fraction(1),))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __mul__(self, other: EhrhartPolynomial) -> EhrhartPolynomial:
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return EhrhartPolynomial(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return EhrhartPolynomial(tuple(out))

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coefficients]

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coefficients):
            if c:
                terms.append(str(c) if k == 0 else f"{c}*t^{k}" if k > 1 else f"{c}*t")
        return " + ".join(terms) or "0"


def _interpolate(values: Sequence[int]) -> EhrhartPolynomial:
    """Polynomial of degree < len(values) through (t, values[t]), t = 0, 1, ..."""
    m = len(values)
    coeffs = [Fraction(0)] * m
    for k in range(m):
        # Lagrange basis for node k over nodes 0..m-1
        basis = [Fraction(1)]
        denom = 1
        for j in range(m):
            if j == k:
                continue
            basis = [Fraction(0)] + basis
            for i in range(len(basis) - 1):
                basis[i] -= j * basis[i + 1]
            denom *= k - j
        scale = Fraction(values[k], denom)
        for i, b in enumerate(basis):
            coeffs[i] += scale * b
    return EhrhartPolynomial(tuple(coeffs))


def ehrhart(counter: Callable[[int], int], affine_dim: int) -> EhrhartPolynomial:
    """Interpolate t -> counter(t) through t = 0..d and check it at d+1 and d+2.

    A negative dimension stands for the empty polytope, whose Ehrhart
    polynomial is 1 by convention.
    """
    if affine_dim < 0:
        return EhrhartPolynomial.one()
    d = affine_dim
    poly = _interpolate([counter(t) for t in range(d + 1)])
    for t in (d + 1, d + 2):
        got = counter(t)
        if poly(t) != got:
            raise EhrhartMismatch(
                f"interpolated value {poly(t)} at t={t} but {got} lattice points counted"
            )
    return poly


def schubitope_ehrhart(d: Diagram) -> EhrhartPolynomial:
    dim = affine_dimension(dilated_schubitope_points(d, 1).points)
    return ehrhart(lambda t: len(dilated_schubitope_points(d, t)), dim)


def vertex_set_ehrhart(vecs: Sequence[Sequence[int]]) -> EhrhartPolynomial:
    """Ehrhart polynomial of conv(vecs) when it has the integer decomposition property."""
    vecs = [tuple(v) for v in vecs]
    dim = affine_dimension(vecs)
    return ehrhart(lambda t: len(dilated_minkowski_points([vecs], t)), dim)


def base_polytope_ehrhart(m: SchubertMatroid) -> EhrhartPolynomial:
    return vertex_set_ehrhart([tuple((b >> i) & 1 for i in range(m.n)) for b in m.basis_masks])


def spanning_polytope_ehrhart(m: SchubertMatroid, loopless: bool = False) -> EhrhartPolynomial:
    return vertex_set_ehrhart([indicator(s, m.n) for s in spanning_sets(m, loopless=loopless)])


def hull_ehrhart(support: Iterable[Sequence[int]]) -> EhrhartPolynomial:
    pts = [tuple(p) for p in support]
    dim = affine_dimension(pts)
    return ehrhart(lambda t: len(dilated_hull_points(pts, t)), dim)


@dataclass(frozen=True)
class FactorizationResult:
    ok: bool
    schubitope: EhrhartPolynomial
    product: EhrhartPolynomial
    columns: tuple[EhrhartPolynomial, ...]


def ehrhart_factorization_check(d: Diagram) -> FactorizationResult:
    """Compare i(S_D, t) with the product of i(P(SM_n(D_j)), t) over the columns."""
    lhs = schubitope_ehrhart(d)
    cols = tuple(vertex_set_ehrhart(vs) for vs in base_vertex_sets(d))
    rhs = EhrhartPolynomial.one()
    for c in cols:
        rhs = rhs * c
    return FactorizationResult(lhs == rhs, lhs, rhs, cols)
