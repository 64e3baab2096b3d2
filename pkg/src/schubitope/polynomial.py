"""
Sparse integer polynomials in x_1..x_n and the divided-difference
recursions for Schubert, Grothendieck and key polynomials.

>>> schubert("132")
Polynomial(3, {(1, 0, 0): 1, (0, 1, 0): 1})
>>> grothendieck("12")
Polynomial(2, {(0, 0): 1})
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .combinatorics import Composition, Permutation, _as_comp, _as_perm

__all__ = [
    "Polynomial", "DivisionFault", "divided_difference", "schubert",
    "grothendieck", "key", "support_and_degrees", "SupportStats",
    "first_ascent", "last_ascent",
]


class DivisionFault(ArithmeticError):
    """A divided difference left a nonzero remainder."""


Exponent = tuple[int, ...]


class Polynomial:
    """Map from exponent vectors to nonzero Python ints, over a fixed n."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | None = None):
        self.n = n
        clean: dict[Exponent, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has length {len(e)}, expected {n}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exps: Iterable[int], coeff: int = 1) -> Polynomial:
        e = tuple(exps)
        return cls(len(e), {e: coeff})

    @classmethod
    def constant(cls, n: int, c: int = 1) -> Polynomial:
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, i: int) -> Polynomial:
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {c}" for e, c in self.sorted_terms(reverse=True))
        return f"Polynomial({self.n}, {{{body}}})"

    def sorted_terms(self, reverse: bool = False) -> list[tuple[Exponent, int]]:
        return sorted(self._terms.items(), reverse=reverse)

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n}")

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.n, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, frozenset(self._terms.items())))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.n, out)

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.n, {e: c * other for e, c in self._terms.items()})
        self._check(other)
        out: dict[Exponent, int] = defaultdict(int)
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def swap(self, i: int) -> Polynomial:
        """s_i f: exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(self.n, out)

    def evaluate(self, point: Iterable[int]) -> int:
        pt = tuple(point)
        total = 0
        for e, c in self._terms.items():
            term = c
            for x, a in zip(pt, e):
                term *= x ** a
            total += term
        return total

    def support(self) -> frozenset[Exponent]:
        return frozenset(self._terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def homogeneous_component(self, degree: int) -> Polynomial:
        return Polynomial(self.n, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    def to_json(self) -> list[dict]:
        return [{"exponents": list(e), "coeff": str(c)} for e, c in self.sorted_terms()]


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), by synthetic division in x_i.

    The numerator is bucketed by the power of x_i; its coefficients are
    polynomials in the remaining variables (x_{i+1} included).  Dividing by
    (x_i - y) with y = x_{i+1} runs the usual recurrence
    q_{k-1} = c_k + y q_k, and the remainder c_0 + y q_0 must vanish.
    """
    n = f.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} outside [1, {n - 1}]")
    g = f - f.swap(i)
    if not g:
        return Polynomial(n)
    a, b = i - 1, i  # positions of x_i, x_{i+1}
    buckets: dict[int, dict[Exponent, int]] = defaultdict(dict)
    for e, c in g.items():
        rest = e[:a] + (0,) + e[a + 1:]
        buckets[e[a]][rest] = c

    def shift_y(poly: dict[Exponent, int]) -> dict[Exponent, int]:
        return {e[:b] + (e[b] + 1,) + e[b + 1:]: c for e, c in poly.items()}

    def add(p: dict[Exponent, int], q: dict[Exponent, int]) -> dict[Exponent, int]:
        out = dict(p)
        for e, c in q.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return out

    quotient: dict[Exponent, int] = {}
    carry: dict[Exponent, int] = {}
    for k in range(max(buckets), 0, -1):
        carry = add(buckets.get(k, {}), shift_y(carry))
        for e, c in carry.items():
            quotient[e[:a] + (k - 1,) + e[a + 1:]] = c
    remainder = add(buckets.get(0, {}), shift_y(carry))
    if remainder:
        raise DivisionFault(f"nonzero remainder dividing by x_{i} - x_{i + 1}")
    return Polynomial(n, quotient)


def first_ascent(w: Permutation) -> int:
    return w.ascents()[0]


def last_ascent(w: Permutation) -> int:
    return w.ascents()[-1]


def _staircase(n: int) -> Polynomial:
    return Polynomial.monomial(tuple(range(n - 1, -1, -1)) if n else ())


_SCHUBERT: dict[tuple[int, ...], Polynomial] = {}
_GROTHENDIECK: dict[tuple[int, ...], Polynomial] = {}
_KEY: dict[tuple[int, ...], Polynomial] = {}


def _permutation_recursion(w, cache, step, choose):
    w = _as_perm(w)
    use_cache = choose is first_ascent
    if use_cache and w.word in cache:
        return cache[w.word]
    # walk up to w_0 along chosen ascents, then come back down
    chain = []
    v = w
    while v.ascents():
        if use_cache and v.word in cache:
            break
        i = choose(v)
        chain.append((v, i))
        v = v.swap(i)
    poly = cache[v.word] if (use_cache and v.word in cache) else _staircase(w.n)
    for u, i in reversed(chain):
        poly = step(poly, i)
        if use_cache:
            cache[u.word] = poly
    return poly


def schubert(w, choose: Callable[[Permutation], int] = first_ascent) -> Polynomial:
    """S_w = d_i S_{w s_i} for an ascent i, from S_{w_0} = x_1^{n-1} ... x_{n-1}."""
    return _permutation_recursion(w, _SCHUBERT, divided_difference, choose)


def _grothendieck_step(poly: Polynomial, i: int) -> Polynomial:
    n = poly.n
    factor = Polynomial.constant(n) - Polynomial.variable(n, i + 1)
    return divided_difference(factor * poly, i)


def grothendieck(w, choose: Callable[[Permutation], int] = first_ascent) -> Polynomial:
    """G_w = d_i (1 - x_{i+1}) G_{w s_i}, same base case as Schubert."""
    return _permutation_recursion(w, _GROTHENDIECK, _grothendieck_step, choose)


def _first_inversion(parts: tuple[int, ...]) -> int:
    return next(i for i in range(1, len(parts)) if parts[i - 1] < parts[i])


def _last_inversion(parts: tuple[int, ...]) -> int:
    return [i for i in range(1, len(parts)) if parts[i - 1] < parts[i]][-1]


def key(alpha, choose: str = "first") -> Polynomial:
    """kappa_alpha: x^alpha when weakly decreasing, else d_i(x_i kappa_{alpha s_i})."""
    alpha = _as_comp(alpha)
    pick = _first_inversion if choose == "first" else _last_inversion
    use_cache = choose == "first"
    parts = alpha.parts
    n = len(parts)
    if use_cache and parts in _KEY:
        return _KEY[parts]
    if alpha.is_weakly_decreasing():
        poly = Polynomial.monomial(parts)
    else:
        i = pick(parts)
        swapped = list(parts)
        swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
        prev = key(Composition(tuple(swapped)), choose)
        poly = divided_difference(Polynomial.variable(n, i) * prev, i)
    if use_cache:
        _KEY[parts] = poly
    return poly


@dataclass(frozen=True)
class SupportStats:
    support: frozenset[Exponent]
    max_degrees: tuple[int, ...]
    total_degree: int
    lowest_degree: int
    lowest_component: Polynomial
    top_component: Polynomial
    coefficient_sum: int
    ones_value: int


def support_and_degrees(f: Polynomial) -> SupportStats:
    """Support, per-variable maximum degrees d_i, and degree components.

    The zero polynomial has empty support, all d_i = 0 and degree 0.
    """
    n = f.n
    supp = f.support()
    if not supp:
        zero = Polynomial(n)
        return SupportStats(supp, (0,) * n, 0, 0, zero, zero, 0, 0)
    maxdeg = tuple(max(e[i] for e in supp) for i in range(n))
    degs = f.degrees()
    return SupportStats(
        support=supp,
        max_degrees=maxdeg,
        total_degree=max(degs),
        lowest_degree=min(degs),
        lowest_component=f.homogeneous_component(min(degs)),
        top_component=f.homogeneous_component(max(degs)),
        coefficient_sum=f.coefficient_sum(),
        ones_value=f.evaluate((1,) * n),
    )
