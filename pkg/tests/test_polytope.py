from fractions import Fraction
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from schubitope.combinatorics import (
    Composition, Diagram, Permutation, all_permutations, avoids_lattice_free_patterns,
    parse_diagram, rothe_diagram, theta,
)
from schubitope.lp import convex_combination, feasible_point, in_convex_hull
from schubitope.matroid import SchubertMatroid
from schubitope.polynomial import grothendieck, key, schubert
from schubitope.polytope import (
    LatticePointSet, affine_dimension, base_vertex_sets, dilated_hull_points,
    dilated_minkowski_points, dilated_schubitope_points, gp_certificate, hull_lattice_points,
    is_vertex, key_closures, lattice_free_check, region_points, spanning_polytope_points,
    support_property_checks, vertices,
)

OVERLAP = parse_diagram("1,3;2,3;1", 3)


def lps(*pts):
    return LatticePointSet(len(pts[0]), tuple(pts))


def subsets(n):
    return [set(c) for k in range(n + 1) for c in combinations(range(1, n + 1), k)]


# -- oracles ---------------------------------------------------------------------

def schubitope_bruteforce(d, t):
    """Scan the box [0, t#D]^n against every theta inequality."""
    total = t * d.size
    subs = [(I, t * theta(d, I)[0]) for I in subsets(d.n)]
    out = []
    for p in product(range(total + 1), repeat=d.n):
        if sum(p) == total and all(sum(p[i - 1] for i in I) <= bound for I, bound in subs):
            out.append(p)
    return tuple(sorted(out))


def minkowski_bruteforce(factors, t):
    chosen = [f for f in factors for _ in range(t)]
    n = len(factors[0][0]) if factors else 0
    return tuple(sorted({tuple(map(sum, zip(*vs))) if vs else (0,) * n for vs in product(*chosen)}))


def hull_bruteforce(S, t=1):
    S = [tuple(t * a for a in p) for p in S]
    n = len(S[0])
    lo = [min(p[i] for p in S) for i in range(n)]
    hi = [max(p[i] for p in S) for i in range(n)]
    box = product(*[range(a, b + 1) for a, b in zip(lo, hi)])
    return tuple(sorted(p for p in box if in_convex_hull(S, p)))


small_diagrams = st.integers(1, 3).flatmap(lambda n: st.builds(
    lambda cs: Diagram(n, tuple(frozenset(c) for c in cs)),
    st.lists(st.sets(st.integers(1, n)), min_size=n, max_size=n)))

point_sets = st.integers(1, 3).flatmap(lambda n: st.lists(
    st.tuples(*[st.integers(0, 3)] * n), min_size=1, max_size=5))


# -- exact LP ------------------------------------------------------------------------

def test_feasible_point():
    x = feasible_point([[1, 1]], [3])
    assert x is not None and sum(x) == 3 and min(x) >= 0
    assert feasible_point([[1, 1]], [-1]) is None
    assert feasible_point([[1, -1], [1, 1]], [0, 4]) == [2, 2]


@settings(max_examples=80)
@given(point_sets, st.data())
def test_convex_combination_certificates(pts, data):
    n = len(pts[0])
    target = data.draw(st.tuples(*[st.integers(0, 3)] * n))
    lam = convex_combination(pts, target)
    if lam is not None:
        assert all(isinstance(v, Fraction) and v >= 0 for v in lam) and sum(lam) == 1
        assert tuple(sum(l * p[i] for l, p in zip(lam, pts)) for i in range(n)) == target
    else:
        assert tuple(target) not in set(pts)


# -- H-description and Minkowski enumeration -------------------------------------

def test_schubitope_point_examples():
    empty = Diagram(3, (frozenset(),) * 3)
    for t in range(4):
        assert dilated_schubitope_points(empty, t).points == ((0, 0, 0),)
    assert dilated_schubitope_points(Diagram(2, (frozenset({2}), frozenset())), 1).points == ((0, 1), (1, 0))
    ok, witness = lattice_free_check(dilated_schubitope_points(OVERLAP, 1))
    assert not ok and witness == (3, 1, 1)


@settings(max_examples=60, deadline=None)
@given(small_diagrams, st.integers(0, 2))
def test_schubitope_points_match_bruteforce(d, t):
    assert dilated_schubitope_points(d, t).points == schubitope_bruteforce(d, t)


@settings(max_examples=60, deadline=None)
@given(small_diagrams, st.integers(0, 2))
def test_minkowski_matches_bruteforce(d, t):
    factors = base_vertex_sets(d)
    assert dilated_minkowski_points(factors, t).points == minkowski_bruteforce(factors, t)


def test_minkowski_examples():
    assert dilated_minkowski_points([[(1, 0, 0)]], 3).points == ((3, 0, 0),)
    assert dilated_minkowski_points([[(1, 0), (0, 1)], [(1, 0)]], 1).points == ((1, 1), (2, 0))


@settings(max_examples=60)
@given(st.integers(1, 3), st.data())
def test_region_points_match_box_scan(n, data):
    size = 1 << n
    lo = [data.draw(st.integers(-1, 3)) for _ in range(size)]
    hi = [lo[m] + data.draw(st.integers(0, 3)) for m in range(size)]

    def ok(p):
        for m in range(size):
            s = sum(p[i] for i in range(n) if m >> i & 1)
            if not lo[m] <= s <= hi[m]:
                return False
        return True

    box = [p for p in product(range(-4, 8), repeat=n) if ok(p)]
    assert sorted(region_points(n, lo, hi)) == box


# -- vertices and hulls --------------------------------------------------------------

def test_is_vertex_examples():
    L = lps((0, 0), (2, 0), (0, 2), (1, 1))
    assert not is_vertex((1, 1), L)
    assert is_vertex((2, 0), L)
    assert is_vertex((4, 4), lps((4, 4)))
    with pytest.raises(ValueError):
        is_vertex((5, 5), L)


def test_non_vertex_of_a_pattern_schubitope():
    L = dilated_schubitope_points(rothe_diagram(Permutation.parse("1423")), 1)
    inner = [p for p in L if not is_vertex(p, L)]
    assert len(inner) == 1
    others = [q for q in L if q != inner[0]]
    assert in_convex_hull(others, inner[0])


def test_hull_examples():
    assert hull_lattice_points([(0, 0), (1, 1)]).points == ((0, 0), (1, 1))
    assert len(hull_lattice_points([(0, 0), (2, 0), (0, 2)])) == 6
    for w in all_permutations(4):
        supp = schubert(w).support()
        assert set(hull_lattice_points(supp).points) == supp


@settings(max_examples=60, deadline=None)
@given(point_sets, st.integers(1, 2))
def test_hull_matches_box_scan(pts, t):
    assert dilated_hull_points(pts, t).points == hull_bruteforce(pts, t)


def test_lattice_free_examples():
    assert lattice_free_check(lps((0, 0), (1, 0))) == (True, None)
    assert lattice_free_check(lps((3, 1))) == (True, None)
    assert not lattice_free_check(dilated_schubitope_points(OVERLAP, 1))[0]
    for w in all_permutations(4):
        L = dilated_schubitope_points(rothe_diagram(w), 1)
        assert lattice_free_check(L)[0] == avoids_lattice_free_patterns(w)


def test_affine_dimension():
    assert affine_dimension([]) == -1
    assert affine_dimension([(1, 2)]) == 0
    assert affine_dimension([(0, 0, 0), (1, 1, 1), (2, 2, 2)]) == 1
    assert affine_dimension([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) == 2


# -- spanning polytopes --------------------------------------------------------------

def test_spanning_polytope_examples():
    for n in (1, 2, 3):
        full = SchubertMatroid(n, set(range(1, n + 1)))
        for t in range(4):
            assert spanning_polytope_points(full, t).points == ((t,) * n,)
    m = SchubertMatroid(2, {2})
    assert spanning_polytope_points(m, 1).points == ((0, 1), (1, 0), (1, 1))
    pairs = {(a[0] + b[0], a[1] + b[1]) for a in [(1, 0), (0, 1), (1, 1)] for b in [(1, 0), (0, 1), (1, 1)]}
    assert set(spanning_polytope_points(m, 2).points) == pairs
    assert len(pairs) == 6


def test_loopless_spanning_polytope():
    m = SchubertMatroid(3, set())
    assert len(spanning_polytope_points(m, 1)) == 8
    assert spanning_polytope_points(m, 1, loopless=True).points == ((0, 0, 0),)


# -- certificates and support checks ---------------------------------------------------

def test_gp_certificate_examples():
    ok, b, _ = gp_certificate(lps((2, 1, 0)))
    assert ok and b.y == b.z
    ok, _, reason = gp_certificate(lps((0, 0), (1, 1)))
    assert not ok and reason is not None
    for w in all_permutations(4):
        if avoids_lattice_free_patterns(w):
            L = hull_lattice_points(grothendieck(w).support())
            assert gp_certificate(L)[0], w


def test_gp_region_extras_for_diagonal():
    _, b, _ = gp_certificate(lps((0, 0), (1, 1)))
    assert set(region_points(2, b.y, b.z)) == {(0, 0), (0, 1), (1, 0), (1, 1)}


def test_support_check_examples():
    assert support_property_checks([(0, 0, 0)]).all()
    c = support_property_checks([(0, 0), (2, 0)])
    assert not c.interval_closed and not c.snp
    c = support_property_checks([(0, 0), (1, 1)])
    assert c.snp and c.unique_max and not c.interval_closed
    for w in all_permutations(4):
        if avoids_lattice_free_patterns(w):
            assert support_property_checks(grothendieck(w).support()).all(), w


# -- key closures ------------------------------------------------------------------

def test_key_closure_examples():
    for parts in ((2, 1), (3, 3, 0), (1,)):
        v, l = key_closures(Composition(parts))
        assert v == l == {parts}
    v, l = key_closures(Composition((0, 2)))
    assert v == {(0, 2), (2, 0)} and l == {(0, 2), (2, 0), (1, 1)}
    v, l = key_closures(Composition((0, 1)))
    assert v == l == {(0, 1), (1, 0)}


def test_key_closures_match_supports():
    for parts in product(range(4), repeat=3):
        supp = key(Composition(parts)).support()
        L = hull_lattice_points(supp)
        v, l = key_closures(Composition(parts))
        assert set(L.points) == supp == l
        assert set(vertices(L)) == v
