"""One test per acceptance criterion; the conftest prints a PASS/FAIL line for each."""

import time

import pytest

from schubitope.combinatorics import (
    all_permutations, avoids_lattice_free_patterns, criterion_check,
    movable_intervals, parse_diagram,
)
from schubitope.ehrhart import ehrhart_factorization_check, schubitope_ehrhart, vertex_set_ehrhart
from schubitope.polytope import (
    affine_dimension, base_vertex_sets, dilated_minkowski_points,
    dilated_schubitope_points, lattice_free_check,
)
from schubitope.verifier import (
    random_diagrams, small_diagrams, verify_grothendieck_suite, verify_key_suite,
    verify_schubert_suite, verify_schubitope_criterion,
)


def crit(key, text):
    return pytest.mark.criterion(key, text)


def timed(fn, *args, **kw):
    start = time.perf_counter()
    out = fn(*args, **kw)
    return out, time.perf_counter() - start


def _show(report, secs):
    print(f"{report.suite}: {report.corpus}: {report.n_instances} instances, "
          f"{report.n_failures} failures, {secs:.1f}s, summary={report.summary}")


@crit(1, "diagram 1,3;2,3;1: intervals, witness, lattice points, Ehrhart (< 1 s)")
def test_overlapping_intervals_example():
    start = time.perf_counter()
    d = parse_diagram("1,3;2,3;1", 3)
    assert [m.as_set() for m in movable_intervals(d)] == [{2, 3}, {1, 2, 3}, set()]
    assert criterion_check(d, "at-most-one") == (False, (1, 2))
    ok, witness = lattice_free_check(dilated_schubitope_points(d, 1))
    assert not ok and witness is not None
    assert not ehrhart_factorization_check(d).ok
    assert time.perf_counter() - start < 1.0


@crit(2, "criterion / lattice-free / Ehrhart factorization agree on 512 + 200 diagrams (< 2 min)")
def test_theorem_sweep():
    report, secs = timed(verify_schubitope_criterion, seed=0, random_count=200, random_n=4, jobs=1)
    _show(report, secs)
    assert report.n_instances == 712
    assert report.passed, report.failures[:5]
    assert secs < 120


@crit(3, "pattern / hook / interval / lattice-free agree on S_5, counts on S_3 and S_4, SNP (< 5 min)")
def test_schubert_sweep():
    for n, expected in ((3, 6), (4, 22)):
        r = verify_schubert_suite(n, jobs=1)
        assert r.passed
        assert r.summary["lattice_free"] == expected == r.summary["avoiding"]
    assert sorted(verify_schubert_suite(4, jobs=1).summary["not_lattice_free"]) == ["1423", "1432"]
    report, secs = timed(verify_schubert_suite, 5, jobs=1)
    _show(report, secs)
    assert report.passed, report.failures[:5]
    assert report.n_instances == 120
    assert report.summary["snp_checked"] == 120
    assert secs < 300


@pytest.mark.large
@crit(3, "pattern / hook / interval / lattice-free agree on S_5, counts on S_3 and S_4, SNP (< 5 min)")
def test_schubert_sweep_large():
    report, secs = timed(verify_schubert_suite, 6, snp_max_n=5)
    _show(report, secs)
    assert report.passed, report.failures[:5]
    assert report.n_instances == 720


@crit(4, "H-description and Minkowski enumeration agree for t = 0..3 on the corpus")
def test_oracle_equivalence():
    for d in small_diagrams(3) + random_diagrams(200, 4, seed=0):
        factors = base_vertex_sets(d)
        for t in range(4):
            assert dilated_schubitope_points(d, t).points == dilated_minkowski_points(factors, t).points, (d, t)


@crit(5, "every Ehrhart polynomial matches held-out counts and has constant term 1")
def test_ehrhart_integrity():
    checked = 0
    for d in small_diagrams(3) + random_diagrams(200, 4, seed=0):
        p = schubitope_ehrhart(d)
        dim = affine_dimension(dilated_schubitope_points(d, 1).points)
        assert p.coefficients[0] == 1
        for t in (dim + 1, dim + 2):
            assert p(t) == len(dilated_schubitope_points(d, t))
        for vs in base_vertex_sets(d):
            q = vertex_set_ehrhart(vs)
            assert q.coefficients[0] == 1
            k = affine_dimension(vs)
            assert q(k + 1) == len(dilated_minkowski_points([vs], k + 1))
        checked += 1
    print(f"{checked} Schubitope Ehrhart polynomials checked")


@crit(6, "Grothendieck Newton polytopes over S_4: lattice-free iff avoiding, identities (< 5 min)")
def test_grothendieck_sweep():
    report, secs = timed(verify_grothendieck_suite, 4, jobs=1)
    _show(report, secs)
    assert report.passed, report.failures[:5]
    assert report.n_instances == 24
    assert report.summary["avoiding"] == report.summary["lattice_free"] == 22
    assert secs < 300


@pytest.mark.large
@crit(6, "Grothendieck Newton polytopes over S_4: lattice-free iff avoiding, identities (< 5 min)")
def test_grothendieck_sweep_large():
    report, secs = timed(verify_grothendieck_suite, 5)
    _show(report, secs)
    assert report.passed, report.failures[:5]
    avoiding = sum(avoids_lattice_free_patterns(w) for w in all_permutations(5))
    assert report.summary["avoiding"] == report.summary["lattice_free"] == avoiding


@crit(7, "key polynomials over 256 compositions: (0,2) / lattice-free / closures / SNP (< 2 min)")
def test_key_sweep():
    report, secs = timed(verify_key_suite, 3, 4, jobs=1)
    _show(report, secs)
    assert report.passed, report.failures[:5]
    assert report.n_instances == 256
    assert secs < 120


@crit(8, "repeated suites with the same seed give byte-identical reports")
def test_determinism():
    runs = [
        lambda jobs: verify_schubitope_criterion(seed=7, random_count=40, jobs=jobs),
        lambda jobs: verify_schubert_suite(4, jobs=jobs),
        lambda jobs: verify_grothendieck_suite(4, jobs=jobs),
        lambda jobs: verify_key_suite(2, 3, jobs=jobs),
    ]
    for run in runs:
        first = run(1).to_json(timing=False)
        assert run(1).to_json(timing=False) == first
        # sharding across processes must not change the bytes either
        assert run(2).to_json(timing=False) == first
