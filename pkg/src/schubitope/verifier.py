"""
Exhaustive sweeps that cross-check the lattice-free equivalences over finite
corpora and summarise the outcome as a ``Report``.

Every suite is a map over instances followed by a deterministic reduction:
per-instance results are merged in canonical key order, so the report does
not depend on how the sweep was sharded.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from itertools import product
from typing import Callable, Iterable, Sequence

from .combinatorics import (
    Composition, Diagram, LATTICE_FREE_PATTERNS, Permutation, all_permutations,
    avoids_lattice_free_patterns, composition_avoids_02, contains_pattern_bruteforce,
    criterion_check, format_diagram, hook_condition, rothe_diagram, skyline_diagram,
    upper_closure_weight,
)
from .ehrhart import (
    EhrhartMismatch, EhrhartPolynomial, ehrhart_factorization_check, hull_ehrhart,
    vertex_set_ehrhart,
)
from .polynomial import grothendieck, key, schubert, support_and_degrees
from .polytope import (
    base_vertex_sets, dilated_minkowski_points,
    dilated_schubitope_points, gp_certificate, hull_lattice_points, is_vertex,
    key_closures, lattice_free_check, spanning_vertex_sets, support_property_checks,
)

__all__ = [
    "Report", "verify_schubitope_criterion", "verify_schubert_suite",
    "verify_grothendieck_suite", "verify_key_suite", "small_diagrams",
    "random_diagrams", "SUITES",
]

PROG = "python -m schubitope"


@dataclass
class Report:
    suite: str
    corpus: str
    seed: int | None
    n_instances: int
    failures: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    findings: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def n_failures(self) -> int:
        return len(self.failures)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "corpus": self.corpus,
            "seed": self.seed,
            "n_instances": self.n_instances,
            "n_failures": self.n_failures,
            "status": "PASS" if self.passed else "FAIL",
            "failures": self.failures,
            "summary": self.summary,
            "findings": self.findings,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)


@dataclass
class _Outcome:
    key: str
    failures: list[dict] = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    findings: list[dict] = field(default_factory=list)
    tags: dict = field(default_factory=dict)

    def fail(self, check: str, detail, repro: str):
        self.failures.append({"instance": self.key, "check": check, "detail": detail, "repro": repro})

    def count(self, name: str, flag: bool = True):
        self.counts[name] = self.counts.get(name, 0) + int(bool(flag))


def _run(suite: str, corpus: str, seed, instances: Sequence, worker: Callable,
         jobs: int = 1, fail_fast: bool = False) -> Report:
    start = time.perf_counter()
    outcomes: list[_Outcome] = []
    if jobs > 1 and len(instances) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(instances) // (4 * jobs))
            for res in pool.map(worker, instances, chunksize=chunk):
                outcomes.append(res)
                if fail_fast and res.failures:
                    pool.shutdown(cancel_futures=True)
                    break
    else:
        for inst in instances:
            res = worker(inst)
            outcomes.append(res)
            if fail_fast and res.failures:
                break
    outcomes.sort(key=lambda o: o.key)
    failures, findings = [], []
    counts: dict = {}
    tags: dict = {}
    for o in outcomes:
        failures.extend(o.failures)
        findings.extend(o.findings)
        for k, v in o.counts.items():
            counts[k] = counts.get(k, 0) + v
        for k, v in o.tags.items():
            tags.setdefault(k, []).append(v)
    summary = dict(sorted(counts.items()))
    summary.update(sorted(tags.items()))
    elapsed = int((time.perf_counter() - start) * 1000)
    return Report(suite, corpus, seed, len(outcomes), failures, summary, findings, elapsed)


def _oracle_check(out: _Outcome, d: Diagram, max_t: int, repro: str):
    factors = base_vertex_sets(d)
    for t in range(max_t + 1):
        h = dilated_schubitope_points(d, t)
        m = dilated_minkowski_points(factors, t)
        if h.points != m.points:
            out.fail("oracle-equivalence", {"t": t, "h_count": len(h), "minkowski_count": len(m)}, repro)
    out.count("oracle_dilations_checked", True)


def _factorization(out: _Outcome, d: Diagram, repro: str):
    try:
        fac = ehrhart_factorization_check(d)
    except EhrhartMismatch as exc:
        out.fail("ehrhart-integrity", str(exc), repro)
        return None
    out.count("ehrhart_polynomials_checked", True)
    if fac.schubitope.coefficients[:1] != (1,):
        out.fail("ehrhart-constant-term", fac.schubitope.to_strings(), repro)
    return fac


# -- diagrams: criterion / lattice-free / factorization ------------------------

def small_diagrams(n: int = 3) -> list[Diagram]:
    """Every diagram in the n x n grid (2^(n*n) of them)."""
    cells = [(i, j) for j in range(1, n + 1) for i in range(1, n + 1)]
    out = []
    for bits in range(1 << len(cells)):
        out.append(Diagram.from_boxes(n, [c for k, c in enumerate(cells) if bits >> k & 1]))
    return out


def random_diagrams(count: int, n: int = 4, seed: int = 0) -> list[Diagram]:
    """Each cell of the n x n grid present independently with probability 1/2."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        boxes = [(i, j) for j in range(1, n + 1) for i in range(1, n + 1) if rng.random() < 0.5]
        out.append(Diagram.from_boxes(n, boxes))
    return out


def _diagram_key(d: Diagram) -> str:
    return f"n={d.n}:{format_diagram(d)}"


def _check_diagram(d: Diagram, max_t: int = 3) -> _Outcome:
    out = _Outcome(_diagram_key(d))
    repro = f"{PROG} verify theorem --diagram '{format_diagram(d)}' --n {d.n}"
    crit, witness = criterion_check(d, "at-most-one")
    L = dilated_schubitope_points(d, 1)
    lf, point = lattice_free_check(L)
    fac = _factorization(out, d, repro)
    _oracle_check(out, d, max_t, repro)
    out.count("criterion_holds", crit)
    out.count("lattice_free", lf)
    if fac is not None:
        out.count("factorizes", fac.ok)
        if not crit == lf == fac.ok:
            out.fail("three-way-equivalence", {
                "criterion": crit, "witness_columns": witness, "lattice_free": lf,
                "non_vertex": point, "factorizes": fac.ok,
            }, repro)
    return out


def verify_schubitope_criterion(diagrams: Iterable[Diagram] | None = None, *, seed: int = 0,
                                random_count: int = 200, random_n: int = 4, max_t: int = 3,
                                jobs: int = 1, fail_fast: bool = False) -> Report:
    """Criterion (at most one shared row) vs lattice-freeness vs Ehrhart factorization."""
    if diagrams is None:
        corpus = small_diagrams(3) + random_diagrams(random_count, random_n, seed)
        desc = f"all 512 diagrams in [3]x[3] + {random_count} random diagrams in [{random_n}]x[{random_n}] (p=1/2)"
    else:
        corpus = list(diagrams)
        desc = "explicit: " + ", ".join(_diagram_key(d) for d in corpus)
    return _run("theorem", desc, seed, corpus, partial(_check_diagram, max_t=max_t), jobs, fail_fast)


# -- Schubert polynomials -------------------------------------------------------

def _check_schubert(w: Permutation, snp_max_n: int = 5, max_t: int = 3) -> _Outcome:
    out = _Outcome(str(w))
    repro = f"{PROG} verify schubert --perm {w}"
    d = rothe_diagram(w)
    disjoint, _ = criterion_check(d, "disjoint")
    at_most_one, _ = criterion_check(d, "at-most-one")
    avoids = avoids_lattice_free_patterns(w)
    avoids_bf = not any(contains_pattern_bruteforce(w, tau) for tau in LATTICE_FREE_PATTERNS)
    hook = hook_condition(w)
    L = dilated_schubitope_points(d, 1)
    lf, point = lattice_free_check(L)
    fac = _factorization(out, d, repro)
    _oracle_check(out, d, max_t, repro)

    if avoids != avoids_bf:
        out.fail("pattern-implementations-agree", {"search": avoids, "bruteforce": avoids_bf}, repro)
    verdicts = {"lattice_free": lf, "disjoint": disjoint, "avoids": avoids,
                "factorizes": None if fac is None else fac.ok}
    if fac is not None and len({lf, disjoint, avoids, fac.ok}) != 1:
        out.fail("four-way-equivalence", dict(verdicts, non_vertex=point), repro)
    if not hook == avoids == disjoint:
        out.fail("hook-condition", {"hook": hook, "avoids": avoids, "disjoint": disjoint}, repro)
    if at_most_one != lf:
        out.fail("criterion-at-most-one", {"at_most_one": at_most_one, "lattice_free": lf}, repro)
    if at_most_one != disjoint:
        out.findings.append({"instance": out.key, "finding": "interval modes differ",
                             "at_most_one": at_most_one, "disjoint": disjoint})
    if w.n <= snp_max_n:
        supp = tuple(sorted(schubert(w).support()))
        if supp != L.points:
            out.fail("schubert-snp", {"support": len(supp), "schubitope_points": len(L)}, repro)
        out.count("snp_checked")
    out.count("lattice_free", lf)
    out.count("avoiding", avoids)
    if not lf:
        out.tags["not_lattice_free"] = str(w)
    return out


def verify_schubert_suite(n: int = 5, *, perms: Iterable[Permutation] | None = None,
                          snp_max_n: int = 5, max_t: int = 3, jobs: int = 1,
                          fail_fast: bool = False) -> Report:
    """Lattice-freeness of Newton(S_w) against patterns, hooks, intervals and Ehrhart."""
    if perms is None:
        if not 2 <= n <= 6:
            raise ValueError("n must lie in 2..6")
        corpus = all_permutations(n)
        desc = f"all of S_{n}"
    else:
        corpus = list(perms)
        desc = "explicit: " + ", ".join(map(str, corpus))
    worker = partial(_check_schubert, snp_max_n=snp_max_n, max_t=max_t)
    return _run("schubert", desc, None, corpus, worker, jobs, fail_fast)


# -- Grothendieck polynomials ---------------------------------------------------

def _check_grothendieck(w: Permutation) -> _Outcome:
    out = _Outcome(str(w))
    repro = f"{PROG} verify grothendieck --perm {w}"
    n = w.n
    d = rothe_diagram(w)
    G = grothendieck(w)
    S = schubert(w)
    gs = support_and_degrees(G)
    ss = support_and_degrees(S)
    avoids = avoids_lattice_free_patterns(w)

    weight = upper_closure_weight(d)
    if not gs.max_degrees == ss.max_degrees == weight:
        out.fail("max-degree-equality", {"grothendieck": gs.max_degrees, "schubert": ss.max_degrees,
                                          "upper_closure": weight}, repro)
    if gs.ones_value != 1:
        out.fail("principal-specialization", gs.ones_value, repro)
    if gs.lowest_component != S:
        out.fail("lowest-component-is-schubert", None, repro)

    hull = hull_lattice_points(gs.support)
    lf, point = lattice_free_check(hull)
    if lf != avoids:
        out.fail("lattice-free-iff-avoids", {"lattice_free": lf, "avoids": avoids, "non_vertex": point}, repro)

    try:
        newton = hull_ehrhart(gs.support)
        cols = [vertex_set_ehrhart(vs) for vs in spanning_vertex_sets(d)]
    except EhrhartMismatch as exc:
        out.fail("ehrhart-integrity", str(exc), repro)
        newton = None
    if newton is not None:
        out.count("ehrhart_polynomials_checked")
        prod = EhrhartPolynomial.one()
        for c in cols:
            prod = prod * c
        factorizes = newton == prod
        if factorizes != avoids:
            out.fail("spanning-ehrhart-factorization", {
                "avoids": avoids, "newton": newton.to_strings(), "product": prod.to_strings()}, repro)

    if avoids:
        mink = dilated_minkowski_points(spanning_vertex_sets(d), 1)
        if mink.points != hull.points:
            out.fail("newton-equals-spanning-sum", {"hull": len(hull), "minkowski": len(mink)}, repro)
        checks = support_property_checks(gs.support)
        if not checks.all():
            out.fail("support-properties", checks.as_dict(), repro)
        ok, _, reason = gp_certificate(hull)
        if not ok:
            out.fail("gp-certificate", reason, repro)
        if len(gs.top_component) != 1:
            out.fail("single-top-term", len(gs.top_component), repro)
        if gs.coefficient_sum != 1:
            out.fail("coefficient-sum", gs.coefficient_sum, repro)
    out.count("avoiding", avoids)
    out.count("lattice_free", lf)
    return out


def verify_grothendieck_suite(n: int = 4, *, perms: Iterable[Permutation] | None = None,
                              jobs: int = 1, fail_fast: bool = False) -> Report:
    """Newton polytopes of Grothendieck polynomials and the support conjectures."""
    if perms is None:
        if not 2 <= n <= 5:
            raise ValueError("n must lie in 2..5")
        corpus = all_permutations(n)
        desc = f"all of S_{n}"
    else:
        corpus = list(perms)
        desc = "explicit: " + ", ".join(map(str, corpus))
    return _run("grothendieck", desc, None, corpus, _check_grothendieck, jobs, fail_fast)


# -- key polynomials --------------------------------------------------------------

def _check_key(alpha: Composition, max_t: int = 3) -> _Outcome:
    out = _Outcome(str(alpha))
    repro = f"{PROG} verify key --comp {alpha}"
    d = skyline_diagram(alpha)
    K = key(alpha)
    supp = tuple(sorted(K.support()))
    hull = hull_lattice_points(supp)
    S_D = dilated_schubitope_points(d, 1)
    vert = tuple(p for p in hull.points if is_vertex(p, hull))
    lf = len(vert) == len(hull)
    avoids = composition_avoids_02(alpha)
    fac = _factorization(out, d, repro)
    _oracle_check(out, d, max_t, repro)
    closure_v, closure_l = key_closures(alpha)

    if supp != hull.points:
        out.fail("key-snp", {"support": len(supp), "hull": len(hull)}, repro)
    if S_D.points != hull.points:
        out.fail("schubitope-equals-newton", {"schubitope": len(S_D), "hull": len(hull)}, repro)
    if set(vert) != closure_v:
        out.fail("vertex-closure", {"vertices": len(vert), "closure": len(closure_v)}, repro)
    if set(hull.points) != closure_l:
        out.fail("lattice-closure", {"points": len(hull), "closure": len(closure_l)}, repro)
    if fac is not None and not lf == avoids == fac.ok:
        out.fail("three-way-equivalence", {"lattice_free": lf, "avoids_02": avoids,
                                            "factorizes": fac.ok}, repro)
    out.count("lattice_free", lf)
    out.count("avoiding", avoids)
    return out


def verify_key_suite(max_part: int = 3, max_len: int = 4, *,
                     compositions: Iterable[Composition] | None = None,
                     max_t: int = 3, jobs: int = 1, fail_fast: bool = False) -> Report:
    """All compositions of length ``max_len`` with parts in 0..max_part."""
    if compositions is None:
        if max_part > max_len:
            raise ValueError("parts must not exceed the length (skyline fits in n x n)")
        corpus = [Composition(p) for p in product(range(max_part + 1), repeat=max_len)]
        desc = f"compositions of length {max_len} with parts <= {max_part}"
    else:
        corpus = list(compositions)
        desc = "explicit: " + ", ".join(map(str, corpus))
    return _run("key", desc, None, corpus, partial(_check_key, max_t=max_t), jobs, fail_fast)


SUITES = {
    "theorem": verify_schubitope_criterion,
    "schubert": verify_schubert_suite,
    "grothendieck": verify_grothendieck_suite,
    "key": verify_key_suite,
}
