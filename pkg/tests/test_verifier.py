import io
import json
import shlex

from schubitope import cli, verifier
from schubitope.combinatorics import Composition, Diagram, Permutation, parse_diagram
from schubitope.verifier import (
    random_diagrams, small_diagrams, verify_grothendieck_suite, verify_key_suite,
    verify_schubert_suite, verify_schubitope_criterion,
)

OVERLAP = parse_diagram("1,3;2,3;1", 3)


def test_corpora():
    ds = small_diagrams(3)
    assert len(ds) == len(set(ds)) == 512
    a = random_diagrams(50, 4, seed=3)
    assert a == random_diagrams(50, 4, seed=3)
    assert a != random_diagrams(50, 4, seed=4)
    assert all(d.n == 4 for d in a)


def test_overlapping_diagram_all_false():
    r = verify_schubitope_criterion([OVERLAP])
    assert r.passed and r.n_instances == 1
    assert r.summary["criterion_holds"] == r.summary["lattice_free"] == r.summary["factorizes"] == 0


def test_empty_diagram_all_true():
    r = verify_schubitope_criterion([Diagram(3, (frozenset(),) * 3)])
    assert r.passed
    assert r.summary["criterion_holds"] == r.summary["lattice_free"] == r.summary["factorizes"] == 1


def test_schubert_small():
    r = verify_schubert_suite(3)
    assert r.passed and r.summary["lattice_free"] == 6
    assert r.findings == []


def test_grothendieck_examples():
    assert verify_grothendieck_suite(2).passed
    r = verify_grothendieck_suite(perms=[Permutation.parse("1432")])
    assert r.passed and r.summary["lattice_free"] == 0


def test_key_examples():
    r = verify_key_suite(compositions=[Composition((0, 2))])
    assert r.passed and r.summary["lattice_free"] == 0
    r = verify_key_suite(compositions=[Composition((3, 1, 1, 0))])
    assert r.passed and r.summary["lattice_free"] == 1


def test_failure_carries_reproduction(monkeypatch):
    monkeypatch.setattr(verifier, "lattice_free_check", lambda L: (True, None))
    r = verify_schubitope_criterion([OVERLAP])
    assert not r.passed and r.to_dict()["status"] == "FAIL"
    repro = r.failures[0]["repro"]
    argv = shlex.split(repro)
    assert argv[:3] == ["python", "-m", "schubitope"]
    monkeypatch.undo()
    # replaying the command without the fault passes
    assert cli.run(argv[3:] + ["--no-timing"], stdout=io.StringIO()) == 0


def test_fail_fast_stops_early(monkeypatch):
    monkeypatch.setattr(verifier, "lattice_free_check", lambda L: (True, None))
    corpus = small_diagrams(3)[:120]
    full = verify_schubitope_criterion(corpus, max_t=1)
    fast = verify_schubitope_criterion(corpus, max_t=1, fail_fast=True)
    assert full.n_failures > 1
    assert 1 <= fast.n_failures < full.n_failures


def test_report_schema():
    r = verify_schubert_suite(3)
    doc = json.loads(r.to_json())
    for k in ("suite", "corpus", "seed", "n_instances", "n_failures", "failures", "elapsed_ms"):
        assert k in doc
    assert "elapsed_ms" not in json.loads(r.to_json(timing=False))
    assert isinstance(doc["elapsed_ms"], int)
