"""Command-line front end; every subcommand prints one JSON document."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import combinations

from .combinatorics import (
    Composition, Diagram, Permutation, avoids_lattice_free_patterns,
    composition_avoids_02, criterion_check, format_diagram, from_mask,
    movable_intervals, parse_diagram, rothe_diagram, skyline_diagram, theta,
    theta_word, upper_closure_weight,
)
from .ehrhart import (
    EhrhartMismatch, base_polytope_ehrhart, ehrhart_factorization_check,
    spanning_polytope_ehrhart,
)
from .matroid import SchubertMatroid, bases, spanning_sets
from .polynomial import grothendieck, key, schubert, support_and_degrees
from .polytope import (
    base_vertex_sets, dilated_minkowski_points, dilated_schubitope_points,
    gp_certificate, hull_lattice_points, lattice_free_check, support_property_checks,
)
from .verifier import (
    Report, verify_grothendieck_suite, verify_key_suite, verify_schubert_suite,
    verify_schubitope_criterion,
)

OUTPUT_DIR_ENV = "SCHUBITOPE_OUTPUT_DIR"


class UsageError(ValueError):
    pass


def _default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _subset(text: str) -> frozenset[int]:
    text = text.strip()
    return frozenset(int(a) for a in text.split(",")) if text else frozenset()


def _sorted_sets(sets) -> list[list[int]]:
    return [sorted(s) for s in sets]


def _add_input(p: argparse.ArgumentParser, perm=True, comp=True, diagram=True):
    g = p.add_mutually_exclusive_group()
    if perm:
        g.add_argument("--perm", help='permutation, "365142" or "[3,6,5,1,4,2]"')
    if comp:
        g.add_argument("--comp", help='composition, "4,1,3,0,2"')
    if diagram:
        g.add_argument("--diagram", help='columns as "1,3;2,3;1" (use with --n)')
    p.add_argument("--n", type=int, help="ambient grid size")


def _read_input(args) -> tuple[str, object, Diagram]:
    """Return (kind, parsed object, diagram)."""
    if getattr(args, "perm", None):
        w = Permutation.parse(args.perm)
        return "perm", w, rothe_diagram(w)
    if getattr(args, "comp", None):
        a = Composition.parse(args.comp)
        return "comp", a, skyline_diagram(a, args.n)
    if getattr(args, "diagram", None) is not None:
        if args.n is None:
            raise UsageError("--diagram needs --n")
        d = parse_diagram(args.diagram, args.n)
        return "diagram", d, d
    raise UsageError("one of --perm, --comp, --diagram is required")


def _diagram_doc(d: Diagram) -> dict:
    amo, w1 = criterion_check(d, "at-most-one")
    dis, w2 = criterion_check(d, "disjoint")
    return {
        "n": d.n,
        "diagram": format_diagram(d),
        "columns": [sorted(c) for c in d.columns],
        "boxes": d.size,
        "movable_intervals": [sorted(m.as_set()) for m in movable_intervals(d)],
        "criterion": {
            "at_most_one": {"ok": amo, "witness": list(w1) if w1 else None},
            "disjoint": {"ok": dis, "witness": list(w2) if w2 else None},
        },
        "upper_closure_weight": list(upper_closure_weight(d)),
    }


def cmd_diagram(args) -> dict:
    if args.kind == "rothe":
        if not args.perm:
            raise UsageError("diagram rothe needs --perm")
        d = rothe_diagram(Permutation.parse(args.perm))
    elif args.kind == "skyline":
        if not args.comp:
            raise UsageError("diagram skyline needs --comp")
        d = skyline_diagram(Composition.parse(args.comp), args.n)
    else:
        if args.diagram is None or args.n is None:
            raise UsageError("diagram parse needs --diagram and --n")
        d = parse_diagram(args.diagram, args.n)
    return _diagram_doc(d)


def cmd_theta(args) -> dict:
    _, _, d = _read_input(args)
    if args.subset is not None:
        subsets = [_subset(args.subset)]
    else:
        subsets = [frozenset(c) for k in range(d.n + 1) for c in combinations(range(1, d.n + 1), k)]
    rows = []
    for I in subsets:
        total, per = theta(d, I)
        rows.append({
            "subset": sorted(I),
            "theta": total,
            "columns": [{"word": theta_word(c, I, d.n), "theta": v} for c, v in zip(d.columns, per)],
        })
    return {"diagram": format_diagram(d), "n": d.n, "values": rows}


def cmd_points(args) -> dict:
    _, _, d = _read_input(args)
    if args.t < 0:
        raise UsageError("--t must be nonnegative")
    h = dilated_schubitope_points(d, args.t)
    m = dilated_minkowski_points(base_vertex_sets(d), args.t)
    return {
        "diagram": format_diagram(d), "n": d.n, "t": args.t,
        "count": len(h), "agree": h.points == m.points,
        "h_description": h.to_json(), "minkowski": m.to_json(),
    }


def cmd_lattice_free(args) -> dict:
    kind, obj, d = _read_input(args)
    ok, witness = lattice_free_check(dilated_schubitope_points(d, 1))
    crit, pair = criterion_check(d, "at-most-one")
    doc = {
        "input": str(obj) if kind != "diagram" else format_diagram(d),
        "kind": kind,
        "ok": ok,
        "witness": list(witness) if witness else None,
        "criterion": {"ok": crit, "witness": list(pair) if pair else None},
    }
    if kind == "perm":
        doc["avoids_patterns"] = avoids_lattice_free_patterns(obj)
    elif kind == "comp":
        doc["avoids_02"] = composition_avoids_02(obj)
    return doc


def cmd_ehrhart(args) -> dict:
    if args.column is not None:
        if args.n is None:
            raise UsageError("--column needs --n")
        m = SchubertMatroid(args.n, _subset(args.column))
        poly = spanning_polytope_ehrhart(m, args.loopless) if args.spanning else base_polytope_ehrhart(m)
        return {"column": sorted(m.S), "n": m.n,
                "polytope": "spanning" if args.spanning else "base",
                "ehrhart": poly.to_strings()}
    _, _, d = _read_input(args)
    res = ehrhart_factorization_check(d)
    return {
        "diagram": format_diagram(d), "n": d.n,
        "ehrhart": res.schubitope.to_strings(),
        "product": res.product.to_strings(),
        "columns": [c.to_strings() for c in res.columns],
        "factorizes": res.ok,
    }


_FAMILIES = {"schubert": schubert, "grothendieck": grothendieck, "key": key}


def _family_poly(args):
    if args.family == "key":
        if not args.comp:
            raise UsageError("key needs --comp")
        a = Composition.parse(args.comp)
        if args.n is not None and args.n != a.n:
            a = Composition(a.parts + (0,) * (args.n - a.n)) if args.n > a.n else None
            if a is None:
                raise UsageError("--n is smaller than the composition length")
        return a, key(a)
    if not args.perm:
        raise UsageError(f"{args.family} needs --perm")
    w = Permutation.parse(args.perm)
    return w, _FAMILIES[args.family](w)


def cmd_poly(args):
    _, f = _family_poly(args)
    return f.to_json()


def cmd_newton(args) -> dict:
    obj, f = _family_poly(args)
    stats = support_and_degrees(f)
    supp = sorted(stats.support)
    hull = hull_lattice_points(supp)
    lf, witness = lattice_free_check(hull)
    gp_ok, _, reason = gp_certificate(hull)
    return {
        "family": args.family, "input": str(obj),
        "support": [list(p) for p in supp],
        "hull_points": hull.to_json(),
        "lattice_free": {"ok": lf, "witness": list(witness) if witness else None},
        "checks": support_property_checks(supp).as_dict(),
        "gp_certificate": {"ok": gp_ok, "reason": reason},
        "max_degrees": list(stats.max_degrees),
        "total_degree": stats.total_degree,
        "coefficient_sum": str(stats.coefficient_sum),
        "top_component_terms": len(stats.top_component),
    }


def cmd_bases(args):
    m = SchubertMatroid(args.n, _subset(args.set))
    return _sorted_sets(bases(m))


def cmd_spanning(args):
    m = SchubertMatroid(args.n, _subset(args.set))
    return _sorted_sets(spanning_sets(m, loopless=args.loopless))


def run_verify(args) -> Report:
    common = {"jobs": args.jobs, "fail_fast": args.fail_fast}
    suite = args.suite
    if suite == "theorem":
        diagrams = None
        if args.diagram is not None:
            if args.n is None:
                raise UsageError("--diagram needs --n")
            diagrams = [parse_diagram(args.diagram, args.n)]
        return verify_schubitope_criterion(diagrams, seed=args.seed, random_count=args.random_count,
                                           random_n=args.random_n, max_t=args.max_t, **common)
    if suite == "schubert":
        n = args.n or (6 if args.large else 5)
        perms = [Permutation.parse(args.perm)] if args.perm else None
        return verify_schubert_suite(n, perms=perms, max_t=args.max_t, **common)
    if suite == "grothendieck":
        n = args.n or (5 if args.large else 4)
        perms = [Permutation.parse(args.perm)] if args.perm else None
        return verify_grothendieck_suite(n, perms=perms, **common)
    comps = [Composition.parse(args.comp)] if args.comp else None
    return verify_key_suite(args.max_part, args.max_len, compositions=comps,
                            max_t=args.max_t, **common)


def report_csv(report: Report, timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["record", "instance", "check", "value"])
    doc = report.to_dict(timing)
    for k in ("suite", "corpus", "seed", "n_instances", "n_failures", "status", "elapsed_ms"):
        if k in doc:
            w.writerow(["meta", "", k, doc[k]])
    for k, v in report.summary.items():
        w.writerow(["summary", "", k, json.dumps(v)])
    for f in report.failures:
        w.writerow(["failure", f["instance"], f["check"], json.dumps({"detail": f["detail"], "repro": f["repro"]})])
    for f in report.findings:
        w.writerow(["finding", f["instance"], f["finding"], json.dumps(f)])
    return buf.getvalue()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="schubitope", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("diagram", help="build a diagram and its movable intervals")
    q.add_argument("kind", choices=["rothe", "skyline", "parse"])
    _add_input(q)

    q = sub.add_parser("theta", help="theta_D(I) values")
    _add_input(q)
    q.add_argument("--subset", help='e.g. "2,3"; all subsets when omitted')

    q = sub.add_parser("points", help="lattice points of t S_D by both backends")
    _add_input(q)
    q.add_argument("--t", type=int, default=1)

    q = sub.add_parser("lattice-free", help="is the Schubitope lattice-free")
    _add_input(q)

    q = sub.add_parser("ehrhart", help="Ehrhart polynomial and factorization verdict")
    _add_input(q)
    q.add_argument("--column", help="Schubert matroid column S instead of a diagram")
    q.add_argument("--spanning", action="store_true", help="spanning-set polytope of --column")
    q.add_argument("--loopless", action="store_true", help="drop loops from spanning sets")

    for name in ("poly", "newton"):
        q = sub.add_parser(name, help="polynomial terms" if name == "poly" else "Newton polytope data")
        q.add_argument("family", choices=sorted(_FAMILIES))
        _add_input(q, diagram=False)

    for name, helptext in (("bases", "bases of SM_n(S)"), ("spanning-sets", "spanning sets of SM_n(S)")):
        q = sub.add_parser(name, help=helptext)
        q.add_argument("--set", required=True, help='defining subset, e.g. "1,3"')
        q.add_argument("--n", type=int, required=True)
        if name == "spanning-sets":
            q.add_argument("--loopless", action="store_true")

    q = sub.add_parser("verify", help="run a verification suite")
    q.add_argument("suite", choices=["theorem", "schubert", "grothendieck", "key"])
    _add_input(q)
    q.add_argument("--large", action="store_true", help="S_6 for schubert, S_5 for grothendieck")
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--random-count", type=int, default=200)
    q.add_argument("--random-n", type=int, default=4)
    q.add_argument("--max-part", type=int, default=3)
    q.add_argument("--max-len", type=int, default=4)
    q.add_argument("--max-t", type=int, default=3, help="largest dilation in the oracle cross-check")
    q.add_argument("--jobs", type=int, default=_default_jobs())
    q.add_argument("--fail-fast", action="store_true")
    q.add_argument("--format", choices=["json", "csv"], default="json")
    q.add_argument("--output", help=f"also write the report here (relative to ${OUTPUT_DIR_ENV} if set)")
    q.add_argument("--no-timing", action="store_true", help="omit elapsed_ms for byte-stable output")
    return p


_COMMANDS = {
    "diagram": cmd_diagram, "theta": cmd_theta, "points": cmd_points,
    "lattice-free": cmd_lattice_free, "ehrhart": cmd_ehrhart, "poly": cmd_poly,
    "newton": cmd_newton, "bases": cmd_bases, "spanning-sets": cmd_spanning,
}


def _output_path(args) -> str | None:
    base = os.environ.get(OUTPUT_DIR_ENV)
    if args.output:
        return args.output if os.path.isabs(args.output) or not base else os.path.join(base, args.output)
    if base:
        return os.path.join(base, f"{args.suite}-report.{args.format}")
    return None


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report = run_verify(args)
            timing = not args.no_timing
            text = report_csv(report, timing) if args.format == "csv" else report.to_json(timing) + "\n"
            path = _output_path(args)
            if path:
                os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
                with open(path, "w") as fh:
                    fh.write(text)
            stdout.write(text)
            return 0 if report.passed else 1
        doc = _COMMANDS[args.command](args)
    except (ValueError, EhrhartMismatch) as exc:
        print(f"schubitope: error: {exc}", file=sys.stderr)
        return 2
    stdout.write(json.dumps(doc, separators=(",", ":")) + "\n")
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
