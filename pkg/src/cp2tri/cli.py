"""Command-line interface.

Exit codes: 0 when the requested claims hold, 1 when a checked claim fails
(or a required certification stays inconclusive), 2 on usage or input
errors.  Every randomized report echoes its seed; every numeric report its
tolerance.  Complexes travel in the facet-list text format; ``-`` reads
standard input.
"""

import argparse
import json
import sys

from . import colouring as col
from . import complexes as cx
from . import generators as gen
from . import geometry as geo
from . import suite as acceptance
from . import symmetry as sym
from . import verify as vf
from .labels import format_label, parse_label

SCHEMA_VERSION = 1


def _read_complex(path: str) -> cx.SimplicialComplex:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return cx.from_text(text)


def _emit(obj, as_json: bool, text_lines) -> None:
    if as_json:
        obj = {"schema_version": SCHEMA_VERSION, **obj}
        print(json.dumps(obj, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _simplex_str(s) -> str:
    return ",".join(format_label(v) for v in s)


def cmd_generate(args) -> int:
    K = gen.gen_small(args.name)
    sys.stdout.write(cx.to_text(K))
    return 0


def cmd_fvector(args) -> int:
    K = _read_complex(args.file)
    fv = cx.f_vector(K)
    _emit({"f_vector": list(fv)}, args.json, [" ".join(map(str, fv))])
    return 0


def cmd_links(args) -> int:
    K = _read_complex(args.file)
    if args.simplex:
        s = cx.simplex(parse_label(t) for t in cx._split_tokens(args.simplex, 1))
        sys.stdout.write(cx.to_text(cx.link(K, s)))
        return 0
    rows = [(format_label(v), cx.f_vector(cx.link(K, (v,)))) for v in K.vertices]
    _emit({"links": {name: list(fv) for name, fv in rows}}, args.json,
          [f"{name}: {' '.join(map(str, fv))}" for name, fv in rows])
    return 0


def cmd_verify(args) -> int:
    K = _read_complex(args.file)
    pm, offender = vf.is_closed_pseudomanifold(K)
    report = {"pseudomanifold": pm, "seed": args.seed, "budget": args.budget}
    ok = pm
    if pm:
        report["orientable"] = vf.orientable(K) is not None
        h = vf.homology(K)
        report["homology"] = {"betti": list(h.betti), "torsion": [list(t) for t in h.torsion]}
        if K.dim <= 4:
            certs, verdict = vf.is_combinatorial_manifold(K, budget=args.budget, seed=args.seed)
            report["manifold"] = {format_label(v): c.status for v, c in sorted(certs.items())}
            report["verdict"] = verdict
            ok = verdict == vf.CERTIFIED
    else:
        report["offending_ridge"] = _simplex_str(offender) if offender else None
    print(json.dumps({"schema_version": SCHEMA_VERSION, **report}, sort_keys=True))
    return 0 if ok else 1


def cmd_homology(args) -> int:
    K = _read_complex(args.file)
    h = vf.homology(K)
    _emit({"betti": list(h.betti), "torsion": [list(t) for t in h.torsion]},
          args.json, [str(h)])
    return 0


def cmd_colour(args) -> int:
    K = _read_complex(args.file)
    if args.kind == "chess":
        c = col.chess_colouring(K)
        obj = {"kind": "chess",
               "colouring": None if c is None else {_simplex_str(f): v for f, v in c.items()}}
        ok = c is not None
    elif args.kind == "regular":
        c = col.regular_colouring(K)
        obj = {"kind": "regular",
               "colouring": None if c is None else {format_label(v): cval for v, cval in c.items()}}
        ok = c is not None
    else:
        report = col.class_report(K)
        hol = col.projectivity_group(K)
        obj = {"kind": "report", **report, "projectivity_order": hol.group_order}
        ok = True
    print(json.dumps({"schema_version": SCHEMA_VERSION, **obj}, sort_keys=True))
    return 0 if ok else 1


def cmd_aut(args) -> int:
    K = _read_complex(args.file)
    auts = sym.automorphism_group(K)
    obj = {"order": len(auts)}
    if not args.order_only:
        obj["elements"] = [{format_label(v): format_label(w) for v, w in a.items()} for a in auts]
    print(json.dumps({"schema_version": SCHEMA_VERSION, **obj}, sort_keys=True))
    return 0


def cmd_orbits(args) -> int:
    K = _read_complex(args.file)
    group = sym.automorphism_group(K)
    orbs = sym.orbits(K, group, args.dim)
    obj = {"dim": args.dim, "sizes": [len(o) for o in orbs],
           "representatives": [_simplex_str(o[0]) for o in orbs]}
    _emit(obj, args.json,
          [f"orbit sizes: {obj['sizes']}"] +
          [f"rep: {r}" for r in obj["representatives"]])
    return 0


def cmd_isomorphic(args) -> int:
    K1, K2 = _read_complex(args.file1), _read_complex(args.file2)
    iso = sym.are_isomorphic(K1, K2)
    obj = {"isomorphic": iso is not None,
           "map": None if iso is None else {format_label(v): format_label(w) for v, w in iso.items()}}
    print(json.dumps({"schema_version": SCHEMA_VERSION, **obj}, sort_keys=True))
    return 0 if iso is not None else 1


def cmd_geometry_check(args) -> int:
    report = geo.geometry_report(seed=args.seed, samples=args.samples, tol=args.tol)
    print(json.dumps({"schema_version": SCHEMA_VERSION, **report}, sort_keys=True))
    return 0 if report["pass"] else 1


def cmd_moment_check(args) -> int:
    dev = geo.check_moment_triangulation(samples=args.samples, seed=args.seed)
    fac = geo.check_moment_factorization(seed=args.seed)
    ok = dev <= args.tol and fac <= 1e-12
    print(json.dumps({
        "schema_version": SCHEMA_VERSION, "seed": args.seed, "samples": args.samples,
        "tolerance": args.tol, "max_deviation": dev, "factorization_deviation": fac,
        "pass": ok}, sort_keys=True))
    return 0 if ok else 1


def cmd_paper_suite(args) -> int:
    results = acceptance.paper_suite(seed=args.seed, budget=args.budget)
    if args.json:
        obj = {"schema_version": SCHEMA_VERSION, "seed": args.seed, "budget": args.budget,
               "results": [{"id": r.cid, "title": r.title, "pass": r.passed,
                            "details": r.details} for r in results]}
        print(json.dumps(obj, sort_keys=True))
    else:
        print(f"seed={args.seed} budget={args.budget}")
        for r in results:
            print(f"{'PASS' if r.passed else 'FAIL'}  {r.cid:2d}  {r.title}")
            if args.verbose or not r.passed:
                print(f"          {r.details}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cp2tri", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="emit a named complex as a facet list")
    p.add_argument("name", help="one of: " + ", ".join(gen.generator_names()))
    p.set_defaults(fn=cmd_generate)

    p = sub.add_parser("fvector", help="face counts per dimension")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fvector)

    p = sub.add_parser("links", help="vertex-link f-vectors, or one link as a facet list")
    p.add_argument("file")
    p.add_argument("--simplex", help="comma-separated label tokens")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_links)

    p = sub.add_parser("verify", help="pseudomanifold / orientability / homology / links")
    p.add_argument("file")
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("homology", help="integer homology via Smith normal form")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("colour", help="chess / regular colourings and class report")
    p.add_argument("file")
    p.add_argument("--kind", choices=("chess", "regular", "report"), default="report")
    p.set_defaults(fn=cmd_colour)

    p = sub.add_parser("aut", help="automorphism group")
    p.add_argument("file")
    p.add_argument("--order-only", action="store_true")
    p.set_defaults(fn=cmd_aut)

    p = sub.add_parser("orbits", help="face orbits under the automorphism group")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_orbits)

    p = sub.add_parser("isomorphic", help="search for a complex isomorphism")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=cmd_isomorphic)

    p = sub.add_parser("geometry-check", help="all numeric sweeps of the realization")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tol", type=float, default=geo.DEFAULT_TOL)
    p.set_defaults(fn=cmd_geometry_check)

    p = sub.add_parser("moment-check", help="the moment-map triangulation sweep only")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--tol", type=float, default=geo.DEFAULT_TOL)
    p.set_defaults(fn=cmd_moment_check)

    p = sub.add_parser("paper-suite", help="the full claim-by-claim battery")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_paper_suite)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (cx.ParseError, cx.ComplexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
