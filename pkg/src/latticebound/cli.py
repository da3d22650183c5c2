"""Command-line interface.

All numeric output is exact rational, rendered as ``p/q`` (or ``n`` when
integral).  Exit status: 0 on success, 1 on verification failure, 2 on
usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io as lbio
from .bounds import (
    ApplicabilityError,
    best_facet_bound,
    equality_certificate,
    facet_bound,
    pikhurko,
    proof_trace,
    tau,
    vdc_check,
)
from .constructions import exceptional_p31, lift, t_simplex, zpw_simplex
from .geometry import Face, LatticeSimplex, interior_points, relint_points, volume
from .io import (
    DataIntegrityError,
    ParseError,
    format_census,
    format_simplex,
    ingest_census,
    outlook_report,
    parse_simplices,
)
from .survey import enumerate_triangles, filter_one_relint_facet, verify_theorem_main_2d
from .unimodular import canonical_form

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


def _rat(x) -> str:
    return str(Fraction(x))


def _read_simplices(path) -> list[LatticeSimplex]:
    text = sys.stdin.read() if path in (None, "-") else open(path).read()
    records = parse_simplices(text)
    if not records:
        raise ParseError("no simplex records in input")
    return [r.to_simplex() for r in records]


def _facet(s: LatticeSimplex, index: int | None) -> Face:
    if index is not None:
        if index < 0 or index > s.dim:
            raise ApplicabilityError(f"facet index must be in 0..{s.dim}")
        return Face(s, tuple(j for j in range(s.dim + 1) if j != index))
    return best_facet_bound(s).facet


def _emit(payload, as_json):
    if as_json:
        payload = dict(payload)
        payload["schemaVersion"] = lbio.SCHEMA_VERSION
        print(json.dumps(payload, indent=2, default=str))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_construct(args):
    if args.what == "zpw":
        s = zpw_simplex(args.dim, args.k)
    elif args.what == "t":
        s = t_simplex(args.dim)
    elif args.what == "exceptional":
        s = exceptional_p31()
    else:  # lift
        base = _read_simplices(args.input)[0]
        s = lift(base, args.k)
    sys.stdout.write(format_simplex(s))
    print(f"# volume = {_rat(volume(s))}")
    return EXIT_OK


def cmd_count(args):
    for s in _read_simplices(args.input):
        if args.what == "interior":
            pts = interior_points(s)
        else:
            pts = relint_points(_facet(s, args.facet))
        print(f"{len(pts)}: " + " ".join(",".join(str(c) for c in p) for p in pts))
    return EXIT_OK


def cmd_bound(args):
    ok = True
    for s in _read_simplices(args.input):
        if args.what == "facet":
            r = facet_bound(s, _facet(s, args.facet))
            payload = {
                "facet": list(r.facet.vertex_indices),
                "relintPoint": list(r.relint_point),
                "betas": [_rat(b) for b in r.betas],
                "bound": _rat(r.bound),
                "volume": _rat(volume(s)),
                "tight": r.tight,
            }
            ok = ok and volume(s) <= r.bound
        elif args.what == "pikhurko":
            r = pikhurko(s)
            payload = {
                "nu": _rat(r.nu),
                "volume": _rat(volume(s)),
                "perPoint": {
                    ",".join(str(c) for c in p): _rat(pb.bound)
                    for p, pb in sorted(r.per_point.items())
                },
            }
            ok = ok and volume(s) <= r.nu
        elif args.what == "tau":
            payload = {"tau": _rat(tau(s))}
        else:  # vdc on the proof-trace lattice and box
            trace = proof_trace(s, _facet(s, args.facet))
            r = vdc_check(trace.lattice, trace.box)
            payload = {
                "lhs": _rat(r.lhs),
                "rhs": _rat(r.rhs),
                "holds": r.holds,
                "tight": r.tight,
                "ySize": len(trace.y_set),
                "hMinusCount": trace.h_minus_count,
                "hZeroCount": trace.h_zero_count,
            }
            ok = ok and r.holds
        _emit(payload, args.json)
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_certify(args):
    ok = True
    for s in _read_simplices(args.input):
        cert = equality_certificate(s, _facet(s, args.facet))
        payload = {
            "lineDirection": list(cert.line_direction),
            "parallelEdge": list(cert.parallel_edge) if cert.parallel_edge else None,
            "collinearOk": cert.collinear_ok,
            "edgeOk": cert.edge_ok,
        }
        _emit(payload, args.json)
        ok = ok and cert.collinear_ok and cert.edge_ok
    return EXIT_OK if ok else EXIT_VERIFICATION


def cmd_canon(args):
    for s in _read_simplices(args.input):
        print(canonical_form(s).encoding)
    return EXIT_OK


def cmd_survey2d(args):
    census = enumerate_triangles(args.k, args.cap)
    if args.filter:
        census = filter_one_relint_facet(census)
    if args.json:
        payload = {
            "schemaVersion": lbio.SCHEMA_VERSION,
            "k": census.k,
            "cap": census.search_cap,
            "count": len(census.representatives),
            "maxArea": _rat(census.max_area),
            "maximizers": [
                [list(v) for v in t.vertices] for t in census.maximizers
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(
            format_census(census.representatives, census.k, census.search_cap)
        )
    return EXIT_OK


def cmd_verify(args):
    report = verify_theorem_main_2d(args.k, args.cap)
    if args.json:
        report = dict(report, schemaVersion=lbio.SCHEMA_VERSION)
        print(json.dumps(report, indent=2, default=str))
    else:
        for key, value in report.items():
            print(f"{key}: {value}")
    return EXIT_OK if report["passed"] else EXIT_VERIFICATION


def cmd_ingest(args):
    simplices = ingest_census(args.census, args.k)
    print(f"ok: {len(simplices)} simplices, each with {args.k} interior points")
    return EXIT_OK


def cmd_report(args):
    census = ingest_census(args.census, args.k)
    report = outlook_report(census)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print(f"total: {report['total']}")
        print(f"inSk1: {report['inSk1']}")
        print(f"nuExceeds: {report['nuExceeds']} (threshold {report['threshold']})")
    sound = all(
        Fraction(d["volume"]) <= Fraction(d["nu"])
        for d in report["details"]
        if "nu" in d
    )
    return EXIT_OK if sound else EXIT_VERIFICATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticebound",
        description="Exact volume bounds for lattice simplices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", default=None,
                       help="simplex record file (default: stdin)")

    def add_json(p):
        p.add_argument("--json", action="store_true")

    p = sub.add_parser("construct", help="build a named simplex")
    p.add_argument("what", choices=["zpw", "t", "exceptional", "lift"])
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("--k", type=int, default=1)
    add_input(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="enumerate lattice points")
    p.add_argument("what", choices=["interior", "relint"])
    p.add_argument("--facet", type=int, default=None,
                   help="index of the omitted vertex")
    add_input(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("bound", help="evaluate a volume bound")
    p.add_argument("what", choices=["facet", "pikhurko", "tau", "vdc"])
    p.add_argument("--facet", type=int, default=None)
    add_input(p)
    add_json(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("certify", help="equality-case certificate")
    p.add_argument("what", choices=["equality"])
    p.add_argument("--facet", type=int, default=None)
    add_input(p)
    add_json(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("canon", help="canonical form encoding")
    add_input(p)
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("survey2d", help="triangle census")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--filter", action="store_true",
                   help="keep only triangles with a one-relint-point edge")
    add_json(p)
    p.set_defaults(func=cmd_survey2d)

    p = sub.add_parser("verify", help="run a theorem verification")
    p.add_argument("what", choices=["main2d"])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    add_json(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ingest", help="validate a census file")
    p.add_argument("--census", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("report", help="census statistics report")
    p.add_argument("what", choices=["outlook"])
    p.add_argument("--census", required=True)
    p.add_argument("--k", type=int, default=2)
    add_json(p)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DataIntegrityError, ApplicabilityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
