"""Command-line interface: ``polygap <subcommand> ...``.

Exit status is 0 on success, 1 on a validation error (one-line diagnostic
on stderr), and 2 when ``feasible --check`` finds the query Infeasible.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import bounds
from .combinatorics import phi
from .constructions import FamilyTag, construct, parse_tag
from .geometry import OracleError, hull_facets, read_points
from .isomorphism import IsomorphismSizeError
from .lattice import LatticeSizeError, enumerate_lattice
from .polytope import CombinatorialPolytope, InvalidPolytope

EXIT_OK, EXIT_INVALID, EXIT_INFEASIBLE = 0, 1, 2


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def _csv(rows: list[dict], header: list[str]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _aligned(rows: list[dict], header: list[str]) -> str:
    cells = [header] + [[str(r[h]) for h in header] for r in rows]
    widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells)


# --- family selection -------------------------------------------------------

def _tag_from_args(args) -> FamilyTag:
    text = args.family
    if "(" in text:
        return parse_tag(text)
    base = parse_tag(text)

    def need(name):
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"{base.name} needs --{name}")
        return val

    match base.name:
        case "Simplex" | "Prism" | "Pentasm":
            return FamilyTag(base.name, (need("dim"),))
        case "Triplex":
            d, k = need("dim"), need("k")
            if not 1 <= k <= d:
                raise UsageError(f"Triplex needs 1 <= k <= dim, got k={k}, dim={d}")
            return FamilyTag("Triplex", (k, d - k))
        case "DeltaSum":
            return FamilyTag("DeltaSum", (need("r"), need("s")))
        case "Sigma3":
            return base
        case "Cyclic" | "Stacked":
            return FamilyTag(base.name, (need("dim"), need("v")))
    raise UsageError(f"{base.name} needs a full tag, e.g. 'Pyramid(1;Pentasm(3))'")


def _polytope_from_args(args) -> tuple[CombinatorialPolytope, str]:
    if getattr(args, "input", None):
        return CombinatorialPolytope.from_json(Path(args.input).read_text()), args.input
    if getattr(args, "points", None):
        return hull_facets(read_points(Path(args.points).read_text())), args.points
    if not args.family:
        raise UsageError("give a family, --input FILE or --points FILE")
    tag = _tag_from_args(args)
    return construct(tag), str(tag)


def _add_family_args(p, optional=False):
    p.add_argument("family", nargs="?" if optional else None,
                   help="family name (simplex, prism, triplex, pentasm, deltasum, sigma3, cyclic, "
                        "stacked) or a full tag such as 'Pyramid(1;Pentasm(3))'")
    p.add_argument("--dim", type=int)
    p.add_argument("--v", type=int, help="vertex count (cyclic, stacked)")
    p.add_argument("--k", type=int, help="prism dimension of a triplex")
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)


# --- subcommands -------------------------------------------------------------

def cmd_construct(args, out):
    tag = _tag_from_args(args)
    P = construct(tag)
    if args.json:
        out(P.to_json())
        return EXIT_OK
    out(f"{tag}: dim {P.dim}, {P.nverts} vertices, {len(P.facets)} facets")
    for f in P.facets:
        out("  " + " ".join(map(str, f)))
    return EXIT_OK


def cmd_fvector(args, out):
    P, name = _polytope_from_args(args)
    f = list(enumerate_lattice(P).f_vector)
    if args.json:
        out(_dump({"source": name, "dim": P.dim, "f_vector": f}))
    else:
        out(" ".join(map(str, f)))
    return EXIT_OK


def cmd_phi(args, out):
    value = phi(args.m, args.v, args.d)
    out(_dump({"m": args.m, "v": args.v, "d": args.d, "phi": value}) if args.json else str(value))
    return EXIT_OK


def _bound(args, out, fn, label):
    r = fn(args.v, args.d)
    if args.json:
        out(_dump({"query": {"v": args.v, "d": args.d, "bound": label}, **r.to_dict()}))
    else:
        w = f", witness {r.witness}" if r.witness else ""
        out(f"{r.value}  [{r.status}] {r.citation}{w}")
    return EXIT_OK


def cmd_min_edges(args, out):
    return _bound(args, out, bounds.min_edges, "min_edges")


def cmd_max_edges(args, out):
    return _bound(args, out, bounds.max_edges, "max_edges")


def cmd_min_facets(args, out):
    if args.ridges:
        r = bounds.min_ridges_2dplus1(args.d)
        query = {"v": 2 * args.d + 1, "d": args.d, "bound": "min_ridges"}
    else:
        if args.v is None:
            raise UsageError("min-facets needs --v (or --ridges)")
        r = bounds.min_facets(args.v, args.d)
        query = {"v": args.v, "d": args.d, "bound": "min_facets"}
    if args.json:
        out(_dump({"query": query, **r.to_dict()}))
    else:
        w = f", witness {r.witness}" if r.witness else ""
        u = "" if r.unique is None else (", unique" if r.unique else ", not unique")
        out(f"{r.value}  [{r.status}] {r.citation}{w}{u}")
    return EXIT_OK


def _print_verdict(res, out, verbose):
    out(res.summary())
    if res.verdict is bounds.Verdict.INFEASIBLE:
        seen = []
        for c in res.cases:
            if c.reason not in seen:
                seen.append(c.reason)
        for cite in seen:
            out(f"  by: {cite}")
    elif res.verdict is bounds.Verdict.FEASIBLE and res.witness is None:
        out(f"  by: {next(c.reason for c in res.cases if c.verdict is bounds.Verdict.FEASIBLE)}")
    if verbose:
        for c in res.cases:
            extra = f" {c.bound}" if c.bound is not None else ""
            w = f" {c.witness}" if c.witness else ""
            out(f"  v={c.v}: {c.verdict} {c.kind}{extra}{w}")


def cmd_feasible(args, out):
    res = bounds.edges_feasible(args.dim, args.edges)
    if args.json:
        out(_dump(res.to_dict()))
    else:
        _print_verdict(res, out, args.verbose)
    if args.check and res.verdict is bounds.Verdict.INFEASIBLE:
        return EXIT_INFEASIBLE
    return EXIT_OK


def cmd_max_dim(args, out):
    res = bounds.max_dimension_for_edges(args.edges)
    if args.json:
        out(_dump(res.to_dict()))
        return EXIT_OK
    out(str(res.dimension))
    if args.verbose:
        for d in sorted(res.certificates, reverse=True):
            out(f"  d={d}: {res.certificates[d].summary()}")
    return EXIT_OK


def _theorems(res) -> str:
    names = []
    for c in res.cases:
        name = c.reason.split(":")[0]
        if name not in names:
            names.append(name)
    return "; ".join(names)


def _gap_row(r) -> dict:
    return {"d": r.d, "edges": r.e, "exclusions": r.reason, "theorems": _theorems(r)}


GAP_HEADER = ["d", "edges", "exclusions", "theorems"]


def cmd_gaps(args, out):
    found = bounds.gaps_in_dimension(args.dim, args.max_edges)
    rows = [_gap_row(r) for r in found]
    header = GAP_HEADER
    if args.json:
        out(_dump([{**row, "cases": r.to_dict()["cases"]} for row, r in zip(rows, found)]))
    elif args.csv:
        out(_csv(rows, header))
    else:
        out(_aligned(rows, header))
    return EXIT_OK


def cmd_table(args, out):
    if args.kind == "min-edges":
        rows = bounds.min_edges_table(args.max_dim, args.min_dim)
        header = ["v", "d", "min_edges", "status", "witness"]
    else:
        rows = []
        for d in range(max(args.min_dim, 2), args.max_dim + 1):
            rows.extend(_gap_row(r) for r in bounds.gaps_in_dimension(d))
        header = GAP_HEADER
    if args.json:
        out(_dump(rows))
    elif args.csv:
        out(_csv(rows, header))
    else:
        out(_aligned(rows, header))
    return EXIT_OK


def cmd_verify(args, out):
    from .verify import run_all

    results = run_all()
    if args.json:
        out(_dump([{"criterion": r.number, "name": r.name, "passed": r.passed, "detail": r.detail}
                   for r in results]))
    else:
        for r in results:
            out(r.line())
    passed = sum(r.passed for r in results)
    failed = len(results) - passed
    if not args.json:
        out(f"{passed} passed, {failed} failed")
    return EXIT_INVALID if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="polygap", description="Edge counts and face lattices of convex polytopes.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p, csv_ok=False):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", action="store_true", help="machine-readable JSON")
        if csv_ok:
            g.add_argument("--csv", action="store_true", help="CSV with a header row")

    p = sub.add_parser("construct", help="vertex-facet incidence of a named polytope")
    _add_family_args(p)
    fmt(p)
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("fvector", help="f-vector from the face lattice")
    _add_family_args(p, optional=True)
    p.add_argument("--input", help="canonical JSON incidence file")
    p.add_argument("--points", help="point file: 'd n' then n rows of p/q coordinates")
    fmt(p)
    p.set_defaults(fn=cmd_fvector)

    p = sub.add_parser("phi", help="phi_m(v, d)")
    p.add_argument("--v", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    fmt(p)
    p.set_defaults(fn=cmd_phi)

    for name, fn, text in (("min-edges", cmd_min_edges, "least edge count of a d-polytope with v vertices"),
                           ("max-edges", cmd_max_edges, "greatest edge count of a d-polytope with v vertices")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--v", type=int, required=True)
        p.add_argument("--d", type=int, required=True)
        fmt(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("min-facets", help="least facet (or, with --ridges, ridge) count")
    p.add_argument("--v", type=int)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ridges", action="store_true", help="ridge minimum at v = 2d+1")
    fmt(p)
    p.set_defaults(fn=cmd_min_facets)

    p = sub.add_parser("feasible", help="is there a d-polytope with e edges?")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--check", action="store_true", help="exit 2 when Infeasible")
    p.add_argument("--verbose", action="store_true", help="per-vertex-count breakdown")
    fmt(p)
    p.set_defaults(fn=cmd_feasible)

    p = sub.add_parser("max-dim", help="largest dimension not ruled out for e edges")
    p.add_argument("--edges", type=int, required=True)
    p.add_argument("--verbose", action="store_true", help="print the per-dimension certificates")
    fmt(p)
    p.set_defaults(fn=cmd_max_dim)

    p = sub.add_parser("gaps", help="edge counts proved impossible in dimension D")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max-edges", type=int, help="upper end of the scan (default C(2d,2))")
    fmt(p, csv_ok=True)
    p.set_defaults(fn=cmd_gaps)

    p = sub.add_parser("table", help="tables over a range of dimensions")
    p.add_argument("kind", choices=["min-edges", "gaps"])
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("--min-dim", type=int, default=2)
    fmt(p, csv_ok=True)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run the acceptance suite")
    fmt(p)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    def out(line: str):
        print(line, file=stdout)

    try:
        args = build_parser().parse_args(argv)
        return args.fn(args, out)
    except (UsageError, ValueError, InvalidPolytope, OracleError, IsomorphismSizeError,
            LatticeSizeError, OSError, json.JSONDecodeError) as exc:
        print(f"polygap: error: {exc}", file=stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
