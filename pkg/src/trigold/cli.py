"""Command-line front end.

Subcommands: chromatic, report, table-bn, boundcheck, zeros, locus, entropy.
Exit codes: 0 success, 2 parse/validation error, 3 resource limit exceeded,
4 internal invariant violation. Outputs are deterministic given flags and
seed, and files are written atomically (temp file + rename).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from fractions import Fraction
from typing import Optional

from . import corpus
from .chromatic import MemoCache, chromatic_poly
from .errors import (
    NoConvergence,
    ParseError,
    ResourceLimit,
    TrigoldError,
)
from .exactmath import GOLDEN_POINT, GoldenValue, IntPoly
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    family_n,
    family_poly,
)
from .golden import (
    GridSpec,
    b_locus_scan,
    family_entropy,
    tutte_bound,
    tutte_ratio,
)
from .graphs import Graph, validate_triangulation
from .roots import all_roots

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_INVARIANT = 4


def _fmt(x) -> str:
    """10 significant digits, deterministic."""
    return "%.10g" % float(x)


def _write_atomic(path: str, data: str):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".trigold-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text: str, out: Optional[str]):
    if out is None:
        sys.stdout.write(text)
    else:
        _write_atomic(out, text)


def _emit_sidecar(obj: dict, out: Optional[str]):
    if out is not None:
        _write_atomic(out + ".json", json.dumps(obj, indent=1) + "\n")


def _golden_json(x: GoldenValue) -> dict:
    d = x.to_json()
    d["float"] = float(x)
    return d


def _load_spec_or_poly(args) -> tuple:
    """Resolve (poly, n, label) from --family/--param or --in."""
    if args.family is not None and getattr(args, "infile", None):
        raise ParseError("give either --family or --in, not both")
    if args.family is not None:
        if args.family not in FAMILY_NAMES:
            raise ParseError(f"unknown family {args.family!r}")
        spec = FamilySpec(args.family, args.param)
        return family_poly(spec), family_n(spec), f"{args.family}({args.param})"
    if getattr(args, "infile", None):
        try:
            with open(args.infile) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ParseError(f"cannot read {args.infile}: {exc}") from exc
        if "coeffs" in obj:
            p = IntPoly.from_json(obj)
            n = args.n if getattr(args, "n", None) else p.degree
            return p, n, args.infile
        if "edges" in obj:
            g = Graph.from_json(obj)
            p = chromatic_poly(g, node_budget=args.budget)
            return p, g.n, args.infile
        raise ParseError(f"{args.infile}: neither a polynomial nor a graph JSON")
    raise ParseError("need --family/--param or --in")


# -- subcommands --------------------------------------------------------------------


def cmd_chromatic(args) -> int:
    p, _, _ = _load_spec_or_poly(args)
    _emit(json.dumps(p.to_json()) + "\n", args.out)
    return EXIT_OK


def cmd_report(args) -> int:
    p, n, label = _load_spec_or_poly(args)
    ratio = tutte_ratio(p, n)
    roots = all_roots(p, tol=args.tol)
    nz = roots.nearest_to_golden
    values = []
    for v in nz.values:
        if isinstance(v, complex):
            values.append({"re": _fmt(v.real), "im": _fmt(v.imag)})
        else:
            values.append({"re": _fmt(v), "im": "0"})
    record = {
        "input": label,
        "n": n,
        "p_at_golden": _golden_json(ratio.value),
        "tutte_bound": _golden_json(ratio.bound),
        "ratio": _golden_json(ratio.ratio),
        "bound_violated": ratio.violation,
        "nearest_zero": {
            "values": values,
            "distance": _fmt(nz.distance),
            "is_real": nz.is_real,
        },
    }
    _emit(json.dumps(record, indent=1) + "\n", args.out)
    return EXIT_INVARIANT if ratio.violation else EXIT_OK


def cmd_table_bn(args) -> int:
    if not 6 <= args.nmin <= args.nmax:
        raise ParseError("need 6 <= nmin <= nmax")
    gp = GOLDEN_POINT.to_mpf(120).value
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "q_z", "offset"])
    sidecar = []
    from .roots import real_roots

    for n in range(args.nmin, args.nmax + 1):
        p = family_poly(FamilySpec("B", n))
        roots = real_roots(p, tol=Fraction(1, 10**12))
        best = min(roots, key=lambda r: abs(r.to_mpf(120) - gp))
        qz = best.to_mpf(120)
        writer.writerow([n, _fmt(qz), _fmt(qz - gp)])
        sidecar.append(
            {"n": n, "isolating": [str(best.lo), str(best.hi)], "q_z": _fmt(qz)}
        )
    _emit(buf.getvalue(), args.out)
    _emit_sidecar({"rows": sidecar}, args.out)
    return EXIT_OK


def cmd_boundcheck(args) -> int:
    if args.count < 1:
        raise ParseError("count must be >= 1")
    records = []
    violations = []
    min_r = max_r = None
    saturated = []
    cache = MemoCache()

    if args.generator == "families":
        cases = corpus.triangulation_corpus(args.count, args.seed, cache=cache)
    elif args.generator == "apollonian":
        from .graphs import k4_with_certificate, random_apollonian_walk
        import random as _random

        def _apo():
            g, c = k4_with_certificate()
            yield corpus.TriangulationCase("K4", g, c, chromatic_poly(g, cache=cache))
            rng = _random.Random(args.seed)
            for i, (g2, c2) in enumerate(
                random_apollonian_walk(g, c, args.count - 1, rng)
            ):
                yield corpus.TriangulationCase(
                    f"apo#{i}", g2, c2, chromatic_poly(g2, cache=cache)
                )

        cases = _apo()
    elif args.generator == "flips":
        from .families import family_graph
        from .graphs import random_flip_walk
        import random as _random

        def _flips():
            g, c = family_graph(FamilySpec("TC", 4))
            yield corpus.TriangulationCase("TC_4", g, c, chromatic_poly(g, cache=cache))
            rng = _random.Random(args.seed)
            for i, (g2, c2) in enumerate(random_flip_walk(g, c, args.count - 1, rng)):
                yield corpus.TriangulationCase(
                    f"flip#{i}", g2, c2, chromatic_poly(g2, cache=cache)
                )

        cases = _flips()
    else:
        raise ParseError(f"unknown generator {args.generator!r}")

    checked = 0
    for case in cases:
        vrep = validate_triangulation(case.graph, case.certificate)
        if not vrep.ok:
            violations.append({"case": case.name, "validation": list(vrep.failures)})
            continue
        ratio = tutte_ratio(case.poly, case.graph.n)
        checked += 1
        if ratio.violation:
            violations.append({"case": case.name, "ratio": _golden_json(ratio.ratio)})
        if (ratio.ratio - 1).sign() == 0:
            saturated.append(case.name)
        rf = float(ratio.ratio)
        min_r = rf if min_r is None else min(min_r, rf)
        max_r = rf if max_r is None else max(max_r, rf)
        records.append({"case": case.name, "n": case.graph.n, "ratio": _fmt(rf)})

    report = {
        "generator": args.generator,
        "count": args.count,
        "seed": args.seed,
        "checked": checked,
        "violations": violations,
        "saturated": saturated,
        "min_ratio": _fmt(min_r) if min_r is not None else None,
        "max_ratio": _fmt(max_r) if max_r is not None else None,
        "cases": records,
    }
    _emit(json.dumps(report, indent=1) + "\n", args.out)
    return EXIT_INVARIANT if violations else EXIT_OK


def cmd_zeros(args) -> int:
    p, _, label = _load_spec_or_poly(args)
    rep = all_roots(p, tol=args.tol)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im", "residual", "is_real"])
    for r in rep.real_roots:
        for _ in range(r.multiplicity):
            writer.writerow([_fmt(r.to_mpf(120)), "0", _fmt(r.hi - r.lo), "true"])
    for c in rep.complex_roots:
        for _ in range(c.multiplicity):
            writer.writerow(
                [_fmt(c.value.real), _fmt(c.value.imag), _fmt(c.residual), "false"]
            )
    _emit(buf.getvalue(), args.out)
    nz = rep.nearest_to_golden
    _emit_sidecar(
        {
            "input": label,
            "degree": rep.degree,
            "real_isolating_intervals": [
                {"lo": str(r.lo), "hi": str(r.hi), "multiplicity": r.multiplicity}
                for r in rep.real_roots
            ],
            "nearest_to_golden": {
                "distance": _fmt(nz.distance),
                "is_real": nz.is_real,
            },
        },
        args.out,
    )
    return EXIT_OK


def _parse_grid(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise ParseError("--grid needs x0,x1,y0,y1")
    try:
        return tuple(Fraction(t) for t in parts)
    except ValueError as exc:
        raise ParseError(f"bad grid rectangle {text!r}") from exc


def cmd_locus(args) -> int:
    x0, x1, y0, y1 = _parse_grid(args.grid)
    grid = GridSpec(x0, x1, y0, y1, args.res)
    scan = b_locus_scan(grid, tol=args.tol)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["re", "im", "pair"])
    for pt in scan.points:
        writer.writerow([_fmt(pt.x), _fmt(pt.y), f"{pt.pair[0]}-{pt.pair[1]}"])
    _emit(buf.getvalue(), args.out)
    _emit_sidecar(
        {
            "q_c": _fmt(scan.q_c) if scan.q_c is not None else None,
            "triple_points": [
                {"re": _fmt(x), "im": _fmt(y)} for x, y in scan.triple_points
            ],
            "tol": _fmt(scan.tol),
            "points": len(scan.points),
        },
        args.out,
    )
    return EXIT_OK


def cmd_entropy(args) -> int:
    try:
        q = Fraction(args.q)
    except ValueError as exc:
        raise ParseError(f"bad rational q {args.q!r}") from exc
    rep = family_entropy(args.family, q, order=args.order)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["family", "q", "order", "W", "S0", "limit_order"])
    writer.writerow(
        [rep.family, str(q), rep.order, _fmt(rep.w), _fmt(rep.s0), rep.limit_order]
    )
    _emit(buf.getvalue(), args.out)
    _emit_sidecar(
        {
            "family": rep.family,
            "q": str(q),
            "dominant_modulus": rep.dominant_modulus.to_json(),
            "in_formula_range": rep.in_formula_range,
        },
        args.out,
    )
    return EXIT_OK


# -- argument parsing -----------------------------------------------------------------


def _add_source_args(sp, with_n=False):
    sp.add_argument("--family", help="family name: " + "|".join(FAMILY_NAMES))
    sp.add_argument("--param", type=int, default=None, help="family parameter")
    sp.add_argument("--in", dest="infile", help="graph or polynomial JSON file")
    if with_n:
        sp.add_argument("--n", type=int, default=None, help="vertex count for --in polynomial")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="trigold",
        description="Chromatic polynomials of planar triangulations at the golden point",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("chromatic", help="compute a chromatic polynomial (JSON)")
    _add_source_args(sp)
    sp.add_argument("--out")
    sp.add_argument("--budget", type=int, default=10_000_000)
    sp.set_defaults(func=cmd_chromatic)

    sp = sub.add_parser("report", help="golden-point report: P(tau+1), bound, ratio, nearest zero")
    _add_source_args(sp, with_n=True)
    sp.add_argument("--out")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--budget", type=int, default=10_000_000)
    sp.set_defaults(func=cmd_report)

    sp = sub.add_parser("table-bn", help="nearest real zeros of P(B_n,q) to tau+1 (CSV)")
    sp.add_argument("--nmin", type=int, default=6)
    sp.add_argument("--nmax", type=int, default=20)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_table_bn)

    sp = sub.add_parser("boundcheck", help="bulk Tutte-bound verification on generated triangulations")
    sp.add_argument("--generator", choices=["families", "apollonian", "flips"], default="families")
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_boundcheck)

    sp = sub.add_parser("zeros", help="all chromatic zeros (CSV: re,im,residual,is_real)")
    _add_source_args(sp, with_n=True)
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--budget", type=int, default=10_000_000)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("locus", help="bipyramid equimodular locus scan (CSV: re,im,pair)")
    sp.add_argument("--grid", default="1,4,-2,2", help="x0,x1,y0,y1")
    sp.add_argument("--res", type=int, default=64, help="grid points per unit")
    sp.add_argument("--tol", type=float, default=None)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_locus)

    sp = sub.add_parser("entropy", help="ground-state degeneracy W and entropy S0")
    sp.add_argument("--family", required=True)
    sp.add_argument("--q", required=True, help="rational q, e.g. 4 or 7/2")
    sp.add_argument("--order", choices=["qn", "nq"], default="qn")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_entropy)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"trigold: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except NoConvergence as exc:
        print(f"trigold: internal: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except TrigoldError as exc:
        print(f"trigold: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"trigold: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
