"""Command-line front end: ``fqcurves <command> [options]``.

Exit codes: 0 success, 2 precondition refusal, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from .bounds import BoundReport
from .branch import MAX_PRECISION, conic_system_through, linear_system
from .classicality import DerivationContext, double_frobenius_order_sequence, frobenius_order_sequence
from .curve import (DEFAULT_BUDGET, Curve, ProjPoint, analyze, check_hypothesis_H, cremona_transform, frame_matrix,
                    find_singular_points, projective_change)
from .errors import BudgetExceeded, PolySyntaxError, PreconditionError
from .families import FAMILIES, from_family
from .gf import GF, prime_power
from .poly import parse_poly
from .report import am_verify, analysis_dict, bounds_report, branch_counts, curve_info


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("curve and output")
    g.add_argument("--p", type=int, help="field characteristic")
    g.add_argument("--k", type=int, default=1, help="extension degree of the base field (q = p^k)")
    g.add_argument("--curve", help="affine equation in X, Y, or a file containing one")
    g.add_argument("--family", nargs="+", metavar="NAME",
                   help="named family and its arguments: " + "; ".join(f"{k} {v}" for k, v in FAMILIES.items()))
    g.add_argument("--json", action="store_true", help="emit JSON instead of text")
    g.add_argument("--ext-bound", type=int, default=1, help="search singular points over F_(q^s), s <= this")
    g.add_argument("--precision", type=int, default=None, help="initial branch precision")
    g.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="work budget for point scans")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="fqcurves", description="Plane curves over finite fields and "
                                 "Stohr-Voloch type bounds for their rational branches.")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="singular points, hypothesis (H), genus bound")
    a.add_argument("--ack-exhaustive", action="store_true",
                   help="declare the singular-point list complete (makes the genus exact)")

    c = sub.add_parser("count", parents=[common], help="number of F_(q^m)-rational branches")
    c.add_argument("--m", type=int, nargs="+", default=[1])

    b = sub.add_parser("bounds", parents=[common], help="bound table for N_m")
    b.add_argument("--m", type=int, default=1)
    b.add_argument("--u", type=int, default=None)
    b.add_argument("--use-counts", action="store_true", help="count N_1 and N_(m-1) for the abc row")
    b.add_argument("--N", action="append", default=[], metavar="m=VALUE", help="supply a known N_m")
    b.add_argument("--c", type=int, nargs=3, metavar=("C1", "CM", "CM1"), help="constants for abc")
    b.add_argument("--no-certify", action="store_true", help="assume Frobenius classicality instead of testing it")

    f = sub.add_parser("classicality", parents=[common], help="Frobenius order sequences")
    f.add_argument("--m", type=int, default=1)
    f.add_argument("--u", type=int, default=None, help="also compute kappa for (u, m)")
    f.add_argument("--system", choices=["lines", "conics", "h-conics"], default="lines",
                   help="h-conics: conics through the two points of hypothesis (H)")

    v = sub.add_parser("am-verify", parents=[common], help="Artin-Mumford check list")
    v.add_argument("--q", type=int, required=True)
    v.add_argument("--deep", action="store_true", help="allow larger divisibility checks")
    v.add_argument("--samples", type=int, default=20)

    r = sub.add_parser("cremona", parents=[common], help="quadratic transformation to a model with (H)")
    r.add_argument("--auto", nargs=2, metavar="POINT", help="two rational points x:y:z (or (x:y:z)) to move to (1:0:0), (0:1:0)")
    return ap


# -- helpers ------------------------------------------------------------------------------

def load_curve(args) -> Curve:
    if args.family:
        return from_family(args.family[0], args.family[1:], args.p, args.k)
    if not args.curve:
        raise PreconditionError("give --curve or --family")
    if args.p is None:
        raise PreconditionError("--curve needs --p")
    text = args.curve
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read().strip()
    return Curve(parse_poly(text, GF(args.p, args.k)))


def _parse_point(K, text: str) -> ProjPoint:
    parts = text.strip().strip("()").split(":")
    try:
        coords = [int(s) for s in parts]
    except ValueError:
        coords = []
    if len(coords) != 3:
        raise PreconditionError(f"point {text!r} must look like x:y:z with integer coordinates")
    return ProjPoint.from_ints(K, *coords)


def _emit(args, doc: dict, lines: list):
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        print("\n".join(lines))


def _table(rows, header) -> list:
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    out = [fmt.format(*header), fmt.format(*("-" * w for w in widths))] + [fmt.format(*r) for r in rows]
    return [line.rstrip() for line in out]


def _notes(doc) -> list:
    out = [f"warning: {w}" for w in doc.get("warnings", [])]
    out += [f"assumption: {a}" for a in doc.get("assumptions", [])]
    return out


def report_doc(c: Curve, a=None, counts=None, classicality=None, bounds: BoundReport | None = None,
               warnings=(), assumptions=()) -> dict:
    doc = {"curve": curve_info(c)}
    if a is not None:
        doc.update(analysis_dict(a))
    doc["counts"] = {f"N_{m}": v for m, v in sorted((counts or {}).items())}
    doc["classicality"] = classicality or {}
    doc["bounds"] = bounds.to_dict() if bounds is not None else None
    doc["warnings"] = list(warnings)
    doc["assumptions"] = list(assumptions)
    return doc


def _curve_lines(doc) -> list:
    cv = doc["curve"]
    return [f"curve: {cv['poly_text']} = 0 over F_{cv['p']}" + (f"^{cv['k']}" if cv["k"] > 1 else "")
            + f", degree {cv['degree']}"]


# -- commands -----------------------------------------------------------------------------

def cmd_analyze(args) -> int:
    c = load_curve(args)
    a = analyze(c, args.ext_bound, args.ack_exhaustive, args.budget)
    doc = report_doc(c, a, assumptions=a.assumptions)
    lines = _curve_lines(doc)
    rows = [(s["point"], s["multiplicity"], "ordinary" if s["ordinary"] else "non-ordinary",
             s["rational_tangents"], s["orbit_size"]) for s in doc["singularities"]]
    lines += _table(rows, ["point", "mult", "type", "rational tangents", "orbit"])
    h = doc["hypothesis_H"]
    lines.append("hypothesis (H): " + ("no" if h is None else f"yes, {h['P1']} and {h['P2']} "
                                                              f"(r1 = {h['r1']}, r2 = {h['r2']})"))
    gen = doc["genus"]
    lines.append(f"genus: {'=' if gen['exact'] else '<='} {gen['bound']}")
    _emit(args, doc, lines + _notes(doc))
    return 0


def cmd_count(args) -> int:
    if any(m < 1 for m in args.m):
        raise PreconditionError("m must be >= 1")
    c = load_curve(args)
    a = analyze(c, args.ext_bound, budget=args.budget)
    counts = branch_counts(c, args.m, args.budget)
    doc = report_doc(c, a, counts=counts, assumptions=a.assumptions)
    lines = _curve_lines(doc) + [f"genus bound: {a.genus_bound}"]
    lines += _table([(f"N_{m}", v) for m, v in sorted(counts.items())], ["m", "branches"])
    _emit(args, doc, lines)
    return 0


def cmd_bounds(args) -> int:
    c = load_curve(args)
    a = analyze(c, args.ext_bound, budget=args.budget)
    counts = {}
    for item in args.N:
        key, _, val = item.partition("=")
        counts[int(key)] = int(val)
    if args.use_counts:
        need = {1, args.m - 1} - {0} - set(counts)
        counts.update(branch_counts(c, sorted(need), args.budget))
    rep = bounds_report(c, args.m, args.u, counts, certify=not args.no_certify, analysis=a,
                        c_constants=tuple(args.c) if args.c else None, budget=args.budget)
    cls = {"nu": list(rep.nu) if rep.nu else None, "kappa": None,
           "certified": all(r.provenance != "assumed" for r in rep.rows if r.name.startswith(("sv", "abc")))}
    doc = report_doc(c, a, counts, cls, rep, rep.warnings, rep.assumptions)
    lines = _curve_lines(doc) + [f"bounds on N_{args.m} (q^m = {c.q ** args.m}, genus <= {rep.g})"]
    lines += _table([(r.name, r.value, r.provenance, r.detail) for r in rep.rows],
                    ["bound", "value", "provenance", "detail"])
    if counts:
        lines.append("counts: " + ", ".join(f"N_{m} = {v}" for m, v in sorted(counts.items())))
    _emit(args, doc, lines + _notes(doc))
    return 0


def cmd_classicality(args) -> int:
    c = load_curve(args)
    if args.system == "h-conics":
        h = check_hypothesis_H(c, find_singular_points(c, args.ext_bound, args.budget))
        if h is None:
            raise PreconditionError("hypothesis (H) fails: no h-conics system")
        L = conic_system_through(c, h.P1, h.P2)
    else:
        L = linear_system(c, 1 if args.system == "lines" else 2, compute_base_locus=False)
    ctx = DerivationContext(c.f)
    nu = frobenius_order_sequence(ctx, L.basis, args.m)
    cls = {"system": args.system, "r": L.r, "m": args.m,
           "nu": list(nu.sequence) if nu.sequence else None, "classical": nu.classical,
           "complete": nu.complete, "kappa": None, "certified": True}
    lines = [f"nu for q^{args.m}: {nu.sequence if nu.complete else 'none within supported orders'}"
             f" ({'classical' if nu.classical else 'non-classical'})"]
    if args.u is not None:
        kap = double_frobenius_order_sequence(ctx, L.basis, args.u, args.m)
        cls["kappa"] = list(kap.sequence) if kap.sequence else None
        cls["kappa_complete"] = kap.complete
        lines.append(f"kappa for (u, m) = ({args.u}, {args.m}): {kap.sequence}")
    doc = report_doc(c, classicality=cls)
    _emit(args, doc, _curve_lines(doc) + [f"system: {args.system}, r = {L.r}"] + lines)
    return 0


def cmd_am_verify(args) -> int:
    q = args.q
    p, _ = prime_power(q)
    if p <= 3:
        raise PreconditionError(f"the Artin-Mumford check list assumes p > 3 (got q = {q})")
    rep = am_verify(q, deep=args.deep, samples=args.samples, budget=args.budget,
                    precision=args.precision)
    doc = rep.to_dict()
    lines = [f"Artin-Mumford curve, q = {q}"]
    lines += [f"{'PASS' if ch.passed else 'FAIL'}  {ch.name}" + (f"  [{ch.detail}]" if ch.detail else "")
              for ch in rep.checks]
    lines.append("all checks passed" if rep.passed else "some checks FAILED")
    _emit(args, doc, lines)
    return 0 if rep.passed else 1


def cmd_cremona(args) -> int:
    c = load_curve(args)
    F = c.F
    if args.auto:
        P1, P2 = (_parse_point(c.base_field, s) for s in args.auto)
        if not (c.contains(P1) and c.contains(P2)):
            raise PreconditionError("both --auto points must lie on the curve")
        c = projective_change(c, frame_matrix(c, P1, P2))
        F = c.F
    G = cremona_transform(F)
    image = Curve(G, check=False)
    h = check_hypothesis_H(image, find_singular_points(image, 1, args.budget))
    doc = {"curve": curve_info(c), "input": str(F), "transformed": str(G), "degree": G.degree,
           "hypothesis_H": None if h is None else {"P1": str(h.P1), "P2": str(h.P2), "r1": h.r1, "r2": h.r2}}
    lines = [f"input:       {F}", f"transformed: {G}", f"degree {G.degree}",
             "hypothesis (H): " + ("no" if h is None else f"yes, {h.P1} and {h.P2} (r1 = {h.r1}, r2 = {h.r2})")]
    _emit(args, doc, lines)
    return 0


COMMANDS = {
    "analyze": cmd_analyze,
    "count": cmd_count,
    "bounds": cmd_bounds,
    "classicality": cmd_classicality,
    "am-verify": cmd_am_verify,
    "cremona": cmd_cremona,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.precision is not None and not 1 <= args.precision <= MAX_PRECISION:
        print(f"error: precision must be in [1, {MAX_PRECISION}]", file=sys.stderr)
        return 2
    try:
        if args.p is not None:
            GF(args.p, args.k)
        return COMMANDS[args.command](args)
    except PolySyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.text is not None and exc.position is not None:
            print("  " + exc.text, file=sys.stderr)
            print("  " + " " * exc.position + "^", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
