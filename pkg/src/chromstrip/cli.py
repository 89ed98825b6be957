"""Command-line interface: ``chromstrip <command> [options]``.

Structured results are JSON (integers that may exceed 64 bits are strings);
point clouds (zeros, locus) are CSV.  Relative ``--out`` paths are resolved
against ``--out-dir``, which defaults to ``$CHROMSTRIP_OUT_DIR`` or the
current directory.  Without ``--out`` the result goes to stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .assembler import IntegralityError, assemble, eval_at
from .catalog import SUPPORTED_B, catalog_to_dict
from .oracle import build_graph, count_colorings_dp
from .polycore import mp_context
from .spectra import qc_solve, real_axis_crossings, trace_locus, w_function
from .verify import conjectures_report, identities_report, oracle_report, theorems_report
from .zeros import conjugate_unmatched, find_zeros, zero_support_check

OUT_DIR_ENV = "CHROMSTRIP_OUT_DIR"
FORMAL_NOTE = "formal (m=1: self-linking loops)"
GENERAL_B = range(1, 13)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# argument helpers


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _point(text: str):
    """Rational if possible, else a complex ``(re, im)`` pair of Fractions."""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        pass
    try:
        z = complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    return (Fraction(repr(z.real)), Fraction(repr(z.imag)))


def _window(text: str) -> tuple:
    try:
        vals = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must be four numbers re_min,re_max,im_min,im_max: {text!r}")
    if len(vals) != 4 or vals[0] >= vals[1] or vals[2] >= vals[3]:
        raise argparse.ArgumentTypeError(f"window must be re_min<re_max,im_min<im_max: {text!r}")
    return vals


def _positive_float(text: str) -> float:
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("tolerances must be positive")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _precision(text: str) -> int:
    v = int(text)
    if v < 128:
        raise argparse.ArgumentTypeError("precision must be at least 128 bits")
    return v


def _catalog_b(text: str) -> int:
    v = int(text)
    if v not in SUPPORTED_B:
        raise argparse.ArgumentTypeError(f"b must be one of {SUPPORTED_B}")
    return v


def _general_b(text: str) -> int:
    v = int(text)
    if v not in GENERAL_B:
        raise argparse.ArgumentTypeError(f"b must lie in {GENERAL_B.start}..{GENERAL_B.stop - 1}")
    return v


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# output


def _resolve(args, path):
    if path is None:
        return None
    p = Path(path)
    if not p.is_absolute():
        p = Path(args.out_dir) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _emit_text(args, text: str) -> None:
    target = _resolve(args, getattr(args, "out", None))
    if target is None:
        sys.stdout.write(text)
    else:
        target.write_text(text)
        print(f"wrote {target}", file=sys.stderr)


def _emit_json(args, doc) -> None:
    _emit_text(args, json.dumps(doc, indent=2) + "\n")


def _emit_csv(args, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    _emit_text(args, buf.getvalue())


# ---------------------------------------------------------------------------
# commands


def cmd_poly(args) -> int:
    res = assemble(args.b, args.m, args.boundary)
    doc = {
        "b": args.b,
        "boundary": args.boundary,
        "m": args.m,
        "degree": res.degree,
        "coefficients": [str(c) for c in res.coefficients()],
    }
    if res.formal:
        doc["note"] = FORMAL_NOTE
    _emit_json(args, doc)
    return 0


def cmd_eval(args) -> int:
    val = eval_at(args.b, args.m, args.q, args.boundary, prec=args.precision)
    doc = {"b": args.b, "boundary": args.boundary, "m": args.m}
    if isinstance(val, Fraction):
        doc.update(q=_frac_str(args.q), exact=True, value=_frac_str(val))
    else:
        ctx = mp_context(args.precision)
        digits = int(args.precision * 0.30103)
        doc.update(
            q=[_frac_str(args.q[0]), _frac_str(args.q[1])],
            exact=False,
            re=ctx.nstr(val.real, digits),
            im=ctx.nstr(val.imag, digits),
        )
    if args.m == 1:
        doc["note"] = FORMAL_NOTE
    _emit_json(args, doc)
    return 0


def cmd_oracle(args) -> int:
    g = build_graph(args.b, args.m, args.boundary)
    rows, ok = [], True
    for q in args.q:
        dp = count_colorings_dp(g, q)
        val = eval_at(args.b, args.m, q, args.boundary)
        match = val == dp
        ok &= match
        rows.append({"q": q, "oracle": str(dp), "assembled": _frac_str(val), "match": match})
        if not match:
            print(f"identity violated: P(b={args.b}, {args.boundary}, m={args.m}, q={q}) "
                  f"assembled {val} != oracle {dp}", file=sys.stderr)
    _emit_json(args, {"b": args.b, "boundary": args.boundary, "m": args.m, "results": rows, "passed": ok})
    return 0 if ok else 1


def cmd_zeros(args) -> int:
    zs = find_zeros(args.b, args.m, prec=args.precision, max_iters=args.max_iters, boundary=args.boundary)
    ctx = mp_context(args.precision)
    supported, offending = zero_support_check(zs, args.epsilon)
    summary = (
        f"{zs.count} roots, max residual {zs.max_residual:.3e}, "
        f"converged {zs.converged}, Re >= -{args.epsilon:g}: {supported}, "
        f"unpaired conjugates {len(conjugate_unmatched(zs))}"
    )
    print(summary, file=sys.stderr)
    if args.format == "csv":
        rows = [
            (ctx.nstr(r.value.real, 30), ctx.nstr(r.value.imag, 30), f"{r.residual:.3e}", r.multiplicity)
            for r in zs.roots
        ]
        _emit_csv(args, ("re", "im", "residual", "multiplicity"), rows)
    else:
        _emit_json(
            args,
            {
                "b": zs.b,
                "boundary": zs.boundary,
                "m": zs.m,
                "precision_bits": zs.prec,
                "count": zs.count,
                "converged": zs.converged,
                "max_residual": zs.max_residual,
                "support_nonnegative": supported,
                "offending": [[ctx.nstr(r.value.real, 30), ctx.nstr(r.value.imag, 30)] for r in offending],
                "roots": [
                    {
                        "re": ctx.nstr(r.value.real, 30),
                        "im": ctx.nstr(r.value.imag, 30),
                        "residual": r.residual,
                        "multiplicity": r.multiplicity,
                        "converged": r.converged,
                    }
                    for r in zs.roots
                ],
            },
        )
    return 0 if zs.converged else 1


def cmd_locus(args) -> int:
    tr = trace_locus(args.b, args.window, resolution=args.res, tol=args.tol, boundary=args.boundary)
    print(f"{len(tr.points)} locus points, {tr.rejected} rejected", file=sys.stderr)
    if args.format == "csv":
        rows = [
            (repr(p.q.real), repr(p.q.imag), f"{p.gap:.3e}", p.dominant[0], p.dominant[1])
            for p in tr.points
        ]
        _emit_csv(args, ("re", "im", "gap", "dominant_d", "dominant_j"), rows)
    else:
        _emit_json(
            args,
            {
                "b": tr.b,
                "boundary": tr.boundary,
                "window": list(tr.window),
                "resolution": tr.resolution,
                "tol": tr.tol,
                "points": [
                    {
                        "re": p.q.real,
                        "im": p.q.imag,
                        "gap": p.gap,
                        "dominant": list(p.dominant),
                        "runner_up": list(p.runner_up),
                        "multiplicity": p.multiplicity,
                    }
                    for p in tr.points
                ],
            },
        )
    return 0


def cmd_qc(args) -> int:
    r = qc_solve(args.b)
    _emit_json(
        args,
        {"b": r.b, "qc": r.qc, "bracket": list(r.bracket), "quintic_residual": r.quintic_residual},
    )
    return 0


def cmd_crossings(args) -> int:
    found = real_axis_crossings(args.b, lo=args.lo, hi=args.hi, tol=args.tol, boundary=args.boundary)
    _emit_json(
        args,
        {
            "b": args.b,
            "boundary": args.boundary,
            "crossings": [
                {"q": c.q, "bracket": list(c.bracket), "left": list(c.left), "right": list(c.right)}
                for c in found
            ],
        },
    )
    return 0


def cmd_w(args) -> int:
    try:
        val = w_function(args.b, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit_json(args, {"b": args.b, "q": _frac_str(args.q), "W": val})
    return 0


def cmd_catalog(args) -> int:
    _emit_json(args, catalog_to_dict(args.b, args.boundary))
    return 0


def cmd_verify(args) -> int:
    kind = args.kind
    if kind == "identities":
        bs = [args.b] if args.b else list(SUPPORTED_B)
        reports = [identities_report(b) for b in bs]
    elif kind == "oracle":
        bs = (args.b,) if args.b else SUPPORTED_B
        reports = [oracle_report(bs=bs, ms=tuple(args.m), threads=args.threads)]
    elif kind == "theorems":
        if args.b_max < 4:
            raise UsageError("--b-max must be at least 4")
        reports = [theorems_report(args.b_max)]
    else:
        bs = (args.b,) if args.b else SUPPORTED_B
        reports = [conjectures_report(bs)]
    passed = all(r.passed for r in reports)
    for r in reports:
        for c in r.checks:
            if not c.passed:
                print(f"FAILED {r.title}: {c.name} ({c.detail})", file=sys.stderr)
    _emit_json(args, {"kind": kind, "passed": passed, "reports": [r.to_dict() for r in reports]})
    return 0 if passed else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chromstrip", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--threads", type=_positive_int, default=1, help="worker processes for parallel checks")
    p.add_argument(
        "--out-dir",
        default=os.environ.get(OUT_DIR_ENV, "."),
        help=f"base directory for relative --out paths (default ${OUT_DIR_ENV} or .)",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def family(sp, m=True):
        sp.add_argument("--b", type=_catalog_b, required=True)
        sp.add_argument("--boundary", choices=("torus", "klein"), default="torus")
        if m:
            sp.add_argument("--m", type=_positive_int, required=True)
        sp.add_argument("--out", help="output file")

    sp = sub.add_parser("poly", help="exact coefficients of P(q)")
    family(sp)
    sp.set_defaults(func=cmd_poly)

    sp = sub.add_parser("eval", help="evaluate P at a rational or complex q")
    family(sp)
    sp.add_argument("--q", type=_point, required=True, help="e.g. 3, 7/2, 1.5+2j")
    sp.add_argument("--precision", type=_precision, default=256)
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("oracle", help="compare with transfer-operator coloring counts")
    family(sp)
    sp.add_argument("--q", type=int, nargs="+", required=True)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("zeros", help="chromatic zeros of a finite strip")
    family(sp)
    sp.add_argument("--precision", type=_precision, default=256)
    sp.add_argument("--max-iters", type=_positive_int, default=500)
    sp.add_argument("--epsilon", type=_positive_float, default=1e-6, help="tolerance for the Re(q) >= 0 check")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_zeros)

    sp = sub.add_parser("locus", help="trace where the two largest |lambda| tie")
    family(sp, m=False)
    sp.add_argument("--window", type=_window, default=None, help="re_min,re_max,im_min,im_max")
    sp.add_argument("--res", type=_positive_int, default=800)
    sp.add_argument("--tol", type=_positive_float, default=1e-9)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_locus)

    sp = sub.add_parser("qc", help="largest real crossing q_c")
    sp.add_argument("--b", type=_catalog_b, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_qc)

    sp = sub.add_parser("crossings", help="real-axis dominance changes")
    family(sp, m=False)
    sp.add_argument("--lo", type=float, default=-1.0)
    sp.add_argument("--hi", type=float, default=None)
    sp.add_argument("--tol", type=_positive_float, default=1e-9)
    sp.set_defaults(func=cmd_crossings)

    sp = sub.add_parser("w", help="ground-state degeneracy per site for q > q_c")
    sp.add_argument("--b", type=_catalog_b, required=True)
    sp.add_argument("--q", type=_rational, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_w)

    sp = sub.add_parser("catalog", help="catalog export")
    csub = sp.add_subparsers(dest="action", required=True)
    dp = csub.add_parser("dump", help="write the (d, j) catalog as JSON")
    family(dp, m=False)
    dp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("verify", help="verification reports")
    sp.add_argument("kind", choices=("identities", "oracle", "theorems", "conjectures"))
    sp.add_argument("--b", type=_catalog_b, default=None, help="restrict to one width (default: 5 and 6)")
    sp.add_argument("--m", type=_positive_int, nargs="+", default=[2, 3], help="strip lengths for the oracle")
    sp.add_argument("--b-max", type=_general_b, default=10, help="largest width for general-b checks")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # let "--window -1,6,-4,4" through: argparse would read the value as a flag
    for k in range(len(argv) - 1):
        if argv[k] == "--window" and argv[k + 1].startswith("-"):
            argv[k : k + 2] = [f"--window={argv[k + 1]}", ""]
    args = parser.parse_args([a for a in argv if a != ""])
    if args.command == "verify" and args.kind != "oracle" and args.m != [2, 3]:
        parser.error("--m only applies to 'verify oracle'")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except IntegralityError as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
