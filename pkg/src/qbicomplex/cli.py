"""Command-line front end.

Subcommands: ``gen`` (sequence tables), ``verify`` (identity grids), ``egf``
(generating-function check) and ``limit`` (golden-ratio specialisation).
Exit codes: 0 success, 1 verification failure, 2 usage or config error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

from .identities import Verdict, summarize, verify_grid
from .qcalc import QParams
from .scalars import ScalarError, ScalarParseError, format_scalar, parse_scalar
from .sequences import (
    SequenceKind,
    bf,
    bl,
    classical_params,
    egf_closed,
    egf_error_bound,
    egf_partial,
    fibonacci_numbers,
    lucas_numbers,
    sequence_table,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class _Usage(Exception):
    pass


def index_range(text: str) -> range:
    """Parse an inclusive ``a..b`` range (or a single index ``a``)."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if a < 0 or b < a:
        raise argparse.ArgumentTypeError(f"range must be non-negative and non-empty, got {text!r}")
    return range(a, b + 1)


def scalar_arg(text: str):
    try:
        return parse_scalar(text)
    except (ScalarParseError, ScalarError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _params(args) -> QParams:
    try:
        return QParams(args.alpha, args.q)
    except (ValueError, ScalarError) as exc:
        flag = "--alpha" if "alpha" in str(exc) else "--q"
        raise _Usage(f"{flag}: {exc}") from None


def _write_rows(out, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    out.write(buf.getvalue())


def cmd_gen(args, out) -> int:
    p = _params(args)
    kind = SequenceKind(args.kind)
    table = sequence_table(kind, args.n, p)
    if args.format == "csv":
        _write_rows(out, ["n", "c0", "c1", "c2", "c3"],
                    [[t.n, *(format_scalar(c) for c in t.value)] for t in table])
    else:
        out.write(json.dumps([t.to_json() for t in table], indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    p = _params(args)
    r_kw = {}
    if args.r is not None:
        r_kw = {"r_min": args.r.start, "r_max": args.r.stop - 1}
    reports = verify_grid([p], args.n.stop - 1, args.m.stop - 1,
                          n_min=args.n.start, m_min=args.m.start, **r_kw)
    for rep in reports:
        out.write(json.dumps(rep.to_json()) + "\n")
    summary = summarize(reports)
    out.write(json.dumps({"summary": summary}) + "\n")
    if any(rep.verdict is Verdict.MISMATCH for rep in reports):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_egf(args, out) -> int:
    if args.precision < 64:
        raise _Usage("--precision: must be at least 64 bits")
    p = _params(args)
    partial_exact = egf_partial(args.N, args.t, p)
    partial = partial_exact.to_bigfloat(args.precision)
    closed = egf_closed(args.t, p, args.precision)
    diff = [abs(x - y) for x, y in zip(partial, closed)]
    bound = egf_error_bound(args.N, args.t, p, args.precision)
    ok = all(d <= bound for d in diff)
    if args.format == "csv":
        _write_rows(out, ["component", "partial", "closed", "abs_diff"],
                    [[f"c{k}", format_scalar(a), format_scalar(b), format_scalar(d)]
                     for k, (a, b, d) in enumerate(zip(partial, closed, diff))])
    else:
        record = {
            "params": p.to_json(),
            "t": format_scalar(args.t),
            "N": args.N,
            "precision": args.precision,
            "partial_exact": partial_exact.to_json(),
            "partial": partial.to_json(),
            "closed": closed.to_json(),
            "abs_diff": [format_scalar(d) for d in diff],
            "error_bound": format_scalar(bound),
            "within_bound": ok,
        }
        out.write(json.dumps(record, indent=2) + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_limit(args, out) -> int:
    p = classical_params()
    kind = SequenceKind(args.kind)
    count = args.n.stop + 3
    ref_seq = fibonacci_numbers(count) if kind is SequenceKind.BF else lucas_numbers(count)
    rows = []
    failed = False
    for n in args.n:
        value = bf(n, p) if kind is SequenceKind.BF else bl(n, p)
        ref = ref_seq[n:n + 4]
        match = all(c == Fraction(r) for c, r in zip(value, ref))
        failed |= not match
        rows.append((n, value, ref, match))
    if args.format == "csv":
        _write_rows(out, ["n", "c0", "c1", "c2", "c3", "r0", "r1", "r2", "r3", "match"],
                    [[n, *(format_scalar(c) for c in v), *ref, str(m).lower()]
                     for n, v, ref, m in rows])
    else:
        for n, v, ref, m in rows:
            out.write(json.dumps({"n": n, "kind": kind.value, "value": v.to_json(),
                                  "reference": ref, "match": m}) + "\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbicomplex", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, scalars=True, fmt=True):
        if scalars:
            sp.add_argument("--alpha", type=scalar_arg, required=True, help="e.g. 1, 3/2, 1/2+1/2*sqrt5")
            sp.add_argument("--q", type=scalar_arg, required=True)
        if fmt:
            sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default="-", help="output path (default: stdout)")

    gen = sub.add_parser("gen", help="emit a BF or BL sequence table")
    gen.add_argument("--kind", choices=("BF", "BL"), default="BF")
    gen.add_argument("--n", type=index_range, default=index_range("0..10"), help="inclusive range a..b")
    common(gen)
    gen.set_defaults(func=cmd_gen)

    ver = sub.add_parser("verify", help="check the four product identities over a grid")
    ver.add_argument("--n", type=index_range, default=index_range("0..6"))
    ver.add_argument("--m", type=index_range, default=index_range("0..6"))
    ver.add_argument("--r", type=index_range, default=None, help="Catalan shift range (default 0..n)")
    common(ver, fmt=False)
    ver.set_defaults(func=cmd_verify)

    egf = sub.add_parser("egf", help="compare the EGF partial sum with its closed form")
    egf.add_argument("--t", type=scalar_arg, required=True, help="evaluation point, exact")
    egf.add_argument("--N", type=int, default=20, help="last term of the partial sum")
    egf.add_argument("--precision", type=int, default=256, help="bits, at least 64")
    common(egf)
    egf.set_defaults(func=cmd_egf)

    lim = sub.add_parser("limit", help="golden-ratio parameters against integer Fibonacci/Lucas")
    lim.add_argument("--kind", choices=("BF", "BL"), default="BF")
    lim.add_argument("--n", type=index_range, default=index_range("0..10"))
    common(lim, scalars=False)
    lim.set_defaults(func=cmd_limit)
    return parser


_SCALAR_FLAGS = ("--alpha", "--q", "--t")


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-3/2+..." for an option, so bind it to its flag
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SCALAR_FLAGS and i + 1 < len(argv) and re.match(r"-\(?\d", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "N", 0) < 0:
        print("qbicomplex egf: error: --N: must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except _Usage as exc:
        print(f"qbicomplex {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out == "-":
        sys.stdout.write(buf.getvalue())
    else:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
