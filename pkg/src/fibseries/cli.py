"""Command line front end: ``fibseries <command> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2
for usage errors.
"""

import argparse
import json
import sys
from decimal import Decimal, localcontext

from fibseries import density, proofs
from fibseries.engine import a_fast, stream
from fibseries.oracle import a_bruteforce, product_series

# Above this, `range` answers each degree with a point query instead of
# materialising a(0..hi).
STREAM_LIMIT = 10**8


def natural(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {text}")
    return value


def positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be > 0: {text}")
    return value


def decimal_str(fraction, places=12):
    with localcontext() as ctx:
        ctx.prec = places + 40
        q = Decimal(fraction.numerator) / Decimal(fraction.denominator)
        return format(q, f".{places}f")


def format_series(values):
    """Render coefficients as '1 - x - x^2 + x^4 + ...'."""
    terms = []
    for m, a in enumerate(values):
        if a == 0:
            continue
        mono = "1" if m == 0 else "x" if m == 1 else f"x^{m}"
        if not terms:
            terms.append(mono if a > 0 else f"-{mono}")
        else:
            terms.append(f"{'+' if a > 0 else '-'} {mono}")
    terms.append("+ ..." if terms else "...")
    return " ".join(terms)


def _coefficients(lo, hi):
    if hi <= STREAM_LIMIT:
        vals = stream(hi).values
        return ((m, int(vals[m])) for m in range(lo, hi + 1))
    return ((m, a_fast(m)) for m in range(lo, hi + 1))


def cmd_coeff(args, out):
    print(a_fast(args.m), file=out)
    return 0


def cmd_range(args, out):
    if args.lo > args.hi:
        args.parser.error(f"lo ({args.lo}) must not exceed hi ({args.hi})")
    rows = _coefficients(args.lo, args.hi)
    if args.format == "csv":
        if args.header:
            print("m,a", file=out)
        for m, a in rows:
            print(f"{m},{a}", file=out)
    elif args.format == "jsonl":
        for m, a in rows:
            print(json.dumps({"m": m, "a": a}), file=out)
    else:
        for m, a in rows:
            print(f"{m} {a}", file=out)
    return 0


def cmd_series(args, out):
    print(format_series(stream(args.N).tolist()), file=out)
    return 0


def cmd_support(args, out):
    vals = stream(args.N).values
    for m in vals.nonzero()[0]:
        print(int(m), file=out)
    return 0


def _first_mismatch(expected, got):
    for m, (e, g) in enumerate(zip(expected, got)):
        if e != g:
            return m, e, g
    return None


def cmd_verify(args, out):
    N = args.max
    if args.oracle == "product":
        truth = product_series(N).tolist()
    else:
        truth = [a_bruteforce(m) for m in range(N + 1)]
    streamed = stream(N).tolist()
    for label, got in (("stream", streamed), ("a_fast", (a_fast(m) for m in range(N + 1)))):
        bad = _first_mismatch(truth, got)
        if bad is not None:
            m, e, g = bad
            print(f"mismatch at degree {m}: {args.oracle} oracle gives {e}, {label} gives {g}", file=sys.stderr)
            return 1
    print(f"ok: stream and a_fast agree with the {args.oracle} oracle on 0..{N}", file=out)
    return 0


def cmd_density(args, out):
    if args.max_n < 5:
        args.parser.error("--max-n must be >= 5")
    header = ("n", "fib_n", "alpha", "alpha_over_fib", "alpha_over_fib_decimal", "zero_density", "zero_density_decimal")
    rows = [
        (r.n, r.fib_n, r.alpha, r.ratio, decimal_str(r.ratio), r.zero_density, decimal_str(r.zero_density))
        for r in density.alpha_recurrence(args.max_n)
    ]
    if args.format == "csv":
        print(",".join(header), file=out)
        for row in rows:
            print(",".join(str(x) for x in row), file=out)
    else:
        table = [header] + [tuple(str(x) for x in row) for row in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(header))]
        for r in table:
            print("  ".join(s.rjust(w) for s, w in zip(r, widths)), file=out)
    return 0


def cmd_roots(args, out):
    rs = density.roots(args.tol)
    for name, r in zip(("r1", "r2", "r3", "r4"), rs.as_tuple()):
        print(f"{name} = {r!r}  residual = {abs(density.char_poly(r)):.3e}", file=out)
    print(f"lambda = {rs.lam!r}", file=out)
    print(f"r1/lambda = {rs.r1 / rs.lam!r}", file=out)
    return 0


def cmd_prove(args, out):
    if args.n < 5:
        args.parser.error("--n must be >= 5")
    report = proofs.verify_proposition(args.part, args.n)
    print(report.summary(), file=out)
    for m, partition, message in report.failures:
        print(f"  m={m} partition={partition}: {message}", file=out)
    return 0 if report.ok else 1


def build_parser():
    parser = argparse.ArgumentParser(prog="fibseries", description="Coefficients of prod_{k>=2} (1 - x^F_k).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeff", help="print a(m)")
    p.add_argument("m", type=natural)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("range", help="print a(lo..hi)")
    p.add_argument("lo", type=natural)
    p.add_argument("hi", type=natural)
    p.add_argument("--format", choices=("text", "csv", "jsonl"), default="text")
    p.add_argument("--no-header", dest="header", action="store_false", help="omit the CSV header line")
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("series", help="print the series up to x^N")
    p.add_argument("N", type=natural)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("support", help="degrees m <= N with a(m) != 0")
    p.add_argument("N", type=natural)
    p.set_defaults(func=cmd_support)

    p = sub.add_parser("verify", help="compare the engine with a brute-force oracle")
    p.add_argument("--max", type=natural, required=True)
    p.add_argument("--oracle", choices=("product", "partitions"), default="product")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("density", help="nonzero counts alpha_n and zero densities")
    p.add_argument("--max-n", type=natural, required=True)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("roots", help="roots of x^4 - x^3 - 2")
    p.add_argument("--tol", type=positive_float, default=1e-12)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("prove", help="exhaustively check one part of the interval recursion")
    p.add_argument("--part", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--n", type=natural, required=True)
    p.set_defaults(func=cmd_prove)

    return parser


def run(argv, out=None):
    """Run one command and return its exit status."""
    out = out or sys.stdout
    parser = build_parser()
    # argparse reports usage errors by raising SystemExit(2).
    try:
        args = parser.parse_args(argv)
        args.parser = parser
        return args.func(args, out)
    except SystemExit as exc:
        return exc.code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
