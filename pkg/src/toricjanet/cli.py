"""Command line front end: ``toricjanet {basis,gb,ip,bench}``."""

import argparse
import logging
import sys

from .bench import run_bench, write_csv
from .completion import binomial_janet_basis, sort_basis
from .formats import ParseError, parse_ideal, parse_matrix, parse_vector
from .groebner import autoreduce, buchberger
from .monomials import ExponentOverflowError
from .toric import ToricInstance, ip_solve

__all__ = ["main", "build_parser"]

log = logging.getLogger("toricjanet")

EXIT_PARSE = 1
EXIT_COMPUTE = 2


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _print_basis(G, names, count, out):
    if count:
        print(len(G), file=out)
    else:
        for g in G:
            print(g.format(names), file=out)


def cmd_basis(args, out):
    gens, order, names = parse_ideal(_read(args.file))
    trace = None
    if args.trace:
        def trace(it, t, q, event):
            log.info("iter=%d |T|=%d |Q|=%d %s", it, t, q, event)
    G = binomial_janet_basis(gens, order, trace=trace)
    _print_basis(G, names, args.count, out)


def cmd_gb(args, out):
    gens, order, names = parse_ideal(_read(args.file))
    if args.buchberger:
        G = autoreduce(buchberger(gens, order), order)
    else:
        G = autoreduce(binomial_janet_basis(gens, order), order)
    _print_basis(sort_basis(G, order), names, args.count, out)


def cmd_ip(args, out):
    A, extra = parse_matrix(_read(args.matrix))
    vectors = {"b": args.b, "c": args.c, "x0": args.x0}
    for name, vec in zip(("b", "c", "x0"), extra):
        if vectors[name] is None:
            vectors[name] = vec
    for name, vec in vectors.items():
        if vec is None:
            raise ParseError(f"missing vector {name}")
        if isinstance(vec, str):
            vectors[name] = parse_vector(vec)
    try:
        inst = ToricInstance(A, vectors["b"], vectors["c"], vectors["x0"])
    except ValueError as e:
        raise ParseError(str(e)) from None
    gens = None
    if args.gens:
        gens, _, names = parse_ideal(_read(args.gens))
        if len(names) != inst.nvars:
            raise ParseError("generator file has the wrong number of variables")
    x = ip_solve(inst, gens=gens)
    print(" ".join(map(str, x)), file=out)
    print(inst.cost(x), file=out)


def cmd_bench(args, out):
    rows = run_bench(ns=args.n, ds=args.d, size=args.size, queries=args.queries,
                     seed=args.seed, support=args.support)
    write_csv(rows, out)


def _int_list(text):
    return [int(w) for w in text.split(",")]


def build_parser():
    parser = argparse.ArgumentParser(prog="toricjanet", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="log to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="minimal Janet basis of an ideal file")
    p.add_argument("file")
    p.add_argument("--count", action="store_true", help="print only the cardinality")
    p.add_argument("--trace", action="store_true", help="log completion progress to stderr")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("file")
    p.add_argument("--count", action="store_true")
    p.add_argument("--buchberger", action="store_true",
                   help="use the Buchberger oracle instead of Janet completion")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("ip", help="solve min c.x, Ax = b, x >= 0 integer")
    p.add_argument("matrix", help="matrix file; optional trailing lines b, c, x0")
    p.add_argument("--b")
    p.add_argument("--c")
    p.add_argument("--x0")
    p.add_argument("--gens", help="ideal file with generators of the toric ideal")
    p.set_defaults(func=cmd_ip)

    p = sub.add_parser("bench", help="CSV timing of Janet-divisor search")
    p.add_argument("--n", type=_int_list, default=[4, 8, 16, 32], help="variable counts")
    p.add_argument("--d", type=_int_list, default=[4, 8, 16, 32], help="degree bounds")
    p.add_argument("--size", type=int, default=50, help="monomials per set")
    p.add_argument("--queries", type=int, default=500)
    p.add_argument("--support", type=int, default=3, help="max variables per monomial")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose or getattr(args, "trace", False)
                        else logging.WARNING, stream=sys.stderr)
    try:
        args.func(args, out)
    except (ParseError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (ExponentOverflowError, ArithmeticError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTE
    return 0


if __name__ == "__main__":
    sys.exit(main())
