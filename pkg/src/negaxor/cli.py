"""Command line front end.

    negaxor convert -14 --b 2 --negabase
    negaxor op xorneg 10 -10 --b 2
    negaxor seq --count 10
    negaxor verify --b-max 10 --n-max 10000
    negaxor machine lemma1 --b 3 --format dot --merge-edges
    negaxor machine figure1-product --b 4 --prove

Exit status: 0 on success, 1 if a verification fails, 2 on usage or domain
errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import machines, serialize
from .numeral import (DomainError, double_bar, ominus, oplus_neg, render,
                      to_base, to_negabase)
from .transducer import TransducerError
from .verify import (ProofReport, a178729, check_identity, machine_proof,
                     prove_range, report_json)

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


def _radix(text):
    try:
        b = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if b < 2:
        raise argparse.ArgumentTypeError("radix must be >= 2")
    return b


def _nonneg(text):
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return n


def _positive(text):
    n = _nonneg(text)
    if n == 0:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="negaxor",
        description="Digit-wise operators in base b and -b, and their transducers.")
    sub = parser.add_subparsers(dest="command", required=True)

    radix = argparse.ArgumentParser(add_help=False)
    radix.add_argument("--b", "--base", dest="b", type=_radix, default=2,
                       help="radix b >= 2 (default 2)")

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("convert", parents=[radix, fmt],
                       help="write n in base b or base -b")
    p.add_argument("n", type=int)
    target = p.add_mutually_exclusive_group()
    target.add_argument("--negabase", dest="target", action="store_const",
                        const="negabase")
    target.add_argument("--positive", dest="target", action="store_const",
                        const="base", help="base +b (default)")
    p.add_argument("--pad", type=_nonneg, default=None,
                   help="left-pad with zeros to this many digits")
    p.set_defaults(target="base")

    p = sub.add_parser("op", parents=[radix, fmt],
                       help="apply one of the digit-wise operators")
    p.add_argument("operator", choices=("xorneg", "ominus", "doublebar"))
    p.add_argument("args", type=int, nargs="+")
    p.add_argument("--pad", type=_nonneg, default=None,
                   help="also print base-b digits padded to this width")

    p = sub.add_parser("seq", parents=[fmt], help="terms of OEIS A178729")
    p.add_argument("--count", type=_positive, default=10)

    p = sub.add_parser("verify", parents=[fmt],
                       help="check the identity by brute force and by machines")
    p.add_argument("--b-max", type=_radix, default=10)
    p.add_argument("--n-max", type=_nonneg, default=10_000)
    p.add_argument("--workers", type=_positive, default=None)

    p = sub.add_parser("machine", parents=[radix, fmt],
                       help="export one of the constructed transducers")
    p.add_argument("name")
    p.add_argument("--merge-edges", action="store_true",
                   help="DOT only: one edge per (source, target, output)")
    p.add_argument("--prove", action="store_true",
                   help="run the product/minimize/isomorphism pipeline for this radix")
    return parser


def _cmd_convert(args, out):
    if args.target == "negabase":
        ds = to_negabase(args.n, args.b)
    else:
        ds = to_base(args.n, args.b)
    text = render(ds, args.pad)
    if args.format == "json":
        text = json.dumps({"n": args.n, "radix": args.b, "target": args.target,
                           "digits_lsb_first": list(ds), "rendered": text})
    print(text, file=out)
    return EXIT_OK


def _cmd_op(args, out):
    b, xs = args.b, args.args
    arity = 1 if args.operator == "doublebar" else 2
    if len(xs) != arity:
        raise DomainError(f"{args.operator} takes {arity} argument(s), got {len(xs)}")
    if args.operator == "xorneg":
        value = oplus_neg(xs[0], xs[1], b)
    elif args.operator == "ominus":
        value = ominus(xs[0], xs[1], b)
    else:
        value = double_bar(xs[0], b)
    digits = render(to_base(value, b), args.pad)
    if args.format == "json":
        print(json.dumps({"operator": args.operator, "radix": b, "args": xs,
                          "value": value, "digits": digits}), file=out)
    else:
        print(value if args.pad is None else f"{value} {digits}", file=out)
    return EXIT_OK


def _cmd_seq(args, out):
    terms = a178729(args.count)
    if args.format == "json":
        print(json.dumps(terms), file=out)
    else:
        for t in terms:
            print(t, file=out)
    return EXIT_OK


def _cmd_verify(args, out):
    sweep = check_identity(args.b_max, args.n_max, workers=args.workers)
    proof = prove_range(args.b_max)
    if args.format == "json":
        print(report_json(sweep, proof), file=out)
    else:
        print(sweep.render(), file=out)
        print(proof.render(), file=out)
        print("PASS" if sweep.passed and proof.passed else "FAIL", file=out)
    return EXIT_OK if sweep.passed and proof.passed else EXIT_FAILED


def _cmd_machine(args, out):
    t = machines.by_name(args.name, args.b)
    if args.prove:
        record = machine_proof(args.b)
        if args.format == "json":
            print(json.dumps(record.to_dict(), indent=2), file=out)
        else:
            print(ProofReport([record]).render(), file=out)
        return EXIT_OK if record.passed else EXIT_FAILED
    if args.format == "json":
        print(serialize.dumps(t, indent=2), file=out)
    elif args.format == "dot":
        print(serialize.to_dot(t, merge_edges=args.merge_edges, name=args.name),
              end="", file=out)
    else:
        print(serialize.to_text(t), end="", file=out)
    return EXIT_OK


COMMANDS = {
    "convert": _cmd_convert,
    "op": _cmd_op,
    "seq": _cmd_seq,
    "verify": _cmd_verify,
    "machine": _cmd_machine,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.format == "dot" and args.command != "machine":
        print(f"negaxor {args.command}: --format dot only applies to machine",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (DomainError, TransducerError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) else exc
        print(f"negaxor {args.command}: {msg}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
