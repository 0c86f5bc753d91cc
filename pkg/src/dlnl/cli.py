"""Batch command line front end.

Exit codes: 0 success / proved / holds; 1 verification failure, unprovable
within the bound, or refuted (reason on standard error, JSON lines when
--json is given); 2 parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import cutelim, nd, search, semantics, sequent, typing
from .errors import DlnlError, ParseError, RuleMismatch
from .sexpr import Sym, parse_sexpr
from .syntax import parse_sequent


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if not hasattr(args, "func"):
        parser.print_help()
        return 2
    try:
        return args.func(args)
    except ParseError as e:
        _diag(args, "parse-error", str(e))
        return 2
    except DlnlError as e:
        _diag(args, "error", str(e), path=getattr(e, "path", None))
        return 1
    except OSError as e:
        _diag(args, "io-error", str(e))
        return 2


def _build_parser():
    p = argparse.ArgumentParser(prog="dlnl", description=__doc__)
    p.add_argument("--json", action="store_true", help="JSON-lines diagnostics on stderr")
    sub = p.add_subparsers()

    c = sub.add_parser("check", help="check a sequent-calculus proof file")
    c.add_argument("file")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("nd-check", help="check a natural-deduction proof file")
    c.add_argument("file")
    c.set_defaults(func=cmd_nd_check)

    c = sub.add_parser("type-check", help="check a typing derivation file")
    c.add_argument("file")
    c.set_defaults(func=cmd_type_check)

    c = sub.add_parser("cut-eliminate", help="produce a cut-free proof")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_cut_eliminate)

    c = sub.add_parser("translate", help="translate between the two proof systems")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--to-seq", action="store_true")
    g.add_argument("--to-nd", action="store_true")
    c.add_argument("file")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_translate)

    c = sub.add_parser("normalize", help="normalize a typed judgment")
    c.add_argument("file")
    c.add_argument("--fuel", type=int, default=1000)
    c.set_defaults(func=cmd_normalize)

    c = sub.add_parser("search", help="bounded cut-free proof search")
    c.add_argument("sequent", help="a sequent, literal or a file name")
    c.add_argument("--depth", type=int, default=8)
    c.set_defaults(func=cmd_search)

    c = sub.add_parser("refute", help="look for a lattice countermodel")
    c.add_argument("sequent", help="a sequent, literal or a file name")
    c.add_argument(
        "--lattice",
        default="chain2",
        choices=sorted(semantics.LATTICES),
    )
    c.set_defaults(func=cmd_refute)

    c = sub.add_parser("fmt", help="pretty-print a proof/judgment file")
    c.add_argument("file")
    c.set_defaults(func=cmd_fmt)
    return p


def _color(kind: str, text: str) -> str:
    mode = os.environ.get("DLNL_COLOR", "auto")
    use = mode == "always" or (mode == "auto" and sys.stdout.isatty())
    if not use:
        return text
    code = {"ok": "32", "bad": "31"}.get(kind, "0")
    return f"\x1b[{code}m{text}\x1b[0m"


def _diag(args, kind, message, path=None):
    if getattr(args, "json", False):
        payload = {"kind": kind, "message": message}
        if path is not None:
            payload["path"] = list(path)
        print(json.dumps(payload), file=sys.stderr)
    else:
        print(f"dlnl: {message}", file=sys.stderr)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_sequent_arg(arg: str):
    if os.path.exists(arg):
        return parse_sequent(_read(arg))
    return parse_sequent(arg)


def cmd_check(args) -> int:
    proof = sequent.parse_proof(_read(args.file))
    try:
        end = sequent.check_proof(proof)
    except RuleMismatch as e:
        _diag(args, "rule-mismatch", str(e), path=e.path)
        return 1
    print(_color("ok", str(end)))
    return 0


def cmd_nd_check(args) -> int:
    proof = nd.parse_nd_proof(_read(args.file))
    try:
        end = nd.check_nd(proof)
    except RuleMismatch as e:
        _diag(args, "rule-mismatch", str(e), path=e.path)
        return 1
    print(_color("ok", str(end)))
    return 0


def cmd_type_check(args) -> int:
    deriv = typing.parse_typing(_read(args.file))
    try:
        j = typing.check_typing(deriv)
    except DlnlError as e:
        _diag(args, "type-error", str(e), path=getattr(e, "path", None))
        return 1
    print(_color("ok", str(j)))
    return 0


def cmd_cut_eliminate(args) -> int:
    proof = sequent.parse_proof(_read(args.file))
    sequent.check_proof(proof)
    out = cutelim.eliminate(cutelim.expand_mcut(proof))
    sequent.check_proof(out)
    text = sequent.proof_to_sexpr_str(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_translate(args) -> int:
    src = _read(args.file)
    if args.to_seq:
        proof = nd.parse_nd_proof(src)
        nd.check_nd(proof)
        out = nd.nd_to_seq(proof)
        sequent.check_proof(out)
        text = sequent.proof_to_sexpr_str(out)
    else:
        proof = sequent.parse_proof(src)
        sequent.check_proof(proof)
        out = nd.seq_to_nd(proof)
        nd.check_nd(out)
        text = nd.nd_to_sexpr_str(out)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_normalize(args) -> int:
    from .errors import FuelExhausted
    from .reduction import normalize

    j = typing.parse_judgment(_read(args.file))
    typing.check_judgment(j)
    try:
        out, steps = normalize(j, args.fuel)
    except FuelExhausted as e:
        _diag(args, "fuel-exhausted", f"partial result: {e.partial}")
        return 1
    print(f"; {steps} steps")
    print(out)
    return 0


def cmd_search(args) -> int:
    goal = _read_sequent_arg(args.sequent)
    found = search.search(goal, args.depth)
    if isinstance(found, search.Exhausted):
        _diag(args, "exhausted", f"no cut-free proof of depth <= {args.depth}")
        return 1
    print(sequent.proof_to_sexpr_str(found))
    return 0


def cmd_refute(args) -> int:
    goal = _read_sequent_arg(args.sequent)
    lat = semantics.get_lattice(args.lattice)
    val = semantics.refute(goal, lat)
    if val is None:
        print(_color("ok", f"holds in {args.lattice} under every valuation"))
        return 0
    pretty = {k: str(v) for k, v in val.items()}
    _diag(args, "refuted", f"countermodel in {args.lattice}: {pretty}")
    return 1


_FMT_HEADS = {
    "proof": lambda n: sequent.proof_to_sexpr_str(sequent.proof_from_sexpr(n)),
    "ndproof": lambda n: nd.nd_to_sexpr_str(nd.nd_from_sexpr(n)),
    "tnd": lambda n: typing.typing_to_sexpr_str(typing.typing_from_sexpr(n)),
    "seqC": lambda n: str(__import__("dlnl.syntax", fromlist=["sequent_from_sexpr"]).sequent_from_sexpr(n)),
    "seqL": lambda n: str(__import__("dlnl.syntax", fromlist=["sequent_from_sexpr"]).sequent_from_sexpr(n)),
    "judC": lambda n: str(typing.judgment_from_sexpr(n)),
    "judL": lambda n: str(typing.judgment_from_sexpr(n)),
}


def cmd_fmt(args) -> int:
    node = parse_sexpr(_read(args.file))
    if not isinstance(node, list) or not node or not isinstance(node[0], Sym):
        raise ParseError("cannot format: unknown file shape")
    head = node[0].name
    fn = _FMT_HEADS.get(head)
    if fn is None:
        raise ParseError(f"cannot format file with head {head!r}")
    print(fn(node))
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
