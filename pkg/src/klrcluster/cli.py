"""Command-line front end: ``klrcluster <command> [options]``.

Exit status is 0 on success, 1 on invalid input and 2 when a
verification step finds a mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import hl, klr_seed, laurent, mutation
from .errors import ClusterError
from .shuffle import delta_character, odot_oracle
from .words import parse_word, vector_to_word, word_to_vector

EXIT_DOMAIN = 1
EXIT_VERIFY = 2
MAX_EXPLORE_RANK = 6


def parse_sequence(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ClusterError(f"cannot parse mutation sequence {text!r}") from None


def reduced_sequences(n: int, max_len: int) -> list[tuple[int, ...]]:
    """All sequences of directions 1..n of length <= max_len with no immediate repeat."""
    out: list[tuple[int, ...]] = [()]
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(max_len):
        frontier = [s + (k,) for s in frontier for k in range(1, n + 1) if not s or s[-1] != k]
        out.extend(frontier)
    return out


def _vec(v: Sequence[int]) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _print_seed(S: mutation.ParamSeed, out) -> None:
    for i, w in enumerate(S.words(), start=1):
        tag = "  frozen" if i > S.n else ""
        print(f"x{i}: L({w}){tag}", file=out)
    print("B =", file=out)
    print(S.B, file=out)


def cmd_seed(args, out) -> int:
    S = mutation.initial_seed(args.rank)
    if args.dot:
        print(klr_seed.build_quiver(args.rank).to_dot(f"S0_{args.rank}"), file=out)
    elif args.json:
        print(json.dumps(klr_seed.seed_dict(args.rank), sort_keys=True), file=out)
    else:
        _print_seed(S, out)
    return 0


def cmd_mutate(args, out) -> int:
    S = mutation.initial_seed(args.rank)
    for k in parse_sequence(args.sequence):
        S = mutation.mutate_parameters(S, k)
        print(f"x{k} -> L({S.word(k)})", file=out)
    if args.json:
        print(json.dumps(S.to_dict(), sort_keys=True), file=out)
    else:
        _print_seed(S, out)
    return 0


def cmd_explore(args, out) -> int:
    if args.rank > MAX_EXPLORE_RANK and not args.force:
        raise ClusterError(f"rank {args.rank} exceeds {MAX_EXPLORE_RANK}; pass --force to explore anyway")
    S = mutation.initial_seed(args.rank)
    for rec in mutation.iter_explore(S, args.depth):
        print(json.dumps(rec.to_dict(), sort_keys=True), file=out)
    return 0


def _load_seed(args) -> mutation.ParamSeed:
    if args.seed:
        with open(args.seed) as fh:
            return mutation.ParamSeed.from_json(fh.read())
    if args.rank:
        return mutation.initial_seed(args.rank)
    raise ClusterError("give --seed FILE or --rank N")


def cmd_check_compat(args, out) -> int:
    S = _load_seed(args)
    S = mutation.mutate_sequence(S, parse_sequence(args.sequence))
    print(mutation.check_compatible(S), file=out)
    for j, h in enumerate(mutation.hat_mus(S), start=1):
        print(f"hat_mu_{j} = {_vec(h)}", file=out)
    return 0


def cmd_oracle(args, out) -> int:
    parts = args.words.split(",")
    if len(parts) != 2:
        raise ClusterError("--words takes exactly two words, e.g. 12,21")
    rank = args.rank or max((int(c) for c in "".join(parts) if c.isdigit()), default=1)
    a, b = (parse_word(p, rank) for p in parts)
    by_vector = vector_to_word(mutation.odot(word_to_vector(a), word_to_vector(b)), rank)
    by_shuffle = odot_oracle(a, b)
    agree = by_vector == by_shuffle
    print(f"{by_vector} / {by_shuffle} {'AGREE' if agree else 'DISAGREE'}", file=out)
    return 0 if agree else EXIT_VERIFY


def cmd_laurent(args, out) -> int:
    B = klr_seed.seed_matrix(args.rank)
    seq = parse_sequence(args.sequence)
    S = laurent.mutate_symbolic_sequence(laurent.SymbolicSeed.initial(B), seq)
    data = laurent.f_and_g(B, seq)
    for l in range(1, B.n + 1):
        d = data[l - 1]
        print(f"x{l} = {S.vars[l - 1]}", file=out)
        print(f"  F = {d.F.render('X')}", file=out)
        print(f"  g = {_vec(d.g)}  a = {_vec(d.a)}  c = {_vec(d.c)}", file=out)
    report = laurent.verify_fpoly_identity(B, seq)
    for line in report.failures:
        print(f"MISMATCH {line}", file=out)
    return 0 if report else EXIT_VERIFY


def cmd_crosscheck(args, out) -> int:
    S = mutation.initial_seed(args.rank)
    total = failed = 0
    for seq in reduced_sequences(S.n, args.depth):
        for l in range(1, S.n + 1):
            total += 1
            rep = mutation.corollary_crosscheck(S, seq, l)
            if not rep:
                failed += 1
                print(f"FAIL sequence={list(seq)} l={l} expected={_vec(rep.expected)} "
                      f"computed={_vec(rep.computed)}", file=out)
    print(f"{total - failed}/{total} checks passed", file=out)
    return EXIT_VERIFY if failed else 0


def cmd_hl_check(args, out) -> int:
    colours = (0, 1) if args.xi1 is None else (args.xi1,)
    ok = True
    for xi1 in colours:
        seed = hl.build_c1_seed(args.rank, xi1)
        for j in range(1, args.rank + 1):
            lhs = hl.yhat_monomial(seed, j)
            p = seed.xi[j - 1] + 1
            good = lhs == hl.a_monomial(args.rank, j, p).inverse()
            ok &= good
            print(f"xi1={xi1} j={j}: yhat = {lhs}  A[{j},{p}]^-1 {'OK' if good else 'MISMATCH'}", file=out)
    return 0 if ok else EXIT_VERIFY


def cmd_char(args, out) -> int:
    w = parse_word(args.word, args.rank)
    series = delta_character(w)
    print(series.to_json() if args.json else series, file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="klrcluster", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seed", help="print the initial seed of rank N")
    s.add_argument("--rank", type=int, required=True)
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_seed)

    s = sub.add_parser("mutate", help="mutate the initial seed along a sequence")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--sequence", required=True, help="comma-separated directions, e.g. 1,2,1")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_mutate)

    s = sub.add_parser("explore", help="breadth-first walk of the mutation graph, as JSON lines")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--force", action="store_true", help=f"allow rank above {MAX_EXPLORE_RANK}")
    s.set_defaults(func=cmd_explore)

    s = sub.add_parser("check-compat", help="compatibility verdict and generalized parameters")
    s.add_argument("--seed", help="seed JSON file")
    s.add_argument("--rank", type=int, help="use the initial seed of this rank")
    s.add_argument("--sequence", default="", help="mutate first along this sequence")
    s.set_defaults(func=cmd_check_compat)

    s = sub.add_parser("oracle", help="compare vector addition with shuffle enumeration")
    s.add_argument("--words", required=True, help="two dominant words, e.g. 12,21")
    s.add_argument("--rank", type=int)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("laurent", help="Laurent expansions with F, g, a, c")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--sequence", default="")
    s.set_defaults(func=cmd_laurent)

    s = sub.add_parser("crosscheck", help="check parameters against a, c and g exhaustively")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--depth", type=int, required=True)
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("hl-check", help="check yhat_j against inverse A-monomials")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--xi1", type=int, choices=(0, 1))
    s.set_defaults(func=cmd_hl_check)

    s = sub.add_parser("char", help="character of the induced module of a dominant word")
    s.add_argument("--word", required=True)
    s.add_argument("--rank", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_char)
    return p


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ClusterError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
