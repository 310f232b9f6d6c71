"""Command-line interface: ``selfdual <verb> [options]``.

Exit status: 0 success, 1 a verification or comparison failed, 2 usage
error, 3 precondition, guard or search failure, 4 file I/O failure.
"""
from __future__ import annotations

import argparse
import itertools
import sys
from typing import Optional, Sequence, TextIO

from . import operators, registers
from .errors import SelfDualError
from .stgc import (
    build_diff_stgc,
    build_recursive_stgc,
    construct_thm7,
    find_sds_ordering,
    read_stgc,
    search_thm3_max_period,
    verify_stgc,
)
from .worked import run_worked
from .zmseq import format_seqs, necklace, parse_seqs

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION, EXIT_IO = 0, 1, 2, 3, 4


class _Usage(Exception):
    pass


def _write(args, text: str, out: TextIO) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        out.write(text)


def _write_code(args, code, out: TextIO) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            for line in code.iter_lines():
                fh.write(line + "\n")
    else:
        for line in code.iter_lines():
            out.write(line + "\n")


def _read_input(args, stdin: TextIO) -> str:
    if args.input:
        with open(args.input) as fh:
            return fh.read()
    return stdin.read()


def _need(args, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise _Usage(f"{args.verb} requires {', '.join(missing)}")


# -- verbs ------------------------------------------------------------------


def cmd_ccr(args, out, stdin) -> int:
    _need(args, "n")
    m = args.m or 2
    cycles = registers.fsr_cycles(registers.ccr(args.n, m))
    _write(args, format_seqs(cycles, m, header=m != 2), out)
    return EXIT_OK


def cmd_mccr(args, out, stdin) -> int:
    _need(args, "n", "m")
    cycles = registers.fsr_cycles(registers.ccr(args.n, args.m))
    _write(args, format_seqs(cycles, args.m), out)
    return EXIT_OK


def cmd_counts(args, out, stdin) -> int:
    m = args.m or 2
    if args.identity:
        _need(args, "n")
        if m == 2:
            rep = registers.verify_count_identity(args.n)
            _write(args, rep.to_text() + "\n", out)
            return EXIT_OK if rep.passed else EXIT_FAIL
        rep = registers.verify_mccr_identity(m, args.n)
        _write(args, rep.to_text() + "\n", out)
        return EXIT_OK
    if args.i is not None:
        _need(args, "p")
        formula = registers.count_ccr_by_period(args.i, args.p, "formula")
        brute = registers.count_ccr_by_period(args.i, args.p, "brute")
        _write(args, formula.to_text() + "\n" + brute.to_text() + "\n", out)
        return EXIT_OK if formula.by_period == brute.by_period else EXIT_FAIL
    _need(args, "n")
    total = registers.count_mccr_formula(m, args.n)
    brute = registers.cycle_report(registers.ccr(args.n, m))
    lines = [f"m={m} n={args.n} total={total} source=formula", brute.to_text()]
    _write(args, "\n".join(lines) + "\n", out)
    return EXIT_OK if total == brute.total_cycles else EXIT_FAIL


def cmd_delta(args, out, stdin) -> int:
    _need(args, "block")
    seqs = parse_seqs(_read_input(args, stdin), args.m)
    res = [operators.delta(s, args.block) for s in seqs]
    m = seqs[0].modulus if seqs else (args.m or 2)
    _write(args, format_seqs(res, m, header=m != 2), out)
    return EXIT_OK


def cmd_dinv(args, out, stdin) -> int:
    seqs = parse_seqs(_read_input(args, stdin), args.m)
    res = []
    for s in seqs:
        if args.block:
            found = {
                necklace(operators.delta_inv(s, args.block, y))
                for y in itertools.product(range(s.modulus), repeat=args.block)
            }
            res.extend(sorted(found, key=lambda c: (len(c), c.elems)))
        else:
            res.extend(operators.apply_D_inv(s).sequences)
    m = seqs[0].modulus if seqs else (args.m or 2)
    _write(args, format_seqs(res, m, header=m != 2), out)
    return EXIT_OK


def cmd_recurse(args, out, stdin) -> int:
    _need(args, "n")
    if args.input:
        seqs = parse_seqs(_read_input(args, stdin))
    else:
        seqs = registers.fsr_cycles(registers.ccr(args.n))
    res = operators.recurse_ccr_sds(seqs, args.n)
    _write(args, format_seqs(res, 2, header=False), out)
    return EXIT_OK


def cmd_build_diff(args, out, stdin) -> int:
    _need(args, "m")
    _write_code(args, build_diff_stgc(args.m, seed=args.seed), out)
    return EXIT_OK


def cmd_build_rec(args, out, stdin) -> int:
    _need(args, "p", "t")
    _write_code(args, build_recursive_stgc(args.p, args.t, seed=args.seed), out)
    return EXIT_OK


def cmd_build_thm(args, out, stdin) -> int:
    _need(args, "n")
    ordering = find_sds_ordering(args.m or 2, args.n, seed=args.seed)
    if args.ell is not None:
        ordering.ell = args.ell
    _write_code(args, construct_thm7(ordering), out)
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    path = args.file or args.input
    if not path:
        raise _Usage("verify needs a code file")
    report = verify_stgc(read_stgc(path))
    out.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_search_thm3(args, out, stdin) -> int:
    _need(args, "p")
    code = search_thm3_max_period(args.p, seed=args.seed)
    if code is None:
        out.write(f"no ordering found for p={args.p}\n")
        return EXIT_FAIL
    _write_code(args, code, out)
    return EXIT_OK


def cmd_examples(args, out, stdin) -> int:
    _need(args, "id")
    res = run_worked(args.id)
    _write(args, res.text, out)
    return EXIT_OK if res.passed else EXIT_FAIL


VERBS = {
    "ccr": (cmd_ccr, "cycles of the binary (or --m ary) complemented cycling register"),
    "mccr": (cmd_mccr, "cycles of the m-ary complemented cycling register"),
    "counts": (cmd_counts, "cycle counts: formula vs brute force, identities, period buckets"),
    "delta": (cmd_delta, "block difference of each input sequence"),
    "dinv": (cmd_dinv, "D inverse, or block inverse over all Y with --block"),
    "recurse": (cmd_recurse, "lift register cycles from order n to order 2n"),
    "build-diff": (cmd_build_diff, "length-m, period m^m code from difference words"),
    "build-rec": (cmd_build_rec, "length p^t, period p^(p^t) code"),
    "build-thm": (cmd_build_thm, "code from an ordering of all full-order SDSs of length m*n"),
    "verify": (cmd_verify, "verify a code file"),
    "search-thm3": (cmd_search_thm3, "binary length-p code of period 2^p - 2"),
    "examples": (cmd_examples, "regenerate a stored reference artifact (--id 1, 3 or 4)"),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of exiting so run() owns the status
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="selfdual", description="Self-dual sequences and single-track Gray codes.")
    sub = parser.add_subparsers(dest="verb", metavar="verb", parser_class=_Parser)
    for verb, (_, help_text) in VERBS.items():
        p = sub.add_parser(verb, help=help_text)
        p.add_argument("--n", type=int)
        p.add_argument("--m", type=int)
        p.add_argument("--p", type=int)
        p.add_argument("--t", type=int)
        p.add_argument("--i", type=int, help="power of two in n = 2^i p")
        p.add_argument("--ell", type=int)
        p.add_argument("--block", type=int)
        p.add_argument("--out")
        p.add_argument("--in", dest="input")
        p.add_argument("--identity", action="store_true")
        p.add_argument("--id", type=int)
        p.add_argument("--seed", type=int, default=0, help="search seed")
        if verb == "verify":
            p.add_argument("file", nargs="?")
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, stdin: TextIO = sys.stdin, err: TextIO = sys.stderr) -> int:
    try:
        args = build_parser().parse_args(argv)
        if not args.verb:
            raise _Usage("missing verb; one of " + ", ".join(VERBS))
        return VERBS[args.verb][0](args, out, stdin)
    except _Usage as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SelfDualError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_PRECONDITION
    except OSError as exc:
        err.write(f"i/o error: {exc}\n")
        return EXIT_IO


def main() -> None:
    sys.exit(run())
