"""Command-line entry point: ``unipotent-atlas <subcommand> [flags]``.

Data goes to stdout as JSON lines (or TSV with ``--format tsv``),
diagnostics to stderr.  Exit status: 0 on success, 1 when a verification
fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Iterable, Sequence

from . import classical, lemmas, quartic, spin, symbols, zeta

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit_json(rows: Iterable[dict], out) -> None:
    for row in rows:
        out.write(json.dumps(row, sort_keys=True) + "\n")


def _emit_tsv(header: Sequence[str], rows: Iterable[Sequence], out) -> None:
    out.write("\t".join(header) + "\n")
    for row in rows:
        out.write("\t".join(str(c) for c in row) + "\n")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def cmd_classes(args, out) -> int:
    try:
        recs = classical.enumerate_classes(args.family, args.n)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "tsv":
        out.write(classical.TSV_HEADER + "\n")
        for r in recs:
            out.write(r.tsv_row() + "\n")
    else:
        _emit_json((r.to_json() for r in recs), out)
    return EXIT_OK


def cmd_spin(args, out) -> int:
    try:
        parts = spin.OddPartSet(_int_list(args.parts))
        bits = args.flips if args.flips is not None else "0" * (parts.k - 1)
        pattern = spin.TwistPattern.from_bits(bits)
        if len(pattern.flips) != parts.k - 1:
            raise ValueError(f"need {parts.k - 1} flip bits for {parts.k} odd parts")
        family = args.family.upper() if args.family else None
        rep = spin.twist_analysis(parts, pattern, family=family, half_spin=args.half_spin)
    except ValueError as e:
        raise UsageError(str(e)) from None
    row = {"parts": list(parts.parts), "flips": pattern.bits(), **rep.to_json()}
    if args.format == "tsv":
        keys = list(row)
        _emit_tsv(keys, [[row[k] for k in keys]], out)
    else:
        _emit_json([row], out)
    return EXIT_OK


def cmd_symbols(args, out) -> int:
    try:
        block = symbols.enumerate_block(args.k)
    except ValueError as e:
        raise UsageError(str(e)) from None
    even, odd = symbols.parity_counts(args.k)
    if args.format == "tsv":
        rows = [
            [",".join(map(str, sorted(r.symbol.A))), ",".join(map(str, sorted(r.symbol.B))),
             r.d, r.k_inv, r.m]
            for r in block
        ]
        rows.append(["#parity", "", "", even, odd])
        _emit_tsv(["A", "B", "defect", "k_inv", "m"], rows, out)
    else:
        _emit_json([r.to_json() for r in block] + [{"parity_counts": [even, odd]}], out)
    return EXIT_OK


def cmd_zeta(args, out) -> int:
    try:
        q = zeta.ZetaQuery(args.family, args.n, args.p, args.a)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not args.oracle:
        row = {**q.to_json(), "zeta_prime": str(zeta.zeta_prime(q))}
        status = EXIT_OK
    else:
        rep = zeta.divisibility_report(q)
        row = rep.to_json()
        status = EXIT_OK if rep.passed else EXIT_FAIL
    if args.format == "tsv":
        keys = [k for k in ("family", "n", "k", "p", "a", "zeta_prime", "survivors", "pass") if k in row]
        _emit_tsv(keys, [[row[k] if k != "survivors" else ",".join(row[k]) for k in keys]], out)
    else:
        _emit_json([row], out)
    return status


def cmd_gauss(args, out) -> int:
    try:
        rep = quartic.gauss_sum_numeric(args.p, args.s)
    except ValueError as e:
        raise UsageError(str(e)) from None
    row = rep.to_json()
    if args.format == "tsv":
        keys = list(row)
        _emit_tsv(keys, [[row[k] for k in keys]], out)
    else:
        _emit_json([row], out)
    return EXIT_OK if rep.matches_law else EXIT_FAIL


def cmd_verify(args, out) -> int:
    reports = lemmas.run_suite(args.suite)
    if args.format == "tsv":
        _emit_tsv(["lemma", "universe", "verdict"],
                  [[r.lemma_id, r.universe, r.verdict] for r in reports], out)
    else:
        _emit_json((r.to_json() for r in reports), out)
    for r in reports:
        if not r.passed:
            print(f"FAIL {r.lemma_id}: {len(r.counterexamples)} counterexample(s)", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="unipotent-atlas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--format", choices=("json", "tsv"), default="json")
        p.set_defaults(func=func)
        return p

    p = add("classes", cmd_classes, "unipotent classes of Sp_2n, SO_n or Spin_n")
    p.add_argument("--family", type=str.lower, choices=("sp", "so", "spin"), required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("spin", cmd_spin, "twist analysis of a spin component group")
    p.add_argument("--parts", required=True, help="distinct odd parts, e.g. 1,3,5,7")
    p.add_argument("--flips", help="k-1 bits, bit i-2 set when F(y_i) = y_i t")
    p.add_argument("--family", type=str.lower, choices=("b", "d"))
    p.add_argument("--half-spin", action="store_true")

    p = add("symbols", cmd_symbols, "symbols of the cuspidal block of Sp_2n")
    p.add_argument("--k", type=int, required=True)

    p = add("zeta", cmd_zeta, "the fourth root of unity of the cuspidal block")
    p.add_argument("--family", type=str.lower, choices=("sp", "so"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--oracle", action="store_true", help="also run candidate elimination")

    p = add("gauss", cmd_gauss, "quadratic Gauss sum over F_{p^s}")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--s", type=int, default=1)

    p = add("verify", cmd_verify, "run a lemma verification suite")
    p.add_argument("--suite", choices=lemmas.SUITE_NAMES, default="all")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
