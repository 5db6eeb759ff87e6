"""Command-line interface.

Exit codes:

0  success
1  ``verify`` found a k-term monochromatic progression
2  usage error (unknown flag, missing argument)
3  file missing or unreadable
4  domain error (parameters out of range, no derivable bound)
5  malformed input file (certificate, bounds database, constants)
6  input larger than ``--n-max``
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys

from . import __version__
from .bounds import (
    berlekamp_chain_value,
    erdos_rado_floor,
    eval_erdos_lovasz,
    eval_erdos_rado,
    eval_parameterized,
    figure1_report,
    harmonic_decompose,
    harmonic_estimate,
    recurrence_chain,
    strengthened_candidates,
    strengthened_prime_candidates,
)
from .bounds.closed_form import PARAMETERIZED_FORMS, log_harmonic_asymptotic
from .constructor import blow_up, construct_chain
from .core import block_tuple, excluded_block_indices, largest_prime_leq
from .errors import DomainError, FormatError, InvalidColoringError, LimitExceededError, NoBasisError
from .io import certify, encode_certificate, load_bounds_db, read_certificate
from .searcher import search_max_valid
from .verifier import DEFAULT_N_MAX, verify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_FILE = 3
EXIT_DOMAIN = 4
EXIT_FORMAT = 5
EXIT_LIMIT = 6


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_blocks(args) -> int:
    p = largest_prime_leq(args.k)
    for i in range(1, args.r + 1):
        entries = ",".join(map(str, block_tuple(i, args.r, args.k).entries))
        print(f"S_{i}({args.r},{args.k}) = ({entries})")
    if args.r >= 2:
        excluded = ",".join(map(str, sorted(excluded_block_indices(args.r, args.k))))
        print(f"p = {p}; excluded block indices: {{{excluded}}}")
    else:
        print(f"p = {p}")
    return EXIT_OK


def cmd_construct(args) -> int:
    base_cert = read_certificate(args.base) if args.base else None
    base = base_cert.coloring if base_cert else None
    if base_cert is not None and base_cert.k != args.k:
        raise DomainError(f"base certificate is for k={base_cert.k}, not k={args.k}")
    if base is None or args.chain:
        coloring = construct_chain(args.k, args.r, base)
    else:
        coloring = blow_up(base, args.r, args.k)
    # the default seed is valid by inspection; ingested bases must carry a check
    structural = base_cert is None or base_cert.verification in ("brute_verified", "structural")
    cert = certify(coloring, args.k, "constructed", n_max=args.n_max, structural=structural)
    _emit(encode_certificate(cert), args.out)
    print(f"constructed r={cert.r} k={cert.k} n={cert.n} verified={cert.verification}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    cert = read_certificate(args.certificate)
    k = args.k or cert.k
    report = verify(cert.coloring, k, oracle=args.oracle, n_max=args.n_max)
    if report.valid:
        print(
            f"valid: r={cert.r} k={k} n={cert.n} "
            f"(scanned {report.progressions_scanned} progressions, {report.path}, {report.elapsed:.3f}s)"
        )
        return EXIT_OK
    w = report.witness
    print(f"invalid: start={w.start} diff={w.diff} color={w.color} length={w.length}")
    return EXIT_INVALID


def cmd_search(args) -> int:
    def log_line(length, nodes, elapsed):
        print(f"improved length={length} nodes={nodes} elapsed={elapsed:.3f}s", file=sys.stderr)

    outcome = search_max_valid(
        args.r, args.k, args.limit, args.budget,
        workers=args.workers, on_improve=None if args.quiet else log_line,
    )
    summary = (
        f"best_length={outcome.best_length} exhausted={str(outcome.exhausted).lower()} "
        f"nodes={outcome.nodes_expanded} elapsed={outcome.elapsed:.3f}s"
    )
    if outcome.exhausted:
        summary += f" w({args.r},{args.k})={outcome.best_length + 1}"
    print(summary, file=sys.stderr if not args.out else sys.stdout)
    _emit(encode_certificate(outcome.certificate), args.out)
    return EXIT_OK


def _load_db(path):
    return load_bounds_db(path)


def cmd_bounds_table(args) -> int:
    report = figure1_report(_load_db(args.db))
    sys.stdout.write(report.render(args.format))
    return EXIT_OK


def cmd_bounds_derive(args) -> int:
    db = _load_db(args.db)
    d = recurrence_chain(args.r, args.k, db)
    if d.replay() != d.final:
        raise AssertionError("derivation does not replay")
    p = largest_prime_leq(args.k)
    print(f"target: w({args.r},{args.k}) > {d.final:,}  (p = {p})")
    print(f"basis: ({d.basis.r},{d.basis.k}) {d.basis.kind} {d.basis.value:,} [{d.basis.source}]"
          f" -> valid length {d.basis.valid_length:,}")
    for i, s in enumerate(d.steps, start=1):
        print(f"step {i}: ({s.source_r},{s.k}) length {s.source_length:,} x {s.p} -> ({s.r},{s.k}) length {s.value:,}")
    print(f"final: {d.final:,}")
    if args.strengthened:
        primes = strengthened_prime_candidates(args.r, args.k, args.strengthened)
        print(f"strengthened ({args.strengthened}) candidate primes: {primes or 'none'}")
        for c in strengthened_candidates(args.r, args.k, db, args.strengthened):
            print(
                f"  candidate: {c['prime']} x ({c['source_r']},{args.k}) length {c['source_length']:,}"
                f" = {c['value']:,} (not certified)"
            )
    return EXIT_OK


def _fmt(x) -> str:
    if isinstance(x, float):
        return "inf" if math.isinf(x) else f"{x:.6g}"
    return str(x)


def cmd_bounds_compare(args) -> int:
    r, k = args.r, args.k
    p = largest_prime_leq(k)
    rows = [
        ("erdos_rado", _fmt(eval_erdos_rado(r, k)), f"floor {erdos_rado_floor(r, k)}"),
        ("erdos_lovasz", _fmt(float(eval_erdos_lovasz(r, k))), f"exact {eval_erdos_lovasz(r, k)}"),
    ]
    try:
        d = recurrence_chain(r, k, _load_db(args.db))
        rows.append(("recurrence", str(d.final + 1), f"w > {d.final}"))
    except NoBasisError as exc:
        rows.append(("recurrence", "-", str(exc)))
    if k == p + 1 and 2 <= r <= p:
        rows.append(("berlekamp_chain", str(berlekamp_chain_value(r, p) + 1), f"w > {berlekamp_chain_value(r, p)}"))
    if k >= 3 and r >= p:
        h = harmonic_decompose(r, p)
        rows.append(("harmonic_estimate", _fmt(harmonic_estimate(r, k)), f"ell={h.ell} s={h.s} H={h.harmonic}"))
        rows.append(("harmonic_asymptotic", _fmt(math.exp(log_harmonic_asymptotic(r, k))), "p^(p ln(r/p)) 2^p"))
    constants = {}
    if args.constants:
        with open(args.constants, encoding="utf-8") as fh:
            try:
                constants = json.load(fh)
            except json.JSONDecodeError as exc:
                raise FormatError(f"constants file: {exc}") from None
    for form in PARAMETERIZED_FORMS:
        if form in constants:
            rows.append((form, _fmt(eval_parameterized(form, r, k, constants[form])), "user constant"))
        else:
            rows.append((form, "-", "no constant supplied"))
    width = max(len(name) for name, _, _ in rows)
    print(f"w({r},{k}) lower-bound comparison, p = {p}")
    for name, value, note in rows:
        print(f"{name.ljust(width)}  {value:>14}  {note}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vdw", description="van der Waerden lower-bound toolkit")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("blocks", help="print all block tuples and the excluded set")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("construct", help="build a coloring by blow-up")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--base", help="certificate of the base coloring")
    p.add_argument("--chain", action="store_true", help="step one color at a time up to r")
    p.add_argument("--out")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a certificate for k-term monochromatic progressions")
    p.add_argument("certificate")
    p.add_argument("--oracle", action="store_true", help="use the brute-force path")
    p.add_argument("--k", type=int, help="override the certificate's k")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive search for the longest valid coloring")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--budget", type=int, help="maximum number of expanded nodes")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_search)

    b = sub.add_parser("bounds", help="bound recurrences and tables")
    bsub = b.add_subparsers(dest="bounds_command", required=True, parser_class=_Parser)

    p = bsub.add_parser("table", help="re-derive the small-numbers table")
    p.add_argument("--db")
    p.add_argument("--format", choices=("text", "csv", "json-lines"), default="text")
    p.set_defaults(func=cmd_bounds_table)

    p = bsub.add_parser("derive", help="derive a bound with its full step list")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--db")
    p.add_argument("--strengthened", choices=("as-printed", "corrected"))
    p.set_defaults(func=cmd_bounds_derive)

    p = bsub.add_parser("compare", help="closed-form bounds side by side")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--db")
    p.add_argument("--constants", help="JSON: {form: {constant: value}}")
    p.set_defaults(func=cmd_bounds_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except InvalidColoringError as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except LimitExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except (DomainError, NoBasisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FILE


if __name__ == "__main__":
    sys.exit(main())
