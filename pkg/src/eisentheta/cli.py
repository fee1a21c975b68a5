"""Batch command line front end.

    theta dump   --series c1 --order 6 [--format json|csv] [--out FILE]
    theta verify [--all | --identity thm1 [--k 1]] [--order 6]
    theta coset  [--bound 2]
    theta oracle [--order 6]

Exit codes: 0 success, 1 an asserted verification failed, 2 usage or
contract error.  Output is deterministic for a given invocation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import builders, identities

SERIES_CHOICES = ("a", "b0", "b1", "b2", "c0", "c1", "c2", "a1var", "b1var", "c1var")
IDENTITY_CHOICES = ("lemma", "thm1", "cor1", "thm2", "cor2", "special")

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


def _build_series(name: str, n: int):
    if name == "a":
        return builders.build_a(n)
    if name.startswith("b") and not name.endswith("var"):
        return builders.build_b(int(name[1]), n)
    if name.startswith("c") and not name.endswith("var"):
        return builders.build_c(int(name[1]), n)
    return builders.build_one_var(name[0], n)


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")


def cmd_dump(args: argparse.Namespace) -> int:
    series = _build_series(args.series, args.order)
    if args.format == "csv":
        text = "\n".join(series.to_csv_rows())
    else:
        text = series.to_json()
    _write(text, args.out)
    return EXIT_OK


def _identity_reports(args: argparse.Namespace) -> list:
    n = args.order
    k = args.k % 3
    name = args.identity
    if args.all or name is None:
        return identities.run_all(n, coset_bound=args.bound)
    if name == "lemma":
        return [identities.check_lemma_symmetries(n)]
    if name == "thm1":
        return [identities.check_theorem1(k, n)]
    if name == "cor1":
        return [identities.check_corollary1(n)]
    if name == "thm2":
        return [identities.check_theorem2(k, n)]
    if name == "cor2":
        return identities.check_corollary2(n)
    return [identities.check_special_cases_w1(n)]


def _finish_reports(reports, out_path: str | None) -> int:
    _write(identities.reports_to_json(reports), out_path)
    if any(r.status == "contract-error" for r in reports):
        return EXIT_USAGE
    if any(r.asserted and not r.ok for r in reports):
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    return _finish_reports(_identity_reports(args), args.out)


def cmd_coset(args: argparse.Namespace) -> int:
    from .cosets import (
        verify_m_action,
        verify_n_action,
        verify_phi_pullback,
        verify_v_stability,
    )

    sweeps = [
        verify_m_action(args.bound),
        verify_n_action(args.bound),
        verify_phi_pullback(args.bound),
        verify_v_stability(args.bound),
    ]
    _write(json.dumps([s.to_dict() for s in sweeps], indent=2), args.out)
    return EXIT_OK if all(s.status == "ok" for s in sweeps) else EXIT_VERIFY_FAILED


def cmd_oracle(args: argparse.Namespace) -> int:
    return _finish_reports(identities.oracle_equivalence_reports(args.order), args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="theta",
        description="Exact theta series construction and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--order", type=int, default=6, help="q-truncation order")
        p.add_argument("--bound", type=int, default=2, help="triple norm bound")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p_dump = sub.add_parser("dump", help="serialize one series")
    p_dump.add_argument("--series", required=True, choices=SERIES_CHOICES)
    common(p_dump)
    p_dump.set_defaults(func=cmd_dump)

    p_verify = sub.add_parser("verify", help="run identity checks")
    p_verify.add_argument("--all", action="store_true", help="run every check")
    p_verify.add_argument("--identity", choices=IDENTITY_CHOICES, default=None)
    p_verify.add_argument("--k", type=int, default=0, help="shift class (mod 3)")
    common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_coset = sub.add_parser("coset", help="run the coset transform sweeps")
    common(p_coset)
    p_coset.set_defaults(func=cmd_coset)

    p_oracle = sub.add_parser("oracle", help="compare builders to double sums")
    common(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.order < 0 or args.bound < 0:
        parser.error("--order and --bound must be nonnegative")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
