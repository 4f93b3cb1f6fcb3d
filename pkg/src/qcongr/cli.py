"""Command-line front end for the congruence workbench.

Four subcommands: `verify` runs catalogued residue-ring checks, `telescope`
derives and certifies summand weights for term ratios, `corollary` runs the
integer-side checks, and `show` prints standard objects.  Reports stream to
standard output as a table or as newline-delimited JSON; diagnostics go to
standard error.  Exit status: 0 when every cell passed, 1 when at least one
mathematical check failed, 2 for usage or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import padic, telescope, verify
from .qobjects import cyclotomic, gaussian_binomial, q_integer

USAGE_ERROR = 2


class _UsageError(Exception):
    pass


def _print_padic_table(cells) -> None:
    print(f"{'check':<10} {'p':>4} {'r':>2}  status")
    for c in cells:
        print(f"{c.check:<10} {c.p:>4} {c.r:>2}  {c.status}")
    passed = sum(1 for c in cells if c.ok)
    print(f"{len(cells)} cells, {passed} pass, {len(cells) - passed} fail")


def cmd_verify(args) -> int:
    if args.all:
        ids = list(verify.MODULAR_IDS)
    elif args.check:
        for i in args.check:
            if i not in verify.CATALOG:
                raise _UsageError(f"unknown check id: {i}")
        wanted = set(args.check)
        ids = [cid for cid in verify.CATALOG if cid in wanted]
    else:
        raise _UsageError("choose --all or --check")
    if args.n is not None:
        values = sorted(set(args.n))
        for i in ids:
            for n in values:
                if not verify.CATALOG[i].accepts(n):
                    raise _UsageError(f"check {i} does not apply at n = {n}")
        cells = [verify.check(i, n) for i in ids for n in values]
        report = verify.CongruenceReport(ids, values[-1], cells)
    else:
        report = verify.sweep(ids, args.n_max)
    if args.format == "json":
        out = report.to_json_lines()
        if out:
            print(out)
    else:
        print(report.render_table())
    return 0 if report.all_pass else 1


def cmd_telescope(args) -> int:
    if args.family_file:
        try:
            with open(args.family_file) as fh:
                obj = json.load(fh)
            family = telescope.TermFamily.from_json_obj(obj)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise _UsageError(f"cannot load family file: {exc}") from exc
    elif args.family:
        try:
            family = telescope.BUILTIN_FAMILIES[args.family]
        except KeyError:
            raise _UsageError(f"unknown family: {args.family}") from None
    else:
        raise _UsageError("choose --family or --family-file")
    if args.n < 0:
        raise _UsageError("n must be nonnegative")
    r = family.weight()
    print(f"family {family.name}")
    print(f"  S = {family.S}")
    print(f"  T = {family.T}")
    print(f"  R = T - shift_k(S) = {r}")
    print("  boundary identity: sum_{k=0}^{n} R(k) F(k) "
          "= F(0) T(0) - F(n) S(n+1)")
    for n in range(args.n + 1):
        try:
            cert = telescope.verify_boundary_identity(family, n)
        except telescope.ZeroRatioDenominator as exc:
            raise _UsageError(f"family ill-posed on range: {exc}") from exc
        if not cert.ok:
            print(f"counterexample at n = {n}:")
            print(f"  lhs (cleared) = {cert.lhs}")
            print(f"  rhs (cleared) = {cert.rhs}")
            return 1
    print(f"certified for n <= {args.n}")
    return 0


def cmd_corollary(args) -> int:
    which = {"1.1": "coro1.1", "1.2": "coro1.2", "st": "STcon"}[args.which]
    if args.p is not None:
        primes = sorted(set(args.p))
        for p in primes:
            if not padic.is_odd_prime(p):
                raise _UsageError(f"p must be an odd prime, got {p}")
    else:
        primes = padic.odd_primes_below(args.p_max + 1)
        if not primes:
            raise _UsageError(f"no odd primes at or below {args.p_max}")
    cap = args.cap
    if cap is None:
        env = os.environ.get("QCONGR_CAP")
        cap = int(env) if env else padic.DEFAULT_CAP
    cells = []
    try:
        for p in primes:
            for r in sorted(set(args.r)):
                cells.append(padic.run_check(which, p, r, cap))
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.format == "json":
        for c in cells:
            print(json.dumps(c.to_json_obj(), separators=(", ", ": ")))
    else:
        _print_padic_table(cells)
    return 0 if all(c.ok for c in cells) else 1


def cmd_show(args) -> int:
    what, params = args.what, args.params
    counts = {"cyclotomic": 1, "qint": 1, "gauss": 2}
    if len(params) != counts[what]:
        raise _UsageError(f"show {what} takes {counts[what]} argument(s)")
    if what == "cyclotomic":
        if params[0] < 1:
            raise _UsageError("cyclotomic index must be positive")
        print(cyclotomic(params[0]))
    elif what == "qint":
        if params[0] < 0:
            raise _UsageError("q-integer index must be nonnegative")
        print(q_integer(params[0]))
    else:
        m, k = params
        if not 0 <= k <= m:
            raise _UsageError("gauss needs 0 <= k <= m")
        print(gaussian_binomial(m, k))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcongr",
        description="exact verification of q-congruences and their integer limits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run catalogued residue-ring checks")
    v.add_argument("--all", action="store_true",
                   help="run every modular check in the catalog")
    v.add_argument("--check", nargs="+", metavar="ID",
                   help="specific check ids to run")
    v.add_argument("--n", nargs="+", type=int, metavar="N",
                   help="explicit n values")
    v.add_argument("--n-max", type=int, default=99,
                   help="sweep odd n from 3 to this bound (default 99)")
    v.add_argument("--format", choices=("table", "json"), default="table")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("telescope", help="derive and certify a summand weight")
    t.add_argument("--family", metavar="NAME",
                   help="built-in family name (F1, F2, G1, G2)")
    t.add_argument("--family-file", metavar="PATH",
                   help="JSON file with name/F0/S/T")
    t.add_argument("--n", type=int, required=True,
                   help="certify the boundary identity for 0 <= n <= this")
    t.set_defaults(func=cmd_telescope)

    c = sub.add_parser("corollary", help="run integer-side checks")
    c.add_argument("--which", choices=("1.1", "1.2", "st"), required=True)
    c.add_argument("--p", nargs="+", type=int, metavar="P",
                   help="explicit odd primes")
    c.add_argument("--p-max", type=int, default=199,
                   help="all odd primes up to this bound (default 199)")
    c.add_argument("--r", nargs="+", type=int, default=[1], metavar="R",
                   help="prime-power exponents (default 1)")
    c.add_argument("--cap", type=int, default=None,
                   help=f"summation length cap (default {padic.DEFAULT_CAP}; "
                        "env QCONGR_CAP overrides)")
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.set_defaults(func=cmd_corollary)

    s = sub.add_parser("show", help="print standard objects")
    s.add_argument("what", choices=("cyclotomic", "qint", "gauss"))
    s.add_argument("params", nargs="+", type=int)
    s.set_defaults(func=cmd_show)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def run() -> None:
    raise SystemExit(main())
