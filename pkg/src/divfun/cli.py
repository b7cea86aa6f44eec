"""Command-line front end.

Exit codes: 0 success, 1 verification or identity failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence

from . import identities, oracle, reversible, series, sumdist
from .divisor_funcs import c, c_assoc, d

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return range(lo, hi + 1)


def ordered_map(fn: Callable, items: Sequence, threads: int) -> list:
    """Parallel map that always returns results in input order."""
    if threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def emit_rows(out, fmt: str, header: Sequence[str], rows: Iterable[Sequence]):
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    elif fmt == "json":
        for row in rows:
            out.write(json.dumps(dict(zip(header, row)), separators=(",", ":")) + "\n")
    else:
        for row in rows:
            out.write(" ".join(str(x) for x in row) + "\n")


def _targets(args) -> list[int]:
    if (args.n is None) == (args.range is None):
        raise UsageError("give exactly one of --n or --range")
    if args.n is not None:
        if args.n < 1:
            raise UsageError("--n must be positive")
        return [args.n]
    return list(parse_range(args.range))


# --- commands -------------------------------------------------------------------


def cmd_dfun(args, out) -> int:
    if args.kind in ("d", "c") and args.r is not None:
        raise UsageError("--r only applies to --kind cr")
    if args.j < 0:
        raise UsageError("--j must be non-negative")
    r = args.r if args.r is not None else 0
    if r < 0:
        raise UsageError("--r must be non-negative")
    fn = {"d": lambda n: d(args.j, n), "c": lambda n: c(args.j, n), "cr": lambda n: c_assoc(args.j, r, n)}[args.kind]
    ns = _targets(args)
    values = ordered_map(fn, ns, args.threads)
    emit_rows(out, args.format, ("n", "value"), zip(ns, values))
    return EXIT_OK


def cmd_identities(args, out) -> int:
    if args.nmax < 2:
        raise UsageError("--nmax must be at least 2")
    outcomes = identities.run_suite(args.suite, args.nmax)
    rows = [o.row() for o in outcomes]
    header = ("suite", "name", "anchor", "status", "detail")
    if args.format == "text":
        for row in rows:
            out.write(f"{row['status'].upper():4}  {row['suite']:7}  {row['name']}  [{row['anchor']}]  {row['detail']}\n")
        failed = sum(1 for o in outcomes if not o.passed)
        out.write(f"{len(outcomes) - failed}/{len(outcomes)} identities hold\n")
    else:
        emit_rows(out, args.format, header, ([row[k] for k in header] for row in rows))
    return EXIT_OK if all(o.passed for o in outcomes) else EXIT_FAIL


def cmd_squares(args, out) -> int:
    ns = _targets(args)
    if args.action == "count":
        counts = ordered_map(reversible.count_principal, ns, args.threads)
        if args.n is not None and args.format == "text":
            out.write(f"{counts[0]}\n")
        else:
            emit_rows(out, args.format, ("n", "count"), zip(ns, counts))
        return EXIT_OK
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(("n", "index", "row", "entries"))
    for n in ns:
        for idx, sq in enumerate(reversible.iter_squares(n)):
            if args.format == "json":
                out.write(sq.to_json() + "\n")
            elif args.format == "csv":
                for k, row in enumerate(sq.rows, 1):
                    w.writerow((n, idx, k, " ".join(map(str, row))))
            else:
                out.write(sq.to_text() + "\n\n")
    return EXIT_OK


def _read_systems(text: str, inclusive: bool) -> list[sumdist.SumDistanceSystem]:
    text = text.strip()
    if not text:
        raise UsageError("no systems on input")
    try:
        if text.startswith("["):
            objs = json.loads(text)
        else:
            objs = [json.loads(line) for line in text.splitlines() if line.strip()]
        if isinstance(objs, dict):
            objs = [objs]
        return [sumdist.SumDistanceSystem.from_dict(o, inclusive) for o in objs]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError, AttributeError) as exc:
        raise UsageError(f"malformed system input: {exc}") from None


def cmd_sds(args, out) -> int:
    if args.action == "verify":
        if args.input in (None, "-"):
            text = sys.stdin.read()
        else:
            try:
                with open(args.input) as fh:
                    text = fh.read()
            except OSError as exc:
                raise UsageError(str(exc)) from None
        systems = _read_systems(text, args.inclusive)
        results = [sumdist.verify_sds(s) for s in systems]
        if args.format == "text":
            for s, ok in zip(systems, results):
                kind = "inclusive" if s.inclusive else "non-inclusive"
                out.write(f"{'ok' if ok else 'FAIL'}  {kind}  {s.to_text()}\n")
            return EXIT_OK if all(results) else EXIT_FAIL
        emit_rows(
            out,
            args.format,
            ("system", "inclusive", "valid"),
            ((s.to_text(), s.inclusive, ok) for s, ok in zip(systems, results)),
        )
        return EXIT_OK if all(results) else EXIT_FAIL
    if args.m is None or args.m < 1:
        raise UsageError("--m must be a positive integer")
    systems = sumdist.enumerate_sds(args.m, args.inclusive)
    if args.action == "count":
        if args.format == "text":
            out.write(f"{len(systems)}\n")
        else:
            emit_rows(out, args.format, ("m", "inclusive", "count"), [(args.m, args.inclusive, len(systems))])
        return EXIT_OK
    if args.format == "json":
        for s in systems:
            out.write(s.to_json() + "\n")
    elif args.format == "csv":
        emit_rows(out, "csv", ("m", "inclusive", "A", "B"),
                  ((s.m, s.inclusive, " ".join(map(str, s.A)), " ".join(map(str, s.B))) for s in systems))
    else:
        for s in systems:
            out.write(s.to_text() + "\n")
    return EXIT_OK


def cmd_series(args, out) -> int:
    if args.action == "ratio":
        if not args.s > 1:
            raise UsageError(f"--s must exceed 1, got {args.s}")
        if args.j not in (1, 2, 3):
            raise UsageError("--j must be 1, 2 or 3 for ratio")
        spec = series.EulerProductSpec(args.s, args.prime_limit, args.term_limit)
        closed = series.euler_product_ratio(args.j, spec)
        direct = series.direct_ratio_sum(args.j, args.s, args.N)
        header = ("j", "s", "closed_form", "direct_sum", "abs_diff")
        emit_rows(out, args.format, header, [(args.j, args.s, closed, direct, abs(closed - direct))])
        return EXIT_OK
    N = args.N
    r = args.r or 0
    if args.kind == "zpow":
        seq = series.zeta_power_coeffs(args.j, N)
    elif args.kind == "zm1pow":
        if args.j < 1:
            raise UsageError("--j must be positive for zm1pow")
        seq = series.zeta_minus_one_power_coeffs(args.j, N)
    elif args.kind == "assoc":
        if args.j < 1:
            raise UsageError("--j must be positive for assoc")
        seq = series.assoc_series_coeffs(args.j, r, N)
    else:
        seq = series.zeta_ratio_coeffs(r, N)
    emit_rows(out, args.format, ("n", "coeff"), zip(range(1, N + 1), seq))
    return EXIT_OK


def cmd_oracle(args, out) -> int:
    if args.action == "factorizations":
        if args.n is None or args.j is None or args.n < 1 or args.j < 1:
            raise UsageError("factorizations needs --n >= 1 and --j >= 1")
        facts = oracle.brute_list_factorizations(args.n, args.j, args.proper)
        emit_rows(out, args.format, ("factors",), ((" ".join(map(str, f)),) for f in facts))
        return EXIT_OK
    if args.n is None or args.n < 2:
        raise UsageError("splittings needs --n >= 2")
    try:
        found = oracle.enumerate_splittings(args.n)
    except oracle.CostGuardError as exc:
        raise UsageError(str(exc)) from None
    rows = []
    for sp in found:
        ok = reversible.validate_square(oracle.splitting_to_square(sp)).ok
        rows.append((" ".join(map(str, sp.A)), " ".join(map(str, sp.B)), ok))
    emit_rows(out, args.format, ("A", "B", "principal_reversible"), rows)
    return EXIT_OK


# --- parser ---------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker threads for range sweeps; output is identical for any value")

    p = _Parser(prog="divfun", description="Divisor functions, reversible squares and sum-and-distance systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("dfun", parents=[common], help="evaluate d_j, c_j or c_j^(r)")
    q.add_argument("--kind", choices=("d", "c", "cr"), required=True)
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--r", type=int)
    q.add_argument("--n", type=int)
    q.add_argument("--range")
    q.set_defaults(func=cmd_dfun)

    q = sub.add_parser("identities", parents=[common], help="run an identity suite")
    q.add_argument("--suite", choices=identities.SUITES + ("all",), default="all")
    q.add_argument("--nmax", type=int, default=1000)
    q.set_defaults(func=cmd_identities)

    q = sub.add_parser("squares", parents=[common], help="count or list principal reversible squares")
    q.add_argument("action", choices=("count", "enumerate"))
    q.add_argument("--n", type=int)
    q.add_argument("--range")
    q.set_defaults(func=cmd_squares)

    q = sub.add_parser("sds", parents=[common], help="sum-and-distance systems")
    q.add_argument("action", choices=("count", "enumerate", "verify"))
    q.add_argument("--m", type=int)
    q.add_argument("--inclusive", action="store_true")
    q.add_argument("--input", help="JSON systems for verify (default: standard input)")
    q.set_defaults(func=cmd_sds)

    q = sub.add_parser("series", parents=[common], help="Dirichlet coefficients and Euler-product ratios")
    q.add_argument("action", choices=("ratio", "coeffs"))
    q.add_argument("--kind", choices=("zpow", "zm1pow", "assoc", "zratio"), default="zpow")
    q.add_argument("--j", type=int, default=1)
    q.add_argument("--r", type=int)
    q.add_argument("--s", type=float, default=3.0)
    q.add_argument("--prime-limit", type=int, default=10**5)
    q.add_argument("--term-limit", type=int, default=10**5)
    q.add_argument("--N", type=int, default=10**5)
    q.set_defaults(func=cmd_series)

    q = sub.add_parser("oracle", parents=[common], help="brute-force factorizations and splittings")
    q.add_argument("action", choices=("factorizations", "splittings"))
    q.add_argument("--n", type=int)
    q.add_argument("--j", type=int)
    q.add_argument("--proper", action="store_true")
    q.set_defaults(func=cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.threads < 1:
            raise UsageError("--threads must be positive")
        if getattr(args, "N", 1) is not None and getattr(args, "N", 1) < 1:
            raise UsageError("--N must be positive")
        return args.func(args, out)
    except UsageError as exc:
        print(f"divfun: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except sumdist.InvalidSystemError as exc:
        print(f"divfun: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
