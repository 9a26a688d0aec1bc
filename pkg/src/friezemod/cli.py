"""Command-line front end.

    friezemod check --modulus 5 --tuple 0,0
    friezemod reduce --modulus 19 --tuple 6,13,6,13
    friezemod enumerate --modulus 5 --size 3
    friezemod monomial-table --primes 11,13,17 --format csv
    friezemod dynomial2-table --up-to 500 --jobs 4

Exit codes: 0 decided, 1 a bundled reference witness failed to validate,
2 input error, 3 work limit exceeded (some verdict is Unknown).

--max-work caps each individual search (one reducibility verdict, or one
enumeration); work_spent reports the total.  Rows and cells are computed
independently, so output does not depend on --jobs.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from sympy import isprime, primerange

from . import render
from .dynomial import dynomial_two_primes, dynomial_record, published_rows, verify_published_witness
from .monomial import monomial_size_table, minimal_monomial_size
from .solutions import (
    DEFAULT_MAX_WORK,
    CTuple,
    NotASolution,
    WorkBudget,
    WorkLimitExceeded,
    check_solution,
    enumerate_solutions,
    reducibility,
)

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v != ""]
    except ValueError:
        raise InputError(f"malformed integer list {text!r}") from None


def _modulus(n: int) -> int:
    if n < 2:
        raise InputError(f"modulus must be >= 2, got {n}")
    return n


def _tuple(n: int, text: str) -> CTuple:
    try:
        return CTuple.parse(n, text)
    except ValueError as e:
        raise InputError(str(e)) from None


def _jobs(requested: int) -> int:
    env = os.environ.get("FRIEZEMOD_JOBS")
    if env:
        try:
            requested = int(env)
        except ValueError:
            raise InputError(f"FRIEZEMOD_JOBS must be an integer, got {env!r}") from None
    if requested < 1:
        raise InputError("--jobs must be >= 1")
    return requested


def _pmap(fn, items, jobs: int) -> list:
    """Order-preserving map, in worker processes when jobs > 1."""
    items = list(items)
    if jobs == 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as ex:
        return list(ex.map(fn, items, chunksize=1))


# workers (module level so they pickle)


def _dynomial_row(args):
    n, limit = args
    budget = WorkBudget(limit)
    rec = dynomial_record(n, 2, budget)
    return rec, budget.spent


def _irreducible_status(args):
    t, limit = args
    budget = WorkBudget(limit)
    return reducibility(t, budget).status, budget.spent


def _monomial_column(args):
    p, last = args
    return [minimal_monomial_size(p, k).size if k < p else None for k in range(last + 1)]


# commands


def cmd_check(a) -> int:
    n = _modulus(a.modulus)
    t = _tuple(n, a.tuple)
    sys.stdout.write(render.check_text(a.format, n, t, check_solution(t), a.balanced))
    return EXIT_OK


def cmd_reduce(a) -> int:
    n = _modulus(a.modulus)
    t = _tuple(n, a.tuple)
    budget = WorkBudget(a.max_work)
    try:
        v = reducibility(t, budget)
    except NotASolution as e:
        raise InputError(str(e)) from None
    except ValueError as e:
        raise InputError(str(e)) from None
    sys.stdout.write(render.reduce_text(a.format, n, t, v, budget.spent, a.max_work, a.balanced))
    return EXIT_OK if v.decided else EXIT_BUDGET


def cmd_enumerate(a) -> int:
    n = _modulus(a.modulus)
    if a.size < 1:
        raise InputError("--size must be >= 1")
    if a.irreducible_only and a.size < 3:
        raise InputError("irreducibility is only defined for size >= 3")
    inputs = {
        "modulus": n,
        "size": a.size,
        "classes": a.classes,
        "irreducible_only": a.irreducible_only,
        "max_work": a.max_work,
    }
    budget = WorkBudget(a.max_work)
    try:
        sols = enumerate_solutions(n, a.size, up_to_equivalence=a.classes, budget=budget)
    except WorkLimitExceeded as e:
        print(f"Unknown: {e}", file=sys.stderr)
        if a.format == "json":
            sys.stdout.write(render.envelope("enumerate", inputs, None, budget.spent))
        return EXIT_BUDGET
    spent = budget.spent
    if not a.irreducible_only:
        items = [(t, None) for t in sols]
    else:
        results = _pmap(_irreducible_status, [(t, a.max_work) for t in sols], _jobs(a.jobs))
        spent += sum(s for _, s in results)
        items = [(t, st) for t, (st, _) in zip(sols, results) if st != "reducible"]
    sys.stdout.write(render.enumerate_text(a.format, inputs, items, spent, a.balanced))
    return EXIT_BUDGET if any(s == "unknown" for _, s in items) else EXIT_OK


def cmd_monomial_table(a) -> int:
    if a.primes is not None:
        primes = _int_list(a.primes)
        bad = [p for p in primes if not isprime(p)]
        if bad or not primes:
            raise InputError(f"not prime: {bad}" if bad else "empty prime list")
        if len(set(primes)) != len(primes):
            raise InputError("repeated prime in --primes")
    else:
        if a.primes_up_to < 2:
            raise InputError("--primes-up-to must be >= 2")
        primes = list(primerange(2, a.primes_up_to + 1))
    inputs = {"primes": primes, "all_k": a.all_k}
    top = max(primes)
    last = top - 1 if a.all_k else (top - 1) // 2
    jobs = _jobs(a.jobs)
    if jobs == 1:
        rows = monomial_size_table(primes, a.all_k)
    else:
        cols = _pmap(_monomial_column, [(p, last) for p in primes], jobs)
        rows = [(k, {p: col[k] for p, col in zip(primes, cols)}) for k in range(last + 1)]
    sys.stdout.write(render.monomial_table_text(a.format, primes, rows, inputs))
    return EXIT_OK


def cmd_dynomial2_table(a) -> int:
    if a.up_to < 2:
        raise InputError("--up-to must be >= 2")
    primes = dynomial_two_primes(a.up_to)
    results = _pmap(_dynomial_row, [(p, a.max_work) for p in primes], _jobs(a.jobs))
    records = [r for r, _ in results]
    spent = sum(s for _, s in results)
    published = None
    failed = False
    if a.verify_paper_witnesses:
        published = {}
        for row in published_rows():
            if row["N"] > a.up_to or row["witness"] is None:
                continue
            ok = verify_published_witness(row)
            failed |= not ok
            published[row["N"]] = "valid" if ok else "invalid"
    inputs = {"k": 2, "up_to": a.up_to, "max_work": a.max_work, "verify_paper_witnesses": a.verify_paper_witnesses}
    sys.stdout.write(render.dynomial_table_text(a.format, records, inputs, spent, a.balanced, published))
    if any(not r.verdict.decided for r in records):
        return EXIT_BUDGET
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("md", "csv", "json"), default="md")
    common.add_argument("--balanced", action="store_true",
                        help="print residues in (-N/2, N/2] instead of [0, N-1]")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker processes (env FRIEZEMOD_JOBS overrides)")
    common.add_argument("--max-work", type=int, default=DEFAULT_MAX_WORK,
                        help="candidate tests allowed per search (default 10^8)")

    p = argparse.ArgumentParser(prog="friezemod", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="is the tuple a solution?")
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--tuple", required=True, help="comma-separated, e.g. 6,-6,6,-6")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("reduce", parents=[common], help="reduction witness or irreducibility")
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--tuple", required=True)
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("enumerate", parents=[common], help="all solutions of one size")
    s.add_argument("--modulus", type=int, required=True)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--classes", action="store_true", help="one canonical tuple per equivalence class")
    s.add_argument("--irreducible-only", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("monomial-table", parents=[common], help="minimal monomial sizes, rows k, columns N")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--primes", help="comma-separated primes")
    g.add_argument("--primes-up-to", type=int)
    s.add_argument("--all-k", action="store_true", help="rows up to max N - 1 instead of (max N - 1)/2")
    s.set_defaults(func=cmd_monomial_table)

    s = sub.add_parser("dynomial2-table", parents=[common],
                       help="minimal 2-dynomial solutions for primes = ±1 mod 12")
    s.add_argument("--up-to", type=int, required=True)
    s.add_argument("--verify-paper-witnesses", action="store_true",
                   help="also validate the bundled published witnesses")
    s.set_defaults(func=cmd_dynomial2_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.max_work < 0:
            raise InputError("--max-work must be >= 0")
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
