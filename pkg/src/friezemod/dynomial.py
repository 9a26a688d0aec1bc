"""Minimal dynomial solutions (k, -k, k, -k, ...) and their reducibility.

M_n on the alternating tuple of even length n is the (n/2)-th power of
[[-k, -1], [1, 0]] @ [[k, -1], [1, 0]], so the minimal size is twice the
order of that product in PSL_2(Z/NZ).

For prime N >= 5 and k not in {0, 1, -1}, any reduction of the minimal
solution splits it into two odd-length parts of the shape
(r, s, -s, ..., s, r) with s = ±k and r(r + s) = 2.  That turns the
reducibility question into a scan over two roots, two orientations and
O(n) lengths; `structured_dynomial_reducibility` runs that scan.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from importlib import resources

from sympy import isprime
from sympy.ntheory import sqrt_mod

from .matrix import left_factor4, pm_sign4, product4
from .monomial import pm_order
from .residue import Residue, check_modulus, is_square
from .solutions import (
    CTuple,
    Verdict,
    WorkBudget,
    _budget,
    alternating,
    is_solution,
    reducibility,
    reduction_with_part,
    validate_witness,
)


@dataclass(frozen=True)
class DynomialRecord:
    modulus: int
    k: int
    size: int
    sign: int
    criterion_applies: bool | None = None
    quad_roots: tuple[int, ...] = ()
    verdict: Verdict | None = None

    @property
    def solution(self) -> CTuple:
        return alternating(self.modulus, self.k, self.size)


def minimal_dynomial_size(n: int, k: int) -> DynomialRecord:
    n = check_modulus(n)
    k %= n
    # one step multiplies by F(-k) @ F(k), i.e. appends the pair (k, -k)
    order, sign = pm_order(lambda m: left_factor4(-k, left_factor4(k, m, n), n), n, 3 * n)
    return DynomialRecord(n, k, 2 * order, sign)


def boundary_roots(n: int, k: int, alpha: int, parity: str) -> tuple[int, ...]:
    """Residues a with a(alpha*k + a) = 0 (parity "even") or = 2 (parity "odd"), sorted."""
    n = check_modulus(n)
    if alpha not in (1, -1):
        raise ValueError("alpha must be +1 or -1")
    if parity not in ("even", "odd"):
        raise ValueError("parity must be 'even' or 'odd'")
    c = 0 if parity == "even" else 2
    s = alpha * k % n
    if n > 2 and isprime(n):
        # a^2 + s a - c = 0, discriminant s^2 + 4c
        disc = (s * s + 4 * c) % n
        half = pow(2, -1, n)
        roots = sqrt_mod(disc, n, all_roots=True) or []
        return tuple(sorted({(-s + d) * half % n for d in roots}))
    return tuple(a for a in range(n) if a * (s + a) % n == c % n)


def _require_prime5(n: int) -> None:
    if n < 5 or not isprime(n):
        raise ValueError(f"need a prime modulus >= 5, got {n}")


def discriminant_criterion(n: int, k: int) -> bool:
    """k != 0 and k^2 + 8 is not a square mod the prime N: the minimal k-dynomial solution is irreducible."""
    _require_prime5(n)
    k %= n
    return k != 0 and not is_square(Residue(n, k * k + 8))


def mod12_criterion(n: int) -> bool:
    """N not ±1 mod 12: the minimal 2-dynomial solution is irreducible (12 = 2^2 * 3 is then a non-square)."""
    _require_prime5(n)
    return n % 12 not in (1, 11)


def interior(n: int, s: int, length: int) -> tuple[int, ...]:
    """(s, -s, s, ...) of the given length."""
    return tuple((s if i % 2 == 0 else -s) % n for i in range(length))


def boundary_pairs(n: int, s: int, length: int) -> list[tuple[int, int]]:
    """All (a, b) making (a, s, -s, ..., b) of the given total length a solution.  Exhaustive."""
    p = product4(interior(n, s, length - 2), n)
    return [(a, b) for a in range(n) for b in range(n) if _bordered(a, b, p, n)]


def _bordered(a: int, b: int, p, n: int) -> bool:
    """Whether F(b) @ P @ F(a) is ±Id."""
    q = ((p[0] * a + p[1]) % n, -p[0] % n, (p[2] * a + p[3]) % n, -p[2] % n)
    return pm_sign4(left_factor4(b, q, n), n) != 0


def structured_dynomial_reducibility(
    n: int, k: int, budget: WorkBudget | None = None
) -> Verdict:
    """Exact reducibility verdict for the minimal k-dynomial solution, N prime >= 5, k not in {0, ±1}.

    Candidate parts are tried by length ascending, then orientation s = -k
    before s = k, then boundary root ascending; the first hit is returned.
    """
    _require_prime5(n)
    k %= n
    if k in (0, 1, n - 1):
        raise ValueError("k must not be 0 or ±1; use the generic search")
    budget = _budget(budget)
    size = minimal_dynomial_size(n, k).size
    original = alternating(n, k, size)
    if size == 4:
        # reducible size-4 solutions contain ±1
        return Verdict("irreducible", "size-4")

    orientations = ((-k) % n, k)
    roots = {s: boundary_roots(n, s, 1, "odd") for s in orientations}
    products = {}
    for s in orientations:
        # P_j for every interior length j <= size - 4, built one factor at a time
        seq = interior(n, s, size - 4)
        m = (1, 0, 0, 1)
        ps = [m]
        for x in seq:
            m = left_factor4(x, m, n)
            ps.append(m)
        products[s] = ps
        # even splits: boundary 0 or -s would give a shorter dynomial solution
        for j in range(2, size - 3, 2):
            for a in (0, -s % n):
                assert not _bordered(a, -a % n, ps[j], n), (n, k, j, a)

    for length in range(5, size - 2, 2):
        for s in orientations:
            p = products[s][length - 2]
            for r in roots[s]:
                budget.spend(1)
                if not _bordered(r, r, p, n):
                    continue
                assert r * (s + r) % n == 2 % n
                part = CTuple(n, (r,) + interior(n, s, length - 2) + (r,))
                w = reduction_with_part(original, part)
                assert w is not None and validate_witness(w), (n, k, length, r)
                assert w.left[0] == (-s - r) % n
                return Verdict("reducible", "structured-search", w)
    return Verdict("irreducible", "structured-search")


def dynomial_verdict(n: int, k: int, budget: WorkBudget | None = None) -> Verdict:
    k %= n
    rec = minimal_dynomial_size(n, k)
    if rec.size == 2:
        return Verdict("trivial", "zero-pair")
    if n >= 5 and isprime(n):
        if discriminant_criterion(n, k):
            return Verdict("irreducible", "discriminant")
        if k not in (1, n - 1):
            return structured_dynomial_reducibility(n, k, budget)
    return reducibility(rec.solution, budget)


def dynomial_record(n: int, k: int, budget: WorkBudget | None = None) -> DynomialRecord:
    rec = minimal_dynomial_size(n, k)
    crit = discriminant_criterion(n, k) if n >= 5 and isprime(n) else None
    return replace(
        rec,
        criterion_applies=crit,
        quad_roots=boundary_roots(n, k, -1, "odd"),
        verdict=dynomial_verdict(n, k, budget),
    )


def dynomial_two_primes(limit: int) -> list[int]:
    return [p for p in range(7, limit + 1) if p % 12 in (1, 11) and isprime(p)]


def dynomial_two_row(n: int, budget: WorkBudget | None = None) -> DynomialRecord:
    return dynomial_record(n, 2, budget)


def dynomial_two_table(limit: int, budget: WorkBudget | None = None) -> list[DynomialRecord]:
    """One row per prime N = ±1 mod 12 with 5 < N <= limit, for k = 2."""
    return [dynomial_two_row(p, budget) for p in dynomial_two_primes(limit)]


def published_rows() -> list[dict]:
    """The published k = 2 table (size, verdict, roots, listed witness), bundled as JSON."""
    text = resources.files("friezemod").joinpath("data/published_k2_table.json").read_text()
    return json.loads(text)


def published_witness_part(row: dict) -> CTuple | None:
    """The listed reducing part (r, -2, 2, ..., -2, r) of a published row, or None."""
    w = row.get("witness")
    if w is None:
        return None
    n, length = row["N"], w["length"]
    inner = interior(n, w["interior_start"], length - 2)
    part = CTuple(n, (w["boundary"],) + inner + (w["boundary"],))
    if "entries" in w and CTuple(n, tuple(w["entries"])) != part:
        raise ValueError(f"inconsistent witness entries for N={n}")
    return part


def verify_published_witness(row: dict) -> bool:
    """The listed part is a solution of the stated length that reduces the minimal 2-dynomial solution."""
    part = published_witness_part(row)
    if part is None:
        return False
    if len(part) != row["witness"]["length"] or not is_solution(part):
        return False
    original = alternating(row["N"], 2, row["size"])
    if minimal_dynomial_size(row["N"], 2).size != row["size"]:
        return False
    w = reduction_with_part(original, part)
    return w is not None and validate_witness(w)
