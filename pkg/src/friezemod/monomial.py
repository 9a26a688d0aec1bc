"""Minimal monomial solutions (k, k, ..., k): sizes, structural checks and reducibility.

The minimal size for k is the order of [[k, -1], [1, 0]] in PSL_2(Z/NZ),
found by walking its powers until one is +Id or -Id.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from sympy import isprime

from .matrix import left_factor4, pm_sign4
from .residue import check_modulus
from .solutions import (
    CTuple,
    ReductionWitness,
    Verdict,
    WorkBudget,
    constant,
    is_solution,
    reducibility,
    validate_witness,
)


@dataclass(frozen=True)
class MonomialRecord:
    modulus: int
    k: int
    size: int
    sign: int
    verdict: Verdict | None = None

    @property
    def irreducible(self) -> bool | None:
        if self.verdict is None or self.verdict.status not in ("reducible", "irreducible"):
            return None
        return self.verdict.status == "irreducible"

    @property
    def solution(self) -> CTuple:
        return constant(self.modulus, self.k, self.size)


def pm_order(step, n: int, cap: int) -> tuple[int, int]:
    """Smallest i >= 1 with step^i = ±Id, and the sign; `step` maps m -> m @ g."""
    m = step((1, 0, 0, 1))
    for i in range(1, cap + 1):
        s = pm_sign4(m, n)
        if s:
            return i, s
        m = step(m)
    raise AssertionError(f"no ±Id power within {cap} steps mod {n}")


def minimal_monomial_size(n: int, k: int) -> MonomialRecord:
    n = check_modulus(n)
    k %= n
    size, sign = pm_order(lambda m: left_factor4(k, m, n), n, 3 * n)
    return MonomialRecord(n, k, size, sign)


def check_prime_sizes(p: int) -> bool:
    """For prime p: size(±2) = p, every other size divides (p-1)/2 or (p+1)/2."""
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    lo, hi = (p - 1) // 2, (p + 1) // 2
    for k in range(p):
        size = minimal_monomial_size(p, k).size
        if k in (2, p - 2):
            if size != p:
                return False
        elif lo % size and hi % size:
            return False
    return True


def check_symmetry_k_negk(n: int) -> bool:
    return all(
        minimal_monomial_size(n, k).size == minimal_monomial_size(n, -k).size
        for k in range(n // 2 + 1)
    )


def half_modulus_analysis(n: int) -> MonomialRecord:
    """Record for k = N/2 (N even >= 4): size 4 if 4 | N else 6, always irreducible."""
    if n < 4 or n % 2:
        raise ValueError(f"need an even modulus >= 4, got {n}")
    rec = minimal_monomial_size(n, n // 2)
    expected = 4 if n % 4 == 0 else 6
    assert rec.size == expected, (n, rec.size)
    return replace(rec, verdict=Verdict("irreducible", "half-modulus"))


def check_divisor_monomial(n: int, l: int) -> bool:
    """(N/l, ..., N/l) of length 2l solves the equation when l^2 | N; minimal when l is prime."""
    if l < 2 or n % (l * l):
        raise ValueError(f"{l}^2 does not divide {n}")
    if not is_solution(constant(n, n // l, 2 * l)):
        return False
    if isprime(l):
        return minimal_monomial_size(n, n // l).size == 2 * l
    return True


def _perfect_power(n: int, l: int) -> int | None:
    e = 0
    while n % l == 0:
        n //= l
        e += 1
    return e if n == 1 else None


def prime_power_reduction(l: int, e: int) -> ReductionWitness | None:
    """Reduce (l, ..., l) of length 2 l^(e-1) modulo N = l^e, or None when it is irreducible.

    Irreducible exactly when l = 2.  For e = 2 the size-4 part is
    (-l, l, l, -l); for e >= 3 the right part is (2l^(e-1), l, ..., l, 2l^(e-1)).
    """
    if l < 2 or e < 2:
        raise ValueError("need l >= 2 and exponent >= 2")
    n = l**e
    t = constant(n, l, 2 * l ** (e - 1))
    assert is_solution(t)
    if l == 2:
        return None
    if e == 2:
        right = CTuple(n, (-l, l, l, -l))
        left = CTuple(n, (2 * l,) + (l,) * (2 * l - 4) + (2 * l,))
    else:
        big = 2 * l ** (e - 1)
        right = CTuple(n, (big,) + (l,) * (big - 4 * l ** (e - 2)) + (big,))
        left = CTuple(n, (l - big,) + (l,) * (4 * l ** (e - 2) - 2) + (l - big,))
    w = ReductionWitness(t, 0, False, left, right)
    assert validate_witness(w), (l, e)
    return w


def prime_power_reduction_for(n: int, l: int) -> ReductionWitness | None:
    e = _perfect_power(n, l) if l >= 2 else None
    if e is None or e < 2:
        raise ValueError(f"{n} is not a power l^e of l={l} with e >= 2")
    return prime_power_reduction(l, e)


def monomial_verdict(rec: MonomialRecord, budget: WorkBudget | None = None) -> Verdict:
    """Reducibility of the minimal k-monomial solution, from a known result when one applies."""
    n, k, size = rec.modulus, rec.k, rec.size
    if size == 2:
        # (0, 0) is neither reducible nor irreducible
        return Verdict("trivial", "zero-pair")
    if size == 3:
        return Verdict("irreducible", "size-3")
    if size == 4:
        # reducible size-4 solutions contain ±1, and (±1, ..., ±1) has size 3
        return Verdict("irreducible", "size-4")
    if n >= 3 and isprime(n):
        return Verdict("irreducible", "prime-modulus")
    if n % 2 == 0 and n >= 4 and k == n // 2:
        return Verdict("irreducible", "half-modulus")
    if k == 2 and size == n:
        return Verdict("irreducible", "two-monomial")
    if k >= 3:
        e = _perfect_power(n, k)
        if e and e >= 2 and size == 2 * k ** (e - 1):
            return Verdict("reducible", "prime-power", prime_power_reduction(k, e))
    return reducibility(rec.solution, budget)


def monomial_record(n: int, k: int, budget: WorkBudget | None = None) -> MonomialRecord:
    rec = minimal_monomial_size(n, k)
    return replace(rec, verdict=monomial_verdict(rec, budget))


def monomial_size_table(primes, all_k: bool = False) -> list[tuple[int, dict[int, int | None]]]:
    """Minimal monomial sizes: rows k, columns N.

    Rows run over k = 0 .. (P-1)/2 for the largest prime P (or P-1 with
    all_k); a cell is None when k >= N.
    """
    primes = list(primes)
    for p in primes:
        if not isprime(p):
            raise ValueError(f"{p} is not prime")
    if not primes:
        return []
    top = max(primes)
    last = top - 1 if all_k else (top - 1) // 2
    return [
        (k, {p: minimal_monomial_size(p, k).size if k < p else None for p in primes})
        for k in range(last + 1)
    ]
