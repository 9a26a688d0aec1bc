"""Exact arithmetic in Z/NZ and the quadratic-residue predicates built on it."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime


class ModulusMismatch(ValueError):
    pass


class NoInverse(ArithmeticError):
    """Raised when inverting a residue that shares a factor with the modulus."""

    def __init__(self, rep: int, modulus: int, gcd: int):
        super().__init__(f"{rep} is not invertible mod {modulus} (gcd={gcd})")
        self.rep = rep
        self.modulus = modulus
        self.gcd = gcd


def check_modulus(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
    return n


@dataclass(frozen=True, order=True)
class Residue:
    """An element of Z/NZ, always stored by its representative in [0, N-1]."""

    modulus: int
    rep: int

    def __post_init__(self):
        check_modulus(self.modulus)
        object.__setattr__(self, "rep", self.rep % self.modulus)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ModulusMismatch(f"mod {self.modulus} vs mod {other.modulus}")
            return other.rep
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.modulus, self.rep + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.modulus, self.rep - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.modulus, o - self.rep)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Residue(self.modulus, self.rep * o)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.modulus, -self.rep)

    def __pow__(self, e: int):
        if e < 0:
            return pow(res_inv(self), -e)
        return Residue(self.modulus, pow(self.rep, e, self.modulus))

    def __int__(self):
        return self.rep

    def balanced(self) -> int:
        """Representative in (-N/2, N/2]."""
        r, n = self.rep, self.modulus
        return r - n if 2 * r > n else r

    def __repr__(self):
        return f"{self.rep} (mod {self.modulus})"


def res_add(x: Residue, y: Residue) -> Residue:
    return x + y


def res_mul(x: Residue, y: Residue) -> Residue:
    return x * y


def res_neg(x: Residue) -> Residue:
    return -x


def res_inv(x: Residue) -> Residue:
    g = math.gcd(x.rep, x.modulus)
    if g != 1:
        raise NoInverse(x.rep, x.modulus, g)
    return Residue(x.modulus, pow(x.rep, -1, x.modulus))


def balanced(a: int, n: int) -> int:
    a %= n
    return a - n if 2 * a > n else a


@lru_cache(maxsize=256)
def squares_mod(n: int) -> frozenset:
    """All squares in Z/nZ, by exhaustive scan."""
    return frozenset(y * y % n for y in range(n))


def is_square(x: Residue) -> bool:
    n, a = x.modulus, x.rep
    if a == 0:
        return True
    if n > 2 and isprime(n):
        return pow(a, (n - 1) // 2, n) == 1
    return a in squares_mod(n)


def _check_legendre_args(a: int, p: int) -> None:
    if p < 3 or not isprime(p):
        raise ValueError(f"{p} is not an odd prime")
    if a % p == 0:
        raise ValueError(f"Legendre symbol undefined: {p} divides {a}")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    _check_legendre_args(a, p)
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def trial_factor(n: int) -> dict[int, int]:
    """Prime factorisation of n >= 1 by trial division."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def legendre_via_reciprocity(a: int, p: int) -> int:
    """Legendre symbol (a/p) from multiplicativity, reciprocity and the two supplements.

    Never exponentiates modulo p, so it is an independent check on `legendre`.
    The second supplement (2/p) = (-1)^((p^2-1)/8) is used for the factor 2.
    """
    _check_legendre_args(a, p)
    sign = 1
    if a < 0:
        a = -a
        if (p - 1) // 2 % 2:
            sign = -sign
    if a >= p:
        a %= p
    for q, e in trial_factor(a).items():
        if e % 2 == 0:
            continue
        if q == 2:
            if (p * p - 1) // 8 % 2:
                sign = -sign
        else:
            # q < p here, so the recursion strictly shrinks the modulus
            flip = ((p - 1) // 2) * ((q - 1) // 2) % 2
            sign *= legendre_via_reciprocity(p % q, q) * (-1 if flip else 1)
    return sign


def three_is_square(p: int) -> bool:
    """Whether 3 is a square mod the prime p, via reciprocity (not via the p mod 12 rule)."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p in (2, 3):
        # 3 = 1 mod 2 and 3 = 0 mod 3
        return True
    return legendre_via_reciprocity(3, p) == 1


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def check_binomial_divisibility(n: int, k: int) -> bool:
    """Whether n / gcd(n, k) divides C(n, k)."""
    if n < 1 or not 1 <= k <= n:
        raise ValueError(f"need n >= 1 and 1 <= k <= n, got n={n}, k={k}")
    return binomial(n, k) % (n // math.gcd(n, k)) == 0


def check_power_binomial(l: int, n: int, j: int) -> bool:
    """Whether l^(n-j) divides C(2 l^(n-2), j)."""
    if l < 2 or n < 3 or not 2 <= j <= n - 1:
        raise ValueError(f"need l >= 2, n >= 3, 2 <= j <= n-1, got {l}, {n}, {j}")
    return binomial(2 * l ** (n - 2), j) % l ** (n - j) == 0
