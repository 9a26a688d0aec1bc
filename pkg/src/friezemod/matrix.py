"""2x2 matrices over Z/NZ, the products M_n(a_1, ..., a_n) and continuants.

M_n(a_1, ..., a_n) is the product [[a_n, -1], [1, 0]] ... [[a_1, -1], [1, 0]],
with a_n leftmost.  Its entries are continuants, which gives an independent
way of computing the same matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .residue import ModulusMismatch, Residue, binomial, check_modulus


@dataclass(frozen=True)
class Mat2:
    modulus: int
    a11: int
    a12: int
    a21: int
    a22: int

    def __post_init__(self):
        n = check_modulus(self.modulus)
        for f in ("a11", "a12", "a21", "a22"):
            object.__setattr__(self, f, getattr(self, f) % n)

    @classmethod
    def identity(cls, n: int) -> "Mat2":
        return cls(n, 1, 0, 0, 1)

    def entry(self, i: int, j: int) -> Residue:
        return Residue(self.modulus, (self.a11, self.a12, self.a21, self.a22)[2 * i + j])

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a11, self.a12), (self.a21, self.a22)

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __neg__(self) -> "Mat2":
        return mat_neg(self)


def mat_mul(x: Mat2, y: Mat2) -> Mat2:
    if x.modulus != y.modulus:
        raise ModulusMismatch(f"mod {x.modulus} vs mod {y.modulus}")
    return Mat2(
        x.modulus,
        x.a11 * y.a11 + x.a12 * y.a21,
        x.a11 * y.a12 + x.a12 * y.a22,
        x.a21 * y.a11 + x.a22 * y.a21,
        x.a21 * y.a12 + x.a22 * y.a22,
    )


def mat_identity(n: int) -> Mat2:
    return Mat2.identity(n)


def mat_neg(x: Mat2) -> Mat2:
    return Mat2(x.modulus, -x.a11, -x.a12, -x.a21, -x.a22)


def mat_det(x: Mat2) -> Residue:
    return Residue(x.modulus, x.a11 * x.a22 - x.a12 * x.a21)


def factor(n: int, a: int) -> Mat2:
    """The generator [[a, -1], [1, 0]]."""
    return Mat2(n, a, -1, 1, 0)


def _ints(n: int, seq: Iterable) -> list[int]:
    out = []
    for a in seq:
        if isinstance(a, Residue):
            if a.modulus != n:
                raise ModulusMismatch(f"residue mod {a.modulus} in a mod {n} tuple")
            out.append(a.rep)
        else:
            out.append(int(a) % n)
    return out


# Raw-int kernels shared by the search code.  Matrices are 4-tuples
# (a11, a12, a21, a22) of canonical representatives.

def mul4(x, y, n):
    return (
        (x[0] * y[0] + x[1] * y[2]) % n,
        (x[0] * y[1] + x[1] * y[3]) % n,
        (x[2] * y[0] + x[3] * y[2]) % n,
        (x[2] * y[1] + x[3] * y[3]) % n,
    )


def left_factor4(a, x, n):
    """[[a, -1], [1, 0]] @ x, without building the factor."""
    return ((a * x[0] - x[2]) % n, (a * x[1] - x[3]) % n, x[0], x[1])


def product4(seq, n):
    m = (1, 0, 0, 1)
    for a in seq:
        m = left_factor4(a, m, n)
    return m


def pm_sign4(m, n) -> int:
    """+1 for Id, -1 for -Id, 0 otherwise (Id wins when N = 2)."""
    if m[1] or m[2] or m[0] != m[3]:
        return 0
    if m[0] == 1:
        return 1
    if m[0] == n - 1:
        return -1
    return 0


def m_n(n: int, tup) -> Mat2:
    a = _ints(check_modulus(n), tup)
    if not a:
        raise ValueError("M_n needs at least one entry")
    m = product4(a, n)
    result = Mat2(n, *m)
    assert mat_det(result).rep == 1 % n
    return result


def continuant(n: int, tup) -> Residue:
    """K_i(a_1..a_i) by K_i = a_i K_{i-1} - K_{i-2}, K_{-1} = 0, K_0 = 1."""
    prev, cur = 0, 1 % n
    for a in _ints(check_modulus(n), tup):
        prev, cur = cur, (a * cur - prev) % n
    return Residue(n, cur)


def continuant_constant_closed_form(n: int, x, length: int) -> Residue:
    if length < 0:
        raise ValueError("length must be >= 0")
    x = int(x) % check_modulus(n)
    total = sum(
        (-1) ** k * binomial(length - k, k) * pow(x, length - 2 * k, n)
        for k in range(length // 2 + 1)
    )
    return Residue(n, total)


def m_n_via_continuants(n: int, tup) -> Mat2:
    a = _ints(check_modulus(n), tup)
    if not a:
        raise ValueError("M_n needs at least one entry")
    k = len(a)
    # K_{-1} of an empty slice only arises for n = 1, where the entry is 0
    k_inner = continuant(n, a[1:-1]).rep if k >= 2 else 0
    return Mat2(
        n,
        continuant(n, a).rep,
        -continuant(n, a[1:]).rep,
        continuant(n, a[:-1]).rep,
        -k_inner,
    )


def continuant_sign_flip_check(n: int, tup) -> bool:
    """K_n(x_1..x_n) == (-1)^n K_n(-x_1..-x_n)."""
    a = _ints(check_modulus(n), tup)
    lhs = continuant(n, a)
    rhs = continuant(n, [-x for x in a])
    return lhs == (rhs if len(a) % 2 == 0 else -rhs)


class PlusMinusId(NamedTuple):
    sign: int | None
    ambiguous: bool = False

    @property
    def is_pm_id(self) -> bool:
        return self.sign is not None


def classify_pm_id(x: Mat2) -> PlusMinusId:
    s = pm_sign4((x.a11, x.a12, x.a21, x.a22), x.modulus)
    if s == 0:
        return PlusMinusId(None)
    return PlusMinusId(s, ambiguous=x.modulus == 2)
