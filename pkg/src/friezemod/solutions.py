"""Candidate tuples, the sum and equivalence on them, and brute-force reducibility.

A tuple (a_1, ..., a_n) over Z/NZ is a *solution* when M_n(a_1, ..., a_n) is
+Id or -Id.  A solution c of size n >= 3 is *reducible* when some rotation or
reversed rotation of c equals a (+) b with b a solution and both parts of size
at least 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .matrix import PlusMinusId, pm_sign4, product4
from .residue import ModulusMismatch, Residue, check_modulus

DEFAULT_MAX_WORK = 10**8
_SCAN_CELLS = 1 << 20


class WorkLimitExceeded(RuntimeError):
    def __init__(self, limit: int, spent: int, needed: int):
        super().__init__(f"work limit {limit} exceeded ({spent} spent, {needed} more needed)")
        self.limit = limit
        self.spent = spent


class NotASolution(ValueError):
    pass


class WorkBudget:
    """Counts candidate solution tests.  One unit = one candidate tuple tested."""

    def __init__(self, limit: int | None = DEFAULT_MAX_WORK):
        self.limit = limit
        self.spent = 0

    def spend(self, units: int) -> None:
        if self.limit is not None and self.spent + units > self.limit:
            raise WorkLimitExceeded(self.limit, self.spent, units)
        self.spent += units


def _budget(budget: WorkBudget | None) -> WorkBudget:
    return WorkBudget(None) if budget is None else budget


@dataclass(frozen=True, order=True)
class CTuple:
    modulus: int
    entries: tuple[int, ...]

    def __post_init__(self):
        n = check_modulus(self.modulus)
        ents = []
        for a in self.entries:
            if isinstance(a, Residue):
                if a.modulus != n:
                    raise ModulusMismatch(f"residue mod {a.modulus} in a mod {n} tuple")
                a = a.rep
            ents.append(int(a) % n)
        if not ents:
            raise ValueError("a tuple needs at least one entry")
        object.__setattr__(self, "entries", tuple(ents))

    @classmethod
    def parse(cls, modulus: int, text: str) -> "CTuple":
        """Parse comma-separated integers, reducing mod N."""
        try:
            vals = [int(v) for v in text.replace(" ", "").split(",")]
        except ValueError:
            raise ValueError(f"malformed tuple {text!r}") from None
        return cls(modulus, tuple(vals))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def residues(self) -> tuple[Residue, ...]:
        return tuple(Residue(self.modulus, a) for a in self.entries)

    def format(self, balanced: bool = False) -> str:
        n = self.modulus
        vals = [a - n if balanced and 2 * a > n else a for a in self.entries]
        return "(" + ",".join(map(str, vals)) + ")"

    def __str__(self):
        return self.format()


def constant(n: int, k: int, length: int) -> CTuple:
    return CTuple(n, (k,) * length)


def alternating(n: int, k: int, length: int) -> CTuple:
    """(k, -k, k, -k, ...) of the given length."""
    return CTuple(n, tuple(k if i % 2 == 0 else -k for i in range(length)))


def oplus(a: CTuple, b: CTuple) -> CTuple:
    """(a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1})."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"mod {a.modulus} vs mod {b.modulus}")
    if len(a) < 2 or len(b) < 2:
        raise ValueError("both operands of the sum need length >= 2")
    x, y = a.entries, b.entries
    return CTuple(a.modulus, (x[0] + y[-1],) + x[1:-1] + (x[-1] + y[0],) + y[1:-1])


class Transform(NamedTuple):
    """Reverse first (if `reflected`), then rotate left by `rotation`."""

    rotation: int
    reflected: bool

    def apply(self, t: CTuple) -> CTuple:
        e = t.entries[::-1] if self.reflected else t.entries
        r = self.rotation % len(e)
        return CTuple(t.modulus, e[r:] + e[:r])


def _class_members(t: CTuple) -> list[tuple[CTuple, Transform]]:
    """Distinct members of the class of t, sorted, each with the first transform reaching it."""
    seen: dict[tuple, Transform] = {}
    for reflected in (False, True):
        for r in range(len(t)):
            tr = Transform(r, reflected)
            seen.setdefault(tr.apply(t).entries, tr)
    return [(CTuple(t.modulus, e), seen[e]) for e in sorted(seen)]


def equivalence_class(t: CTuple) -> set[CTuple]:
    return {m for m, _ in _class_members(t)}


def canonical_form(t: CTuple) -> CTuple:
    return _class_members(t)[0][0]


class SolutionVerdict(NamedTuple):
    is_solution: bool
    sign: PlusMinusId


def check_solution(t: CTuple) -> SolutionVerdict:
    n = t.modulus
    s = pm_sign4(product4(t.entries, n), n)
    if s == 0:
        return SolutionVerdict(False, PlusMinusId(None))
    return SolutionVerdict(True, PlusMinusId(s, ambiguous=n == 2))


def is_solution(t: CTuple) -> bool:
    return pm_sign4(product4(t.entries, t.modulus), t.modulus) != 0


def _continuant_sign(a: Sequence[int], n: int) -> int:
    """±Id test through the four continuant entries of M_n."""
    def k(seq):
        prev, cur = 0, 1
        for x in seq:
            prev, cur = cur, (x * cur - prev) % n
        return cur

    inner = k(a[1:-1]) if len(a) >= 2 else 0
    return pm_sign4((k(a), -k(a[1:]) % n, k(a[:-1]), -inner % n), n)


def enumerate_solutions(
    n: int,
    size: int,
    up_to_equivalence: bool = False,
    budget: WorkBudget | None = None,
) -> list[CTuple]:
    """All solutions of the given size, sorted; canonical forms only if requested.

    Solution-hood is decided from continuants, not from raw matrix products.
    """
    check_modulus(n)
    if size < 1:
        raise ValueError("size must be >= 1")
    _budget(budget).spend(n**size)
    found = set()
    for cand in itertools.product(range(n), repeat=size):
        if _continuant_sign(cand, n):
            t = CTuple(n, cand)
            found.add(canonical_form(t) if up_to_equivalence else t)
    return sorted(found)


def size4_families(n: int) -> set[CTuple]:
    """(-a, b, a, -b) with ab = 0, and (a, b, a, b) with ab = 2."""
    out = set()
    for a in range(n):
        for b in range(n):
            if a * b % n == 0:
                out.add(CTuple(n, (-a, b, a, -b)))
            if a * b % n == 2 % n:
                out.add(CTuple(n, (a, b, a, b)))
    return out


def check_size4_classification(n: int, budget: WorkBudget | None = None) -> bool:
    return set(enumerate_solutions(n, 4, budget=budget)) == size4_families(n)


@dataclass(frozen=True)
class ReductionWitness:
    """transform(original) == left (+) right, with both parts solutions of size >= 3."""

    original: CTuple
    rotation: int
    reflected: bool
    left: CTuple
    right: CTuple

    @property
    def transform(self) -> Transform:
        return Transform(self.rotation, self.reflected)

    def to_dict(self) -> dict:
        return {
            "rotation": self.rotation,
            "reflected": self.reflected,
            "left": list(self.left.entries),
            "right": list(self.right.entries),
        }


def validate_witness(w: ReductionWitness) -> bool:
    if len(w.left) < 3 or len(w.right) < 3:
        return False
    if len(w.left) + len(w.right) - 2 != len(w.original):
        return False
    if w.transform.apply(w.original) != oplus(w.left, w.right):
        return False
    return is_solution(w.right) and is_solution(w.left)


def _require_reducible_candidate(t: CTuple) -> None:
    if len(t) < 3:
        raise ValueError("reducibility is only defined for solutions of size >= 3")
    if not is_solution(t):
        raise NotASolution(f"{t} is not a solution mod {t.modulus}")


def _boundary_scan(member: Sequence[int], m: int, n: int) -> tuple[int, int] | None:
    """First (b_1, b_l) in row-major order making (b_1, member[m:], b_l) a solution."""
    p = product4(member[m:], n)
    bl = np.arange(n, dtype=np.int64)[None, :]
    rows = max(1, _SCAN_CELLS // n)
    for start in range(0, n, rows):
        b1 = np.arange(start, min(n, start + rows), dtype=np.int64)[:, None]
        # M = F(b_l) @ P @ F(b_1); only the first row depends on b_l
        q11 = (p[0] * b1 + p[1]) % n
        q21 = (p[2] * b1 + p[3]) % n
        q12, q22 = -p[0] % n, -p[2] % n
        m11 = (bl * q11 - q21) % n
        m12 = (bl * q12 - q22) % n
        # bottom row of M is (q11, q12): need q11 == 0 and q12 == m11 == ±1
        ok = (q11 == 0) & (m12 == 0) & (m11 == q12) & ((q12 == 1 % n) | (q12 == n - 1))
        idx = np.flatnonzero(ok)
        if idx.size:
            i, j = divmod(int(idx[0]), n)
            return start + i, j
    return None


def find_reduction(t: CTuple, budget: WorkBudget | None = None) -> ReductionWitness | None:
    """Exhaustive search for a reduction of the solution t; None certifies irreducibility.

    Scan order: class members in lexicographic order, right-part length
    ascending, boundary pair (b_1, b_l) row-major.  Raises WorkLimitExceeded
    (never returns None) if the budget runs out first.
    """
    _require_reducible_candidate(t)
    budget = _budget(budget)
    n, size = t.modulus, len(t)
    for member, tr in _class_members(t):
        e = member.entries
        for l in range(3, size):
            m = size + 2 - l
            budget.spend(n * n)
            hit = _boundary_scan(e, m, n)
            if hit is None:
                continue
            b1, bl = hit
            right = CTuple(n, (b1,) + e[m:] + (bl,))
            left = CTuple(n, (e[0] - bl,) + e[1 : m - 1] + (e[m - 1] - b1,))
            w = ReductionWitness(t, tr.rotation, tr.reflected, left, right)
            assert validate_witness(w), w
            return w
    return None


def reduction_with_part(t: CTuple, part: CTuple) -> ReductionWitness | None:
    """Complete a given solution `part` into a reduction of t, if it fits one.

    The part is placed as the right operand; the left operand is then forced.
    """
    if part.modulus != t.modulus:
        raise ModulusMismatch(f"mod {part.modulus} vs mod {t.modulus}")
    size, l = len(t), len(part)
    if l < 3 or size + 2 - l < 3 or not is_solution(part):
        return None
    m = size + 2 - l
    n = t.modulus
    b = part.entries
    for member, tr in _class_members(t):
        e = member.entries
        if e[m:] != b[1:-1]:
            continue
        left = CTuple(n, (e[0] - b[-1],) + e[1 : m - 1] + (e[m - 1] - b[0],))
        w = ReductionWitness(t, tr.rotation, tr.reflected, left, part)
        if validate_witness(w):
            return w
    return None


@dataclass(frozen=True)
class Verdict:
    """Three-valued reducibility outcome with the reason it was reached."""

    status: str  # "reducible" | "irreducible" | "unknown" | "trivial" (the pair (0, 0))
    source: str
    witness: ReductionWitness | None = None

    @property
    def decided(self) -> bool:
        return self.status != "unknown"

    def to_dict(self) -> dict:
        d = {"status": self.status, "source": self.source}
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d


def reducibility(t: CTuple, budget: WorkBudget | None = None) -> Verdict:
    """find_reduction wrapped into a three-valued verdict."""
    try:
        w = find_reduction(t, budget)
    except WorkLimitExceeded:
        return Verdict("unknown", "search")
    if w is None:
        return Verdict("irreducible", "search")
    return Verdict("reducible", "search", w)

