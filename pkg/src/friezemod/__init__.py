"""Solutions of M_n(a_1, ..., a_n) = ±Id over Z/NZ: arithmetic, search and tables."""

from .matrix import Mat2, continuant, m_n, m_n_via_continuants
from .residue import Residue, legendre, legendre_via_reciprocity
from .solutions import (
    CTuple,
    ReductionWitness,
    Verdict,
    WorkBudget,
    WorkLimitExceeded,
    check_solution,
    enumerate_solutions,
    equivalence_class,
    find_reduction,
    oplus,
)

__version__ = "0.1.0"

__all__ = [
    "CTuple",
    "Mat2",
    "ReductionWitness",
    "Residue",
    "Verdict",
    "WorkBudget",
    "WorkLimitExceeded",
    "check_solution",
    "continuant",
    "enumerate_solutions",
    "equivalence_class",
    "find_reduction",
    "legendre",
    "legendre_via_reciprocity",
    "m_n",
    "m_n_via_continuants",
    "oplus",
]
