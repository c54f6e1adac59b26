"""Residue-case parametrization of restart points and the boundary criteria.

Every termination column J > 0 determines (i, j, k): the row and column of
gamma(J) and the valuation of that step. Conversely
J = (2**k * (2**i * (2j + 1) - 1) - 1) / 3, which is integral exactly when
j falls in the residue class fixed by the parities of k and i:

    case  k     i       j
    EE    2v    2u      3t + 2
    EO    2v    2u + 1  3t
    OE    2v+1  2u      3t + 1
    OO    2v+1  2u + 1  3t + 1

Criteria compare j with the boundary column D at row i, either as exact
fractions or in the integer-cleared form (2j+1)*3**i  vs
2**(k+1) * (2**i * (2j+1) - 1) + 1, which orders the same way.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .cadogan import c, c_inv
from .core import collatz_step
from .errors import InternalResidueViolation, RowOutOfRange
from .trajectory import Classification, compare

CASES = ("EE", "EO", "OE", "OO")
DEFAULT_SWEEP_BOUND = 8

# case -> (column residue mod 3, row offset, valuation offset)
_CASE_FORM = {
    "EE": (2, 0, 0),
    "EO": (0, 1, 0),
    "OE": (1, 0, 1),
    "OO": (1, 1, 1),
}


@dataclass(frozen=True)
class CaseParams:
    case_id: str
    t: int
    u: int
    v: int

    def __post_init__(self):
        if self.case_id not in _CASE_FORM:
            raise ValueError(f"unknown case {self.case_id!r}")
        if min(self.t, self.u, self.v) < 0:
            raise ValueError("t, u, v must be non-negative")

    def __str__(self) -> str:
        return f"{self.case_id}({self.t},{self.u},{self.v})"


def case_of(i: int, k: int) -> str:
    return ("E" if k % 2 == 0 else "O") + ("E" if i % 2 == 0 else "O")


def is_valid(p: CaseParams) -> bool:
    # even-row cases need u >= 1 because rows start at 1
    return _CASE_FORM[p.case_id][1] == 1 or p.u >= 1


def expand_params(p: CaseParams) -> tuple[int, int, int]:
    """(j, i, k) for a parameter point."""
    r, di, dk = _CASE_FORM[p.case_id]
    if not is_valid(p):
        raise RowOutOfRange(f"{p}: even-row cases need u >= 1")
    return 3 * p.t + r, 2 * p.u + di, 2 * p.v + dk


def synthesize_J(p: CaseParams) -> int:
    j, i, k = expand_params(p)
    q, rem = divmod(((((2 * j + 1) << i) - 1) << k) - 1, 3)
    if rem:
        raise InternalResidueViolation(f"{p}: 3 does not divide the numerator")
    return q


def case_params(J: int) -> CaseParams:
    """Invert the parametrization: the unique CaseParams with synthesize_J = J."""
    v, k = collatz_step(J)
    i, j = c(v)
    cid = case_of(i, k)
    r, di, dk = _CASE_FORM[cid]
    t, rem = divmod(j - r, 3)
    if rem:
        raise InternalResidueViolation(f"J={J}: column {j} not in residue class of {cid}")
    return CaseParams(cid, t, (i - di) // 2, (k - dk) // 2)


def check_consistency(p: CaseParams) -> bool:
    """Do the parameters reproduce themselves through gamma?"""
    try:
        j, i, k = expand_params(p)
        J = synthesize_J(p)
    except (RowOutOfRange, InternalResidueViolation):
        return False
    return tuple(collatz_step(J)) == (c_inv((i, j)), k)


def determinant(i: int, J: int) -> Fraction:
    """Boundary column at row i for termination column J, as an exact fraction."""
    if i < 1:
        raise RowOutOfRange(f"row index must be >= 1, got {i}")
    p = 3 ** (i - 1)
    return Fraction(2 * J + 1 - p, 2 * p)


def classify_params(p: CaseParams) -> Classification:
    j, i, _ = expand_params(p)
    return compare(j, determinant(i, synthesize_J(p)))


def evaluate_criterion(p: CaseParams, relation: Classification) -> bool:
    return classify_params(p) is Classification(relation)


def cleared_sides(p: CaseParams) -> tuple[int, int]:
    """Integer forms (lhs, rhs) with lhs ? rhs ordered exactly like j ? D.

    Multiply j < D through by 2 * 3**i and substitute 3J from the
    parametrization; no factor is negative so the order is kept.
    """
    j, i, k = expand_params(p)
    s = 2 * j + 1
    return s * 3**i, (((s << i) - 1) << (k + 1)) + 1


def classify_cleared(p: CaseParams) -> Classification:
    lhs, rhs = cleared_sides(p)
    return compare(lhs, rhs)


def iter_params(bound: int, case_ids=CASES, positive_only: bool = True):
    """Valid parameter points with t, u, v <= bound in (case, t, u, v) order.

    The single point with J = 0 (EO(0,0,0), the fixed point 1) is skipped
    unless ``positive_only`` is False.
    """
    for cid in case_ids:
        for t, u, v in itertools.product(range(bound + 1), repeat=3):
            p = CaseParams(cid, t, u, v)
            if not is_valid(p):
                continue
            if positive_only and synthesize_J(p) == 0:
                continue
            yield p


def find_counterexample(case_id: str, relation, bound: int) -> CaseParams | None:
    """First point (lexicographic in t, u, v) where ``relation`` fails to hold.

    ``relation`` is the universal claim being refuted: LESSER for j < D,
    ON for j = D, GREATER for j > D. Only J > 0 is considered. Returns None
    if the claim holds on the whole box.
    """
    relation = Classification(relation)
    for p in iter_params(bound, (case_id,)):
        if classify_params(p) is not relation:
            return p
    return None
