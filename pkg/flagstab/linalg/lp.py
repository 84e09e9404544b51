"""
Exact cone membership by a phase-one simplex with Bland's rule.

Every answer carries a certificate: nonnegative coefficients when the target
lies in the cone, a separating functional (Farkas) when it does not.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from ..errors import CertificateError, ValidationError
from .rational import ONE, ZERO, QVector, combine, dot, neg, qvector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConeMembership:
    """
    Outcome of a cone membership query.

    Exactly one of coefficients (feasible) or separator (infeasible) is set.
    """
    target: QVector
    generators: tuple
    feasible: bool
    coefficients: Optional[QVector] = None
    separator: Optional[QVector] = None

    def __bool__(self) -> bool:
        return self.feasible

    def verify(self) -> bool:
        """Check the certificate exactly."""
        dim = len(self.target)
        if self.feasible:
            if self.coefficients is None or len(self.coefficients) != len(self.generators):
                return False
            if any(c < 0 for c in self.coefficients):
                return False
            return combine(self.coefficients, self.generators, dim) == self.target
        if self.separator is None:
            return False
        if any(dot(self.separator, g) < 0 for g in self.generators):
            return False
        return dot(self.separator, self.target) < 0


def _simplex_phase_one(rows: List[List[Fraction]], rhs: List[Fraction], n_cols: int):
    """
    Minimize the sum of artificials for rows x = rhs, x >= 0 (rhs >= 0).

    Returns the final tableau, reduced-cost row and basis; the reduced-cost
    row has one entry per column (originals then artificials) followed by
    minus the objective value.
    """
    m = len(rows)
    width = n_cols + m
    tableau = []
    for k in range(m):
        row = list(rows[k]) + [ONE if i == k else ZERO for i in range(m)] + [rhs[k]]
        tableau.append(row)
    cost = [ZERO] * (width + 1)
    for j in range(n_cols):
        cost[j] = -sum((tableau[k][j] for k in range(m)), ZERO)
    cost[width] = -sum(rhs, ZERO)
    basis = [n_cols + k for k in range(m)]

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        leaving = None
        best = None
        for k in range(m):
            a = tableau[k][entering]
            if a > 0:
                ratio = tableau[k][width] / a
                if best is None or ratio < best or (ratio == best and basis[k] < basis[leaving]):
                    best, leaving = ratio, k
        if leaving is None:
            # unbounded direction cannot happen: the objective is bounded below by 0
            raise CertificateError("phase-one simplex reported an unbounded ray")
        pivot_row = tableau[leaving]
        p = pivot_row[entering]
        if p != 1:
            pivot_row[:] = [a / p for a in pivot_row]
        for k in range(m):
            if k != leaving:
                factor = tableau[k][entering]
                if factor != 0:
                    tableau[k] = [a - factor * b for a, b in zip(tableau[k], pivot_row)]
        factor = cost[entering]
        cost = [a - factor * b for a, b in zip(cost, pivot_row)]
        basis[leaving] = entering
    return tableau, cost, basis


def cone_member(target: Sequence, generators: Sequence[Sequence]) -> ConeMembership:
    """
    Decide whether target lies in the cone spanned by generators.

    Args:
        target: vector to test
        generators: cone generators, all of the target's length

    Returns:
        Verified ConeMembership
    """
    target = qvector(target)
    gens = tuple(qvector(g) for g in generators)
    dim = len(target)
    for g in gens:
        if len(g) != dim:
            raise ValidationError(f"generator of length {len(g)} for a target of length {dim}")

    if not gens:
        if all(a == 0 for a in target):
            result = ConeMembership(target, gens, True, coefficients=())
        else:
            result = ConeMembership(target, gens, False, separator=neg(target))
        return _checked(result)

    signs = [(-ONE if target[k] < 0 else ONE) for k in range(dim)]
    rows = [[signs[k] * g[k] for g in gens] for k in range(dim)]
    rhs = [signs[k] * target[k] for k in range(dim)]
    n = len(gens)
    tableau, cost, basis = _simplex_phase_one(rows, rhs, n)

    if cost[-1] == 0:
        coefficients = [ZERO] * n
        for k, j in enumerate(basis):
            if j < n:
                coefficients[j] = tableau[k][-1]
        result = ConeMembership(target, gens, True, coefficients=tuple(coefficients))
    else:
        y = [ONE - cost[n + k] for k in range(dim)]
        separator = tuple(-signs[k] * y[k] for k in range(dim))
        result = ConeMembership(target, gens, False, separator=separator)
    logger.debug(f"cone_member dim={dim} gens={n} feasible={result.feasible}")
    return _checked(result)


def _checked(result: ConeMembership) -> ConeMembership:
    if not result.verify():
        raise CertificateError(
            f"cone membership certificate failed verification (feasible={result.feasible})")
    return result


def solve_inequalities(rows: Sequence[Sequence], rhs: Sequence) -> Optional[QVector]:
    """
    Find x with rows . x >= rhs, or None when the system is infeasible.

    Free variables are split as x = p - q and each inequality gets a surplus
    column, which turns the question into cone membership of rhs.
    """
    rows = [qvector(r) for r in rows]
    rhs = qvector(rhs)
    if not rows:
        return None
    n = len(rows[0])
    m = len(rows)
    columns = [tuple(rows[k][j] for k in range(m)) for j in range(n)]
    generators = columns + [neg(c) for c in columns]
    generators += [tuple(-ONE if k == i else ZERO for k in range(m)) for i in range(m)]
    result = cone_member(rhs, generators)
    if not result.feasible:
        return None
    c = result.coefficients
    return tuple(c[j] - c[n + j] for j in range(n))
