"""
A small deterministic two-phase simplex over the rationals.

    maximize / minimize  <c, x>   subject to   A x <= b,   x free

Free variables are split as x = x⁺ - x⁻, every row gets a slack, and rows
with a negative right-hand side get an artificial variable for phase one.
Pivoting follows Bland's rule (lowest eligible index enters, ties in the
ratio test leave by lowest basic index), which rules out cycling.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from polyrep.exact.rational import RatVec
from polyrep.utils.work_tracker import work_tracker

logger = logging.getLogger(__name__)


class LPStatus(str, Enum):
    OPTIMAL = "optimal"
    UNBOUNDED = "unbounded"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPResult:
    """Outcome of ``lp_solve``.

    ``witness`` is the optimal point when optimal, an improving ray
    (with A·ray <= 0) when unbounded, and None when infeasible.
    """
    status: LPStatus
    optimum: Optional[Fraction] = None
    witness: Optional[RatVec] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == LPStatus.OPTIMAL


class _Tableau:
    """Dense tableau; the last column is the right-hand side, the last row the objective."""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1

    def pivot(self, row: int, col: int):
        pivot_row = self.rows[row]
        inv = 1 / pivot_row[col]
        pivot_row = [a * inv for a in pivot_row]
        self.rows[row] = pivot_row
        for i, other in enumerate(self.rows):
            if i == row:
                continue
            factor = other[col]
            if factor != 0:
                self.rows[i] = [a - factor * b for a, b in zip(other, pivot_row)]
        self.basis[row] = col
        self.pivots += 1

    def set_objective(self, costs: Sequence[Fraction]):
        """Install a minimization objective, reduced against the current basis."""
        objective = list(costs) + [Fraction(0)]
        for r, var in enumerate(self.basis):
            coef = objective[var]
            if coef != 0:
                objective = [a - coef * b for a, b in zip(objective, self.rows[r])]
        self.rows[-1] = objective

    def run(self, allowed: int) -> Optional[int]:
        """
        Minimize the installed objective over columns < ``allowed``.

        Returns:
            None at optimality, otherwise the entering column proving unboundedness.
        """
        constraints = len(self.rows) - 1
        while True:
            objective = self.rows[-1]
            entering = next((j for j in range(allowed) if objective[j] < 0), None)
            if entering is None:
                return None
            leaving = None
            best = None
            for i in range(constraints):
                a = self.rows[i][entering]
                if a > 0:
                    ratio = self.rows[i][-1] / a
                    if (best is None or ratio < best
                            or (ratio == best and self.basis[i] < self.basis[leaving])):
                        best = ratio
                        leaving = i
            if leaving is None:
                return entering
            self.pivot(leaving, entering)

    def value(self, var: int) -> Fraction:
        for r, basic in enumerate(self.basis):
            if basic == var:
                return self.rows[r][-1]
        return Fraction(0)


def lp_solve(
    objective: Sequence[Fraction],
    A: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    sense: str = "max",
) -> LPResult:
    """
    Solve a small LP exactly.

    Args:
        objective: Cost vector c of length d.
        A: Constraint rows, each of length d.
        b: Right-hand sides.
        sense: ``"max"`` or ``"min"``.

    Returns:
        LPResult with status, exact optimum and witness.

    Raises:
        ValueError: On inconsistent dimensions or an unknown sense.
    """
    if sense not in ("max", "min"):
        raise ValueError(f"unknown sense: {sense}")
    d = len(objective)
    m = len(A)
    if len(b) != m or any(len(row) != d for row in A):
        raise ValueError("inconsistent LP dimensions")

    work_tracker.track("lp_solves")
    # internally we minimize
    costs = [-Fraction(c) for c in objective] if sense == "max" else [Fraction(c) for c in objective]

    # columns: x⁺ (d) | x⁻ (d) | slacks (m) | artificials
    negative_rows = [i for i in range(m) if b[i] < 0]
    n_struct = 2 * d + m
    n_total = n_struct + len(negative_rows)
    rows: List[List[Fraction]] = []
    basis: List[int] = []
    artificial_of = {}
    for i in range(m):
        row = [Fraction(0)] * (n_total + 1)
        sign = -1 if b[i] < 0 else 1
        for j in range(d):
            a = Fraction(A[i][j])
            row[j] = sign * a
            row[d + j] = -sign * a
        row[2 * d + i] = Fraction(sign)
        row[-1] = sign * Fraction(b[i])
        if sign < 0:
            art = n_struct + len(artificial_of)
            artificial_of[i] = art
            row[art] = Fraction(1)
            basis.append(art)
        else:
            basis.append(2 * d + i)
        rows.append(row)
    rows.append([Fraction(0)] * (n_total + 1))
    tableau = _Tableau(rows, basis)

    if artificial_of:
        phase_one = [Fraction(0)] * n_struct + [Fraction(1)] * len(artificial_of)
        tableau.set_objective(phase_one)
        tableau.run(n_total)
        if tableau.rows[-1][-1] != 0:
            work_tracker.track("lp_pivots", tableau.pivots)
            logger.debug(f"LP infeasible after {tableau.pivots} pivots")
            return LPResult(LPStatus.INFEASIBLE)
        # drive artificials out of the basis
        for r in range(m):
            if tableau.basis[r] >= n_struct:
                col = next((j for j in range(n_struct) if tableau.rows[r][j] != 0), None)
                if col is not None:
                    tableau.pivot(r, col)
        # rows still carrying an artificial are redundant; their artificial stays at zero
        for r in range(m):
            if tableau.basis[r] >= n_struct:
                tableau.rows[r] = [a if j < n_struct or j == len(tableau.rows[r]) - 1 else Fraction(0)
                                   for j, a in enumerate(tableau.rows[r])]

    tableau.set_objective(costs + [-c for c in costs] + [Fraction(0)] * (n_total - 2 * d))
    entering = tableau.run(n_struct)
    work_tracker.track("lp_pivots", tableau.pivots)

    if entering is not None:
        direction = [Fraction(0)] * n_total
        direction[entering] = Fraction(1)
        for r, var in enumerate(tableau.basis):
            direction[var] = -tableau.rows[r][entering]
        ray = tuple(direction[j] - direction[d + j] for j in range(d))
        logger.debug(f"LP unbounded along {ray}")
        return LPResult(LPStatus.UNBOUNDED, witness=ray)

    point = tuple(tableau.value(j) - tableau.value(d + j) for j in range(d))
    optimum = sum((Fraction(c) * x for c, x in zip(objective, point)), Fraction(0))
    return LPResult(LPStatus.OPTIMAL, optimum=optimum, witness=point)


def is_feasible(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> bool:
    """Feasibility of A x <= b (zero objective)."""
    d = len(A[0]) if A else 0
    return lp_solve([Fraction(0)] * d, A, b).status != LPStatus.INFEASIBLE
