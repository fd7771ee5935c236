"""Exact rational arithmetic, linear algebra and linear programming."""
from polyrep.exact.linalg import affine_rank, kernel_basis, rank, solve_square_system
from polyrep.exact.rational import Rat, RatVec, to_rat, vec
from polyrep.exact.simplex import LPResult, LPStatus, is_feasible, lp_solve

__all__ = [
    'Rat',
    'RatVec',
    'to_rat',
    'vec',
    'solve_square_system',
    'kernel_basis',
    'rank',
    'affine_rank',
    'LPResult',
    'LPStatus',
    'lp_solve',
    'is_feasible',
]
