"""Exact linear and integer programming, plus the auction programs."""

from .ip import UnboundedRelaxation, solve_ip
from .lp import (EQ, GE, INFEASIBLE, LE, OPTIMAL, UNBOUNDED, LinearProgram,
                 Solution, solve_lp)
from .programs import (CayleySystem, CellData, PrimalDual, build_cayley,
                       build_primal_dual)

__all__ = [
    "EQ", "GE", "LE", "OPTIMAL", "INFEASIBLE", "UNBOUNDED",
    "LinearProgram", "Solution", "solve_lp", "solve_ip", "UnboundedRelaxation",
    "CayleySystem", "CellData", "PrimalDual", "build_cayley", "build_primal_dual",
]
