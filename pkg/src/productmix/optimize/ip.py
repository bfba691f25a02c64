"""Small exact integer programs by depth-first branch-and-bound."""

from fractions import Fraction
from math import ceil, floor

from .lp import EQ, INFEASIBLE, OPTIMAL, UNBOUNDED, LinearProgram, Solution, solve_lp


class UnboundedRelaxation(ArithmeticError):
    pass


def solve_ip(lp: LinearProgram, root: Solution = None, lexicographic: bool = True) -> Solution:
    """Exact optimum of ``lp`` honouring its integrality flags.

    Branches on the lowest-index fractional integer variable, exploring the
    ``<= floor`` side first, and prunes nodes whose relaxation bound is
    strictly worse than the incumbent.  When every variable is integer, ties
    are then broken exactly: the returned primal is the lexicographically
    smallest among all optimal points.  ``root`` may carry an already
    computed relaxation of ``lp`` itself.  Pass ``lexicographic=False``
    when only the optimal value matters.

    Returns a Solution without dual information.  Raises
    :class:`UnboundedRelaxation` if any relaxation is unbounded.
    """
    best = _branch_and_bound(lp, root)
    if lexicographic and best.optimal and all(lp.integer):
        best = _lex_smallest(lp, best)
    return best


def _lex_smallest(lp: LinearProgram, best: Solution) -> Solution:
    """Among optimal points, minimise x_0, then x_1, and so on.

    In a finite box a single program suffices: the mixed-radix weight
    ``sum(w_k (x_k - lo_k))`` with ``w_k`` the product of the later ranges
    orders integer points lexicographically.  Otherwise one program per
    coordinate is solved; variables without a lower bound keep their value.
    """
    n = lp.num_vars
    rows = lp.rows + (lp.objective,)
    senses = lp.senses + (EQ,)
    rhs = lp.rhs + (best.optimum,)
    nodes = best.nodes
    if all(lo is not None and hi is not None for lo, hi in zip(lp.lower, lp.upper)):
        weights = [Fraction(1)] * n
        for k in range(n - 2, -1, -1):
            weights[k] = weights[k + 1] * (lp.upper[k + 1] - lp.lower[k + 1] + 1)
        probe = LinearProgram("min", tuple(weights), rows, senses, rhs,
                              lp.lower, lp.upper, lp.integer)
        sub = _branch_and_bound(probe, None)
        return Solution(OPTIMAL, best.optimum, sub.primal, nodes=nodes + sub.nodes)
    x = list(best.primal)
    lower, upper = list(lp.lower), list(lp.upper)
    for k in range(n):
        if lower[k] is not None and x[k] > lower[k]:
            probe = LinearProgram("min", tuple(Fraction(int(j == k)) for j in range(n)),
                                  rows, senses, rhs, tuple(lower), tuple(upper), lp.integer)
            sub = _branch_and_bound(probe, None)
            nodes += sub.nodes
            x = list(sub.primal)
        lower[k] = upper[k] = x[k]
    return Solution(OPTIMAL, best.optimum, tuple(x), nodes=nodes)


def _branch_and_bound(lp: LinearProgram, root: Solution) -> Solution:
    better = (lambda a, b: a > b) if lp.sense == "max" else (lambda a, b: a < b)
    best = None
    nodes = 0
    stack = [(lp.lower, lp.upper, root)]
    while stack:
        lower, upper, sol = stack.pop()
        if sol is None:
            sol = solve_lp(lp.with_bounds(lower, upper))
        nodes += 1
        if sol.status == UNBOUNDED:
            raise UnboundedRelaxation("unbounded relaxation")
        if sol.status == INFEASIBLE:
            continue
        if best is not None and better(best.optimum, sol.optimum):
            continue
        frac = next((j for j, (v, flag) in enumerate(zip(sol.primal, lp.integer))
                     if flag and v.denominator != 1), None)
        if frac is None:
            if (best is None or better(sol.optimum, best.optimum)
                    or (sol.optimum == best.optimum and sol.primal < best.primal)):
                best = sol
            continue
        v = sol.primal[frac]
        down = list(upper)
        down[frac] = Fraction(floor(v))
        up = list(lower)
        up[frac] = Fraction(ceil(v))
        # pushed last, popped first: the "<= floor" child
        stack.append((tuple(up), upper, None))
        stack.append((lower, tuple(down), None))
    if best is None:
        return Solution(INFEASIBLE, nodes=nodes)
    return Solution(OPTIMAL, best.optimum, best.primal, basis=best.basis, nodes=nodes)
