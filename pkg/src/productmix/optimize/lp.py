"""Exact rational linear programming.

Two-phase primal simplex on a dense tableau of ``Fraction`` entries with
Bland's rule, so it terminates on degenerate problems and never rounds.
Row duals are read off the final tableau and reported in the caller's
sense: for every variable the reduced cost ``c - A^T y`` is also returned,
and ``dual_objective`` is the genuine dual objective, including the bound
terms, so ``optimum == dual_objective`` is a checkable certificate.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

LE, EQ, GE = "<=", "==", ">="
OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinearProgram:
    """``sense`` c.x subject to rows (sense_i) rhs_i and lower <= x <= upper.

    ``None`` in ``lower``/``upper`` means unbounded in that direction.  Use
    :meth:`build` to get defaults (x >= 0, continuous).
    """

    sense: str
    objective: Tuple[Fraction, ...]
    rows: Tuple[Tuple[Fraction, ...], ...]
    senses: Tuple[str, ...]
    rhs: Tuple[Fraction, ...]
    lower: Tuple[Optional[Fraction], ...]
    upper: Tuple[Optional[Fraction], ...]
    integer: Tuple[bool, ...]

    def __post_init__(self):
        nvar = len(self.objective)
        if self.sense not in ("max", "min"):
            raise ValueError(f"unknown objective sense {self.sense!r}")
        if not (len(self.rows) == len(self.senses) == len(self.rhs)):
            raise ValueError("rows, senses and rhs must have equal length")
        if any(len(r) != nvar for r in self.rows):
            raise ValueError("constraint row length does not match objective")
        if not (len(self.lower) == len(self.upper) == len(self.integer) == nvar):
            raise ValueError("bounds and integrality flags must match objective")
        if any(s not in (LE, EQ, GE) for s in self.senses):
            raise ValueError("row senses must be '<=', '==' or '>='")

    @classmethod
    def build(cls, objective, rows=(), senses=(), rhs=(), sense="max",
              lower=None, upper=None, integer=None) -> "LinearProgram":
        nvar = len(objective)
        lower = [0] * nvar if lower is None else lower
        upper = [None] * nvar if upper is None else upper
        integer = [False] * nvar if integer is None else integer
        opt = lambda v: None if v is None else _q(v)  # noqa: E731
        return cls(
            sense,
            tuple(_q(c) for c in objective),
            tuple(tuple(_q(a) for a in r) for r in rows),
            tuple(senses),
            tuple(_q(b) for b in rhs),
            tuple(opt(v) for v in lower),
            tuple(opt(v) for v in upper),
            tuple(bool(v) for v in integer),
        )

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    def with_bounds(self, lower, upper) -> "LinearProgram":
        return LinearProgram(self.sense, self.objective, self.rows, self.senses,
                             self.rhs, tuple(lower), tuple(upper), self.integer)

    def value(self, x: Sequence) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), Fraction(0))

    def is_feasible(self, x: Sequence) -> bool:
        """Exact check of every row and bound at ``x``."""
        for lo, hi, v in zip(self.lower, self.upper, x):
            if (lo is not None and v < lo) or (hi is not None and v > hi):
                return False
        for row, s, b in zip(self.rows, self.senses, self.rhs):
            lhs = sum((a * v for a, v in zip(row, x)), Fraction(0))
            if (s == LE and lhs > b) or (s == GE and lhs < b) or (s == EQ and lhs != b):
                return False
        return True


@dataclass(frozen=True)
class Solution:
    status: str
    optimum: Optional[Fraction] = None
    primal: Optional[Tuple[Fraction, ...]] = None
    dual: Optional[Tuple[Fraction, ...]] = None
    reduced: Optional[Tuple[Fraction, ...]] = None
    dual_objective: Optional[Fraction] = None
    basis: Tuple[int, ...] = ()
    nodes: int = field(default=0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Tableau:
    def __init__(self, rows, rhs, basis):
        self.t = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)

    def pivot(self, r, c, obj):
        t = self.t
        prow = t[r]
        piv = prow[c]
        if piv != 1:
            prow[:] = [v / piv for v in prow]
        nz = [k for k, v in enumerate(prow) if v != 0]
        for i, row in enumerate(t):
            f = row[c]
            if i != r and f != 0:
                for k in nz:
                    row[k] -= f * prow[k]
        f = obj[c]
        if f != 0:
            for k in nz:
                obj[k] -= f * prow[k]
        self.basis[r] = c

    def run(self, obj, allowed):
        """Maximise; ``obj`` holds reduced costs with -z in the last slot."""
        while True:
            enter = next((j for j in range(len(obj) - 1) if allowed[j] and obj[j] > 0), None)
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.t):
                a = row[enter]
                if a > 0:
                    key = (row[-1] / a, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return UNBOUNDED
            self.pivot(best[1], enter, obj)


def solve_lp(lp: LinearProgram) -> Solution:
    """Solve the continuous relaxation of ``lp`` exactly (integrality ignored)."""
    sign = 1 if lp.sense == "max" else -1
    n = lp.num_vars

    # internal columns: each original variable becomes shift + sum(coef * col)
    cols: List[List[Tuple[int, int]]] = []
    shift: List[Fraction] = []
    ncol = 0
    bound_rows = []
    for j in range(n):
        lo, hi = lp.lower[j], lp.upper[j]
        if lo is not None:
            cols.append([(ncol, 1)])
            shift.append(lo)
            if hi is not None:
                if hi < lo:
                    return Solution(INFEASIBLE)
                bound_rows.append((ncol, hi - lo))
            ncol += 1
        elif hi is not None:
            cols.append([(ncol, -1)])
            shift.append(hi)
            ncol += 1
        else:
            cols.append([(ncol, 1), (ncol + 1, -1)])
            shift.append(Fraction(0))
            ncol += 2

    rows, rhs, kinds = [], [], []
    for row, s, b in zip(lp.rows, lp.senses, lp.rhs):
        new = [Fraction(0)] * ncol
        b = b - sum((a * sh for a, sh in zip(row, shift)), Fraction(0))
        for j, a in enumerate(row):
            if a:
                for k, coef in cols[j]:
                    new[k] += coef * a
        rows.append(new)
        rhs.append(b)
        kinds.append(s)
    for k, cap in bound_rows:
        new = [Fraction(0)] * ncol
        new[k] = Fraction(1)
        rows.append(new)
        rhs.append(cap)
        kinds.append(LE)

    m = len(rows)
    flipped = [False] * m
    for i in range(m):
        if rhs[i] < 0:
            rows[i] = [-v for v in rows[i]]
            rhs[i] = -rhs[i]
            kinds[i] = {LE: GE, GE: LE, EQ: EQ}[kinds[i]]
            flipped[i] = True

    # slack / surplus columns, then one identity column per row
    nslack = sum(1 for k in kinds if k != EQ)
    width = ncol + nslack + m
    full_rows = []
    slack_at = ncol
    init_col = []
    artificial = [False] * width
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (nslack + m)
        if kinds[i] == LE:
            row[slack_at] = Fraction(1)
            init_col.append(slack_at)
            slack_at += 1
        else:
            if kinds[i] == GE:
                row[slack_at] = Fraction(-1)
                slack_at += 1
            art = ncol + nslack + i
            row[art] = Fraction(1)
            artificial[art] = True
            init_col.append(art)
        full_rows.append(row)
    # unused identity columns of <= rows stay zero and are never allowed in
    used = set(init_col)
    for i in range(m):
        c = ncol + nslack + i
        if c not in used:
            artificial[c] = True

    tab = _Tableau(full_rows, rhs, init_col)

    # phase 1: maximise -(sum of artificials)
    obj = [Fraction(0)] * (width + 1)
    for i in range(m):
        if artificial[init_col[i]]:
            for k, v in enumerate(tab.t[i]):
                obj[k] += v
            obj[init_col[i]] = Fraction(0)
    allowed = [True] * width
    tab.run(obj, allowed)
    if obj[-1] > 0:
        return Solution(INFEASIBLE)
    for i in range(m):
        if artificial[tab.basis[i]]:
            k = next((k for k in range(width) if not artificial[k] and tab.t[i][k] != 0), None)
            if k is not None:
                tab.pivot(i, k, obj)

    # phase 2
    cost = [Fraction(0)] * width
    for j in range(n):
        c = sign * lp.objective[j]
        for k, coef in cols[j]:
            cost[k] += coef * c
    obj = cost + [Fraction(0)]
    for i, b in enumerate(tab.basis):
        f = obj[b]
        if f != 0:
            obj[:] = [o - f * v for o, v in zip(obj, tab.t[i])]
    allowed = [not a for a in artificial]
    if tab.run(obj, allowed) == UNBOUNDED:
        return Solution(UNBOUNDED)

    values = [Fraction(0)] * width
    for i, b in enumerate(tab.basis):
        values[b] = tab.t[i][-1]
    x = []
    for j in range(n):
        x.append(shift[j] + sum((coef * values[k] for k, coef in cols[j]), Fraction(0)))

    # y_i = c_init - d_init for the identity column of row i (c_init = 0)
    y = []
    for i in range(len(lp.rows)):
        yi = -obj[init_col[i]]
        if flipped[i]:
            yi = -yi
        y.append(sign * yi)
    x = tuple(x)
    y = tuple(y)
    reduced = tuple(
        lp.objective[j] - sum((row[j] * yi for row, yi in zip(lp.rows, y)), Fraction(0))
        for j in range(n)
    )
    dual_obj = sum((b * yi for b, yi in zip(lp.rhs, y)), Fraction(0))
    for j, d in enumerate(reduced):
        if d == 0:
            continue
        # max: d > 0 only at an upper bound; min: d > 0 only at a lower bound
        at_upper = (d > 0) == (sign > 0)
        bound = lp.upper[j] if at_upper else lp.lower[j]
        if bound is None:
            raise ArithmeticError("dual certificate is not feasible")
        dual_obj += d * bound
    return Solution(OPTIMAL, lp.value(x), x, y, reduced, dual_obj, tuple(tab.basis))
