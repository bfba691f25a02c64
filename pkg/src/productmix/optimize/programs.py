"""Builders for the auction programs.

The Cayley program stacks every agent's support into one matrix whose
column for ``(j, a)`` is ``(e_j, a)``; ``max u.y`` subject to ``y >= 0`` and
``C y = (1, a*)`` is the set-packing relaxation of the aggregate utility.

The primal/dual pair works from the cell of the aggregate subdivision
containing ``a*``: every vertex ``â`` of that cell splits as ``sum(â^j)``,
and each pair (``â^j``, ``b`` in ``A^j``) gives a price inequality
``p.(â^j - b) <= u^j(â^j) - u^j(b)``.  Collected as ``V^T p <= c``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from ..lattice import Bundle, LatticeError, bundle
from .lp import EQ, LE, LinearProgram


def _agents(auction):
    agents = list(getattr(auction, "agents", auction))
    if not agents:
        raise LatticeError("an auction needs at least one agent")
    if len({u.dimension for u in agents}) != 1:
        raise LatticeError("agents must share the ambient dimension")
    return agents


@dataclass(frozen=True)
class CayleySystem:
    matrix: Tuple[Tuple[int, ...], ...]
    utilities: Tuple[Fraction, ...]
    columns: Tuple[Tuple[int, Bundle], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.matrix), len(self.columns)

    def allocation(self, y: Sequence) -> List[Bundle]:
        """Per-agent bundles of a 0/1 assignment vector."""
        n_agents = self.shape[0] - len(self.columns[0][1])
        out: List[Optional[Bundle]] = [None] * n_agents
        for (j, a), v in zip(self.columns, y):
            if v == 1:
                out[j] = a
        return out


def build_cayley(auction, a_star: Sequence[int]) -> Tuple[CayleySystem, LinearProgram]:
    """Cayley matrix and the 0/1 set-packing program at supply ``a_star``.

    The returned program carries integrality flags and ``0 <= y <= 1``
    bounds; ``solve_lp`` treats it as the relaxation, ``solve_ip`` as the
    integer program.
    """
    agents = _agents(auction)
    n = agents[0].dimension
    a_star = bundle(a_star)
    if len(a_star) != n:
        raise LatticeError("supply dimension does not match the agents")
    J = len(agents)
    columns = [(j, a) for j, u in enumerate(agents) for a in u.support]
    utilities = tuple(agents[j](a) for j, a in columns)
    matrix = [[1 if jj == j else 0 for j, _ in columns] for jj in range(J)]
    matrix += [[a[i] for _, a in columns] for i in range(n)]
    system = CayleySystem(tuple(tuple(r) for r in matrix), utilities, tuple(columns))
    N = len(columns)
    lp = LinearProgram.build(utilities, matrix, [EQ] * (J + n), [1] * J + list(a_star),
                             lower=[0] * N, upper=[1] * N, integer=[True] * N)
    return system, lp


class CellData(NamedTuple):
    """The smallest aggregate cell around a supply bundle.

    ``decompositions`` maps each vertex of the cell to its per-agent split.
    """

    cell: frozenset
    vertices: Tuple[Bundle, ...]
    decompositions: Dict[Bundle, Tuple[Bundle, ...]]


class PrimalDual(NamedTuple):
    primal: LinearProgram
    integer_primal: LinearProgram
    dual: LinearProgram
    columns: Tuple[Bundle, ...]
    costs: Tuple[Fraction, ...]


def price_inequalities(agents, splits) -> Tuple[List[Bundle], List[Fraction]]:
    """Columns of ``V`` and entries of ``c`` from per-agent vertex splits.

    ``splits`` is an iterable of per-agent bundle tuples; zero columns and
    exact duplicates are dropped, order is deterministic.
    """
    seen = {}
    for split in splits:
        for u, ahat in zip(agents, split):
            for b in u.support:
                col = tuple(x - y for x, y in zip(ahat, b))
                if any(col):
                    seen[(col, u(ahat) - u(b))] = None
    pairs = sorted(seen)
    return [c for c, _ in pairs], [v for _, v in pairs]


def build_primal_dual(auction, a_star: Sequence[int], cell_data: CellData,
                      a_tilde: Optional[Sequence[int]] = None,
                      int_bound: Optional[int] = None) -> PrimalDual:
    """The pair ``min c.x, Vx = ã - a*, x >= 0`` / ``max p.(ã - a*), V^T p <= c``.

    ``a_tilde`` defaults to the first vertex of the cell.  The integer form
    is solved over the box ``0 <= x <= int_bound`` so branch-and-bound
    terminates; the default box is ``(1 + |ã - a*|_1) * max column L1``.
    """
    agents = _agents(auction)
    a_star = bundle(a_star)
    if not cell_data.vertices:
        raise LatticeError("no containing cell")
    a_tilde = cell_data.vertices[0] if a_tilde is None else bundle(a_tilde)
    if a_tilde not in cell_data.decompositions:
        raise LatticeError(f"{a_tilde} is not a vertex of the containing cell")
    cols, costs = price_inequalities(agents, cell_data.decompositions.values())
    n = len(a_star)
    target = [x - y for x, y in zip(a_tilde, a_star)]
    rows = [[c[i] for c in cols] for i in range(n)]
    N = len(cols)
    primal = LinearProgram.build(costs, rows, [EQ] * n, target, sense="min")
    if int_bound is None:
        widest = max((sum(abs(v) for v in c) for c in cols), default=1)
        int_bound = (1 + sum(abs(t) for t in target)) * widest
    integer_primal = LinearProgram.build(costs, rows, [EQ] * n, target, sense="min",
                                         upper=[int_bound] * N, integer=[True] * N)
    dual = LinearProgram.build(target, cols, [LE] * N, costs, sense="max",
                               lower=[None] * n)
    return PrimalDual(primal, integer_primal, dual, tuple(cols), tuple(costs))
