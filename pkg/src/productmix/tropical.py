"""Bids as tropical polynomials: demand sets and regular subdivisions.

A utility function ``u`` on a finite support ``A`` defines the max-plus
polynomial ``f_u(x) = max(u(a) + a.x)``; at ``x = -p`` it is the best profit
at prices ``p``.  Lifting each support point to height ``u(a)`` and
projecting the upper faces of the hull back down gives the regular
subdivision, whose cells are exactly the demand sets that occur at some
price.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from . import _hull
from .lattice import Bundle, DemandType, LatticeError, bundle, primitive
from .optimize.lp import EQ, GE, LinearProgram, solve_lp

NEG_INF = float("-inf")

Price = Tuple[Fraction, ...]


def as_price(coords: Iterable) -> Price:
    return tuple(c if isinstance(c, Fraction) else Fraction(c) for c in coords)


def _dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


class UtilityFunction:
    """Finite bid map bundle -> exact value; absent bundles are worth -inf.

    >>> u = UtilityFunction({(0,): 0, (1,): 10, (2,): 11})
    >>> u((1,)), u((5,))
    (Fraction(10, 1), -inf)
    """

    __slots__ = ("dimension", "_values", "_hash")

    def __init__(self, values: Mapping[Sequence[int], object], dimension: Optional[int] = None):
        vals: Dict[Bundle, Fraction] = {}
        for a, v in values.items():
            a = bundle(a)
            vals[a] = v if isinstance(v, Fraction) else Fraction(v)
        if not vals:
            raise LatticeError("a utility function needs a nonempty support")
        dims = {len(a) for a in vals}
        if len(dims) != 1 or (dimension is not None and dims != {dimension}):
            raise LatticeError("support bundles must share the ambient dimension")
        self.dimension = dims.pop()
        self._values = dict(sorted(vals.items()))
        self._hash = None

    @property
    def support(self) -> List[Bundle]:
        return list(self._values)

    def items(self):
        return self._values.items()

    def __call__(self, a: Sequence[int]):
        return self._values.get(tuple(a), NEG_INF)

    def __len__(self):
        return len(self._values)

    def __eq__(self, other):
        return isinstance(other, UtilityFunction) and self._values == other._values

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._values.items()))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{a}: {v}" for a, v in self._values.items())
        return f"UtilityFunction({{{body}}})"


@dataclass(frozen=True)
class Cell:
    members: frozenset
    price_witness: Optional[Price] = field(default=None, compare=False)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Subdivision:
    utility: UtilityFunction
    cells: Tuple[Cell, ...]
    marked: frozenset
    maximal_cells: Tuple[Cell, ...]
    dim: int

    def cell_of(self, members) -> Cell:
        members = frozenset(members)
        for c in self.cells:
            if c.members == members:
                return c
        raise KeyError("cell not in subdivision")


def tropical_eval(u: UtilityFunction, x: Sequence) -> Fraction:
    """Value of the max-plus polynomial of ``u`` at ``x``."""
    if len(x) != u.dimension:
        raise LatticeError("point dimension does not match the utility")
    return max(v + _dot(a, x) for a, v in u.items())


def demand_set(u: UtilityFunction, p: Sequence) -> frozenset:
    """All profit-maximising bundles of ``u`` at prices ``p``."""
    if len(p) != u.dimension:
        raise LatticeError("price dimension does not match the utility")
    profits = {a: v - _dot(a, p) for a, v in u.items()}
    best = max(profits.values())
    return frozenset(a for a, v in profits.items() if v == best)


def _subdivision_masks(u: UtilityFunction):
    """(affine dim, maximal cell masks, all cell masks) of Δ_u."""
    support = u.support
    n_pts = len(support)
    full = (1 << n_pts) - 1
    frame = _hull.affine_frame(support)
    d = frame.dim
    if d == 0:
        return d, [full], [full]
    scale = lcm(*(v.denominator for _, v in u.items()))
    lifted = [frame.project(a) + (int(v * scale),) for a, v in u.items()]
    base = lifted[0]
    if _hull.rank([[x - y for x, y in zip(q, base)] for q in lifted[1:]]) == d:
        # affine bids: one maximal cell, faces are those of conv(support)
        facets = _hull.hull_facets([frame.project(a) for a in support])
        maximal = [full]
    else:
        facets = _hull.hull_facets(lifted)
        maximal = [f.mask for f in facets if f.normal[-1] > 0]
    faces = _hull.face_closure(maximal, [f.mask for f in facets])
    return d, maximal, faces


def regular_subdivision(u: UtilityFunction, witnesses: bool = True) -> Subdivision:
    """Subdivision of the support induced by lifting to heights ``u``.

    Cells are every face of the upper hull, smallest first.  With
    ``witnesses`` each cell carries a price at which it is exactly the
    demand set (one small LP per cell).
    """
    support = u.support
    d, maximal, faces = _subdivision_masks(u)
    to_set = lambda m: frozenset(support[i] for i in _hull.members(m))  # noqa: E731
    cells = [Cell(to_set(m)) for m in faces]
    marked = frozenset().union(*(c.members for c in cells))
    max_sets = {to_set(m) for m in maximal}
    sub = Subdivision(u, tuple(cells), marked,
                      tuple(c for c in cells if c.members in max_sets), d)
    if not witnesses:
        return sub
    with_prices = tuple(Cell(c.members, cell_price(sub, c)) for c in cells)
    return Subdivision(u, with_prices, marked,
                       tuple(c for c in with_prices if c.members in max_sets), d)


def is_concave(u: UtilityFunction) -> bool:
    """Support is hull-complete and every support point is marked."""
    from .lattice import LatticePolytope, lattice_points

    support = set(u.support)
    if set(lattice_points(LatticePolytope(support))) != support:
        return False
    return regular_subdivision(u, witnesses=False).marked == support


def concave_majorant(u: UtilityFunction, a: Sequence):
    """Smallest concave function above ``u``, evaluated at ``a`` (exact LP).

    Returns ``-inf`` when ``a`` lies outside the convex hull of the support.
    """
    support = u.support
    rows = [[s[i] for s in support] for i in range(u.dimension)]
    rows.append([1] * len(support))
    lp = LinearProgram.build([u(s) for s in support], rows,
                             [EQ] * len(rows), list(a) + [1])
    sol = solve_lp(lp)
    return sol.optimum if sol.optimal else NEG_INF


def _edges(support, cells: Iterable[Cell]) -> List[Tuple[Bundle, Bundle]]:
    out = []
    for c in cells:
        pts = sorted(c.members)
        if len(pts) < 2:
            continue
        base = pts[0]
        if _hull.rank([[x - y for x, y in zip(q, base)] for q in pts[1:]]) == 1:
            out.append((pts[0], pts[-1]))
    return out


def demand_type_of(u: UtilityFunction) -> DemandType:
    """Primitive directions of the edges of the regular subdivision."""
    sub = regular_subdivision(u, witnesses=False)
    dirs = [primitive(tuple(y - x for x, y in zip(a, b)))
            for a, b in _edges(u.support, sub.cells)]
    return DemandType(u.dimension, tuple(dirs))


def cell_price(sub: Subdivision, cell: Cell) -> Price:
    """A price in the relative interior of the dual cell of ``cell``.

    Maximises the smallest slack of the strict inequalities (capped at 1,
    so open dual cells stay bounded); the returned price demands exactly
    ``cell.members``.
    """
    members = frozenset(cell.members)
    if all(c.members != members for c in sub.cells):
        raise LatticeError("cell not in subdivision")
    u = sub.utility
    n = u.dimension
    # variables: p (n, free), t (free), s <= 1
    rows, senses, rhs = [], [], []
    for a, v in u.items():
        if a in members:
            rows.append(list(a) + [1, 0])
            senses.append(EQ)
        else:
            rows.append(list(a) + [1, -1])
            senses.append(GE)
        rhs.append(v)
    lp = LinearProgram.build([0] * (n + 1) + [1], rows, senses, rhs,
                             lower=[None] * (n + 2), upper=[None] * (n + 1) + [1])
    sol = solve_lp(lp)
    if not sol.optimal or sol.optimum <= 0:
        raise ArithmeticError("no relative-interior price for this cell")
    return sol.primal[:n]


def sup_convolution(agents: Sequence[UtilityFunction]) -> UtilityFunction:
    """Aggregate utility on the Minkowski sum of the supports."""
    acc = {tuple([0] * agents[0].dimension): Fraction(0)}
    for u in agents:
        nxt: Dict[Bundle, Fraction] = {}
        for a, va in acc.items():
            for b, vb in u.items():
                s = tuple(x + y for x, y in zip(a, b))
                v = va + vb
                if s not in nxt or v > nxt[s]:
                    nxt[s] = v
        acc = nxt
    return UtilityFunction(acc)


def union_vertices(agents) -> List[Tuple[Price, Cell]]:
    """One price per maximal cell of the aggregate subdivision.

    These prices are representatives of the vertices of the union of the
    agents' indifference loci; each comes with its aggregate demand cell.
    """
    agents = list(getattr(agents, "agents", agents))
    if len({u.dimension for u in agents}) != 1:
        raise LatticeError("agents must share the ambient dimension")
    sub = regular_subdivision(sup_convolution(agents), witnesses=False)
    out = []
    for c in sub.maximal_cells:
        p = cell_price(sub, c)
        out.append((p, Cell(c.members, p)))
    return out
