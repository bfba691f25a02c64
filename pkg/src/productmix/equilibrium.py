"""Competitive equilibrium for product-mix auctions.

Existence at a supply bundle ``a*`` is decided on the Cayley set-packing
program: the relaxation computes the concave majorant of the aggregate
utility, the integer program the aggregate utility itself, and equilibrium
exists exactly when the two agree.  Prices are the relaxation's duals on the
supply rows (marginal value of one more unit of each good), allocations
come from the integer solution.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

from . import _hull
from .lattice import (Bundle, DemandType, LatticeError, LatticePolytope,
                      bundle, is_unimodular, lattice_points, minkowski_sum)
from .optimize import (CellData, LinearProgram, PrimalDual, build_cayley,
                       build_primal_dual, solve_ip, solve_lp)
from .optimize.lp import LE, UNBOUNDED
from .optimize.programs import price_inequalities
from .tropical import (NEG_INF, Price, UtilityFunction, demand_set,
                       demand_type_of, regular_subdivision, sup_convolution)

DEFAULT_TUPLE_CAP = 10**7
DEFAULT_POINT_CAP = 10**5


class EquilibriumError(ValueError):
    pass


class CapExceeded(EquilibriumError):
    pass


@dataclass(frozen=True)
class Auction:
    agents: Tuple[UtilityFunction, ...]

    def __post_init__(self):
        agents = tuple(self.agents)
        if not agents:
            raise LatticeError("an auction needs at least one agent")
        if len({u.dimension for u in agents}) != 1:
            raise LatticeError("agents must share the ambient dimension")
        object.__setattr__(self, "agents", agents)

    @property
    def dimension(self) -> int:
        return self.agents[0].dimension

    def __len__(self):
        return len(self.agents)

    def __iter__(self):
        return iter(self.agents)

    def bundles(self) -> List[Bundle]:
        """The Minkowski sum of all supports."""
        return minkowski_sum([u.support for u in self.agents])


def _auction(auction) -> Auction:
    return auction if isinstance(auction, Auction) else Auction(tuple(auction))


def _check_dim(auction: Auction, a, what="bundle"):
    if len(a) != auction.dimension:
        raise LatticeError(f"{what} dimension {len(a)} does not match the auction ({auction.dimension})")


@dataclass(frozen=True)
class EquilibriumCertificate:
    price: Price
    allocation: Tuple[Bundle, ...]
    total: Bundle

    def __bool__(self):
        return True


@dataclass(frozen=True)
class EquilibriumFailure:
    """``aggregate_value`` is U(bundle), ``majorant_value`` its concave majorant."""

    bundle: Bundle
    aggregate_value: Union[Fraction, float]
    majorant_value: Union[Fraction, float]

    def __bool__(self):
        return False


def aggregate_utility(auction, a: Sequence[int]):
    """Best total utility over all splits of ``a`` (integer program)."""
    auction = _auction(auction)
    a = bundle(a)
    _check_dim(auction, a)
    _, lp = build_cayley(auction, a)
    sol = solve_ip(lp, lexicographic=False)
    return sol.optimum if sol.optimal else NEG_INF


def aggregate_utility_oracle(auction, a: Sequence[int], cap: int = DEFAULT_TUPLE_CAP):
    """Same value as :func:`aggregate_utility`, by enumerating all J-tuples."""
    auction = _auction(auction)
    a = bundle(a)
    _check_dim(auction, a)
    count = prod(len(u) for u in auction.agents)
    if count > cap:
        raise CapExceeded(f"{count} bundle tuples exceed the enumeration cap {cap}")
    best = NEG_INF
    for combo in product(*(u.items() for u in auction.agents)):
        total = tuple(sum(xs) for xs in zip(*(b for b, _ in combo)))
        if total == a:
            v = sum(v for _, v in combo)
            if v > best:
                best = v
    return best


def aggregate_demand(auction, p: Sequence) -> frozenset:
    auction = _auction(auction)
    _check_dim(auction, p, "price")
    return frozenset(minkowski_sum([demand_set(u, p) for u in auction.agents]))


def equilibrium_at(auction, a_star: Sequence[int]) -> Union[EquilibriumCertificate, EquilibriumFailure]:
    """Certificate (price, allocation) if equilibrium exists at ``a_star``."""
    auction = _auction(auction)
    a_star = bundle(a_star)
    _check_dim(auction, a_star)
    system, lp = build_cayley(auction, a_star)
    relax = solve_lp(lp)
    if not relax.optimal:
        return EquilibriumFailure(a_star, NEG_INF, NEG_INF)
    ip = solve_ip(lp, root=relax)
    if not ip.optimal:
        return EquilibriumFailure(a_star, NEG_INF, relax.optimum)
    if ip.optimum != relax.optimum:
        return EquilibriumFailure(a_star, ip.optimum, relax.optimum)
    # duals are d(optimum)/d(rhs): on the supply rows that is the price
    price = tuple(relax.dual[len(auction):])
    return EquilibriumCertificate(price, tuple(system.allocation(ip.primal)), a_star)


@dataclass(frozen=True)
class HullReport:
    results: Dict[Bundle, Union[EquilibriumCertificate, EquilibriumFailure]]

    @property
    def overall(self) -> bool:
        return all(bool(r) for r in self.results.values())

    @property
    def failures(self) -> List[Bundle]:
        return [a for a, r in self.results.items() if not r]


def hull_points(auction, cap: int = DEFAULT_POINT_CAP) -> List[Bundle]:
    auction = _auction(auction)
    pts = lattice_points(LatticePolytope(auction.bundles()))
    if len(pts) > cap:
        raise CapExceeded(f"{len(pts)} lattice points exceed the cap {cap}")
    return pts


def equilibrium_over_hull(auction, cap: int = DEFAULT_POINT_CAP) -> HullReport:
    """Run :func:`equilibrium_at` on every lattice point of conv(A)."""
    auction = _auction(auction)
    return HullReport({a: equilibrium_at(auction, a) for a in hull_points(auction, cap)})


def _agent_split(auction: Auction, a: Bundle) -> Tuple[Bundle, ...]:
    system, lp = build_cayley(auction, a)
    sol = solve_ip(lp)
    if not sol.optimal:
        raise EquilibriumError(f"{a} is not a sum of support bundles")
    return tuple(system.allocation(sol.primal))


def containing_cell(auction, a_star: Sequence[int]) -> CellData:
    """Smallest cell of the aggregate subdivision whose hull contains ``a_star``.

    Vertex splits come from an optimal integral Cayley solution at each
    vertex; at a vertex of the subdivision that split is unique.
    """
    auction = _auction(auction)
    a_star = bundle(a_star)
    _check_dim(auction, a_star)
    sub = regular_subdivision(sup_convolution(auction.agents), witnesses=False)
    best = None
    for c in sub.cells:
        if best is not None and len(c.members) >= len(best):
            continue
        if a_star in c.members or LatticePolytope(c.members).contains(a_star):
            best = c.members
    if best is None:
        raise EquilibriumError("no containing cell")
    vertices = LatticePolytope(best).vertices
    splits = {v: _agent_split(auction, v) for v in vertices}
    return CellData(frozenset(best), vertices, splits)


def primal_dual(auction, a_star: Sequence[int], a_tilde=None) -> PrimalDual:
    auction = _auction(auction)
    return build_primal_dual(auction, a_star, containing_cell(auction, a_star), a_tilde)


@dataclass(frozen=True)
class PriceRegion:
    """Prices ``p`` with ``rows[k] . p <= rhs[k]`` for every k."""

    rows: Tuple[Bundle, ...]
    rhs: Tuple[Fraction, ...]
    bounded: bool
    dimension: int

    def contains(self, p: Sequence) -> bool:
        return all(sum((a * x for a, x in zip(r, p)), Fraction(0)) <= b
                   for r, b in zip(self.rows, self.rhs))

    def program(self, objective, sense="max") -> LinearProgram:
        return LinearProgram.build(objective, self.rows, [LE] * len(self.rows), self.rhs,
                                   sense=sense, lower=[None] * len(objective))

    def bounds(self, i: int) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        """Exact range of coordinate ``i`` over the region (None = unbounded)."""
        e = [0] * self.dimension
        e[i] = 1
        lo = solve_lp(self.program(e, "min"))
        hi = solve_lp(self.program(e, "max"))
        return (lo.optimum if lo.optimal else None, hi.optimum if hi.optimal else None)


def _is_bounded(rows, rhs, n) -> bool:
    probe = PriceRegion(tuple(rows), tuple(rhs), False, n)
    for i in range(n):
        lo, hi = probe.bounds(i)
        if lo is None or hi is None:
            return False
    return True


def price_region(auction, a_star: Sequence[int]) -> PriceRegion:
    """All equilibrium prices at ``a_star`` as an H-description ``V^T p <= c``."""
    auction = _auction(auction)
    a_star = bundle(a_star)
    if not equilibrium_at(auction, a_star):
        raise EquilibriumError("empty price region")
    cell = containing_cell(auction, a_star)
    cols, costs = price_inequalities(auction.agents, cell.decompositions.values())
    n = auction.dimension
    return PriceRegion(tuple(cols), tuple(costs), _is_bounded(cols, costs, n), n)


class ProfitResult(NamedTuple):
    status: str
    price: Optional[Price]
    revenue: Optional[Fraction]


def max_profit_price(auction, a_star: Sequence[int], allocation=None,
                     nonnegative: bool = False) -> ProfitResult:
    """Equilibrium price maximising the seller's revenue ``p . a_star``.

    The feasible prices are those at which every agent still demands its
    bundle under ``allocation`` (an optimal 0/1 split of ``a_star``; taken
    from :func:`equilibrium_at` when omitted).  ``nonnegative`` adds
    ``p >= 0``.
    """
    auction = _auction(auction)
    a_star = bundle(a_star)
    cert = equilibrium_at(auction, a_star)
    if not cert:
        raise EquilibriumError("no competitive equilibrium at this supply")
    allocation = cert.allocation if allocation is None else tuple(bundle(a) for a in allocation)
    cols, costs = price_inequalities(auction.agents, [allocation])
    n = auction.dimension
    lp = LinearProgram.build(a_star, cols, [LE] * len(cols), costs,
                             lower=[0 if nonnegative else None] * n)
    sol = solve_lp(lp)
    if sol.status == UNBOUNDED:
        return ProfitResult(UNBOUNDED, None, None)
    if not sol.optimal:
        raise EquilibriumError("allocation is not supported by any price")
    return ProfitResult(sol.status, sol.primal, sol.optimum)


def demand_type_union(auction) -> DemandType:
    auction = _auction(auction)
    out = DemandType(auction.dimension, ())
    for u in auction.agents:
        out = out | demand_type_of(u)
    return out


class Counterexample(NamedTuple):
    auction: Auction
    witness: Bundle
    subset: Tuple[Bundle, ...]


def _parallelepiped_coords(vectors, x) -> Optional[List[Fraction]]:
    """Coefficients λ with sum(λ_k v_k) = x, or None if x is off the span."""
    n, r = len(x), len(vectors)
    aug = [[vectors[k][i] for k in range(r)] + [x[i]] for i in range(n)]
    red, pivots = _hull.rref(aug)
    if r in pivots:
        return None
    lam = [Fraction(0)] * r
    for row, c in zip(red, pivots):
        lam[c] = row[-1]
    return lam


def counterexample_for(vectors) -> Counterexample:
    """Auction of the given demand type with no equilibrium at some point.

    Takes a smallest failing independent subset ``v_1..v_r``, one agent per
    vector bidding 0 on ``{0, v_k}``, and returns the lexicographically
    first nonzero lattice point of the half-open parallelepiped
    ``{sum(λ_k v_k) : 0 <= λ_k < 1}``; it lies in conv(A) but not in A.
    """
    check = is_unimodular(vectors)
    if check.unimodular:
        raise EquilibriumError("no counterexample exists: the set is unimodular")
    subset = check.witness
    n = len(subset[0])
    zero = tuple([0] * n)
    auction = Auction(tuple(UtilityFunction({zero: 0, v: 0}) for v in subset))
    lo = [sum(min(0, v[i]) for v in subset) for i in range(n)]
    hi = [sum(max(0, v[i]) for v in subset) for i in range(n)]
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        if x == zero:
            continue
        lam = _parallelepiped_coords(subset, x)
        if lam is not None and all(0 <= l < 1 for l in lam):
            return Counterexample(auction, x, subset)
    raise AssertionError("failing subset has no interior lattice point")  # pragma: no cover
