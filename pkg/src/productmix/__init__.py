"""Exact-arithmetic solver for product-mix auctions of indivisible goods."""

from .equilibrium import (Auction, CapExceeded, Counterexample, EquilibriumCertificate,
                          EquilibriumError, EquilibriumFailure, HullReport, PriceRegion,
                          ProfitResult, aggregate_demand, aggregate_utility,
                          aggregate_utility_oracle, containing_cell, counterexample_for,
                          demand_type_union, equilibrium_at, equilibrium_over_hull,
                          max_profit_price, price_region, primal_dual)
from .lattice import (DemandType, LatticeError, LatticePolytope, a_n_natural,
                      check_lattice_sum_identity, is_unimodular, lattice_points,
                      minkowski_sum, primitive, smith_invariants)
from .matching import CoreSolution, TUGame, bipartite_game, find_core, is_core, tu_to_auction
from .tropical import (NEG_INF, Cell, Subdivision, UtilityFunction, concave_majorant,
                       demand_set, demand_type_of, is_concave, regular_subdivision,
                       sup_convolution, tropical_eval, union_vertices)

__version__ = "0.1.0"
