"""An auction with no equilibrium at one supply bundle.

Each bidder either takes nothing or one fixed bundle, and values both at 0.
The supply (1, 1) sits inside the hull of the possible totals but is not
itself a total, so no price can clear it.  The bid directions (1, 0) and
(1, 2) span a lattice of index 2, which is the underlying reason.
"""

from productmix import (Auction, UtilityFunction, concave_majorant, demand_type_union,
                        equilibrium_over_hull, is_unimodular, sup_convolution)

auction = Auction((UtilityFunction({(0, 0): 0, (1, 0): 0}),
                   UtilityFunction({(0, 0): 0, (1, 2): 0})))

report = equilibrium_over_hull(auction)
for a, res in report.results.items():
    if res:
        print(a, "clears at price", tuple(str(x) for x in res.price))
    else:
        print(a, "fails: U =", res.aggregate_value, "but the concave majorant is", res.majorant_value)

dtype = demand_type_union(auction)
check = is_unimodular(dtype)
print("\ndemand type", list(dtype), "unimodular:", check.unimodular, "witness:", check.witness)
print("majorant of the aggregate at (1, 1):", concave_majorant(sup_convolution(auction.agents), (1, 1)))
