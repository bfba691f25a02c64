"""Two bidders, one good: equilibrium prices and the seller's best revenue.

The first bidder values one unit at 10 and two at 11; the second values
one unit at 2 and two at 3.  With two units on offer, every price in an
interval clears the market, each bidder taking one unit.
"""

from fractions import Fraction

from productmix import (Auction, UtilityFunction, demand_set, equilibrium_at,
                        max_profit_price, price_region, regular_subdivision)

first = UtilityFunction({(0,): 0, (1,): 10, (2,): 11})
second = UtilityFunction({(0,): 0, (1,): 2, (2,): 3})
auction = Auction((first, second))

for p in (5, 3, 2, "3/2", 1):
    q = (Fraction(p),)
    print(f"price {q[0]}: first demands {sorted(demand_set(first, q))}, "
          f"second demands {sorted(demand_set(second, q))}")

cert = equilibrium_at(auction, (2,))
print("\nequilibrium at supply 2: price", cert.price[0], "allocation", cert.allocation)

region = price_region(auction, (2,))
lo, hi = region.bounds(0)
print(f"equilibrium prices form the interval [{lo}, {hi}]")

best = max_profit_price(auction, (2,))
print("revenue-maximising price", best.price[0], "gives revenue", best.revenue)

# each cell of a bidder's subdivision is a demand set seen at some price
for cell in regular_subdivision(first).cells:
    print("cell", sorted(cell.members), "is demanded at price", cell.price_witness[0])
