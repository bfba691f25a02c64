"""Unimodular demand types always clear; other types can be made to fail.

Draws random concave bids whose subdivision edges come from the unimodular
set {e_i, e_i - e_j} and checks every supply in the hull, then builds a
failing auction for a non-unimodular set.
"""

import random

from productmix import a_n_natural, counterexample_for, equilibrium_at, equilibrium_over_hull
from productmix.generators import random_concave_utility, random_non_unimodular

rng = random.Random(2024)
dtype = a_n_natural(2)
for trial in range(5):
    agents = [random_concave_utility(dtype, rng) for _ in range(3)]
    report = equilibrium_over_hull(agents)
    print(f"trial {trial}: {len(report.results)} supplies checked, all clear: {report.overall}")

d = random_non_unimodular(rng, n=2)
ce = counterexample_for(d)
print("\nnon-unimodular set", list(d))
print("failing subset", ce.subset, "-> agents on {0, v} with zero values")
print("supply", ce.witness, "clears:", bool(equilibrium_at(ce.auction, ce.witness)))
