"""Coalition games as auctions: cores are equilibrium prices.

Three players where every pair earns 5 and the trio earns 6 have no stable
split: the fractional packing earns 15/2 but any partition earns at most 6.
An assignment game between two men and two women always has one.
"""

from productmix import TUGame, bipartite_game, equilibrium_at, find_core, is_core, tu_to_auction

trio = TUGame.of(3, {(1, 2): 5, (1, 3): 5, (2, 3): 5, (1, 2, 3): 6})
print("trio core:", find_core(trio))
gap = equilibrium_at(*tu_to_auction(trio)[:2])
print("best partition", gap.aggregate_value, "vs fractional packing", gap.majorant_value)

game = bipartite_game(2, 2, [[4, 3], [2, "7/2"]])
core = find_core(game)
print("\nassignment game partition:", [sorted(c) for c in core.partition])
print("payoffs:", [str(p) for p in core.payoffs], "stable:", is_core(game, core))
