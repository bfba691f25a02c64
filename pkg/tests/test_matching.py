from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from productmix.equilibrium import equilibrium_at, max_profit_price
from productmix.matching import (CoreSolution, GameError, TUGame, bipartite_game, find_core,
                                 is_core, tu_to_auction)

import oracles

THREE = TUGame.of(3, {(1, 2): 5, (1, 3): 5, (2, 3): 5, (1, 2, 3): 6})


def test_three_person_reduction():
    auction, target, coalitions = tu_to_auction(THREE)
    assert target == (1, 1, 1) and auction.dimension == 3
    # three pairs, the triple, plus the three zero-valued singletons
    assert len(auction) == 7
    assert set(coalitions) >= {frozenset(c) for c in [(1, 2), (1, 3), (2, 3), (1, 2, 3)]}


def test_three_person_has_no_core():
    assert find_core(THREE) is None
    assert find_core(THREE, exhaustive=True) is None
    res = equilibrium_at(*tu_to_auction(THREE)[:2])
    assert res.aggregate_value == 6 and res.majorant_value == Fraction(15, 2)


def test_single_player():
    game = TUGame.of(1, {(1,): 7})
    auction, target, _ = tu_to_auction(game)
    assert target == (1,) and len(auction) == 1
    assert auction.agents[0].support == [(0,), (1,)]
    core = find_core(game)
    assert core.payoffs == (7,) and is_core(game, core)


def test_bipartite_reduction_supports():
    game = bipartite_game(2, 2, [[1, 2], [3, 4]])
    auction, _, coalitions = tu_to_auction(game)
    pairs = [c for c in coalitions if len(c) == 2]
    assert len(pairs) == 4
    for u, c in zip(auction.agents, coalitions):
        ind = tuple(1 if i in c else 0 for i in range(1, 5))
        assert u.support == sorted([(0, 0, 0, 0), ind])


def test_one_by_one():
    core = find_core(bipartite_game(1, 1, [[3]]))
    assert sum(core.payoffs) == 3 and core.partition == (frozenset({1, 2}),)


def test_diagonal_two_by_two():
    game = bipartite_game(2, 2, [[5, 0], [0, 5]])
    core = find_core(game)
    assert set(core.partition) == {frozenset({1, 3}), frozenset({2, 4})}
    assert is_core(game, core)


def test_all_zero_game():
    game = bipartite_game(2, 2, [[0, 0], [0, 0]])
    core = find_core(game)
    assert all(p == 0 for p in core.payoffs)
    assert all(len(c) == 1 for c in core.partition)


def test_core_payoffs_are_equilibrium_prices():
    game = bipartite_game(1, 2, [[4, 6]])
    core = find_core(game)
    auction, target, _ = tu_to_auction(game)
    cert = equilibrium_at(auction, target)
    assert core.payoffs == max_profit_price(auction, target, cert.allocation, nonnegative=True).price


def test_is_core_rejects_bad_payoffs():
    game = bipartite_game(1, 1, [[3]])
    assert not is_core(game, CoreSolution((frozenset({1, 2}),), (Fraction(1), Fraction(1))))
    assert not is_core(game, CoreSolution((frozenset({1}), frozenset({2})), (Fraction(0), Fraction(0))))


def test_game_validation():
    with pytest.raises(GameError):
        TUGame.of(2, {(1, 3): 1})
    with pytest.raises(GameError):
        TUGame.of(2, {(1,): -1})
    with pytest.raises(GameError):
        bipartite_game(1, 1, {(2, 1): 1})


@st.composite
def bipartite_games(draw):
    m = draw(st.integers(1, 3))
    n = draw(st.integers(1, 3))
    w = [[draw(st.fractions(0, 10, max_denominator=3)) for _ in range(n)] for _ in range(m)]
    return bipartite_game(m, n, w)


@given(bipartite_games())
def test_bipartite_always_has_core(game):
    core = find_core(game)
    assert core is not None and is_core(game, core)


@st.composite
def small_games(draw):
    n = draw(st.integers(1, 4))
    game = TUGame.of(n, {})
    vals = {c: draw(st.integers(0, 8)) for c in game.coalitions() if draw(st.booleans())}
    return TUGame.of(n, vals)


def best_partition(game):
    return max(sum(game.value(c) for c in part)
               for part in oracles.set_partitions(range(1, game.n + 1)))


@given(small_games())
def test_core_existence_matches_oracle(game):
    core = find_core(game)
    auction, target, _ = tu_to_auction(game)
    res = equilibrium_at(auction, target)
    # the integer optimum is the best partition value
    if core is None:
        assert res.aggregate_value == best_partition(game)
        assert res.majorant_value > res.aggregate_value
    else:
        assert is_core(game, core)
        assert sum(game.value(c) for c in core.partition) == best_partition(game)
    assert (find_core(game, exhaustive=True) is None) == (core is None)
