"""Coalition games with transferable utility, solved as product-mix auctions.

Players are the goods.  Each coalition becomes a bidder valuing the
indicator bundle of its members at v(coalition) and the empty bundle at 0;
the game has a core exactly when that auction clears at the all-ones
bundle, and equilibrium prices are core payoffs.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Mapping, Optional, Tuple

from .equilibrium import Auction, equilibrium_at, max_profit_price
from .tropical import UtilityFunction

Coalition = FrozenSet[int]


class GameError(ValueError):
    pass


@dataclass(frozen=True)
class TUGame:
    """Players are 1..n; coalitions absent from ``valuations`` are worth 0."""

    n: int
    valuations: Tuple[Tuple[Coalition, Fraction], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GameError("a game needs at least one player")
        vals: Dict[Coalition, Fraction] = {}
        for members, v in dict(self.valuations).items():
            members = frozenset(int(i) for i in members)
            if not members or not members <= set(range(1, self.n + 1)):
                raise GameError(f"coalition {sorted(members)} is not a nonempty subset of 1..{self.n}")
            v = Fraction(v)
            if v < 0:
                raise GameError(f"coalition {sorted(members)} has negative value {v}")
            vals[members] = v
        object.__setattr__(self, "valuations",
                           tuple(sorted(vals.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))))

    @classmethod
    def of(cls, n: int, valuations: Mapping[Iterable[int], object]) -> "TUGame":
        return cls(n, tuple((frozenset(k), v) for k, v in valuations.items()))

    def value(self, coalition: Iterable[int]) -> Fraction:
        return dict(self.valuations).get(frozenset(coalition), Fraction(0))

    def coalitions(self):
        """Every nonempty coalition, smallest first."""
        players = range(1, self.n + 1)
        for k in range(1, self.n + 1):
            for c in combinations(players, k):
                yield frozenset(c)


@dataclass(frozen=True)
class CoreSolution:
    partition: Tuple[Coalition, ...]
    payoffs: Tuple[Fraction, ...]  # payoffs[i - 1] for player i

    def payoff(self, coalition: Iterable[int]) -> Fraction:
        return sum((self.payoffs[i - 1] for i in coalition), Fraction(0))


def _indicator(members: Coalition, n: int) -> Tuple[int, ...]:
    return tuple(1 if i in members else 0 for i in range(1, n + 1))


def tu_to_auction(game: TUGame, exhaustive: bool = False):
    """One bidder per coalition on {0, indicator}; target is all-ones.

    Zero-valued coalitions of size >= 2 are skipped: a bidder that values
    a group at 0 can always be replaced by its members' singletons in a
    partition, and its stability inequality 0 <= sum(payoffs) holds for any
    nonnegative payoffs.  Singleton bidders are always present (value 0
    when unlisted) so that a player left out of every valuable coalition can
    still be matched on their own.  ``exhaustive`` keeps every coalition.

    Returns (auction, target, coalitions) with ``coalitions[j]`` the
    coalition of bidder ``j``.
    """
    n = game.n
    zero = tuple([0] * n)
    vals = dict(game.valuations)
    coalitions = []
    for c in game.coalitions():
        if exhaustive or len(c) == 1 or vals.get(c, 0) > 0:
            coalitions.append(c)
    agents = tuple(UtilityFunction({zero: 0, _indicator(c, n): vals.get(c, 0)})
                   for c in coalitions)
    return Auction(agents), tuple([1] * n), tuple(coalitions)


def find_core(game: TUGame, exhaustive: bool = False) -> Optional[CoreSolution]:
    """A core (stable partition and payoffs), or None if the core is empty.

    Payoffs are the revenue-maximising nonnegative equilibrium price at the
    all-ones bundle, which splits each formed coalition's value exactly.
    """
    auction, target, coalitions = tu_to_auction(game, exhaustive)
    cert = equilibrium_at(auction, target)
    if not cert:
        return None
    formed = tuple(c for c, a in zip(coalitions, cert.allocation) if any(a))
    profit = max_profit_price(auction, target, cert.allocation, nonnegative=True)
    return CoreSolution(formed, tuple(profit.price))


def is_core(game: TUGame, solution: CoreSolution) -> bool:
    """Check both core conditions exactly, over all 2^n - 1 coalitions."""
    seen = set()
    for c in solution.partition:
        if seen & c:
            return False
        seen |= c
        if solution.payoff(c) != game.value(c):
            return False
    if seen != set(range(1, game.n + 1)):
        return False
    if any(p < 0 for p in solution.payoffs):
        return False
    return all(solution.payoff(c) >= game.value(c) for c in game.coalitions())


def bipartite_game(m: int, n: int, weights) -> TUGame:
    """Assignment game: men 1..m, women m+1..m+n, pair (i, j) worth w[i][j].

    ``weights`` is a mapping ``(i, j) -> value`` with 1-based indices, or an
    m-by-n nested sequence.
    """
    if m < 1 or n < 1:
        raise GameError("need at least one man and one woman")
    if not isinstance(weights, Mapping):
        weights = {(i + 1, j + 1): w for i, row in enumerate(weights) for j, w in enumerate(row)}
    vals = {}
    for (i, j), w in weights.items():
        if not (1 <= i <= m and 1 <= j <= n):
            raise GameError(f"pair ({i}, {j}) is out of range")
        w = Fraction(w)
        if w < 0:
            raise GameError(f"pair ({i}, {j}) has negative weight {w}")
        vals[frozenset((i, m + j))] = w
    return TUGame.of(m + n, vals)
