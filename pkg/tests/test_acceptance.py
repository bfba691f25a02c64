"""Acceptance gate: eight criteria, exact arithmetic throughout.

Each criterion prints one ``PASS``/``FAIL`` line.  Run under pytest, or
directly with ``python tests/test_acceptance.py`` for just the summary.
"""

import json
import random
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction
from io import StringIO
from pathlib import Path

import pytest

from productmix import cli
from productmix.equilibrium import (Auction, aggregate_utility, aggregate_utility_oracle,
                                    counterexample_for, demand_type_union, equilibrium_at,
                                    equilibrium_over_hull)
from productmix.generators import (random_alcoved_polygon, random_concave_utility,
                                   random_non_unimodular, random_rational, random_utility)
from productmix.lattice import (DemandType, LatticePolytope, a_n_natural,
                                check_lattice_sum_identity, is_unimodular)
from productmix.matching import TUGame, bipartite_game, find_core, is_core, tu_to_auction
from productmix.optimize import LE, OPTIMAL, LinearProgram, build_cayley, solve_ip, solve_lp
from productmix.tropical import (NEG_INF, UtilityFunction, concave_majorant, demand_type_of,
                                 is_concave, sup_convolution)

sys.path.insert(0, str(Path(__file__).resolve().parent))
import oracles  # noqa: E402

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


def _cli(*argv):
    buf = StringIO()
    with redirect_stdout(buf):
        code = cli.main([str(a) for a in argv])
    return code, json.loads(buf.getvalue())


def criterion_1():
    code, rep = _cli("check", "--input", DATA / "max_profit.json", "--supply", "2")
    res = rep["result"]
    assert code == 0 and res["equilibrium"] is True
    assert res["price_region"]["bounds"] == [["1", "2"]], res["price_region"]
    assert res["allocation"] == {"first": [1], "second": [1]}
    code, rep = _cli("max-profit", "--input", DATA / "max_profit.json", "--supply", "2")
    assert code == 0 and rep["result"]["revenue"] == "4"
    return "region [1, 2], allocation (1, 1), revenue 4"


def criterion_2():
    a1 = {(0, 0): 0, (1, 0): 0}
    a2 = {(0, 0): 0, (1, 2): 0}
    auction = Auction((UtilityFunction(a1), UtilityFunction(a2)))
    report = equilibrium_over_hull(auction)
    assert report.failures == [(1, 1)], report.failures
    support = [(0, 0), (1, 0), (1, 2), (2, 2)]
    assert sorted(report.results) == sorted(support + [(1, 1)])
    assert all(report.results[a] for a in support)
    assert report.results[(0, 0)].price == (0, 0)
    return "fails only at (1, 1); price (0, 0) at (0, 0)"


def criterion_3():
    game = TUGame.of(3, {(1, 2): 5, (1, 3): 5, (2, 3): 5, (1, 2, 3): 6})
    assert find_core(game) is None
    auction, target, _ = tu_to_auction(game)
    _, lp = build_cayley(auction, target)
    lp_opt, ip_opt = solve_lp(lp).optimum, solve_ip(lp).optimum
    assert lp_opt == Fraction(15, 2) and ip_opt == 6, (lp_opt, ip_opt)
    return "no core; LP 15/2, IP 6"


def criterion_4(count=120):
    rng = random.Random(4)
    points = 0
    for _ in range(count):
        n = rng.choice([1, 2, 3])
        full = list(a_n_natural(n))
        dtype = DemandType(n, tuple(rng.sample(full, rng.randint(1, len(full)))))
        agents = [random_concave_utility(dtype, rng) for _ in range(rng.randint(1, 3))]
        for u in agents:
            assert len(u) <= 6 and is_concave(u) and demand_type_of(u).issubset(dtype)
        report = equilibrium_over_hull(agents)
        assert report.overall, (agents, report.failures)
        points += len(report.results)
    return f"{count} auctions, {points} lattice points, 0 failures"


def criterion_5(count=60):
    rng = random.Random(5)
    for _ in range(count):
        d = random_non_unimodular(rng, n=rng.choice([2, 3]))
        ce = counterexample_for(d)
        assert demand_type_union(ce.auction).issubset(d)
        assert not equilibrium_at(ce.auction, ce.witness)
        # brute force: the witness is in the hull but not a sum of bids
        assert oracles.aggregate_brute(ce.auction.agents, ce.witness) == NEG_INF
        assert LatticePolytope(ce.auction.bundles()).contains(ce.witness)
    return f"{count} non-unimodular sets, every witness fails"


def _instance(rng):
    n = rng.randint(1, 3)
    J = rng.randint(1, 4)
    return Auction(tuple(random_utility(n, rng, rng.randint(1, 4)) for _ in range(J)))


def criterion_6(count=500):
    rng = random.Random(6)
    checked = 0
    for _ in range(count):
        auction = _instance(rng)
        agg = sup_convolution(auction.agents)
        sums = auction.bundles()
        probes = rng.sample(sums, min(3, len(sums)))
        probes.append(tuple(rng.randint(-3, 7) for _ in range(auction.dimension)))
        for a in probes:
            U = aggregate_utility(auction, a)
            assert U == aggregate_utility_oracle(auction, a), (auction, a)
            verdict = bool(equilibrium_at(auction, a))
            expected = U != NEG_INF and U == concave_majorant(agg, a)
            assert verdict == expected, (auction, a)
            checked += 1
    return f"{count} instances, {checked} supply points agree"


def criterion_7(count=120):
    rng = random.Random(7)
    allowed = a_n_natural(2)
    for _ in range(count):
        p, q = random_alcoved_polygon(rng), random_alcoved_polygon(rng)
        for poly in (p, q):
            assert poly.affine_dim < 2 or poly.edge_directions().issubset(allowed)
        assert check_lattice_sum_identity(p, q), (p, q)
    res = check_lattice_sum_identity(LatticePolytope([(0, 0), (1, 0)]),
                                     LatticePolytope([(0, 0), (1, 2)]))
    assert not res and res.witness == (1, 1)
    return f"{count} alcoved pairs hold; segment pair fails at (1, 1)"


def _random_lp(rng):
    n, m = rng.randint(1, 4), rng.randint(1, 4)
    A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
    b = [random_rational(rng, 10) if rng.random() < 0.2 else Fraction(rng.randint(0, 12)) for _ in range(m)]
    c = [rng.randint(-6, 6) for _ in range(n)]
    return c, A, b


def _check_pair(c, A, b):
    """Solve max c.x, Ax <= b, x >= 0 and its dual min b.y, A^T y >= c, y >= 0."""
    primal = LinearProgram.build(c, A, [LE] * len(A), b)
    At = [[-A[i][j] for i in range(len(A))] for j in range(len(c))]
    dual = LinearProgram.build(b, At, [LE] * len(c), [-x for x in c], sense="min")
    p, d = solve_lp(primal), solve_lp(dual)
    if p.status != OPTIMAL:
        assert d.status != OPTIMAL
        return False
    assert d.status == OPTIMAL and p.optimum == d.optimum
    for lp, sol in ((primal, p), (dual, d)):
        assert lp.is_feasible(sol.primal) and lp.value(sol.primal) == sol.optimum
        assert sol.dual_objective == sol.optimum
        # row duals are a feasible certificate for the other side
        assert all(y >= 0 for y in sol.dual) if lp.sense == "max" else all(y <= 0 for y in sol.dual)
    return True


def criterion_8(count=300, games=60):
    rng = random.Random(8)
    optimal = 0
    for _ in range(count):
        optimal += _check_pair(*_random_lp(rng))
    for _ in range(60):
        auction = _instance(rng)
        a = rng.choice(auction.bundles())
        _, lp = build_cayley(auction, a)
        sol = solve_lp(lp)
        assert sol.optimal and lp.is_feasible(sol.primal) and sol.dual_objective == sol.optimum
    for n in range(1, 5):
        assert is_unimodular(a_n_natural(n))
    for _ in range(games):
        m, k = rng.randint(1, 4), rng.randint(1, 4)
        w = [[Fraction(rng.randint(0, 20), rng.randint(1, 4)) for _ in range(k)] for _ in range(m)]
        game = bipartite_game(m, k, w)
        core = find_core(game)
        assert core is not None and is_core(game, core), w
    return f"{count} LP pairs ({optimal} optimal) + 60 Cayley LPs, A_n unimodular to n=4, {games} cores"


CRITERIA = [
    (1, "max.profit example: region [1,2], revenue 4", criterion_1),
    (2, "failure instance fails exactly at (1,1)", criterion_2),
    (3, "three-person game: no core, LP 15/2 vs IP 6", criterion_3),
    (4, "forward theorem on random concave auctions", criterion_4),
    (5, "converse: counterexamples for non-unimodular sets", criterion_5),
    (6, "IP route equals enumeration; verdict equals U vs majorant", criterion_6),
    (7, "lattice-sum identity", criterion_7),
    (8, "LP soundness, A_n unimodularity, bipartite cores", criterion_8),
]


def _run(number, title, fn):
    start = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail, ok = f"assertion failed: {exc}"[:300], False
    elapsed = time.perf_counter() - start
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail}; {elapsed:.1f}s)"
    return ok, line, elapsed


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ok, line, elapsed = _run(number, title, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line
    assert elapsed < 60, f"criterion {number} took {elapsed:.1f}s"


if __name__ == "__main__":
    results = [_run(*c) for c in CRITERIA]
    for _, line, _ in results:
        print(line)
    sys.exit(0 if all(ok for ok, _, _ in results) else 1)
