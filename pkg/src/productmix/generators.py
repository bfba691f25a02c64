"""Random instances for property tests, acceptance runs and demos.

All generators take a ``random.Random`` so runs are reproducible.
"""

import random
from fractions import Fraction
from itertools import product
from typing import List, Optional

from .lattice import (DemandType, LatticePolytope, is_unimodular,
                      lattice_points, minkowski_sum, primitive)
from .tropical import UtilityFunction, demand_type_of, is_concave


def zonotope_support(generators, lengths, offset) -> List[tuple]:
    """Lattice points of offset + sum of segments [0, L_k v_k]."""
    segments = [[tuple(t * x for x in v) for t in range(length + 1)]
                for v, length in zip(generators, lengths)]
    pts = minkowski_sum(segments)
    pts = lattice_points(LatticePolytope(pts))
    return [tuple(x + o for x, o in zip(p, offset)) for p in pts]


def random_concave_utility(dtype: DemandType, rng: random.Random, max_support: int = 6,
                           value_range: int = 12, tries: int = 60) -> UtilityFunction:
    """A concave utility whose demand type is contained in ``dtype``.

    The support is a small zonotope spanned by directions of ``dtype`` (its
    edges are in ``dtype`` and it has no lattice holes).  Random integer
    values are drawn until the lift is concave with all subdivision edges
    in ``dtype``; if that keeps failing the values fall back to an affine
    function, whose subdivision is the zonotope itself.
    """
    n = dtype.dimension
    offset = tuple(rng.randint(-1, 1) for _ in range(n))
    if not dtype.vectors or rng.random() < 0.05:
        return UtilityFunction({offset: rng.randint(-value_range, value_range)})
    while True:
        k = rng.randint(1, min(3, len(dtype)))
        gens = rng.sample(list(dtype.vectors), k)
        lengths = [rng.randint(1, 2) for _ in gens]
        support = zonotope_support(gens, lengths, offset)
        if len(support) <= max_support:
            break
    for _ in range(tries):
        u = UtilityFunction({a: rng.randint(-value_range, value_range) for a in support})
        if is_concave(u) and demand_type_of(u).issubset(dtype):
            return u
    slope = [rng.randint(-3, 3) for _ in range(n)]
    c = rng.randint(-value_range, value_range)
    return UtilityFunction({a: c + sum(s * x for s, x in zip(slope, a)) for a in support})


def random_utility(n: int, rng: random.Random, size: int, coord_range: int = 2,
                   bound: int = 100) -> UtilityFunction:
    """Random support in a small box with random rational values."""
    box = list(product(range(-1, coord_range + 1), repeat=n))
    support = rng.sample(box, min(size, len(box)))
    return UtilityFunction({a: random_rational(rng, bound) for a in support})


def random_rational(rng: random.Random, bound: int = 100) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_non_unimodular(rng: random.Random, n: Optional[int] = None,
                          max_vectors: int = 6, entry: int = 3) -> DemandType:
    """A random demand type (primitive vectors) that is not unimodular.

    ``n`` must be at least 2: in one dimension every primitive set is unimodular.
    """
    if n is not None and n < 2:
        raise ValueError("non-unimodular primitive sets need dimension >= 2")
    while True:
        dim = n if n is not None else rng.choice([2, 3])
        count = rng.randint(2, max_vectors)
        vecs = set()
        for _ in range(count):
            v = tuple(rng.randint(-entry, entry) for _ in range(dim))
            if any(v):
                vecs.add(primitive(v))
        d = DemandType(dim, tuple(vecs))
        if len(d) <= max_vectors and not is_unimodular(d):
            return d


def random_alcoved_polygon(rng: random.Random, size: int = 3) -> LatticePolytope:
    """Lattice polygon cut out by x, y and x + y bounds.

    Its edges are parallel to (1, 0), (0, 1) or (1, -1).
    """
    while True:
        lo = [rng.randint(-size, size) for _ in range(2)]
        hi = [a + rng.randint(0, size) for a in lo]
        s_lo = rng.randint(lo[0] + lo[1], hi[0] + hi[1])
        s_hi = rng.randint(s_lo, hi[0] + hi[1])
        pts = [(x, y) for x in range(lo[0], hi[0] + 1) for y in range(lo[1], hi[1] + 1)
               if s_lo <= x + y <= s_hi]
        if pts:
            return LatticePolytope(pts)
