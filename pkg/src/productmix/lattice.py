"""Integer lattice tools: primitive vectors, Smith invariants, unimodularity,
Minkowski sums and lattice points of lattice polytopes.

Bundles are plain tuples of ints throughout the package.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import _hull

Bundle = Tuple[int, ...]

DEFAULT_BOX_CAP = 10**6


class LatticeError(ValueError):
    pass


def bundle(coords: Iterable) -> Bundle:
    """Coerce to a bundle, rejecting non-integral entries."""
    out = []
    for c in coords:
        if isinstance(c, bool) or int(c) != c:
            raise LatticeError(f"bundle entries must be integers, got {c!r}")
        out.append(int(c))
    return tuple(out)


def primitive(v: Sequence[int]) -> Bundle:
    """Primitive representative of ``v`` with first nonzero entry positive.

    >>> primitive((0, -3))
    (0, 1)
    """
    v = bundle(v)
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise LatticeError("zero vector has no primitive representative")
    first = next(x for x in v if x != 0)
    if first < 0:
        g = -g
    return tuple(x // g for x in v)


def smith_invariants(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Invariant factors d_1 | d_2 | ... | d_r of an integer matrix.

    Only the nonzero factors are returned, so ``len`` of the result is the
    rank.  Orientation does not matter (a matrix and its transpose share
    invariants).
    """
    a = [[int(x) for x in row] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        entries = [(abs(a[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if a[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    done = False
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j] != 0:
                    done = False
            if done:
                break
            # a nonzero remainder is smaller than the pivot: move it there
            _, pi, pj = min((abs(a[i][j]), i, j) for i, j in
                            [(i, t) for i in range(t, rows)] + [(t, j) for j in range(t, cols)]
                            if a[i][j] != 0)
            a[t], a[pi] = a[pi], a[t]
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    # diag(x, y) is equivalent to diag(gcd, lcm); sweep into a divisor chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            g = gcd(diag[i], diag[j])
            diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag


@dataclass(frozen=True)
class DemandType:
    """A finite set of primitive integer vectors, canonical up to sign."""

    dimension: int
    vectors: Tuple[Bundle, ...]

    def __post_init__(self):
        canon = sorted({primitive(v) for v in self.vectors}, reverse=True)
        for v in canon:
            if len(v) != self.dimension:
                raise LatticeError(f"vector {v} does not have dimension {self.dimension}")
        object.__setattr__(self, "vectors", tuple(canon))

    @classmethod
    def of(cls, vectors: Iterable[Sequence[int]], dimension: Optional[int] = None) -> "DemandType":
        vectors = [bundle(v) for v in vectors]
        if dimension is None:
            if not vectors:
                raise LatticeError("dimension is required for an empty demand type")
            dimension = len(vectors[0])
        return cls(dimension, tuple(vectors))

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, v) -> bool:
        return primitive(v) in self.vectors

    def __or__(self, other: "DemandType") -> "DemandType":
        return DemandType(self.dimension, self.vectors + other.vectors)

    def issubset(self, other: "DemandType") -> bool:
        return set(self.vectors) <= set(other.vectors)


class Unimodularity(NamedTuple):
    unimodular: bool
    witness: Optional[Tuple[Bundle, ...]]

    def __bool__(self):
        return self.unimodular


def is_unimodular(vectors) -> Unimodularity:
    """Decide unimodularity, returning a smallest failing independent subset.

    A set is unimodular when every linearly independent subset spans, over
    Z, the whole lattice inside its real span, i.e. all its Smith invariants
    are 1.  Subsets of every size are tested, not only size ``n``: a
    rank-deficient set would otherwise pass vacuously even though the
    parallelepiped of a bad subset still contains extra lattice points, and
    that construction is what makes the converse direction of the
    equilibrium theorem work.

    ``vectors`` may be a :class:`DemandType` or raw integer vectors; raw
    vectors are used as given, so a non-primitive vector fails on its own.
    Exhaustive over subsets: fine for the dozen-vector sets seen here.
    """
    vecs = list(vectors.vectors) if isinstance(vectors, DemandType) else \
        list(dict.fromkeys(bundle(v) for v in vectors))
    vecs = [v for v in vecs if any(v)]
    if not vecs:
        return Unimodularity(True, None)
    top = min(len(vecs), len(vecs[0]))
    for k in range(1, top + 1):
        for subset in combinations(vecs, k):
            inv = smith_invariants(subset)
            if len(inv) == k and inv[-1] != 1:
                return Unimodularity(False, subset)
    return Unimodularity(True, None)


def a_n_natural(n: int) -> DemandType:
    """Projection of the type-A root system {e_i - e_j} along coordinate 0."""
    if n < 1:
        raise LatticeError("a_n_natural needs n >= 1")
    vecs = []
    for i in range(n + 1):
        for j in range(n + 1):
            if i != j:
                full = [0] * (n + 1)
                full[i] += 1
                full[j] -= 1
                vecs.append(tuple(full[1:]))
    return DemandType(n, tuple(vecs))


def minkowski_sum(sets: Sequence[Iterable[Sequence[int]]]) -> List[Bundle]:
    """All sums a^1 + ... + a^J with a^j drawn from the j-th set, sorted."""
    sets = [sorted({bundle(a) for a in s}) for s in sets]
    if not sets or any(not s for s in sets):
        raise LatticeError("minkowski_sum needs nonempty sets")
    dim = len(sets[0][0])
    if any(len(a) != dim for s in sets for a in s):
        raise LatticeError("dimension mismatch in minkowski_sum")
    acc = {tuple([0] * dim)}
    for s in sets:
        acc = {tuple(x + y for x, y in zip(a, b)) for a in acc for b in s}
    return sorted(acc)


class LatticePolytope:
    """Convex hull of finitely many lattice points, stored by its vertices.

    Any finite point set may be passed in; redundant points are discarded.
    """

    def __init__(self, points: Iterable[Sequence[int]]):
        pts = sorted({bundle(p) for p in points})
        if not pts:
            raise LatticeError("empty polytope")
        self.dimension = len(pts[0])
        frame, facets, faces = _hull.polytope_faces(pts)
        singletons = [f for f in faces if f & (f - 1) == 0]
        self.vertices: Tuple[Bundle, ...] = tuple(pts[_hull.members(m)[0]] for m in singletons)
        self.vertices = tuple(sorted(self.vertices))
        self._frame = frame
        self._facets = [(f.normal, f.offset) for f in facets]
        self._edges = [tuple(pts[i] for i in _hull.members(m)) for m in faces
                       if len(self._face_rank(pts, m)) == 1]

    @staticmethod
    def _face_rank(pts, mask):
        idx = _hull.members(mask)
        base = pts[idx[0]]
        return _hull.rref([[a - b for a, b in zip(pts[i], base)] for i in idx[1:]])[1]

    @property
    def affine_dim(self) -> int:
        return self._frame.dim

    def __repr__(self):
        return f"LatticePolytope({list(self.vertices)})"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def contains(self, x: Sequence) -> bool:
        """Exact membership of a (rational) point."""
        if len(x) != self.dimension or not self._frame.contains(x):
            return False
        y = [Fraction(x[i]) for i in self._frame.pivots]
        return all(sum(n * v for n, v in zip(normal, y)) <= off
                   for normal, off in self._facets)

    def edge_directions(self) -> DemandType:
        dirs = []
        for pts in self._edges:
            lo, hi = min(pts), max(pts)
            dirs.append(primitive(tuple(b - a for a, b in zip(lo, hi))))
        return DemandType(self.dimension, tuple(dirs))

    def __add__(self, other: "LatticePolytope") -> "LatticePolytope":
        return LatticePolytope(minkowski_sum([self.vertices, other.vertices]))


def lattice_points(polytope: LatticePolytope, cap: int = DEFAULT_BOX_CAP) -> List[Bundle]:
    """Integer points of the polytope, by bounding-box sweep, sorted."""
    if not isinstance(polytope, LatticePolytope):
        polytope = LatticePolytope(polytope)
    verts = polytope.vertices
    lo = [min(v[i] for v in verts) for i in range(polytope.dimension)]
    hi = [max(v[i] for v in verts) for i in range(polytope.dimension)]
    size = 1
    for a, b in zip(lo, hi):
        size *= b - a + 1
    if size > cap:
        raise LatticeError(f"bounding box has {size} points, above the cap {cap}")
    ranges = [range(a, b + 1) for a, b in zip(lo, hi)]
    return [x for x in product(*ranges) if polytope.contains(x)]


class LatticeSumCheck(NamedTuple):
    holds: bool
    witness: Optional[Bundle]

    def __bool__(self):
        return self.holds


def check_lattice_sum_identity(p: LatticePolytope, q: LatticePolytope,
                               cap: int = DEFAULT_BOX_CAP) -> LatticeSumCheck:
    """Test (P + Q) ∩ Z^n == (P ∩ Z^n) + (Q ∩ Z^n).

    On failure the witness is the lexicographically first lattice point of
    P + Q that is not a sum of lattice points.
    """
    if p.dimension != q.dimension:
        raise LatticeError("dimension mismatch")
    sums = set(minkowski_sum([lattice_points(p, cap), lattice_points(q, cap)]))
    for x in lattice_points(p + q, cap):
        if x not in sums:
            return LatticeSumCheck(False, x)
    return LatticeSumCheck(True, None)
