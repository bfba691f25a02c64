"""Exact convex hulls of small integer point sets.

Everything here works on tuples of Python ints, so all predicates are exact.
Points are addressed by their index in the input list and point sets are
encoded as int bitmasks (bit ``i`` set means point ``i`` is a member), which
makes face intersection a single ``&``.

The hull is built incrementally (beneath-beyond) as a simplicial complex;
a point is only "beyond" a facet when strictly above it, so coplanar points
never enter the triangulation.  Simplicial facets lying on the same
hyperplane are merged afterwards and each merged facet records every input
point lying on it.  Intended for dimension <= 5 and a few hundred points.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, NamedTuple, Sequence, Tuple

IntVec = Tuple[int, ...]


class Facet(NamedTuple):
    """Supporting hyperplane ``normal . x <= offset`` and the points on it."""

    normal: IntVec
    offset: int
    mask: int


class AffineFrame(NamedTuple):
    """Affine hull of a point set, with an injective coordinate projection.

    ``basis`` rows are the reduced row echelon form of the difference
    vectors and ``pivots`` their pivot columns, so a vector ``v`` in the
    direction space equals ``sum(v[pivots[k]] * basis[k])``.
    """

    origin: IntVec
    pivots: Tuple[int, ...]
    basis: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def project(self, x: Sequence[int]) -> IntVec:
        return tuple(x[i] for i in self.pivots)

    def contains(self, x: Sequence) -> bool:
        """Exact test for membership of ``x`` in the affine hull."""
        diff = [Fraction(a) - b for a, b in zip(x, self.origin)]
        rebuilt = [Fraction(0)] * len(diff)
        for k, row in enumerate(self.basis):
            coef = diff[self.pivots[k]]
            if coef:
                for i, r in enumerate(row):
                    rebuilt[i] += coef * r
        return rebuilt == diff


def rref(rows: Sequence[Sequence]) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q; returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        lead = mat[r][c]
        mat[r] = [v / lead for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def affine_frame(points: Sequence[Sequence[int]]) -> AffineFrame:
    origin = tuple(points[0])
    diffs = [[a - b for a, b in zip(p, origin)] for p in points[1:]]
    basis, pivots = rref(diffs) if diffs else ([], [])
    return AffineFrame(origin, tuple(pivots), tuple(tuple(r) for r in basis))


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def _det(mat: List[List[int]]) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    m = [row[:] for row in mat]
    n = len(m)
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] if n else 1


def _primitive(vec: Sequence[int]) -> IntVec:
    g = 0
    for v in vec:
        g = gcd(g, v)
    return tuple(v // g for v in vec) if g > 1 else tuple(vec)


def hyperplane(pts: Sequence[IntVec]) -> Tuple[IntVec, int]:
    """Primitive normal and offset of the hyperplane through ``dim`` points."""
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    dim = len(base)
    normal = []
    for i in range(dim):
        minor = [row[:i] + row[i + 1:] for row in diffs]
        normal.append((-1) ** i * _det(minor))
    normal = _primitive(normal)
    return normal, sum(a * b for a, b in zip(normal, base))


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def _initial_simplex(points: Sequence[IntVec]) -> List[int]:
    chosen = [0]
    diffs: List[List[int]] = []
    dim = len(points[0])
    for i in range(1, len(points)):
        cand = diffs + [[a - b for a, b in zip(points[i], points[0])]]
        if rank(cand) == len(cand):
            chosen.append(i)
            diffs = cand
            if len(chosen) == dim + 1:
                return chosen
    raise ValueError("point set is not full-dimensional")


def hull_facets(points: Sequence[IntVec]) -> List[Facet]:
    """Facets of the convex hull of full-dimensional integer points."""
    points = [tuple(p) for p in points]
    dim = len(points[0])
    if dim == 0:
        return []
    if dim == 1:
        lo = min(p[0] for p in points)
        hi = max(p[0] for p in points)
        if lo == hi:
            raise ValueError("point set is not full-dimensional")
        return [
            Facet((-1,), -lo, _mask(i for i, p in enumerate(points) if p[0] == lo)),
            Facet((1,), hi, _mask(i for i, p in enumerate(points) if p[0] == hi)),
        ]

    simplex = _initial_simplex(points)
    # (dim + 1) * interior, kept integral; strictly inside every facet
    inside = tuple(sum(points[i][k] for i in simplex) for k in range(dim))
    scale = dim + 1

    def oriented(verts: Tuple[int, ...]):
        normal, offset = hyperplane([points[i] for i in verts])
        if _dot(normal, inside) > scale * offset:
            normal = tuple(-v for v in normal)
            offset = -offset
        return normal, offset

    facets = {}
    for drop in simplex:
        verts = tuple(sorted(i for i in simplex if i != drop))
        facets[verts] = oriented(verts)

    in_simplex = set(simplex)
    for q, pt in enumerate(points):
        if q in in_simplex:
            continue
        visible = [v for v, (nrm, off) in facets.items() if _dot(nrm, pt) > off]
        if not visible:
            continue
        ridge_count = {}
        for verts in visible:
            for ridge in combinations(verts, dim - 1):
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        for verts in visible:
            del facets[verts]
        for ridge, count in ridge_count.items():
            if count == 1:
                verts = tuple(sorted(ridge + (q,)))
                facets[verts] = oriented(verts)

    merged = {}
    for normal, offset in facets.values():
        merged[(normal, offset)] = None
    out = []
    for normal, offset in merged:
        mask = _mask(i for i, p in enumerate(points) if _dot(normal, p) == offset)
        out.append(Facet(normal, offset, mask))
    out.sort()
    return out


def _mask(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def face_closure(start: Sequence[int], facet_masks: Sequence[int]) -> List[int]:
    """All nonempty faces reachable from ``start`` by intersecting facets.

    Starting from a set of faces, every face of each of them is the
    intersection of that face with the facets containing the smaller face,
    so the closure is exactly the set of faces of the starting faces.
    """
    seen = set(start)
    stack = list(start)
    while stack:
        face = stack.pop()
        for fm in facet_masks:
            sub = face & fm
            if sub and sub != face and sub not in seen:
                seen.add(sub)
                stack.append(sub)
    return sorted(seen, key=lambda m: (bin(m).count("1"), m))


def polytope_faces(points: Sequence[IntVec]) -> Tuple[AffineFrame, List[Facet], List[int]]:
    """Frame, facets (in projected coordinates) and all faces of conv(points)."""
    frame = affine_frame(points)
    full = (1 << len(points)) - 1
    if frame.dim == 0:
        return frame, [], [full]
    proj = [frame.project(p) for p in points]
    facets = hull_facets(proj)
    faces = face_closure([full], [f.mask for f in facets])
    return frame, facets, faces
