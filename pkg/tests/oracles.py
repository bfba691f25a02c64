"""Independent brute-force oracles used by the tests.

Nothing here calls the simplex engine or the hull code: each oracle is a
direct enumeration or a textbook formula.
"""

from fractions import Fraction
from functools import reduce
from itertools import combinations, product
from math import gcd

NEG_INF = float("-inf")


def det(m):
    """Exact determinant by Laplace expansion (small matrices only)."""
    m = [list(r) for r in m]
    if not m:
        return 1
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)) if m[0][j])


def rank(rows):
    """Rank by Gaussian elimination over Fractions."""
    m = [[Fraction(x) for x in r] for r in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
    return r


def minors_gcd(matrix, k):
    """gcd of all k x k minors (the k-th determinantal divisor)."""
    rows, cols = len(matrix), len(matrix[0])
    g = 0
    for ri in combinations(range(rows), k):
        for ci in combinations(range(cols), k):
            g = gcd(g, det([[matrix[i][j] for j in ci] for i in ri]))
    return g


def unimodular_oracle(vectors):
    """Every independent subset has gcd of maximal minors 1."""
    vectors = list(vectors)
    for k in range(1, len(vectors) + 1):
        for sub in combinations(vectors, k):
            cols = [list(v) for v in sub]
            if rank(cols) < k:
                continue
            mat = [list(r) for r in zip(*cols)]  # n x k
            if minors_gcd(mat, k) != 1:
                return False
    return True


def primitive(v):
    g = reduce(gcd, (abs(x) for x in v), 0)
    w = tuple(x // g for x in v)
    first = next(x for x in w if x)
    return w if first > 0 else tuple(-x for x in w)


def monotone_chain(points):
    """2-D convex hull vertices in counter-clockwise order."""
    pts = sorted(set(map(tuple, points)))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def pick_count(points):
    """Number of lattice points of a lattice polygon by Pick's theorem.

    Falls back to the segment count when the hull is degenerate.
    """
    hull = monotone_chain(points)
    if len(hull) == 1:
        return 1
    if len(hull) == 2:
        (a, b), (c, d) = hull
        return gcd(abs(c - a), abs(d - b)) + 1
    twice_area = abs(sum(hull[i][0] * hull[i - 1][1] - hull[i - 1][0] * hull[i][1]
                         for i in range(len(hull))))
    boundary = sum(gcd(abs(hull[i][0] - hull[i - 1][0]), abs(hull[i][1] - hull[i - 1][1]))
                   for i in range(len(hull)))
    interior = (twice_area - boundary + 2) // 2
    return interior + boundary


def in_hull_2d(points, x):
    hull = monotone_chain(points)
    if len(hull) == 1:
        return tuple(x) == hull[0]
    if len(hull) == 2:
        (a, b), (c, d) = hull
        cr = (c - a) * (x[1] - b) - (d - b) * (x[0] - a)
        return cr == 0 and min(a, c) <= x[0] <= max(a, c) and min(b, d) <= x[1] <= max(b, d)
    for i in range(len(hull)):
        o, a = hull[i - 1], hull[i]
        if (a[0] - o[0]) * (x[1] - o[1]) - (a[1] - o[1]) * (x[0] - o[0]) < 0:
            return False
    return True


def aggregate_brute(agents, a):
    """max sum u_j(a_j) over all tuples summing to ``a``."""
    best = NEG_INF
    for combo in product(*(list(u.items()) for u in agents)):
        total = tuple(map(sum, zip(*(b for b, _ in combo))))
        if total == tuple(a):
            best = max(best, sum(v for _, v in combo))
    return best


def indirect(u, p):
    """max_b u(b) - p.b."""
    return max(v - sum(x * q for x, q in zip(b, p)) for b, v in u.items())


def demanded(agents, a, p):
    """Is ``a`` in the aggregate demand at ``p``?  Uses only enumeration."""
    U = aggregate_brute(agents, a)
    if U == NEG_INF:
        return False
    return U - sum(x * q for x, q in zip(a, p)) == sum(indirect(u, p) for u in agents)


def upper_envelope_1d(u, x):
    """Concave majorant of a 1-D utility at integer ``x`` (upper hull)."""
    pts = sorted((b[0], v) for b, v in u.items())
    if not pts[0][0] <= x <= pts[-1][0]:
        return NEG_INF
    best = NEG_INF
    for (x0, v0), (x1, v1) in combinations(pts, 2):
        if x0 <= x <= x1:
            best = max(best, v0 + (v1 - v0) * Fraction(x - x0, x1 - x0))
    for b, v in pts:
        if b == x:
            best = max(best, v)
    return best


def lp_vertices_max(c, A, b, box):
    """max c.x over {Ax <= b, 0 <= x <= box} by enumerating every vertex.

    Returns None when the polytope is empty.
    """
    n = len(c)
    rows = [list(r) for r in A] + [[-1 if i == j else 0 for j in range(n)] for i in range(n)] \
        + [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rhs = list(b) + [0] * n + [box] * n
    best = None
    for idx in combinations(range(len(rows)), n):
        M = [rows[i] for i in idx]
        d = det(M)
        if d == 0:
            continue
        # Cramer's rule
        x = []
        for k in range(n):
            Mk = [r[:k] + [rhs[i]] + r[k + 1:] for r, i in zip(M, idx)]
            x.append(Fraction(det(Mk), d))
        if all(sum(r[j] * x[j] for j in range(n)) <= h for r, h in zip(rows, rhs)):
            val = sum(ci * xi for ci, xi in zip(c, x))
            if best is None or val > best:
                best = val
    return best


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {first}] + part[i + 1:]
        yield part + [frozenset({first})]
