"""Exact rational predicates and solvers.

Points are tuples of exact scalars (`int` or `fractions.Fraction`); every
operation here is a pure function of its inputs and bit-reproducible.
Plain ints are accepted everywhere so that integer-coordinate samples take
the cheap arithmetic path; results that require division are Fractions.
"""

from fractions import Fraction
from itertools import combinations
from dataclasses import dataclass

from .errors import DimensionMismatch, NoUniquePoint
from .lp import lp_solve, lp_feasible

INSIDE = "Inside"
BOUNDARY = "Boundary"
OUTSIDE = "Outside"


def det(matrix):
    """Exact determinant (Bareiss for ints, plain elimination otherwise)."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        (a, b), (c, d) = matrix
        return a * d - b * c
    if n == 3:
        (a, b, c), (d, e, f), (g, h, i) = matrix
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    m = [list(row) for row in matrix]
    if all(isinstance(v, int) for row in m for v in row):
        # Bareiss fraction-free elimination
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[-1][-1]
    sign = 1
    result = Fraction(1)
    for k in range(n):
        if m[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        result *= Fraction(m[k][k])
        inv = Fraction(1, 1) / Fraction(m[k][k])
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return sign * result


def _sign(x):
    return (x > 0) - (x < 0)


def orientation(simplex_points, d):
    """Sign of det of the rows p_i - p_0; positive = counterclockwise in d=2.

    Zero iff the d+1 points are affinely dependent.
    """
    if len(simplex_points) != d + 1:
        raise DimensionMismatch(f"need {d + 1} points, got {len(simplex_points)}")
    for p in simplex_points:
        if len(p) != d:
            raise DimensionMismatch(f"point {p} has {len(p)} coords, expected {d}")
    p0 = simplex_points[0]
    rows = [[p[j] - p0[j] for j in range(d)] for p in simplex_points[1:]]
    return _sign(det(rows))


@dataclass(frozen=True)
class PointConfiguration:
    """(d+1)(q-1)+1 labeled points in R^d for q-block partition experiments."""

    d: int
    q: int
    points: tuple

    def __post_init__(self):
        expected = (self.d + 1) * (self.q - 1) + 1
        if len(self.points) != expected:
            raise DimensionMismatch(
                f"d={self.d}, q={self.q} needs {expected} points, got {len(self.points)}"
            )
        for p in self.points:
            if len(p) != self.d:
                raise DimensionMismatch(f"point {p} has wrong dimension")

    @property
    def n(self):
        return len(self.points)


def affinely_independent(points, d):
    if len(points) == 1:
        return True
    p0 = points[0]
    rows = [[p[j] - p0[j] for j in range(d)] for p in points[1:]]
    return _rank(rows) == len(points) - 1


def effective_general_position(config: PointConfiguration) -> bool:
    """True iff every (d+1)-subset of the points is affinely independent."""
    return points_in_general_position(config.points, config.d)


def points_in_general_position(points, d) -> bool:
    for subset in combinations(points, d + 1):
        if orientation(list(subset), d) == 0:
            return False
    return True


def _rank(rows):
    m = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


def barycentric_coordinates(p, simplex, d):
    """Barycentric coordinates of p w.r.t. an affinely independent simplex.

    Returns a list of Fractions summing to 1, or None when p is not in the
    affine hull of the simplex.
    """
    k = len(simplex)
    # Equations: sum(l) = 1 and sum(l_i * s_i[t]) = p[t] for each coordinate t.
    rows = [[Fraction(1)] * k + [Fraction(1)]]
    for t in range(d):
        rows.append([Fraction(s[t]) for s in simplex] + [Fraction(p[t])])
    sol = _solve_unique(rows, k)
    return sol


def _solve_unique(aug_rows, nvars):
    """Solve an augmented system; None if inconsistent, raises on freedom."""
    m = [row[:] for row in aug_rows]
    pivots = {}
    row = 0
    for col in range(nvars):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / Fraction(m[row][col])
        m[row] = [v * inv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    for r in range(row, len(m)):
        if m[r][-1] != 0:
            return None  # inconsistent
    if len(pivots) < nvars:
        raise NoUniquePoint("underdetermined")
    return [m[pivots[c]][-1] for c in range(nvars)]


def hull_membership(p, points, d=None):
    """Exact trichotomy of p versus conv(points).

    Inside means p admits an all-strictly-positive barycentric certificate on
    some affinely independent support of at most d+1 points; Boundary means
    p is in the hull but no such certificate exists.
    """
    if not points:
        raise DimensionMismatch("empty point set")
    if d is None:
        d = len(p)
    if len(p) != d or any(len(s) != d for s in points):
        raise DimensionMismatch("coordinate arity mismatch")

    if len(points) <= d + 1 and affinely_independent(points, d):
        coords = barycentric_coordinates(p, points, d)
        if coords is None:
            return OUTSIDE
        if any(c < 0 for c in coords):
            return OUTSIDE
        return INSIDE if all(c > 0 for c in coords) else BOUNDARY

    # General case: exact LP membership, then search for a strict support.
    n = len(points)
    A = [[1] * n] + [[s[t] for s in points] for t in range(d)]
    b = [1] + [p[t] for t in range(d)]
    if lp_feasible(A, b) is None:
        return OUTSIDE
    for size in range(1, d + 2):
        for support in combinations(points, size):
            if not affinely_independent(list(support), d):
                continue
            coords = barycentric_coordinates(p, list(support), d)
            if coords is not None and all(c > 0 for c in coords):
                return INSIDE
    return BOUNDARY


def common_point(blocks, d=None):
    """Some exact point in the intersection of the blocks' convex hulls.

    Returns a tuple of Fractions, or None when the intersection is empty.
    Implemented as exact phase-1 simplex feasibility over the barycentric
    variables of every block, with the blocks' combinations equated.
    """
    if len(blocks) < 2 or any(not blk for blk in blocks):
        raise DimensionMismatch("need at least two non-empty blocks")
    if d is None:
        d = len(blocks[0][0])
    for blk in blocks:
        for s in blk:
            if len(s) != d:
                raise DimensionMismatch("coordinate arity mismatch")

    sizes = [len(blk) for blk in blocks]
    offsets = [sum(sizes[:j]) for j in range(len(blocks))]
    nvars = sum(sizes)
    A, b = [], []
    for j, blk in enumerate(blocks):
        row = [0] * nvars
        for i in range(len(blk)):
            row[offsets[j] + i] = 1
        A.append(row)
        b.append(1)
    for j in range(1, len(blocks)):
        for t in range(d):
            row = [0] * nvars
            for i, s in enumerate(blocks[0]):
                row[offsets[0] + i] = -s[t]
            for i, s in enumerate(blocks[j]):
                row[offsets[j] + i] = s[t]
            A.append(row)
            b.append(0)
    x = lp_feasible(A, b)
    if x is None:
        return None
    lam = x[: sizes[0]]
    return tuple(
        sum(lam[i] * Fraction(blocks[0][i][t]) for i in range(sizes[0])) for t in range(d)
    )


def affine_intersection_point(blocks, d=None):
    """The unique common point of the blocks' affine hulls.

    Raises NoUniquePoint("infeasible") when the affine hulls do not meet and
    NoUniquePoint("underdetermined") when they meet in more than a point.
    The caller still has to verify convex-hull (not affine-hull) membership.
    """
    if d is None:
        d = len(blocks[0][0])
    # Unknowns: x (d coords), then per block the affine parameters t_i.
    nparams = sum(len(blk) - 1 for blk in blocks)
    nvars = d + nparams
    rows = []
    off = d
    for blk in blocks:
        b0 = blk[0]
        for t in range(d):
            row = [Fraction(0)] * (nvars + 1)
            row[t] = Fraction(1)
            for i, s in enumerate(blk[1:]):
                row[off + i] = Fraction(b0[t] - s[t])
            row[-1] = Fraction(b0[t])
            rows.append(row)
        off += len(blk) - 1

    # Reduced row echelon form; x must come out uniquely determined.
    m = rows
    pivots = {}
    row = 0
    for col in range(nvars):
        piv = next((r for r in range(row, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [v * inv for v in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[row])]
        pivots[col] = row
        row += 1
    for r in range(row, len(m)):
        if m[r][-1] != 0:
            raise NoUniquePoint("infeasible")
    free = [c for c in range(nvars) if c not in pivots]
    point = []
    for t in range(d):
        if t not in pivots:
            raise NoUniquePoint("underdetermined")
        r = pivots[t]
        if any(m[r][c] != 0 for c in free):
            raise NoUniquePoint("underdetermined")
        point.append(m[r][-1])
    return tuple(point)
