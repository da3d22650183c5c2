"""Lattice simplices and convex lattice polygons over exact rationals.

Provides volumes, barycentric coordinates, H-representations, slices, and
exact enumeration of interior / relative-interior lattice points.  The
enumeration is a recursive coordinate sweep driven by Fourier-Motzkin
bounds, so it never scans full bounding boxes (those explode doubly
exponentially for the simplices this library cares about).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, gcd

from .exact import (
    LinAlgError,
    det,
    solve,
)


class DegeneracyError(ValueError):
    """Affinely dependent vertices where independence is required."""


class HullMembershipError(ValueError):
    """Point does not lie in the affine hull of the given face."""


class EnumerationError(ValueError):
    """Point enumeration over an unbounded region was requested."""


# ---------------------------------------------------------------------------
# Fourier-Motzkin sweep enumeration
#
# A linear system is a list of rows (coeffs, rhs, strict) encoding
# coeffs . x <= rhs, or < if strict.  Equalities are passed as two
# opposite non-strict rows.
# ---------------------------------------------------------------------------

def _eliminate_last(rows, nvars):
    zero, pos, neg = [], [], []
    for a, b, strict in rows:
        c = a[nvars - 1]
        if c == 0:
            zero.append((a[: nvars - 1], b, strict))
        elif c > 0:
            pos.append((a, b, strict))
        else:
            neg.append((a, b, strict))
    out = zero
    for ap, bp, sp in pos:
        cp = ap[nvars - 1]
        for an, bn, sn in neg:
            cn = -an[nvars - 1]
            coeffs = tuple(
                ap[i] / cp + an[i] / cn for i in range(nvars - 1)
            )
            out.append((coeffs, bp / cp + bn / cn, sp or sn))
    return out


def _lower_int(bound, strict):
    # smallest integer x with x > bound (strict) or x >= bound
    if bound.denominator == 1:
        return bound.numerator + 1 if strict else bound.numerator
    return ceil(bound)


def _upper_int(bound, strict):
    if bound.denominator == 1:
        return bound.numerator - 1 if strict else bound.numerator
    return floor(bound)


def integer_points(rows, nvars, limit=None):
    """All integer solutions of the system, in lexicographic order.

    ``limit``: stop as soon as more than ``limit`` points were found and
    return the truncated list (used for early-exit counting).
    """
    rows = [
        (tuple(Fraction(c) for c in a), Fraction(b), strict)
        for a, b, strict in rows
    ]
    if nvars == 0:
        return [()]
    systems = [None] * (nvars + 1)
    systems[nvars] = rows
    for v in range(nvars, 1, -1):
        systems[v - 1] = _eliminate_last(systems[v], v)

    results = []

    def sweep(prefix, v):
        lo, lo_strict = None, False
        hi, hi_strict = None, False
        for a, b, strict in systems[v + 1]:
            c = a[v]
            rest = b - sum(a[i] * prefix[i] for i in range(v))
            if c == 0:
                if rest < 0 or (rest == 0 and strict):
                    return False
            elif c > 0:
                bound = rest / c
                if hi is None or bound < hi or (bound == hi and strict):
                    hi, hi_strict = bound, strict
            else:
                bound = rest / c
                if lo is None or bound > lo or (bound == lo and strict):
                    lo, lo_strict = bound, strict
        if lo is None or hi is None:
            raise EnumerationError("region is unbounded")
        for x in range(_lower_int(lo, lo_strict), _upper_int(hi, hi_strict) + 1):
            if v + 1 == nvars:
                results.append(prefix + (x,))
                if limit is not None and len(results) > limit:
                    return True
            else:
                if sweep(prefix + (x,), v + 1):
                    return True
        return False

    sweep((), 0)
    return results


def _feasible(rows, nvars):
    """Real feasibility of a system via full FM elimination."""
    rows = [
        (tuple(Fraction(c) for c in a), Fraction(b), strict)
        for a, b, strict in rows
    ]
    for v in range(nvars, 0, -1):
        rows = _eliminate_last(rows, v)
    for _, b, strict in rows:
        if b < 0 or (b == 0 and strict):
            return False
    return True


# ---------------------------------------------------------------------------
# Domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LatticeSimplex:
    """d+1 affinely independent integer points in Z^d."""

    vertices: tuple[tuple[int, ...], ...]

    def __init__(self, vertices):
        verts = tuple(tuple(int(c) for c in v) for v in vertices)
        if not verts:
            raise DegeneracyError("no vertices")
        d = len(verts[0])
        if len(verts) != d + 1 or any(len(v) != d for v in verts):
            raise DegeneracyError(
                f"expected {d + 1} vertices of dimension {d}"
            )
        object.__setattr__(self, "vertices", verts)
        if det(self.edge_matrix()) == 0:
            raise DegeneracyError("vertices are affinely dependent")

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def edge_matrix(self):
        """Columns are v_i - v_0 for i = 1..d."""
        v0 = self.vertices[0]
        return [
            [self.vertices[j + 1][i] - v0[i] for j in range(self.dim)]
            for i in range(self.dim)
        ]


@dataclass(frozen=True)
class Face:
    parent: LatticeSimplex
    vertex_indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(self.vertex_indices)
        n = len(self.parent.vertices)
        if not idx or any(i < 0 or i >= n for i in idx):
            raise ValueError("invalid vertex indices")
        if list(idx) != sorted(set(idx)):
            raise ValueError("vertex indices must be strictly increasing")
        object.__setattr__(self, "vertex_indices", idx)

    @property
    def vertices(self):
        return tuple(self.parent.vertices[i] for i in self.vertex_indices)

    @property
    def dim(self) -> int:
        return len(self.vertex_indices) - 1


@dataclass(frozen=True)
class HalfspaceSystem:
    """Exact H-representation {x : a x <= b}."""

    a: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]

    @property
    def nvars(self) -> int:
        return len(self.a[0]) if self.a else 0

    def rows(self, strict=False):
        return [(ai, bi, strict) for ai, bi in zip(self.a, self.b)]

    def contains(self, x, strict=False) -> bool:
        x = [Fraction(c) for c in x]
        for ai, bi in zip(self.a, self.b):
            lhs = sum(c * xc for c, xc in zip(ai, x))
            if lhs > bi or (strict and lhs == bi):
                return False
        return True

    def is_feasible(self) -> bool:
        return _feasible(self.rows(), self.nvars)


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon, vertices counterclockwise."""

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        verts = tuple(tuple(int(c) for c in v) for v in self.vertices)
        if len(verts) < 3 or any(len(v) != 2 for v in verts):
            raise ValueError("polygon needs at least 3 points in Z^2")
        n = len(verts)
        for i in range(n):
            ax, ay = verts[i]
            bx, by = verts[(i + 1) % n]
            cx, cy = verts[(i + 2) % n]
            cross = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            if cross <= 0:
                raise ValueError(
                    "polygon is not strictly convex counterclockwise"
                )
        object.__setattr__(self, "vertices", verts)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def volume(s: LatticeSimplex) -> Fraction:
    """|det(edge matrix)| / d!."""
    d = s.dim
    fact = 1
    for i in range(2, d + 1):
        fact *= i
    return abs(det(s.edge_matrix())) / fact


def barycentric(x, f: Face) -> list[Fraction]:
    """Barycentric coordinates of x with respect to the face f.

    x must lie in aff(f), which is checked exactly.
    """
    w = f.vertices
    m = len(w) - 1
    d = f.parent.dim
    x = [Fraction(c) for c in x]
    # Rows: affine constraint plus the d coordinate equations.
    full = [[Fraction(1)] * (m + 1)] + [
        [Fraction(w[j][i]) for j in range(m + 1)] for i in range(d)
    ]
    rhs = [Fraction(1)] + x
    pivot_rows = _independent_rows(full, m + 1)
    if len(pivot_rows) < m + 1:
        raise DegeneracyError("face vertices are affinely dependent")
    sub = [full[r] for r in pivot_rows]
    sub_rhs = [rhs[r] for r in pivot_rows]
    beta = solve(sub, sub_rhs)
    for r in range(d + 1):
        if r in pivot_rows:
            continue
        if sum(full[r][j] * beta[j] for j in range(m + 1)) != rhs[r]:
            raise HullMembershipError("point is outside the affine hull")
    return beta


def _independent_rows(mat, target_rank):
    """Indices of a maximal independent row subset (up to target_rank)."""
    chosen = []
    basis = []  # echelonized copies of chosen rows
    for r, row in enumerate(mat):
        vec = [Fraction(c) for c in row]
        for b in basis:
            p = next(i for i, c in enumerate(b) if c != 0)
            if vec[p] != 0:
                fac = vec[p] / b[p]
                vec = [vc - fac * bc for vc, bc in zip(vec, b)]
        if any(c != 0 for c in vec):
            chosen.append(r)
            basis.append(vec)
            if len(chosen) == target_rank:
                break
    return chosen


def facets(s: LatticeSimplex) -> list[Face]:
    n = len(s.vertices)
    return [
        Face(s, tuple(j for j in range(n) if j != i)) for i in range(n)
    ]


def _facet_inequality(s: LatticeSimplex, omit: int):
    """Inward inequality (a, b) tight on the facet omitting vertex `omit`."""
    d = s.dim
    w = [s.vertices[j] for j in range(d + 1) if j != omit]
    # Normal via cofactors of the (d x (d-1)) edge matrix of the facet.
    edges = [
        [w[j + 1][i] - w[0][i] for j in range(d - 1)] for i in range(d)
    ]
    normal = []
    for i in range(d):
        minor = [edges[r] for r in range(d) if r != i]
        cof = det(minor) if d > 1 else Fraction(1)
        normal.append(cof if i % 2 == 0 else -cof)
    b = sum(n * c for n, c in zip(normal, w[0]))
    inside = sum(n * c for n, c in zip(normal, s.vertices[omit]))
    if inside == b:
        raise DegeneracyError("omitted vertex lies on the facet hyperplane")
    if inside > b:
        normal = [-n for n in normal]
        b = -b
    # Normalize integer rows by gcd for readability and stability.
    ints = [int(n) for n in normal] + [int(b)]
    g = gcd(*ints)
    if g > 1:
        normal = [Fraction(n, g) for n in normal]
        b = Fraction(b, g)
    return tuple(Fraction(n) for n in normal), Fraction(b)


def hrep(s: LatticeSimplex) -> HalfspaceSystem:
    """d+1 inequalities; x in s iff all hold, x in int(s) iff all strict."""
    rows = [_facet_inequality(s, i) for i in range(s.dim + 1)]
    return HalfspaceSystem(
        tuple(a for a, _ in rows), tuple(b for _, b in rows)
    )


def interior_points(s: LatticeSimplex, limit=None) -> list[tuple[int, ...]]:
    """All lattice points with strictly positive barycentric coordinates."""
    h = hrep(s)
    return integer_points(h.rows(strict=True), s.dim, limit=limit)


def relint_points(f: Face, limit=None) -> list[tuple[int, ...]]:
    """Lattice points in the relative interior of the face f.

    The relative interior of a dimension-0 face is the vertex itself.
    """
    m = f.dim
    if m == 0:
        return [tuple(f.vertices[0])]
    d = f.parent.dim
    w = f.vertices
    full = [[Fraction(1)] * (m + 1)] + [
        [Fraction(w[j][i]) for j in range(m + 1)] for i in range(d)
    ]
    pivot_rows = _independent_rows(full, m + 1)
    if len(pivot_rows) < m + 1:
        raise DegeneracyError("face vertices are affinely dependent")
    sub = [full[r] for r in pivot_rows]
    # beta(x) = sub^{-1} y_R where y = (1, x_1, ..., x_d).  Express each
    # beta_j as an affine function of x by solving against unit vectors.
    from .exact import mat_inverse

    inv = mat_inverse(sub)
    # beta_j(x) = sum_r inv[j][r] * y_{pivot_rows[r]}
    beta_lin = []  # (coeffs over x, constant)
    for j in range(m + 1):
        coeffs = [Fraction(0)] * d
        const = Fraction(0)
        for r, pr in enumerate(pivot_rows):
            if pr == 0:
                const += inv[j][r]
            else:
                coeffs[pr - 1] += inv[j][r]
        beta_lin.append((coeffs, const))
    rows = []
    # Strict positivity of each barycentric coordinate: -beta_j(x) < 0.
    for coeffs, const in beta_lin:
        rows.append((tuple(-c for c in coeffs), const, True))
    # Affine-hull consistency for non-pivot coordinate rows (equalities).
    for r in range(d + 1):
        if r in pivot_rows:
            continue
        coeffs = [Fraction(0)] * d
        rhs = Fraction(0)
        if r == 0:
            rhs = Fraction(1)
        else:
            coeffs[r - 1] = Fraction(-1)
        for j in range(m + 1):
            bc, bconst = beta_lin[j]
            fac = full[r][j]
            coeffs = [c + fac * bcj for c, bcj in zip(coeffs, bc)]
            rhs -= fac * bconst
        # coeffs . x == rhs  (note rhs sign assembled above)
        rows.append((tuple(coeffs), rhs, False))
        rows.append((tuple(-c for c in coeffs), -rhs, False))
    return integer_points(rows, d, limit=limit)


def slice_system(s: LatticeSimplex, t) -> HalfspaceSystem:
    """H-representation of {y in R^{d-1} : (y, t) in s}."""
    if s.dim < 2:
        raise ValueError("slices require ambient dimension >= 2")
    t = Fraction(t)
    h = hrep(s)
    a_rows = []
    b_rows = []
    for ai, bi in zip(h.a, h.b):
        coeffs = ai[:-1]
        rhs = bi - ai[-1] * t
        if all(c == 0 for c in coeffs) and rhs >= 0:
            continue  # satisfied degenerate row; keep infeasible ones
        a_rows.append(coeffs)
        b_rows.append(rhs)
    return HalfspaceSystem(tuple(a_rows), tuple(b_rows))


def collinear(points) -> bool:
    """True iff the difference set of the points has rank <= 1."""
    pts = [[Fraction(c) for c in p] for p in points]
    if not pts:
        raise ValueError("need at least one point")
    diffs = [
        [c - c0 for c, c0 in zip(p, pts[0])] for p in pts[1:]
    ]
    diffs = [dv for dv in diffs if any(c != 0 for c in dv)]
    if len(diffs) <= 1:
        return True
    ref = diffs[0]
    for dv in diffs[1:]:
        # rank-1 test: all 2x2 minors with the reference vector vanish
        for i in range(len(ref)):
            for j in range(i + 1, len(ref)):
                if ref[i] * dv[j] - ref[j] * dv[i] != 0:
                    return False
    return True


def polygon_counts(p: LatticePolygon):
    """(area, boundary count, interior count) via shoelace and Pick."""
    verts = p.vertices
    n = len(verts)
    twice_area = 0
    boundary = 0
    for i in range(n):
        ax, ay = verts[i]
        bx, by = verts[(i + 1) % n]
        twice_area += ax * by - bx * ay
        boundary += gcd(bx - ax, by - ay)
    area = Fraction(twice_area, 2)
    interior = area - Fraction(boundary, 2) + 1
    if interior.denominator != 1:
        raise ValueError("Pick count is not integral; invalid polygon")
    return area, boundary, int(interior)
