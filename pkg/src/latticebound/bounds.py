"""Volume bounds for lattice simplices and their equality certificates.

Implements the facet bound through a distinguished facet with a unique
relative-interior lattice point, the per-interior-point bound and its
minimum nu, the barycentric product functional tau, the symmetric-box
lattice-point inequality check, and the full proof trace (map to the
standard simplex, image lattice, symmetric box, half-space split) that
witnesses why the facet bound holds instance by instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .constructions import sylvester
from .exact import mat_inverse, mat_vec, primitive_direction
from .geometry import (
    Face,
    LatticeSimplex,
    barycentric,
    collinear,
    facets,
    integer_points,
    interior_points,
    relint_points,
    volume,
)


class ApplicabilityError(ValueError):
    """The hypotheses of the requested bound do not hold for this input."""


@dataclass(frozen=True)
class Lattice:
    """Rank-d lattice generated by the columns of a rational basis matrix."""

    basis: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.basis)
        object.__setattr__(self, "basis", rows)
        from .exact import det

        d = det([list(r) for r in rows])
        if d == 0:
            raise ValueError("lattice basis is singular")
        object.__setattr__(self, "_det", abs(d))

    @property
    def det(self) -> Fraction:
        return self._det

    @property
    def dim(self) -> int:
        return len(self.basis)

    def points_in_open_box(self, betas, limit=None):
        """Lattice points y with |y_i| < betas[i] for all i.

        Enumerates integer preimages z with basis . z in the open box,
        pushing the box constraints back through the basis.
        """
        d = self.dim
        betas = [Fraction(b) for b in betas]
        if len(betas) != d or any(b <= 0 for b in betas):
            raise ValueError("box half-widths must be positive, one per axis")
        rows = []
        for i in range(d):
            row = tuple(self.basis[i][j] for j in range(d))
            rows.append((row, betas[i], True))
            rows.append((tuple(-c for c in row), betas[i], True))
        zs = integer_points(rows, d, limit=limit)
        basis = [list(r) for r in self.basis]
        return [tuple(mat_vec(basis, list(z))) for z in zs]


@dataclass(frozen=True)
class FacetBoundResult:
    facet: Face
    relint_point: tuple[int, ...]
    betas: tuple[Fraction, ...]
    bound: Fraction
    tight: bool


@dataclass(frozen=True)
class PointBound:
    betas_desc: tuple[Fraction, ...]
    bound: Fraction


@dataclass(frozen=True)
class PikhurkoResult:
    per_point: dict
    nu: Fraction


@dataclass(frozen=True)
class VdcResult:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    tight: bool
    interior_count: int
    points: tuple


@dataclass(frozen=True)
class ProofTrace:
    lattice: Lattice
    box: tuple[Fraction, ...]
    y_set: tuple
    h_minus_count: int
    h_zero_count: int


@dataclass(frozen=True)
class EqualityCertificate:
    line_direction: tuple[int, ...]
    parallel_edge: tuple[int, int] | None
    collinear_ok: bool
    edge_ok: bool


def _unique_relint_point(f: Face):
    pts = relint_points(f, limit=1)
    if len(pts) != 1:
        raise ApplicabilityError(
            "facet does not have exactly one relative-interior lattice point"
        )
    return pts[0]


def facet_bound(s: LatticeSimplex, f: Face) -> FacetBoundResult:
    """Volume bound (k+1)/(d! b_1 ... b_d) through a qualifying facet."""
    if f.parent != s or f.dim != s.dim - 1:
        raise ApplicabilityError("face is not a facet of the given simplex")
    x = _unique_relint_point(f)
    betas = tuple(barycentric(x, f))
    k = len(interior_points(s))
    d = s.dim
    prod = Fraction(1)
    for b in betas:
        prod *= b
    bound = Fraction(k + 1) / (factorial(d) * prod)
    vol = volume(s)
    assert vol <= bound
    return FacetBoundResult(f, x, betas, bound, vol == bound)


def qualifying_facets(s: LatticeSimplex) -> list[Face]:
    """Facets with exactly one relative-interior lattice point."""
    out = []
    for f in facets(s):
        if len(relint_points(f, limit=1)) == 1:
            out.append(f)
    return out


def best_facet_bound(s: LatticeSimplex) -> FacetBoundResult:
    """Strongest facet bound over all qualifying facets."""
    results = [facet_bound(s, f) for f in qualifying_facets(s)]
    if not results:
        raise ApplicabilityError(
            "no facet has exactly one relative-interior lattice point"
        )
    return min(results, key=lambda r: r.bound)


def pikhurko(s: LatticeSimplex) -> PikhurkoResult:
    """Per-interior-point volume bounds k/(d! b_1 ... b_d) and their min nu.

    For each interior lattice point the d+1 barycentric coordinates are
    sorted descendingly and the smallest one is dropped.  Ties among
    minimal coordinates are harmless: dropping any minimal coordinate
    yields the same product.
    """
    pts = interior_points(s)
    k = len(pts)
    if k == 0:
        raise ApplicabilityError("bound requires at least one interior point")
    d = s.dim
    full = Face(s, tuple(range(d + 1)))
    per_point = {}
    nu = None
    for x in pts:
        betas = sorted(barycentric(x, full), reverse=True)
        prod = Fraction(1)
        for b in betas[:d]:
            prod *= b
        bound = Fraction(k) / (factorial(d) * prod)
        per_point[x] = PointBound(tuple(betas), bound)
        if nu is None or bound < nu:
            nu = bound
    assert volume(s) <= nu
    return PikhurkoResult(per_point, nu)


def tau(s: LatticeSimplex) -> Fraction:
    """Product of all barycentric coordinates of the unique interior point."""
    pts = interior_points(s, limit=1)
    if len(pts) != 1:
        raise ApplicabilityError("simplex must have exactly one interior point")
    full = Face(s, tuple(range(s.dim + 1)))
    prod = Fraction(1)
    for b in barycentric(pts[0], full):
        prod *= b
    return prod


def vdc_check(lat: Lattice, betas) -> VdcResult:
    """Symmetric-box instance of the lattice-point volume inequality.

    lhs = vol of the box [-b_1,b_1] x ... x [-b_d,b_d]; rhs counts the
    lattice points interior to the box.  holds must be true for every
    lattice and box; tight cases are the interesting ones.
    """
    betas = [Fraction(b) for b in betas]
    d = lat.dim
    lhs = Fraction(2) ** d
    for b in betas:
        lhs *= b
    pts = lat.points_in_open_box(betas)
    rhs = (len(pts) + 1) * Fraction(2) ** (d - 1) * lat.det
    return VdcResult(lhs, rhs, lhs <= rhs, lhs == rhs, len(pts), tuple(pts))


def proof_trace(s: LatticeSimplex, f: Face) -> ProofTrace:
    """Replays the facet-bound argument on a concrete (simplex, facet) pair.

    Translates the vertex opposite the facet to the origin, maps the
    facet vertices to the standard basis, and enumerates the image
    lattice inside the open symmetric box spanned by the barycentric
    coordinates of the facet's unique relative-interior lattice point.
    """
    if f.parent != s or f.dim != s.dim - 1:
        raise ApplicabilityError("face is not a facet of the given simplex")
    d = s.dim
    x = _unique_relint_point(f)
    betas = tuple(barycentric(x, f))
    opposite = next(
        i for i in range(d + 1) if i not in f.vertex_indices
    )
    v0 = s.vertices[opposite]
    # Columns of V are the facet vertices translated by -v0; phi = V^{-1}.
    cols = [tuple(c - o for c, o in zip(s.vertices[i], v0)) for i in f.vertex_indices]
    v_mat = [[cols[j][i] for j in range(d)] for i in range(d)]
    phi = mat_inverse(v_mat)
    lat = Lattice(tuple(tuple(row) for row in phi))
    y_set = lat.points_in_open_box(betas)
    # o-symmetry and the half-space split along sum of coordinates.
    y_lookup = set(y_set)
    h_minus = [y for y in y_set if sum(y) < 0]
    h_zero = [y for y in y_set if sum(y) == 0]
    assert all(tuple(-c for c in y) in y_lookup for y in y_set)
    assert len(y_set) == 2 * len(h_minus) + len(h_zero)
    assert len(h_zero) == 1 and all(c == 0 for c in h_zero[0])
    b = tuple(betas)
    # Shifting the negative-side points by b lands them strictly inside
    # the standard simplex (positive coordinates, coordinate sum < 1).
    for y in h_minus:
        shifted = [yc + bc for yc, bc in zip(y, b)]
        assert all(c > 0 for c in shifted) and sum(shifted) < 1
    k = len(interior_points(s))
    assert len(y_set) <= 2 * k + 1
    return ProofTrace(lat, b, tuple(y_set), len(h_minus), len(h_zero))


def equality_certificate(s: LatticeSimplex, f: Face) -> EqualityCertificate:
    """Verify the equality-case structure for a tight facet bound.

    Checks that the facet's relative-interior point and all interior
    lattice points lie on one line g and that some edge of the simplex
    is parallel to g.
    """
    fb = facet_bound(s, f)
    pts = interior_points(s)
    if not fb.tight or not pts:
        raise ApplicabilityError(
            "certificate requires a tight bound and at least one interior point"
        )
    all_pts = [fb.relint_point] + pts
    collinear_ok = collinear(all_pts)
    direction = primitive_direction(
        [a - b for a, b in zip(pts[0], fb.relint_point)]
    )
    parallel_edge = None
    verts = s.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            edge = [a - b for a, b in zip(verts[j], verts[i])]
            if primitive_direction(edge) == direction:
                parallel_edge = (i, j)
                break
        if parallel_edge:
            break
    return EqualityCertificate(
        direction, parallel_edge, collinear_ok, parallel_edge is not None
    )


def general_pk_bound(d: int, k: int) -> int:
    """The cited coarse upper volume bound (d(2d+1)(s_{2d+1}-1))^d k."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    return (d * (2 * d + 1) * (sylvester(2 * d + 1) - 1)) ** d * k
