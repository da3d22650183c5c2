"""Named simplices: Sylvester sequence, S_{d,k}, T_d, and related objects."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .geometry import Face, LatticeSimplex, barycentric, volume


_sylvester_cache = [2]
_sylvester_lock = threading.Lock()


def sylvester(i: int) -> int:
    """i-th term of 2, 3, 7, 43, 1807, ... with s_i = 1 + s_1 ... s_{i-1}."""
    if i < 1:
        raise ValueError("Sylvester index must be >= 1")
    if i > len(_sylvester_cache):
        with _sylvester_lock:
            while i > len(_sylvester_cache):
                prod = 1
                for v in _sylvester_cache:
                    prod *= v
                nxt = 1 + prod
                # product identity s_1 ... s_{n-1} = s_n - 1, by construction
                assert prod == nxt - 1
                _sylvester_cache.append(nxt)
    return _sylvester_cache[i - 1]


def _axis_simplex(scales) -> LatticeSimplex:
    d = len(scales)
    verts = [tuple(0 for _ in range(d))]
    for i, c in enumerate(scales):
        verts.append(tuple(c if j == i else 0 for j in range(d)))
    return LatticeSimplex(verts)


def zpw_simplex(d: int, k: int) -> LatticeSimplex:
    """conv(o, s_1 e_1, ..., s_{d-1} e_{d-1}, (k+1)(s_d - 1) e_d).

    Has k interior lattice points and volume (k+1)(s_d-1)^2 / d!.
    """
    if d < 1 or k < 0:
        raise ValueError("need d >= 1 and k >= 0")
    scales = [sylvester(i) for i in range(1, d)]
    scales.append((k + 1) * (sylvester(d) - 1))
    s = _axis_simplex(scales)
    expected = Fraction((k + 1) * (sylvester(d) - 1) ** 2, factorial(d))
    assert volume(s) == expected
    return s


def t_simplex(d: int) -> LatticeSimplex:
    """conv(o, s_1 e_1, ..., s_d e_d): one interior point, (1, ..., 1)."""
    if d < 1:
        raise ValueError("need d >= 1")
    s = _axis_simplex([sylvester(i) for i in range(1, d + 1)])
    # (1, ..., 1) is strictly interior: all barycentric coordinates positive.
    full = Face(s, tuple(range(d + 1)))
    assert all(b > 0 for b in barycentric([1] * d, full))
    return s


def exceptional_p31() -> LatticeSimplex:
    """The second volume maximizer with one interior point in dimension 3."""
    return LatticeSimplex([(0, 0, 0), (2, 0, 0), (0, 6, 0), (0, 0, 6)])


def lift(t: LatticeSimplex, k: int) -> LatticeSimplex:
    """conv(t x {0} union {(k+1) e_d}) for a base simplex with o interior.

    For any (d-1)-simplex t with exactly one interior lattice point at the
    origin, the result has k interior lattice points (all on the last
    axis) and the base facet t x {0} has the origin as its unique
    relative-interior lattice point.
    """
    if k < 0:
        raise ValueError("need k >= 0")
    base_dim = t.dim
    full = Face(t, tuple(range(base_dim + 1)))
    betas = barycentric([0] * base_dim, full)
    if any(b <= 0 for b in betas):
        raise ValueError("origin is not interior to the base simplex")
    verts = [v + (0,) for v in t.vertices]
    verts.append(tuple(0 for _ in range(base_dim)) + (k + 1,))
    return LatticeSimplex(verts)


def inscribed_cube_scale(d: int) -> Fraction:
    """Edge scale (s_d - 1)/(s_d - 2) of the largest cube inside T_{d-1}."""
    if d < 2:
        raise ValueError("need d >= 2")
    lam = Fraction(sylvester(d) - 1, sylvester(d) - 2)
    # Egyptian-fraction identity: the cube's far corner hits the slanted
    # facet of T_{d-1} exactly.
    assert sum(lam / sylvester(i) for i in range(1, d)) == 1
    return lam
