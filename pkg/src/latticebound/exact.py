"""Exact rational linear algebra: determinants, solving, Hermite normal form.

Everything in here works over arbitrary-precision integers and
``fractions.Fraction``.  There is deliberately no floating point anywhere;
every downstream check is an exact equality or exact inequality.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


class LinAlgError(ValueError):
    """Dimension mismatch, singularity or rank deficiency."""


def _as_fraction_rows(m):
    return [[Fraction(x) for x in row] for row in m]


def _check_square(m):
    n = len(m)
    if n == 0 or any(len(row) != n for row in m):
        raise LinAlgError("matrix is not square")
    return n


def _clear_denominators(m):
    """Scale each row to integers; return (int rows, product of scales)."""
    rows = []
    scale = 1
    for row in m:
        mult = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * mult) for x in row])
        scale *= mult
    return rows, scale


def det(m) -> Fraction:
    """Exact determinant via Bareiss fraction-free elimination."""
    n = _check_square(m)
    a, scale = _clear_denominators(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], scale)


def solve(m, rhs) -> list[Fraction]:
    """Exact solution x of m x = rhs for nonsingular square m."""
    n = _check_square(m)
    if len(rhs) != n:
        raise LinAlgError("right-hand side has wrong length")
    aug = [list(row) + [r] for row, r in zip(m, rhs)]
    a, _ = _clear_denominators(aug)
    # Bareiss forward elimination on the augmented matrix.
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise LinAlgError("matrix is singular")
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    if a[n - 1][n - 1] == 0:
        raise LinAlgError("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]
    return x


def identity(n) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a or not b or len(a[0]) != len(b):
        raise LinAlgError("incompatible shapes for multiplication")
    cols = len(b[0])
    inner = len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
        for i in range(len(a))
    ]


def mat_vec(m, v):
    if not m or len(m[0]) != len(v):
        raise LinAlgError("incompatible shapes for matrix-vector product")
    return [sum(row[j] * v[j] for j in range(len(v))) for row in m]


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_inverse(m) -> list[list[Fraction]]:
    n = _check_square(m)
    cols = []
    for j in range(n):
        e = [Fraction(1) if i == j else Fraction(0) for i in range(n)]
        cols.append(solve(m, e))
    return transpose(cols)


def is_unimodular(u) -> bool:
    try:
        d = det(u)
    except LinAlgError:
        return False
    return abs(d) == 1 and all(
        Fraction(x).denominator == 1 for row in u for x in row
    )


def hnf(m) -> tuple[list[list[int]], list[list[int]]]:
    """Hermite normal form of an integer matrix under left unimodular action.

    Returns (h, u) with h = u m, u unimodular, h upper triangular with
    positive diagonal, and every entry above a pivot reduced into
    [0, pivot).  This normalization makes h the unique representative of
    the left coset of m, which is what canonical forms rely on.
    """
    if not m or any(len(row) != len(m[0]) for row in m):
        raise LinAlgError("matrix is empty or ragged")
    if any(int(x) != x for row in m for x in row):
        raise LinAlgError("hnf requires integer entries")
    rows = len(m)
    cols = len(m[0])
    if cols > rows:
        raise LinAlgError("matrix cannot have full column rank")
    h = [[int(x) for x in row] for row in m]
    u = identity(rows)
    pivot_row = 0
    for col in range(cols):
        # Euclidean reduction among rows pivot_row.. on this column.
        while True:
            nz = [i for i in range(pivot_row, rows) if h[i][col] != 0]
            if not nz:
                raise LinAlgError("matrix is rank deficient")
            if len(nz) == 1:
                i = nz[0]
                h[pivot_row], h[i] = h[i], h[pivot_row]
                u[pivot_row], u[i] = u[i], u[pivot_row]
                break
            nz.sort(key=lambda i: abs(h[i][col]))
            small, other = nz[0], nz[1]
            q = h[other][col] // h[small][col]
            h[other] = [a - q * b for a, b in zip(h[other], h[small])]
            u[other] = [a - q * b for a, b in zip(u[other], u[small])]
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        p = h[pivot_row][col]
        for i in range(pivot_row):
            q = h[i][col] // p
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[pivot_row])]
                u[i] = [a - q * b for a, b in zip(u[i], u[pivot_row])]
        pivot_row += 1
    return h, u


def primitive_direction(v) -> tuple[int, ...]:
    """Integer direction divided by gcd, first nonzero entry positive."""
    fracs = [Fraction(x) for x in v]
    if all(x == 0 for x in fracs):
        raise LinAlgError("zero vector has no direction")
    mult = lcm(*(x.denominator for x in fracs))
    ints = [int(x * mult) for x in fracs]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)
