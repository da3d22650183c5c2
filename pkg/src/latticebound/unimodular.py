"""Affine unimodular maps and canonical forms for lattice simplices."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations

from .exact import det, hnf, identity, mat_vec
from .geometry import LatticeSimplex


@dataclass(frozen=True)
class AffineUnimodular:
    """x -> u x + t with integer u, |det u| = 1, integer translation t."""

    u: tuple[tuple[int, ...], ...]
    t: tuple[int, ...]

    def __post_init__(self):
        u = tuple(tuple(int(x) for x in row) for row in self.u)
        t = tuple(int(x) for x in self.t)
        if len(t) != len(u) or any(len(row) != len(u) for row in u):
            raise ValueError("shape mismatch between matrix and translation")
        if abs(det([list(r) for r in u])) != 1:
            raise ValueError("matrix is not unimodular")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "t", t)

    @property
    def dim(self) -> int:
        return len(self.t)

    def __call__(self, point):
        img = mat_vec([list(r) for r in self.u], list(point))
        return tuple(int(a + b) for a, b in zip(img, self.t))


def apply(phi: AffineUnimodular, s: LatticeSimplex) -> LatticeSimplex:
    if phi.dim != s.dim:
        raise ValueError("dimension mismatch")
    return LatticeSimplex([phi(v) for v in s.vertices])


@dataclass(frozen=True)
class CanonicalForm:
    """Complete invariant under affine unimodular equivalence."""

    matrix: tuple[tuple[int, ...], ...]

    @property
    def encoding(self) -> str:
        return " ".join(str(x) for row in self.matrix for x in row)

    def key(self):
        return tuple(x for row in self.matrix for x in row)


def canonical_form(s: LatticeSimplex) -> CanonicalForm:
    """Minimal HNF over all (base vertex, ordering) choices.

    Basing the edge matrix at each candidate vertex quotients out
    translations; HNF quotients the left unimodular action; minimizing
    over all (d+1)! orderings quotients vertex relabelling.
    """
    d = s.dim
    verts = s.vertices
    best = None
    for base in range(d + 1):
        others = [verts[i] for i in range(d + 1) if i != base]
        for perm in permutations(others):
            edges = [
                [perm[j][i] - verts[base][i] for j in range(d)]
                for i in range(d)
            ]
            h, _ = hnf(edges)
            key = tuple(x for row in h for x in row)
            if best is None or key < best[0]:
                best = (key, h)
    return CanonicalForm(tuple(tuple(row) for row in best[1]))


def equivalent(a: LatticeSimplex, b: LatticeSimplex) -> bool:
    if a.dim != b.dim:
        raise ValueError("dimension mismatch")
    return canonical_form(a) == canonical_form(b)


def random_unimodular(d: int, seed: int, size: int = 4) -> AffineUnimodular:
    """Seeded product of elementary shears and permutations.

    ``size`` bounds the number of shear steps and the shear magnitudes,
    keeping entries small enough for downstream exact enumeration.
    """
    if d < 1:
        raise ValueError("need d >= 1")
    rng = random.Random(seed)
    u = identity(d)
    for _ in range(size):
        op = rng.choice(["shear", "swap", "negate"]) if d > 1 else "negate"
        if op == "shear":
            i, j = rng.sample(range(d), 2)
            c = rng.choice([-2, -1, 1, 2])
            for col in range(d):
                u[i][col] += c * u[j][col]
        elif op == "swap":
            i, j = rng.sample(range(d), 2)
            u[i], u[j] = u[j], u[i]
        else:
            i = rng.randrange(d)
            u[i] = [-x for x in u[i]]
    t = tuple(rng.randint(-size, size) for _ in range(d))
    return AffineUnimodular(tuple(tuple(row) for row in u), t)
