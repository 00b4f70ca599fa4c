"""Shared random generators and independent oracles for the test suite.

Oracles here deliberately avoid the library's own code paths: determinants
are permutation sums, Arf comes from the quadratic refinement, isotropic
classes and lattice membership come from bounded brute force.
"""

from __future__ import annotations

import itertools
import math
import random

from concordance.laurent import LaurentPoly
from concordance.seifert import SeifertMatrix


def random_valid_2x2(rng: random.Random, bound: int = 5) -> SeifertMatrix:
    """Random 2x2 integer matrix with det(V - V^T) = 1."""
    a = rng.randint(-bound, bound)
    d = rng.randint(-bound, bound)
    c = rng.randint(-bound, bound)
    b = c + rng.choice((1, -1))
    return SeifertMatrix.from_rows([[a, b], [c, d]])


def random_valid_seifert(rng: random.Random, genus: int,
                         bound: int = 3) -> SeifertMatrix:
    """Random 2g x 2g Seifert matrix: V - V^T is the standard symplectic form."""
    n = 2 * genus
    j = [[0] * n for _ in range(n)]
    for g in range(genus):
        j[2 * g][2 * g + 1] = 1
        j[2 * g + 1][2 * g] = -1
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = rng.randint(-bound, bound)
        for k in range(i + 1, n):
            rows[i][k] = rng.randint(-bound, bound)
            rows[k][i] = rows[i][k] - j[i][k]
    return SeifertMatrix.from_rows(rows)


def random_valid_genus2(rng: random.Random, bound: int = 3) -> SeifertMatrix:
    return random_valid_seifert(rng, 2, bound)


def random_unimodular(rng: random.Random, n: int = 2,
                      shears: int = 6) -> list[list[int]]:
    """Product of elementary shears and swaps; |det| = 1."""
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        q = rng.randint(-3, 3)
        for k in range(n):
            u[i][k] += q * u[j][k]
        if rng.random() < 0.3:
            u[i], u[j] = u[j], u[i]
    return u


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
             for j in range(len(b[0]))] for i in range(len(a))]


def leibniz_det_int(rows) -> int:
    """Permutation-sum determinant over the integers."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        prod = 1
        for i in range(n):
            prod *= rows[i][perm[i]]
        total += sign * prod
    return total


def leibniz_det_poly(rows) -> LaurentPoly:
    """Permutation-sum determinant for a matrix of Laurent polynomials."""
    n = len(rows)
    total = LaurentPoly.zero()
    for perm in itertools.permutations(range(n)):
        sign = _perm_sign(perm)
        prod = LaurentPoly.one()
        for i in range(n):
            prod = prod * rows[i][perm[i]]
        total = total + (prod if sign > 0 else -prod)
    return total


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def alexander_raw(v: SeifertMatrix) -> LaurentPoly:
    """det(V - t*V^T) by permutation sum, without normalization."""
    n = v.dim
    t = LaurentPoly.var()
    rows = [[LaurentPoly.constant(v.entries[i][j]) - t * v.entries[j][i]
             for j in range(n)] for i in range(n)]
    return leibniz_det_poly(rows)


def is_unit_multiple(p: LaurentPoly, q: LaurentPoly) -> bool:
    """p == +-t^k * q for some k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    shift = p.min_exp() - q.min_exp()
    shifted = q * LaurentPoly.monomial(1, shift)
    return p == shifted or p == -shifted


def democratic_arf(v: SeifertMatrix) -> int:
    """Quadratic-refinement Arf for a 2x2 form: the value q(c) = c^T V c
    mod 2 takes on three of the four F_2 classes; that value is the Arf
    invariant."""
    assert v.dim == 2
    ones = 0
    for c in ((0, 1), (1, 0), (1, 1)):
        q = sum(c[i] * v.entries[i][j] * c[j]
                for i in range(2) for j in range(2))
        ones += q % 2
    return 1 if ones == 3 else 0


def brute_force_isotropics(v: SeifertMatrix, bound: int = 10) -> set[tuple[int, int]]:
    """All primitive isotropic classes in the box, first nonzero coord positive."""
    found = set()
    for u in range(-bound, bound + 1):
        for w in range(-bound, bound + 1):
            if (u, w) == (0, 0) or math.gcd(u, w) != 1:
                continue
            q = (v.entries[0][0] * u * u
                 + (v.entries[0][1] + v.entries[1][0]) * u * w
                 + v.entries[1][1] * w * w)
            if q != 0:
                continue
            if u < 0 or (u == 0 and w < 0):
                u2, w2 = -u, -w
            else:
                u2, w2 = u, w
            found.add((u2, w2))
    return found


def brute_force_colspace(m, v, bound: int = 50) -> tuple[int, ...] | None:
    """Search the coefficient box |x_i| <= bound for M x = v (n <= 2)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    assert cols <= 2
    span = sorted(range(-bound, bound + 1), key=abs)
    if cols == 0:
        return () if all(t == 0 for t in v) else None
    if cols == 1:
        for x in span:
            if all(m[i][0] * x == v[i] for i in range(rows)):
                return (x,)
        return None
    for x in span:
        for y in span:
            if all(m[i][0] * x + m[i][1] * y == v[i] for i in range(rows)):
                return (x, y)
    return None
