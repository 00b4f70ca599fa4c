"""Seifert-matrix invariants.

A genus-g Seifert matrix is a 2g x 2g integer matrix V of linking numbers
with det(V - V^T) = 1; the empty matrix (g = 0) is the unknot. From V we
compute the normalized Alexander polynomial det(V - t*V^T), the Arf
invariant through the value at -1, the Levine-Tristram signature function,
and the primitive isotropic classes of the form (the surgery-curve classes
on a genus-1 surface).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from collections.abc import Sequence

from .errors import (DimensionMismatch, InvalidDeterminant,
                     InvalidSeifertMatrix, SingularEvaluation)
from .intlattice import det_int
from .laurent import LaurentPoly

DEFAULT_TOLERANCE = 1e-9


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise InvalidSeifertMatrix("matrix is not square")
        if n % 2 != 0:
            raise InvalidSeifertMatrix(f"odd dimension {n}")
        if n:
            skew = [[self.entries[i][j] - self.entries[j][i] for j in range(n)]
                    for i in range(n)]
            if det_int(skew) != 1:
                raise InvalidSeifertMatrix("det(V - V^T) != 1")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SeifertMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def transpose(self) -> "SeifertMatrix":
        return SeifertMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def mirror(self) -> "SeifertMatrix":
        """Seifert matrix -V^T of the mirror image."""
        n = self.dim
        return SeifertMatrix(tuple(tuple(-self.entries[j][i] for j in range(n))
                                   for i in range(n)))

    def __str__(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, row)) + "]"
                              for row in self.entries) + "]"


def _poly_det(rows: list[list[LaurentPoly]]) -> LaurentPoly:
    # cofactor expansion along the first remaining row; fine at 2g <= 8
    n = len(rows)
    if n == 0:
        return LaurentPoly.one()
    if n == 1:
        return rows[0][0]
    total = LaurentPoly.zero()
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = entry * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander(v: SeifertMatrix) -> LaurentPoly:
    """Normalized Alexander polynomial: det(V - t*V^T) with p(1) = 1, p(t) = p(1/t)."""
    n = v.dim
    if n == 0:
        return LaurentPoly.one()
    t = LaurentPoly.var()
    rows = [[LaurentPoly.constant(v.entries[i][j]) - t * v.entries[j][i]
             for j in range(n)] for i in range(n)]
    return _poly_det(rows).conway_normalized()


def arf(v: SeifertMatrix) -> int:
    """Arf invariant in Z/2, read off the Alexander polynomial at -1 mod 8."""
    residue = alexander(v).eval_int(-1) % 8
    if residue == 1:
        return 0
    if residue == 5:
        return 1
    raise InvalidDeterminant(
        f"alexander(-1) = {residue} mod 8, expected 1 or 5")


def levine_tristram(v: SeifertMatrix, theta: float,
                    tolerance: float = DEFAULT_TOLERANCE) -> int:
    """Signature of (1-w)V + (1-conj(w))V^T at w = e^{i*theta}.

    Raises SingularEvaluation when e^{i*theta} is at (or within
    `tolerance` of) a root of the Alexander polynomial, i.e. a jump point
    of the signature function.
    """
    if not 0 < theta < 2 * math.pi:
        raise ValueError(f"angle {theta} outside (0, 2*pi)")
    n = v.dim
    if n == 0:
        return 0
    delta = alexander(v)
    if abs(delta.eval_circle(theta)) <= tolerance:
        raise SingularEvaluation(
            f"angle {theta} is at or near a signature jump point",
            theta=theta)
    w = complex(math.cos(theta), math.sin(theta))
    a, b = 1 - w, 1 - w.conjugate()
    h = [[a * v.entries[i][j] + b * v.entries[j][i] for j in range(n)]
         for i in range(n)]
    if n == 2:
        # closed form: signs of trace and determinant of a 2x2 Hermitian matrix
        trace = h[0][0].real + h[1][1].real
        det = h[0][0].real * h[1][1].real - abs(h[0][1]) ** 2
        if det > 0:
            return 2 if trace > 0 else -2
        if det < 0:
            return 0
        raise SingularEvaluation(
            f"degenerate Hermitian form at angle {theta}", theta=theta)
    import numpy

    eigenvalues = numpy.linalg.eigvalsh(numpy.array(h, dtype=complex))
    return int(sum(1 for lam in eigenvalues if lam > 0)
               - sum(1 for lam in eigenvalues if lam < 0))


def surgery_curve_classes(v: SeifertMatrix) -> list[tuple[int, int]]:
    """Primitive isotropic classes of a genus-1 form, up to overall sign.

    Solves Q(u,v) = V11*u^2 + (V12+V21)*u*v + V22*v^2 = 0 exactly; each
    class is reported with its first nonzero coordinate positive. The list
    has 0, 1 or 2 entries; nonempty means the form is metabolic.
    """
    if v.dim != 2:
        raise DimensionMismatch(f"expected a 2x2 matrix, got {v.dim}x{v.dim}")
    a = v.entries[0][0]
    b = v.entries[0][1] + v.entries[1][0]
    c = v.entries[1][1]

    raw: list[tuple[int, int]] = []
    if a == 0 and c == 0:
        # b != 0 for a valid Seifert matrix, so Q = b*u*v
        raw = [(1, 0), (0, 1)]
    elif a == 0:
        raw.append((1, 0))
        if b != 0:
            raw.append((c, -b))
    elif c == 0:
        raw.append((0, 1))
        if b != 0:
            raw.append((-b, a))
    else:
        disc = b * b - 4 * a * c
        if disc >= 0:
            s = math.isqrt(disc)
            if s * s == disc:
                # s = 0 (coincident roots) cannot occur for a valid matrix
                # since b is odd, but the single class is still correct
                raw.append((-b + s, 2 * a))
                if s != 0:
                    raw.append((-b - s, 2 * a))
    return sorted({_primitive_rep(u, w) for u, w in raw})


def _primitive_rep(u: int, v: int) -> tuple[int, int]:
    g = math.gcd(u, v)
    u, v = u // g, v // g
    if u < 0 or (u == 0 and v < 0):
        u, v = -u, -v
    return u, v


def is_algebraically_slice_genus1(v: SeifertMatrix) -> bool:
    """True iff the genus-1 form has an isotropic class (a metabolizer)."""
    return bool(surgery_curve_classes(v))
