"""End-to-end driver for the counterexample pipeline.

Builds the two surgery-curve knots obtained by infecting the unknotted
curve (windings 2, 1) and the trefoil curve (windings -1, 1) with K and
-K, evaluates Arf and a grid of signature samples for each, runs the
integer-lattice and free-group uniqueness checks, and aggregates
everything into a report with two headline pass flags:

  * both surgery curves have nonzero Arf invariant;
  * both have a nonvanishing sampled signature function.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import freegroup, intlattice, knotexpr
from .errors import SingularEvaluation
from .knotexpr import Infection, KnotExpr, atom, neg, unparse
from .seifert import DEFAULT_TOLERANCE

A_CURVE_WINDINGS = (2, 1)
B_CURVE_WINDINGS = (-1, 1)
ETA1 = (1, 2)
ETA2 = (2, 1)


def default_theta_grid(points: int = 64) -> list[float]:
    """Equispaced angles 2*pi*j/(points+1), j = 1..points.

    The divisor points+1 = 65 is coprime to 6, so no grid point (nor its
    doubling) lands exactly on the trefoil jump angles +-pi/3.
    """
    return [2 * math.pi * j / (points + 1) for j in range(1, points + 1)]


@dataclass(frozen=True)
class SigmaSample:
    theta: float
    value: int | None  # None when the evaluation hit a jump point
    status: str        # "regular" | "singular"


@dataclass(frozen=True)
class KnotRecord:
    expr: str
    alexander: str
    arf: int
    samples: tuple[SigmaSample, ...]

    def sampled_nonzero(self) -> bool:
        return any(s.status == "regular" and s.value != 0 for s in self.samples)

    def regular_fraction(self) -> float:
        if not self.samples:
            return 0.0
        regular = sum(1 for s in self.samples if s.status == "regular")
        return regular / len(self.samples)


@dataclass(frozen=True)
class LatticeVerdict:
    vector: tuple[int, int]
    matrix_name: str  # "V" | "Vt"
    member: bool
    witness: tuple[int, ...] | None


@dataclass(frozen=True)
class UniquenessChecks:
    """The five verdicts locating which maps can carry the infection curves."""

    verdicts: tuple[LatticeVerdict, ...]
    eta1_pi1_in_image: bool

    def verdict(self, vector: tuple[int, int], matrix_name: str) -> LatticeVerdict:
        for v in self.verdicts:
            if v.vector == vector and v.matrix_name == matrix_name:
                return v
        raise KeyError((vector, matrix_name))

    def as_expected(self) -> bool:
        v = self.verdict
        return (not v(ETA2, "V").member
                and not v(ETA2, "Vt").member
                and not v(ETA1, "V").member
                and v(ETA1, "Vt").member
                and v(ETA1, "Vt").witness is not None
                and not self.eta1_pi1_in_image)


@dataclass(frozen=True)
class CounterexampleReport:
    infecting_knot: str
    base: KnotRecord
    a_curve: KnotRecord
    b_curve: KnotRecord
    uniqueness: UniquenessChecks
    a_windings: tuple[int, int] = A_CURVE_WINDINGS
    b_windings: tuple[int, int] = B_CURVE_WINDINGS

    @property
    def arf_pass(self) -> bool:
        """Both surgery curves have nonzero Arf invariant."""
        return self.a_curve.arf != 0 and self.b_curve.arf != 0

    @property
    def signature_pass(self) -> bool:
        """Both surgery curves have some nonzero regular signature sample."""
        return self.a_curve.sampled_nonzero() and self.b_curve.sampled_nonzero()

    def to_records(self) -> list[str]:
        """Flat key-path lines, one datum per line."""
        lines = [f"infecting_knot: {self.infecting_knot}",
                 f"a_curve.windings: {_fmt_tuple(self.a_windings)}",
                 f"b_curve.windings: {_fmt_tuple(self.b_windings)}"]
        for name, record in (("base", self.base), ("a_curve", self.a_curve),
                             ("b_curve", self.b_curve)):
            lines.append(f"{name}.expr: {record.expr}")
            lines.append(f"{name}.alexander: {record.alexander}")
            lines.append(f"{name}.arf: {record.arf}")
            for i, s in enumerate(record.samples):
                lines.append(f"{name}.sigma.{i}.theta: {s.theta:.12f}")
                lines.append(f"{name}.sigma.{i}.status: {s.status}")
                value = "" if s.value is None else str(s.value)
                lines.append(f"{name}.sigma.{i}.value: {value}")
        for v in self.uniqueness.verdicts:
            key = f"lattice.{_vec_key(v.vector)}.in_colspace_{v.matrix_name}"
            lines.append(f"{key}: {str(v.member).lower()}")
            if v.member:
                lines.append(f"{key}.witness: {_fmt_tuple(v.witness)}")
        lines.append("freegroup.eta1_in_pi1_image: "
                     f"{str(self.uniqueness.eta1_pi1_in_image).lower()}")
        lines.append(f"pass.arf_nonzero_both_curves: {str(self.arf_pass).lower()}")
        lines.append("pass.signature_nonvanishing_both_curves: "
                     f"{str(self.signature_pass).lower()}")
        return lines

    def to_text(self) -> str:
        """Human-readable key: value blocks."""
        blocks = [f"infecting knot K: {self.infecting_knot}"]
        for title, record, windings in (
                ("base knot", self.base, None),
                ("a-curve (unknotted pattern)", self.a_curve, self.a_windings),
                ("b-curve (trefoil pattern)", self.b_curve, self.b_windings)):
            lines = [f"{title}:", f"  expression: {record.expr}"]
            if windings:
                lines.append(f"  windings: {_fmt_tuple(windings)}")
            lines.append(f"  alexander: {record.alexander}")
            lines.append(f"  arf: {record.arf}")
            regular = [s for s in record.samples if s.status == "regular"]
            singular = [s for s in record.samples if s.status == "singular"]
            nonzero = [s for s in regular if s.value != 0]
            lines.append(f"  sigma samples: {len(record.samples)} "
                         f"({len(singular)} singular, {len(nonzero)} nonzero)")
            if nonzero:
                s = nonzero[0]
                lines.append(f"  first nonzero sigma: {s.value} "
                             f"at theta = {s.theta:.12f}")
            blocks.append("\n".join(lines))
        lat = ["uniqueness checks:"]
        for v in self.uniqueness.verdicts:
            text = "in" if v.member else "not in"
            line = f"  {_fmt_tuple(v.vector)} {text} colspace({v.matrix_name})"
            if v.member:
                line += f", witness {_fmt_tuple(v.witness)}"
            lat.append(line)
        lat.append("  eta1 in pi1 image: "
                   f"{str(self.uniqueness.eta1_pi1_in_image).lower()}")
        blocks.append("\n".join(lat))
        blocks.append(
            "pass flags:\n"
            f"  arf nonzero for both curves: {str(self.arf_pass).lower()}\n"
            f"  signature nonvanishing for both curves: "
            f"{str(self.signature_pass).lower()}")
        return "\n\n".join(blocks)


def _fmt_tuple(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _vec_key(vector: tuple[int, int]) -> str:
    return "eta1" if vector == ETA1 else "eta2"


def a_curve_expr(k: KnotExpr) -> Infection:
    """Infection of the unknotted surgery curve: windings (2, 1) with (K, -K).

    The composition rule makes its signature function sigma_K(2*theta) -
    sigma_K(theta); conventions elsewhere sometimes carry the opposite
    overall sign, but the pass flag only asserts nonvanishing, which is
    sign-independent.
    """
    return Infection(atom("unknot"), A_CURVE_WINDINGS, (k, neg(k)))


def b_curve_expr(k: KnotExpr) -> Infection:
    """Infection of the trefoil surgery curve: windings (-1, 1) with (K, -K)."""
    return Infection(atom("trefoil"), B_CURVE_WINDINGS, (k, neg(k)))


def _sample_grid(e: KnotExpr, grid: list[float],
                 tolerance: float) -> tuple[SigmaSample, ...]:
    samples = []
    for theta in sorted(grid):
        try:
            value = knotexpr.signature_of(e, theta, tolerance)
            samples.append(SigmaSample(theta, value, "regular"))
        except SingularEvaluation:
            samples.append(SigmaSample(theta, None, "singular"))
    return tuple(samples)


def _record(e: KnotExpr, grid: list[float], tolerance: float) -> KnotRecord:
    return KnotRecord(expr=unparse(e),
                      alexander=str(knotexpr.alexander_of(e)),
                      arf=knotexpr.arf_of(e),
                      samples=_sample_grid(e, grid, tolerance))


def run_uniqueness_checks() -> UniquenessChecks:
    """Decide which of V, V^T can carry each infection curve in homology,
    and whether the first curve survives at the fundamental-group level."""
    v = intlattice.as_matrix(knotexpr.ATOM_TABLE["R"])
    vt = intlattice.transpose(v)
    verdicts = []
    for vector in (ETA2, ETA1):
        for name, matrix in (("V", v), ("Vt", vt)):
            witness = intlattice.colspace_member(matrix, vector)
            verdicts.append(LatticeVerdict(vector, name, witness is not None,
                                           witness))
    return UniquenessChecks(tuple(verdicts),
                            freegroup.eta1_membership_check())


def run_counterexample(k: KnotExpr | str,
                       theta_grid: list[float] | None = None,
                       tolerance: float = DEFAULT_TOLERANCE) -> CounterexampleReport:
    """Full pipeline for an infecting knot K (expression or DSL text)."""
    expr = knotexpr.parse(k) if isinstance(k, str) else k
    grid = default_theta_grid() if theta_grid is None else list(theta_grid)
    if not grid:
        raise ValueError("theta grid must be nonempty")
    if any(not 0 < t < 2 * math.pi for t in grid):
        raise ValueError("grid angles must lie in (0, 2*pi)")
    return CounterexampleReport(
        infecting_knot=unparse(expr),
        base=_record(atom("R"), grid, tolerance),
        a_curve=_record(a_curve_expr(expr), grid, tolerance),
        b_curve=_record(b_curve_expr(expr), grid, tolerance),
        uniqueness=run_uniqueness_checks())
