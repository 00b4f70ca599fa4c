"""Symbolic knot-construction calculus.

Expressions are trees built from named atoms (each carrying a Seifert
matrix), mirror images, reverses, connected sums, and infections (pattern
plus winding numbers plus companion knots). Evaluation is at the invariant
level only: Alexander polynomial, Arf invariant, and signature samples are
determined by the windings, so two expressions with the same windings
evaluate identically regardless of curve geometry.

The textual DSL:

    expr := atom
          | "mirror(" expr ")" | "reverse(" expr ")" | "neg(" expr ")"
          | "sum(" expr ("," expr)+ ")"
          | "sat(" expr ";" "[" int ("," int)* "]" ";" expr ("," expr)* ")"

`neg(K)` is sugar for `reverse(mirror(K))`, the concordance inverse -K.
Atoms are `unknot`, `trefoil`, `figure8`, `R`, or an inline matrix
`seifert[[a,b],[c,d]]`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from . import seifert
from .errors import ArityError, InvalidSeifertMatrix, ParseError, SingularEvaluation
from .laurent import LaurentPoly
from .seifert import DEFAULT_TOLERANCE, SeifertMatrix

ATOM_TABLE: dict[str, tuple[tuple[int, ...], ...]] = {
    "unknot": (),
    "trefoil": ((-1, 1), (0, -1)),
    "figure8": ((1, 1), (0, -1)),
    "R": ((3, 2), (1, 0)),
}


@dataclass(frozen=True)
class Atom:
    matrix: SeifertMatrix
    name: str | None = None


@dataclass(frozen=True)
class Mirror:
    child: "KnotExpr"


@dataclass(frozen=True)
class Reverse:
    child: "KnotExpr"


@dataclass(frozen=True)
class Sum:
    children: tuple["KnotExpr", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ArityError(f"sum needs >= 2 summands, got {len(self.children)}")


@dataclass(frozen=True)
class Infection:
    pattern: "KnotExpr"
    windings: tuple[int, ...]
    companions: tuple["KnotExpr", ...]

    def __post_init__(self):
        if len(self.windings) != len(self.companions):
            raise ArityError(
                f"{len(self.windings)} windings vs "
                f"{len(self.companions)} companions")
        if not self.companions:
            raise ArityError("infection needs at least one companion")


KnotExpr = Union[Atom, Mirror, Reverse, Sum, Infection]


def atom(name: str) -> Atom:
    """Built-in atom by name."""
    if name not in ATOM_TABLE:
        raise ParseError(f"unknown atom {name!r}")
    return Atom(SeifertMatrix(ATOM_TABLE[name]), name)


def neg(e: KnotExpr) -> KnotExpr:
    """Concordance inverse -K = reverse(mirror(K))."""
    return Reverse(Mirror(e))


def unparse(e: KnotExpr) -> str:
    """Canonical DSL text; parse(unparse(e)) == e up to the neg sugar."""
    if isinstance(e, Atom):
        return e.name if e.name else f"seifert{e.matrix}"
    if isinstance(e, Reverse) and isinstance(e.child, Mirror):
        return f"neg({unparse(e.child.child)})"
    if isinstance(e, Mirror):
        return f"mirror({unparse(e.child)})"
    if isinstance(e, Reverse):
        return f"reverse({unparse(e.child)})"
    if isinstance(e, Sum):
        return "sum(" + ", ".join(unparse(c) for c in e.children) + ")"
    if isinstance(e, Infection):
        windings = "[" + ",".join(str(w) for w in e.windings) + "]"
        companions = ", ".join(unparse(c) for c in e.companions)
        return f"sat({unparse(e.pattern)}; {windings}; {companions})"
    raise TypeError(f"not a knot expression: {e!r}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> str:
        self.skip_ws()
        start = self.pos
        while (self.pos < len(self.text)
               and (self.text[self.pos].isalnum() or self.text[self.pos] == "_")):
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a name")
        return self.text[start:self.pos]

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] in "+-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            self.pos = start
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def int_list(self) -> list[int]:
        self.expect("[")
        values = [self.integer()]
        while self.peek() == ",":
            self.pos += 1
            values.append(self.integer())
        self.expect("]")
        return values

    def matrix(self) -> SeifertMatrix:
        start = self.pos
        self.expect("[")
        rows = []
        while True:
            rows.append(self.int_list())
            if self.peek() == ",":
                self.pos += 1
                continue
            break
        self.expect("]")
        try:
            return SeifertMatrix.from_rows(rows)
        except InvalidSeifertMatrix as exc:
            raise ParseError(str(exc), start) from exc

    def expr(self) -> KnotExpr:
        start = self.pos
        word = self.name()
        if word == "seifert":
            return Atom(self.matrix())
        if word in ("mirror", "reverse", "neg"):
            self.expect("(")
            child = self.expr()
            self.expect(")")
            if word == "mirror":
                return Mirror(child)
            if word == "reverse":
                return Reverse(child)
            return neg(child)
        if word == "sum":
            self.expect("(")
            children = [self.expr()]
            while self.peek() == ",":
                self.pos += 1
                children.append(self.expr())
            self.expect(")")
            if len(children) < 2:
                raise ArityError("sum needs >= 2 summands")
            return Sum(tuple(children))
        if word == "sat":
            self.expect("(")
            pattern = self.expr()
            self.expect(";")
            windings = self.int_list()
            self.expect(";")
            companions = [self.expr()]
            while self.peek() == ",":
                self.pos += 1
                companions.append(self.expr())
            self.expect(")")
            if len(windings) != len(companions):
                raise ArityError(
                    f"{len(windings)} windings vs {len(companions)} companions")
            return Infection(pattern, tuple(windings), tuple(companions))
        if word in ATOM_TABLE:
            return Atom(SeifertMatrix(ATOM_TABLE[word]), word)
        self.pos = start
        raise self.error(f"unknown atom or operator {word!r}")


def parse(text: str) -> KnotExpr:
    """Parse DSL text into a KnotExpr; whitespace-insensitive."""
    parser = _Parser(text)
    result = parser.expr()
    parser.skip_ws()
    if parser.pos != len(text):
        raise parser.error("trailing input after expression")
    return result


def alexander_of(e: KnotExpr) -> LaurentPoly:
    """Alexander polynomial: multiplicative under sum, and for an infection
    the pattern polynomial times each companion polynomial at t^w."""
    return _alexander(e).conway_normalized()


def _alexander(e: KnotExpr) -> LaurentPoly:
    if isinstance(e, Atom):
        return seifert.alexander(e.matrix)
    if isinstance(e, (Mirror, Reverse)):
        return _alexander(e.child)
    if isinstance(e, Sum):
        result = LaurentPoly.one()
        for child in e.children:
            result = result * _alexander(child)
        return result
    if isinstance(e, Infection):
        result = _alexander(e.pattern)
        for w, companion in zip(e.windings, e.companions):
            result = result * _alexander(companion).substitute_power(w)
        return result
    raise TypeError(f"not a knot expression: {e!r}")


def arf_of(e: KnotExpr) -> int:
    """Arf invariant in Z/2: additive under sum, and an infection adds each
    companion's Arf weighted by its winding parity."""
    if isinstance(e, Atom):
        return seifert.arf(e.matrix)
    if isinstance(e, (Mirror, Reverse)):
        return arf_of(e.child)
    if isinstance(e, Sum):
        return sum(arf_of(child) for child in e.children) % 2
    if isinstance(e, Infection):
        total = arf_of(e.pattern)
        for w, companion in zip(e.windings, e.companions):
            total += w * arf_of(companion)
        return total % 2
    raise TypeError(f"not a knot expression: {e!r}")


def signature_of(e: KnotExpr, theta: float,
                 tolerance: float = DEFAULT_TOLERANCE) -> int:
    """Signature sample at e^{i*theta}.

    Mirroring negates, reversing preserves, sums add, and an infection
    adds each companion's signature at the winding-scaled angle
    (w*theta mod 2*pi, where landing exactly on angle 0 contributes 0).
    Raises SingularEvaluation naming the subexpression and scaled angle
    whenever any atom evaluation hits a jump point.
    """
    if isinstance(e, Atom):
        try:
            return seifert.levine_tristram(e.matrix, theta, tolerance)
        except SingularEvaluation as exc:
            raise SingularEvaluation(
                f"jump point of {unparse(e)} at angle {theta}",
                expr_text=unparse(e), theta=theta) from exc
    if isinstance(e, Mirror):
        return -signature_of(e.child, theta, tolerance)
    if isinstance(e, Reverse):
        return signature_of(e.child, theta, tolerance)
    if isinstance(e, Sum):
        return sum(signature_of(child, theta, tolerance)
                   for child in e.children)
    if isinstance(e, Infection):
        total = signature_of(e.pattern, theta, tolerance)
        for w, companion in zip(e.windings, e.companions):
            if w == 0:
                continue
            scaled = math.fmod(w * theta, 2 * math.pi)
            if scaled < 0:
                scaled += 2 * math.pi
            if scaled == 0.0:
                continue  # w*theta is a full turn: sample at 1 is 0
            total += signature_of(companion, scaled, tolerance)
        return total
    raise TypeError(f"not a knot expression: {e!r}")
