"""Exact integer Laurent polynomial arithmetic.

Polynomials in t with integer coefficients and integer (possibly negative)
exponents, stored sparsely as {exponent: coefficient} with no zero
coefficients, so equality is structural. Coefficients are Python ints and
never overflow.
"""

from __future__ import annotations

import cmath
from collections.abc import Mapping

from .errors import NotNormalizable, ParseError, ZeroBase


class LaurentPoly:
    """A finitely supported integer-coefficient function on integer exponents."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        canonical = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff != 0:
                    canonical[int(exp)] = int(coeff)
        self._terms = canonical

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def var(cls) -> "LaurentPoly":
        """The polynomial t."""
        return cls({1: 1})

    def terms(self) -> dict[int, int]:
        """Copy of the exponent -> coefficient map."""
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._terms)
        for exp, coeff in other._terms.items():
            s = out.get(exp, 0) + coeff
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = out
        return result

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {e: -c for e, c in self._terms.items()}
        return result

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_power(self, w: int) -> "LaurentPoly":
        """Return p(t^w); for w = 0 this is the constant p(1)."""
        if w == 0:
            return LaurentPoly.constant(self.eval_int(1))
        result = LaurentPoly.__new__(LaurentPoly)
        result._terms = {e * w: c for e, c in self._terms.items()}
        return result

    def eval_int(self, x: int) -> int:
        """Exact integer evaluation at x; x = 0 needs nonnegative support."""
        if not self._terms:
            return 0
        if x == 0:
            if any(e < 0 for e in self._terms):
                raise ZeroBase("evaluation at 0 with negative exponents present")
            return self._terms.get(0, 0)
        # clear denominators: p(x) = x^-lo * sum c_e x^(e+lo)
        lo = min(self._terms)
        shift = -lo if lo < 0 else 0
        total = sum(c * x ** (e + shift) for e, c in self._terms.items())
        if shift:
            q, r = divmod(total, x ** shift)
            if r:
                raise ValueError(f"p({x}) is not an integer")
            return q
        return total

    def eval_circle(self, theta: float) -> complex:
        """Evaluate at e^{i*theta} in machine precision."""
        return sum((c * cmath.exp(1j * e * theta) for e, c in self._terms.items()),
                   complex(0.0))

    def is_palindromic(self) -> bool:
        """p(t) == p(t^-1)."""
        return all(self._terms.get(-e, 0) == c for e, c in self._terms.items())

    def conway_normalized(self) -> "LaurentPoly":
        """The unit multiple q = ±t^k · p with q(t) = q(t^-1) and q(1) = 1.

        The only possible palindromic center is the degree midpoint, so at
        most four unit candidates exist. Raises NotNormalizable when none
        works (the input was not a valid Alexander-polynomial
        representative).
        """
        if not self._terms:
            raise NotNormalizable("zero polynomial")
        lo, hi = self.min_exp(), self.max_exp()
        if (lo + hi) % 2 != 0:
            raise NotNormalizable(
                f"degree span {lo}..{hi} has no integral midpoint")
        k = (lo + hi) // 2
        for shift in (-k, k):
            for sign in (1, -1):
                cand = LaurentPoly.__new__(LaurentPoly)
                cand._terms = {e + shift: sign * c
                               for e, c in self._terms.items()}
                if cand.is_palindromic() and cand.eval_int(1) == 1:
                    return cand
        raise NotNormalizable(f"no unit multiple of {self} normalizes")

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            if exp == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"t^{exp}")
            elif c == -1:
                parts.append(f"-t^{exp}")
            else:
                parts.append(f"{c}*t^{exp}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def _tokenize_poly(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch == "t":
            tokens.append(("t", "t", i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


def parse_poly(text: str) -> LaurentPoly:
    """Parse the textual form, e.g. ``-2*t^1 + 5 + -2*t^-1`` or ``t^2 - t + 1``."""
    tokens = _tokenize_poly(text)
    pos = 0

    def peek() -> tuple[str, object, int] | None:
        return tokens[pos] if pos < len(tokens) else None

    def take() -> tuple[str, object, int]:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_exponent() -> int:
        tok = peek()
        sign = 1
        if tok and tok[0] == "-":
            take()
            sign = -1
        tok = peek()
        if tok is None or tok[0] != "int":
            raise ParseError("expected exponent after ^",
                             tok[2] if tok else len(text))
        return sign * take()[1]  # type: ignore[operator]

    terms: dict[int, int] = {}
    first = True
    while peek() is not None:
        sign = 1
        saw_sign = False
        while peek() is not None and peek()[0] in "+-":
            if take()[0] == "-":
                sign = -sign
            saw_sign = True
        if not first and not saw_sign:
            raise ParseError("expected + or - between terms", peek()[2])
        tok = peek()
        if tok is None:
            raise ParseError("dangling sign", len(text))
        if tok[0] == "int":
            coeff = sign * take()[1]  # type: ignore[operator]
            tok = peek()
            if tok is not None and tok[0] == "*":
                take()
                tok = peek()
                if tok is None or tok[0] != "t":
                    raise ParseError("expected t after *",
                                     tok[2] if tok else len(text))
            if tok is not None and tok[0] == "t":
                take()
                exp = 1
                if peek() is not None and peek()[0] == "^":
                    take()
                    exp = parse_exponent()
            else:
                exp = 0
        elif tok[0] == "t":
            take()
            coeff = sign
            exp = 1
            if peek() is not None and peek()[0] == "^":
                take()
                exp = parse_exponent()
        else:
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        terms[exp] = terms.get(exp, 0) + coeff
        first = False
    if first:
        raise ParseError("empty polynomial text", 0)
    return LaurentPoly(terms)
