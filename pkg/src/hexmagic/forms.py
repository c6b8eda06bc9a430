"""Linear forms over named parameters with exact rational coefficients.

These are the symbolic cell values of parametric hexagons: things like
``2a+b-c+3``.  Zero coefficients are never stored, so equality is plain
coefficient-wise equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator, Mapping, Union

Rational = Union[int, Fraction, str]


class FormSyntaxError(ValueError):
    """Raised for text that is not a valid linear form."""


class MissingParameterError(KeyError):
    """Raised when evaluating a form without a value for some parameter."""

    def __init__(self, name: str):
        self.name = name
        super().__init__(name)

    def __str__(self) -> str:
        return f"no value assigned to parameter {self.name!r}"


class LinearForm:
    """Immutable ``constant + sum(coefficient * parameter)``."""

    __slots__ = ("constant", "_coeffs")

    def __init__(self, constant: Rational = 0, coefficients: Mapping[str, Rational] | None = None):
        object.__setattr__(self, "constant", Fraction(constant))
        items = []
        for name, coef in (coefficients or {}).items():
            coef = Fraction(coef)
            if coef:
                items.append((name, coef))
        items.sort()
        object.__setattr__(self, "_coeffs", tuple(items))

    @classmethod
    def parameter(cls, name: str, coefficient: Rational = 1) -> "LinearForm":
        return cls(0, {name: coefficient})

    @property
    def coefficients(self) -> dict[str, Fraction]:
        return dict(self._coeffs)

    def coefficient(self, name: str) -> Fraction:
        for n, c in self._coeffs:
            if n == name:
                return c
        return Fraction(0)

    @property
    def parameters(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self._coeffs)

    def is_constant(self) -> bool:
        return not self._coeffs

    def __setattr__(self, name, value):
        raise AttributeError("LinearForm is immutable")

    def __bool__(self) -> bool:
        return bool(self.constant) or bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LinearForm):
            return self.constant == other.constant and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.constant, self._coeffs))

    def __add__(self, other: "LinearForm | Rational") -> "LinearForm":
        if not isinstance(other, LinearForm):
            other = LinearForm(other)
        coeffs = dict(self._coeffs)
        for name, coef in other._coeffs:
            coeffs[name] = coeffs.get(name, Fraction(0)) + coef
        return LinearForm(self.constant + other.constant, coeffs)

    def __neg__(self) -> "LinearForm":
        return self * -1

    def __sub__(self, other: "LinearForm | Rational") -> "LinearForm":
        if not isinstance(other, LinearForm):
            other = LinearForm(other)
        return self + (-other)

    def __mul__(self, scalar: Rational) -> "LinearForm":
        scalar = Fraction(scalar)
        return LinearForm(
            self.constant * scalar, {n: c * scalar for n, c in self._coeffs}
        )

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[tuple[str, Fraction]]:
        return iter(self._coeffs)

    def evaluate(self, assignment: Mapping[str, Rational]) -> Fraction:
        total = self.constant
        for name, coef in self._coeffs:
            if name not in assignment:
                raise MissingParameterError(name)
            total += coef * Fraction(assignment[name])
        return total

    def __str__(self) -> str:
        return format_form(self)

    def __repr__(self) -> str:
        return f"LinearForm({format_form(self)!r})"


def format_form(form: LinearForm) -> str:
    """Canonical compact text: parameters in name order, constant last."""
    parts = []
    for name, coef in form:
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        prefix = "" if mag == 1 else str(mag)
        parts.append((sign, prefix + name))
    if form.constant or not parts:
        sign = "-" if form.constant < 0 else "+"
        parts.append((sign, str(abs(form.constant))))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM_RE = re.compile(
    r"(?P<sign>[+-]?)"
    r"(?:"
    r"(?P<coef>\d+(?:/\d+)?)?(?P<param>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<const>\d+(?:/\d+)?)"
    r")"
)


def parse_form(text: str) -> LinearForm:
    """Parse forms like ``2a+b-1/2c+3``; inverse of :func:`format_form`."""
    s = text.strip()
    if not s:
        raise FormSyntaxError("empty linear form")
    pos = 0
    constant = Fraction(0)
    coeffs: dict[str, Fraction] = {}
    while pos < len(s):
        match = _TERM_RE.match(s, pos)
        if not match or match.end() == pos:
            raise FormSyntaxError(f"bad linear form {text!r} at position {pos}")
        if pos > 0 and match.group("sign") == "":
            raise FormSyntaxError(f"missing +/- between terms in {text!r}")
        sign = -1 if match.group("sign") == "-" else 1
        if match.group("param") is not None:
            coef = Fraction(match.group("coef") or 1) * sign
            name = match.group("param")
            coeffs[name] = coeffs.get(name, Fraction(0)) + coef
        else:
            constant += Fraction(match.group("const")) * sign
        pos = match.end()
    return LinearForm(constant, coeffs)
