"""Exact dual-number scalars: values of the form a + b·ε with ε² = 0.

Two scalar kinds are supported and tracked: integer (Python ``int``) and
rational (``fractions.Fraction``).  Mixed operands promote to rational.
The sequence engines run entirely in rationals and observe integrality
per term (``is_integral`` / ``exact_div``), so a fractional term is a
reportable value, never a runtime fault.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import QuiverSeqError

Scalar = int | Fraction


class ZeroBodyError(QuiverSeqError, ArithmeticError):
    """Inversion or division hit a dual scalar with zero body.

    Elements b·ε are nilpotent (their square is 0), so a dual scalar is
    invertible exactly when its body is nonzero.
    """


def _promote(body: Scalar, slope: Scalar) -> tuple[Scalar, Scalar]:
    if isinstance(body, Fraction) or isinstance(slope, Fraction):
        return Fraction(body), Fraction(slope)
    return body, slope


@dataclass(frozen=True)
class DualScalar:
    """An exact dual number ``body + slope·ε``."""

    body: Scalar
    slope: Scalar = 0

    def __post_init__(self) -> None:
        body, slope = _promote(self.body, self.slope)
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "slope", slope)

    @property
    def kind(self) -> str:
        return "rational" if isinstance(self.body, Fraction) else "integer"

    @property
    def is_integral(self) -> bool:
        """True when both components are integers (denominator 1)."""
        if self.kind == "integer":
            return True
        return self.body.denominator == 1 and self.slope.denominator == 1

    def to_rational(self) -> "DualScalar":
        return DualScalar(Fraction(self.body), Fraction(self.slope))

    def to_integer(self) -> "DualScalar":
        """Demote to integer kind; raises ValueError if not integral."""
        if not self.is_integral:
            raise ValueError(f"{self} is not integral")
        return DualScalar(int(self.body), int(self.slope))

    # -- ring structure -------------------------------------------------

    def __add__(self, other: "DualScalar") -> "DualScalar":
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(self.body + other.body, self.slope + other.slope)

    def __sub__(self, other: "DualScalar") -> "DualScalar":
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(self.body - other.body, self.slope - other.slope)

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.body, -self.slope)

    def __mul__(self, other: "DualScalar") -> "DualScalar":
        # (a + bε)(c + dε) = ac + (ad + bc)ε, the ε² term vanishes
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(
            self.body * other.body,
            self.body * other.slope + self.slope * other.body,
        )

    def __pow__(self, e: int) -> "DualScalar":
        """(a + bε)^e = a^e + e·a^(e-1)·b·ε; negative e goes through inv()."""
        if e < 0:
            return self.inv() ** (-e)
        if e == 0:
            one = Fraction(1) if self.kind == "rational" else 1
            return DualScalar(one, 0 * one)
        return DualScalar(self.body**e, e * self.body ** (e - 1) * self.slope)

    def inv(self) -> "DualScalar":
        """Multiplicative inverse 1/a − (b/a²)·ε, always rational kind."""
        if self.body == 0:
            raise ZeroBodyError("dual scalar with zero body has no inverse")
        a = Fraction(self.body)
        return DualScalar(1 / a, -Fraction(self.slope) / (a * a))

    def __truediv__(self, other: "DualScalar") -> "DualScalar":
        if not isinstance(other, DualScalar):
            return NotImplemented
        if other.body == 0:
            raise ZeroBodyError("division by dual scalar with zero body")
        c = Fraction(other.body)
        return DualScalar(
            Fraction(self.body) / c,
            (Fraction(self.slope) * c - Fraction(self.body) * Fraction(other.slope)) / (c * c),
        )

    def __str__(self) -> str:
        sign = "-" if self.slope < 0 else "+"
        return f"{self.body} {sign} {abs(self.slope)}ε"


@dataclass(frozen=True)
class NotDivisible:
    """Failed exact division; carries the exact rational quotient."""

    quotient: DualScalar


def exact_div(num: DualScalar, den: DualScalar) -> DualScalar | NotDivisible:
    """Integer-exact dual division.

    Returns the integer-kind quotient q with q·den = num when it exists,
    i.e. when den.body divides both num.body and the adjusted slope
    num.slope − (num.body/den.body)·den.slope.  Otherwise returns
    ``NotDivisible`` carrying the exact rational quotient.
    """
    if den.body == 0:
        raise ZeroBodyError("exact_div by dual scalar with zero body")
    q = num / den
    if q.is_integral:
        return q.to_integer()
    return NotDivisible(q)


def format_scalar(value: Scalar) -> str:
    """Decimal string; rationals render as "p/q" in lowest terms, q > 0."""
    return str(value)


def parse_scalar(text: str) -> Scalar:
    """Inverse of format_scalar: "p/q" gives a Fraction, otherwise an int."""
    text = text.strip()
    if "/" in text:
        return Fraction(text)
    return int(text)
