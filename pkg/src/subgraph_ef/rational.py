"""Exact rational scalars and vectors.

``fractions.Fraction`` already keeps numerator/denominator reduced with a
positive denominator, so it is used as the scalar type directly.
"""

from fractions import Fraction
from typing import Sequence, Union

from .errors import DimensionError, InputError

Rational = Fraction
RatLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def rat(p: int, q: int = 1) -> Fraction:
    if q == 0:
        raise InputError(f"zero denominator in rat({p}, {q})")
    return Fraction(p, q)


def as_rational(value: RatLike) -> Fraction:
    """Coerce ints, Fractions and canonical "p/q" strings. Floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"not an exact rational: {value!r}")


def format_rational(r: Fraction) -> str:
    """Canonical text form: "p/q", or "p" when q == 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise InputError(f"cannot parse rational {text!r}") from None
    return rat(p, q)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((Fraction(a) * b for a, b in zip(u, v)), ZERO)
