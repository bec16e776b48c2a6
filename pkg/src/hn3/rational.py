"""Exact rational scalars.

Every numeric quantity in this package is a ``fractions.Fraction``:
arbitrary-precision numerator, positive denominator, always reduced.
Nothing in the core ever rounds, so equality checks are meaningful at
tolerance zero.
"""

from fractions import Fraction

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def as_scalar(value: int | str | Fraction) -> Fraction:
    """Coerce an int, a string like ``"p/q"``, or a Fraction to a Fraction.

    Floats are refused: they carry rounding by construction and would
    silently poison exact results.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise TypeError(f"exact scalar expected, got {type(value).__name__}")


def format_scalar(value: int | str | Fraction) -> str:
    """Canonical rendering: ``"p"`` for integers, ``"p/q"`` otherwise."""
    return str(as_scalar(value))
