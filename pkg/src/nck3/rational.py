"""Parsing and rendering of exact rationals as ``"p/q"`` strings."""
from fractions import Fraction


def as_fraction(x):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused; decimal strings such as ``"0.5"`` are refused too.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if "." in s or "e" in s.lower():
            raise ValueError(f"decimal notation not accepted: {x!r}")
        return Fraction(s)
    raise TypeError(f"cannot read {type(x).__name__} as an exact rational")


def fmt(x):
    """Render in lowest terms; integers drop the ``/1``."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
