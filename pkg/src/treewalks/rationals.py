"""Exact rational scalars: construction, arithmetic dispatch, decimal-string I/O.

Every quantity in this package is an arbitrary-precision integer or an exact
rational (``fractions.Fraction``).  Nothing here ever rounds: walk counts are
exact integers and series coefficients are exact fractions.  The serialized
form is a decimal string, ``"7"`` or ``"-2/3"``, never a fixed-width machine
word, so exported values survive arbitrary magnitudes.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from typing import Callable, Union

__all__ = ["Rational", "rational", "arith", "format_number", "parse_number"]

Rational = Union[int, Fraction]

_NUMBER_RE = re.compile(r"^([+-]?\d+)(?:/([+-]?\d+))?$")

_OPS: dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical rational num/den: positive denominator, coprime parts.

    Raises ZeroDivisionError if ``den`` is zero.
    """
    return Fraction(num, den)


def arith(a: Rational, b: Rational, op: str) -> Fraction:
    """Apply one of ``"add" | "sub" | "mul" | "div"`` to two rationals, exactly.

    Division by zero raises ZeroDivisionError; an unknown ``op`` raises
    ValueError.  The result is always in canonical form.
    """
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}; expected one of {sorted(_OPS)}") from None
    return fn(Fraction(a), Fraction(b))


def format_number(value: Rational) -> str:
    """Decimal-string form: ``"7"`` for integers, ``"num/den"`` otherwise."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_number(text: str) -> Fraction:
    """Parse ``"7"``, ``"-2/3"``, ``"4/-6"`` back to a canonical Fraction.

    Inverse of :func:`format_number` (and tolerant of non-canonical input).
    """
    m = _NUMBER_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return Fraction(num, den)
