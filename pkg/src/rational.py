#!/usr/bin/env python3
"""
EXACT RATIONAL SCALARS
Fraction-backed scalars with a fixed-width overflow guard and p/q text codec
"""

import logging
import re
from fractions import Fraction
from typing import Union

logger = logging.getLogger(__name__)

# Signed 64-bit range; anything outside is reported, never wrapped
INT64_BOUND = 2 ** 63

RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class RationalOverflowError(ArithmeticError):
    """Raised when a numerator or denominator leaves the signed 64-bit range"""


class RationalParseError(ValueError):
    """Raised for text that is not of the form "p" or "p/q" with q > 0"""


def checked(value: RationalLike) -> Fraction:
    """Canonical Fraction for value, rejecting anything past the 64-bit bound"""
    q = value if isinstance(value, Fraction) else Fraction(value)
    if abs(q.numerator) >= INT64_BOUND or q.denominator >= INT64_BOUND:
        logger.warning("❌ Rational overflow: %s", q)
        raise RationalOverflowError(f"{q} leaves the signed 64-bit range")
    return q


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q"; decimals, blanks and zero denominators are rejected"""
    match = _RATIONAL_PATTERN.match(text.strip())
    if match is None:
        raise RationalParseError(f"expected p or p/q, got {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalParseError(f"zero denominator in {text!r}")

    # Bound the raw parts too: Fraction would reduce 2**70/2**70 to 1 silently
    if abs(numerator) >= INT64_BOUND or denominator >= INT64_BOUND:
        raise RationalOverflowError(f"{text} leaves the signed 64-bit range")
    return checked(Fraction(numerator, denominator))


def format_rational(value: RationalLike) -> str:
    """Canonical text: "p" when the denominator is 1, else "p/q" with q > 0"""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_natural(value: RationalLike) -> bool:
    """Membership in ℕ = {1, 2, 3, ...}"""
    q = Fraction(value)
    return q.denominator == 1 and q > 0


def in_lattice(value: RationalLike, k: int) -> bool:
    """Membership in ℕ/k, i.e. k·value ∈ ℕ"""
    return is_natural(Fraction(value) * k)


def is_nonnegative_integer(value: RationalLike) -> bool:
    q = Fraction(value)
    return q.denominator == 1 and q >= 0


def as_int_if_integral(value: RationalLike):
    """Collapse integral Fractions to int so matrices and tables read cleanly"""
    q = Fraction(value)
    return q.numerator if q.denominator == 1 else q
