"""Exact rational arithmetic backend.

Uses gmpy2.mpq when available (much faster for the search workloads) and
falls back to fractions.Fraction.  Both store reduced numerator/positive
denominator, so the serialized form "p/q" (or "p" for integers) is
canonical either way.
"""

from __future__ import annotations

from math import gcd

try:
    from gmpy2 import mpq as Rational

    BACKEND = "gmpy2"
except ImportError:  # pragma: no cover - exercised only without gmpy2
    from fractions import Fraction as Rational

    BACKEND = "fractions"

RationalLike = object  # Rational | int


def rational(value, den=None) -> Rational:
    """Build a Rational from ints, strings ("p/q", "p", "-1.25") or pairs."""
    if den is not None:
        return Rational(value, den)
    if isinstance(value, str):
        return parse_rational(value)
    return Rational(value)


def parse_rational(text: str) -> Rational:
    """Parse "p/q", integer, or finite-decimal strings exactly.

    Decimal inputs convert with a power-of-ten denominator; floats are
    never involved.
    """
    s = text.strip()
    if not s:
        raise ValueError("empty rational string")
    if "/" in s:
        num_s, den_s = s.split("/", 1)
        num, den = int(num_s), int(den_s)
        if den == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Rational(num, den)
    if "." in s:
        sign = -1 if s.startswith("-") else 1
        if s[0] in "+-":
            s = s[1:]
        whole, frac = s.split(".", 1)
        if not (whole or frac) or not (whole + frac).isdigit():
            raise ValueError(f"not a rational: {text!r}")
        scale = 10 ** len(frac)
        return Rational(sign * (int(whole or "0") * scale + int(frac or "0")), scale)
    return Rational(int(s))


def format_rational(value) -> str:
    """Canonical string form: "p/q" reduced with q > 0, or "p" for integers."""
    num, den = value.numerator, value.denominator
    if den == 1:
        return str(num)
    return f"{num}/{den}"


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def sign(value) -> int:
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0
