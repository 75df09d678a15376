"""Canonical string form for exact rationals used in every JSON interface."""

from __future__ import annotations

from fractions import Fraction


def format_rational(x: Fraction) -> str:
    """Lowest terms, sign on the numerator; integers print bare."""
    return str(Fraction(x))


def parse_rational(value: int | str) -> Fraction:
    """Accept an integer or a string ``Fraction`` understands (``p/q``,
    ``p``, exact decimal literals).  Float objects are refused: every
    interface is exact."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational: {value!r}") from exc
    raise ValueError(f"not a rational: {value!r} (exact strings or integers only)")
