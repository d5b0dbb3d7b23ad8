"""Hurwitz class numbers by enumeration of reduced binary quadratic forms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Iterator

__all__ = ["hurwitz", "reduced_forms", "BinaryFormCount"]


@dataclass(frozen=True)
class BinaryFormCount:
    discriminant: int
    weighted_count: Fraction


def reduced_forms(D: int) -> Iterator[tuple[int, int, int]]:
    """Reduced forms (a, b, c) with b^2 - 4ac = -D.

    Reduced means |b| <= a <= c, and b >= 0 whenever |b| = a or a = c.
    """
    if D <= 0:
        raise ValueError("reduced_forms expects D > 0")
    if D % 4 in (1, 2):
        return
    amax = isqrt(D // 3)
    for a in range(1, amax + 1):
        four_a = 4 * a
        for b in range(-a + (a + D) % 2, a + 1, 2):
            num = b * b + D
            if num % four_a:
                continue
            c = num // four_a
            if c < a:
                continue
            if b < 0 and (-b == a or a == c):
                continue
            yield a, b, c


@lru_cache(maxsize=None)
def hurwitz(D: int) -> Fraction:
    """Hurwitz class number H(D) for D >= 1.

    Classes of a(x^2+y^2) count 1/2, classes of a(x^2+xy+y^2) count 1/3.
    """
    if D == 0:
        raise ValueError("H(0) is not defined here; use the level-dependent value")
    if D < 0:
        raise ValueError("hurwitz expects D >= 1")
    if D % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    for a, b, c in reduced_forms(D):
        if b == 0 and a == c:
            total += Fraction(1, 2)
        elif b == a and a == c:
            total += Fraction(1, 3)
        else:
            total += 1
    return total
