"""Class numbers and type numbers of orders of level (N1, N2)."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import isqrt

from .arith import factorize, fundamental_part, kronecker, unitary_divisors, valuation
from .eisenstein_h import Level, h_level
from .hurwitz import hurwitz

__all__ = [
    "RRange",
    "TypeNumberBreakdown",
    "NonIntegralError",
    "b_factor",
    "c_factor",
    "product_factor",
    "class_number",
    "type_number",
    "type_number_breakdown",
]


class NonIntegralError(ArithmeticError):
    """A class or type number came out non-integral."""


class RRange(Enum):
    """Which r enter the inner sum for the unitary divisor n = 4.

    ``ALL`` keeps every r with n | r and r^2 <= 4n (so r = -4, 0, 4).
    ``TRACE_ZERO`` keeps only r = 0 once n >= 4.
    """

    ALL = "all"
    TRACE_ZERO = "trace-zero"


# Pinned by the level tables; see tests/test_classtype.py for the divergence.
DEFAULT_RRANGE = RRange.TRACE_ZERO


def b_factor(n: int, p: int) -> int:
    v = valuation(n, p)
    if v == 0:
        raise ValueError(f"{p} does not divide {n}")
    if v % 2 == 0:
        return (p + 1) * p ** (v // 2 - 1)
    return p ** ((v - 1) // 2)


def c_factor(n: int, p: int) -> int:
    if n % p:
        raise ValueError(f"{p} does not divide {n}")
    if p == 2 and n % 4 == 0:
        n0, _ = fundamental_part(n)
        if (-n0) % 8 == 5:
            return 2
    return 1


def product_factor(n: int) -> Fraction:
    """prod_{p | n} (1 - (Delta(-4n)/p)/p) / (B_p(n) C_p(n))."""
    n0, _ = fundamental_part(n)
    out = Fraction(1)
    for p, _ in factorize(n):
        out *= (1 - Fraction(kronecker(-n0, p), p)) / (b_factor(n, p) * c_factor(n, p))
    return out


@dataclass
class TypeNumberBreakdown:
    level: Level
    per_term: list[tuple[int, int, Fraction, Fraction]] = field(default_factory=list)
    total: Fraction = Fraction(0)

    def dump(self) -> str:
        lines = [f"type number breakdown for level {self.level}"]
        for n, r, hv, pf in self.per_term:
            lines.append(f"  n={n} r={r} H={hv} factor={pf}")
        lines.append(f"  total={self.total}")
        return "\n".join(lines)


def _r_values(n: int, rrange: RRange) -> list[int]:
    if n >= 4 and rrange is RRange.TRACE_ZERO:
        return [0]
    bound = isqrt(4 * n)
    return [r for r in range(-bound, bound + 1) if r % n == 0]


def type_number_breakdown(level: Level, rrange: RRange = DEFAULT_RRANGE) -> TypeNumberBreakdown:
    bd = TypeNumberBreakdown(level)
    acc = Fraction(0)
    for n in unitary_divisors(level.N):
        pf = product_factor(n)
        for r in _r_values(n, rrange):
            hv = h_level(4 * n - r * r, level)
            bd.per_term.append((n, r, hv, pf))
            acc += hv * pf
    bd.total = acc / 2 ** (level.e + 1)
    return bd


def type_number(level: Level, rrange: RRange = DEFAULT_RRANGE) -> int:
    bd = type_number_breakdown(level, rrange)
    if bd.total.denominator != 1:
        raise NonIntegralError(bd.dump())
    return bd.total.numerator


def class_number(level: Level) -> int:
    h = h_level(4, level) / 2 + h_level(3, level) + h_level(0, level)
    if h.denominator != 1:
        raise NonIntegralError(f"class number of level {level} is {h}")
    return h.numerator
