"""The level-modified class number H^(N1,N2)(D)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .arith import Factorization, factorize, kronecker, valuation
from .hurwitz import hurwitz

__all__ = [
    "Level",
    "LevelError",
    "SquarePart",
    "admissible_level",
    "square_part",
    "a_factor",
    "h_level",
    "h_level_squarefree",
    "admissible_levels",
]


class LevelError(ValueError):
    """Raised for a pair (N1, N2) that is not a valid level."""


@dataclass(frozen=True)
class Level:
    N1: int
    N2: int
    n1_factors: Factorization
    n2_factors: Factorization

    @property
    def N(self) -> int:
        return self.N1 * self.N2

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(sorted(p for p, _ in self.n1_factors + self.n2_factors))

    @property
    def ramified(self) -> frozenset[int]:
        """Primes of N1."""
        return frozenset(p for p, _ in self.n1_factors)

    @property
    def e(self) -> int:
        """Number of distinct primes of N1*N2."""
        return len(self.n1_factors) + len(self.n2_factors)

    def __str__(self) -> str:
        return f"({self.N1},{self.N2})"


def admissible_level(N1: int, N2: int) -> Level:
    if N1 < 1 or N2 < 1:
        raise LevelError(f"N1 and N2 must be positive, got ({N1},{N2})")
    if gcd(N1, N2) != 1:
        raise LevelError(f"gcd(N1, N2) = {gcd(N1, N2)} is not 1")
    f1 = factorize(N1)
    for p, e in f1:
        if e % 2 == 0:
            raise LevelError(f"exponent of {p} in N1 = {N1} is even ({e})")
    if len(f1) % 2 == 0:
        raise LevelError(f"N1 = {N1} has an even number of prime factors ({len(f1)})")
    return Level(N1, N2, f1, factorize(N2))


def admissible_levels(max_level: int) -> list[Level]:
    """All levels with N1*N2 <= max_level, sorted by N1*N2 then N1."""
    out = []
    for L in range(2, max_level + 1):
        for N1 in range(2, L + 1):
            if L % N1:
                continue
            try:
                out.append(admissible_level(N1, L // N1))
            except LevelError:
                pass
    return out


@dataclass(frozen=True)
class SquarePart:
    f: int
    per_prime: tuple[tuple[int, int], ...]  # (p, f_p) with f_p the p-power

    def fp(self, p: int) -> int:
        for q, v in self.per_prime:
            if q == p:
                return v
        return 1


def square_part(D: int, level: Level) -> SquarePart:
    """Largest f built from primes of N1*N2 with f^2 | D and -D/f^2 a discriminant."""
    if D <= 0 or D % 4 in (1, 2):
        raise ValueError(f"-{D} is not a negative discriminant")
    per = []
    for p in level.primes:
        k = valuation(D, p) // 2
        if p == 2:
            while k and (D // 4**k) % 4 not in (0, 3):
                k -= 1
        per.append((p, p**k))
    return SquarePart(prod(v for _, v in per), tuple(per))


def a_factor(D: int, p: int, level: Level, sp: SquarePart | None = None) -> Fraction:
    """Local factor at p | N1*N2 of H^(N1,N2)(D)."""
    if level.N % p:
        raise ValueError(f"{p} does not divide N1*N2 = {level.N}")
    if sp is None:
        sp = square_part(D, level)
    Dp = D // (sp.f * sp.f)
    chi = kronecker(-Dp, p)
    fp = sp.fp(p)
    vN = valuation(level.N, p)
    ramified = level.N1 % p == 0
    if 1 + 2 * valuation(fp, p) < vN:
        if Dp % p == 0:
            return Fraction(0)
        return Fraction(fp * fp * (1 - chi if ramified else 1 + chi))
    if ramified:
        return Fraction(p ** (valuation(level.N1, p) - 1) * (1 - chi))
    v = valuation(level.N2, p)
    if v % 2:
        num = (
            2 * p ** ((v + 1) // 2) * fp
            - p ** (v - 1) * (p + 1)
            - chi * (2 * p ** ((v - 1) // 2) * fp - p ** (v - 1) * (p + 1))
        )
    else:
        num = (p ** (v // 2) * fp - p ** (v - 1)) * (p + 1) - chi * (
            p ** (v // 2 - 1) * fp - p ** (v - 1)
        ) * (p + 1)
    return Fraction(num) / (p - 1)


def h_zero(level: Level) -> Fraction:
    out = Fraction(level.N, 12)
    for p, _ in level.n1_factors:
        out *= 1 - Fraction(1, p)
    for p, _ in level.n2_factors:
        out *= 1 + Fraction(1, p)
    return out


def h_level(D: int, level: Level) -> Fraction:
    """H^(N1,N2)(D) for D >= 0."""
    if D < 0:
        raise ValueError("h_level expects D >= 0")
    if D == 0:
        return h_zero(level)
    if D % 4 in (1, 2):
        return Fraction(0)
    sp = square_part(D, level)
    out = hurwitz(D // (sp.f * sp.f))
    for p in level.primes:
        if not out:
            break
        out *= a_factor(D, p, level, sp)
    return out


def h_level_squarefree(D: int, level: Level) -> Fraction:
    """Independent evaluation valid when N1*N2 is squarefree."""
    if any(e > 1 for _, e in level.n1_factors + level.n2_factors):
        raise ValueError("level is not squarefree")
    if D == 0:
        return h_zero(level)
    if D % 4 in (1, 2):
        return Fraction(0)
    sp = square_part(D, level)
    Dp = D // (sp.f * sp.f)
    out = hurwitz(Dp)
    for p, _ in level.n1_factors:
        out *= 1 - kronecker(-Dp, p)
    for p, _ in level.n2_factors:
        chi, fp = kronecker(-Dp, p), sp.fp(p)
        out *= Fraction(2 * p * fp - p - 1 - chi * (2 * fp - p - 1), p - 1)
    return out
