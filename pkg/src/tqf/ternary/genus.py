"""Genus enumeration for primitive positive definite ternary forms.

A genus is named by (level, discriminant, anisotropic primes).  For the
families built from orders this triple alone can leave two genera at some
primes, so a key may also list ``split`` primes: primes at which the rank-2
Jordan constituent must be a scaled hyperbolic plane.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from ..eisenstein_h import Level
from .forms import TernaryForm
from .local import aniso_primes, split_primes
from .reduction import canonical_key, reduce

__all__ = [
    "GenusKey",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "enumeration_budget",
    "genus_of",
    "genus_enumerate",
    "reduced_candidates",
    "s0_genus_key",
    "order_genus_key",
]

DEFAULT_BUDGET = 20000


class BudgetExceeded(RuntimeError):
    """Discriminant above the enumeration budget."""


def enumeration_budget() -> int:
    env = os.environ.get("TQF_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


@dataclass(frozen=True)
class GenusKey:
    level: int
    disc: int
    aniso: frozenset = field(default_factory=frozenset)
    split: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "aniso", frozenset(self.aniso))
        object.__setattr__(self, "split", frozenset(self.split))
        if len(self.aniso) % 2 == 0:
            raise ValueError(f"anisotropic set {sorted(self.aniso)} must have odd size")

    def __str__(self) -> str:
        an = ",".join(map(str, sorted(self.aniso)))
        out = f"G[N={self.level}, d={self.disc}, aniso={{{an}}}"
        if self.split:
            out += ", split={" + ",".join(map(str, sorted(self.split))) + "}"
        return out + "]"

    def contains(self, f: TernaryForm) -> bool:
        if f.disc != self.disc or f.level != self.level or not f.is_primitive():
            return False
        if aniso_primes(f) != self.aniso:
            return False
        return split_primes(f, self.split) == self.split


def genus_of(f: TernaryForm, split_candidates=()) -> GenusKey:
    cands = tuple(split_candidates)
    return GenusKey(f.level, f.disc, aniso_primes(f), split_primes(f, cands))


def s0_genus_key(level: Level) -> GenusKey:
    """Genus of f_{S^0} for orders of the given level."""
    L = level.N
    return GenusKey(4 * L, 16 * L * L, level.ramified, frozenset(p for p, _ in level.n2_factors))


def order_genus_key(level: Level) -> GenusKey:
    """Genus of f_O for orders of the given level."""
    L = level.N
    return GenusKey(4 * L, L, level.ramified, frozenset(p for p, _ in level.n2_factors))


def reduced_candidates(d: int):
    """Coefficient sextuples of disc d satisfying the reduction inequalities.

    Every class of discriminant d has its canonical form among them.
    """
    amax = 1
    while 2 * (amax + 1) ** 3 <= d:
        amax += 1
    for a in range(1, amax + 1):
        bmax = isqrt(d // (2 * a))
        ts = np.arange(-a, a + 1)
        ss = np.arange(-a, a + 1)
        for b in range(a, bmax + 1):
            rs = np.arange(-b, b + 1)
            T, S, R = np.meshgrid(ts, ss, rs, indexing="ij")
            T, S, R = T.ravel(), S.ravel(), R.ravel()
            den = 4 * a * b - T * T
            num = d - R * S * T + a * R * R + b * S * S
            ok = (den > 0) & (num % den == 0)
            C = np.where(ok, num // np.where(den > 0, den, 1), 0)
            ok &= (C >= b) & (2 * a * b * C <= d)
            for c, r, s, t in zip(C[ok].tolist(), R[ok].tolist(), S[ok].tolist(), T[ok].tolist()):
                yield a, b, c, r, s, t


def genus_enumerate(key: GenusKey, budget: int | None = None) -> list[TernaryForm]:
    """One canonical representative per class in the genus, sorted by canonical key."""
    budget = enumeration_budget() if budget is None else budget
    if key.disc > budget:
        raise BudgetExceeded(f"discriminant {key.disc} exceeds budget {budget} (set TQF_BUDGET)")
    classes: dict[TernaryForm, None] = {}
    for a, b, c, r, s, t in reduced_candidates(key.disc):
        if gcd(a, b, c, r, s, t) != 1:
            continue
        f = TernaryForm(a, b, c, r, s, t)
        if f.level != key.level:
            continue
        classes.setdefault(reduce(f))
    out = [f for f in classes if aniso_primes(f) == key.aniso and split_primes(f, key.split) == key.split]
    return sorted(out, key=canonical_key)
