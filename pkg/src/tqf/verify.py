"""End-to-end checks tying the class number side to ternary forms.

Each suite returns a VerificationReport of exact (expected, actual) pairs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from . import densities as dens
from .arith import format_rational
from .classtype import class_number, type_number
from .clifford import clifford_order, half_integral_form
from .eisenstein_h import Level, admissible_level, h_level, h_zero
from .tables import CLASS_ONE_LEVELS, TABLE_PRIME_POWER, TABLE_PRIME_POWER_CORRECTIONS, TABLE_SMALL_LEVELS
from .ternary.forms import TernaryForm
from .ternary.genus import genus_enumerate, order_genus_key, s0_genus_key
from .ternary.reduction import aut_count
from .ternary.reps import rep_numbers

__all__ = [
    "Check",
    "VerificationReport",
    "mass",
    "verify_mass",
    "verify_theta_identity",
    "verify_type_count",
    "verify_class_one",
    "verify_tables",
    "verify_densities",
    "class_one_form",
]

DEFAULT_DMAX = 200


@dataclass(frozen=True)
class Check:
    description: str
    expected: Fraction
    actual: Fraction

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {
            "check": self.description,
            "expected": format_rational(self.expected),
            "actual": format_rational(self.actual),
            "pass": self.passed,
        }


@dataclass
class VerificationReport:
    suite: str
    subject: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, description: str, expected, actual) -> None:
        self.checks.append(Check(description, Fraction(expected), Fraction(actual)))

    def summary(self) -> str:
        n = len(self.checks)
        bad = len(self.failures)
        state = "PASS" if not bad else "FAIL"
        return f"{state} {self.suite} {self.subject}: {n - bad}/{n} checks"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "subject": self.subject,
            "pass": self.passed,
            "elapsed": round(self.elapsed, 3),
            "checks": [c.to_dict() for c in self.checks],
        }


def mass(level: Level) -> Fraction:
    """2^(-e-1) * H^(N1,N2)(0), the mass of the genus of f_{S^0}."""
    return h_zero(level) / 2 ** (level.e + 1)


def _weights(forms: Iterable[TernaryForm]) -> list[tuple[TernaryForm, Fraction]]:
    return [(f, Fraction(1, aut_count(f))) for f in forms]


def verify_mass(level: Level, budget: int | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport("mass", str(level))
    forms = genus_enumerate(s0_genus_key(level), budget)
    rep.add("sum of 1/|Aut| over the genus", mass(level), sum(w for _, w in _weights(forms)))
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_theta_identity(level: Level, dmax: int = DEFAULT_DMAX, budget: int | None = None) -> VerificationReport:
    """sum_f R_f(D)/|Aut f| = 2^(-e-1) H^(N1,N2)(D) for 0 <= D <= dmax."""
    t0 = time.perf_counter()
    rep = VerificationReport("theta", str(level))
    weighted = _weights(genus_enumerate(s0_genus_key(level), budget))
    series = [(rep_numbers(f, dmax), w) for f, w in weighted]
    scale = Fraction(1, 2 ** (level.e + 1))
    for D in range(dmax + 1):
        lhs = sum(r[D] * w for r, w in series)
        rep.add(f"D={D}", scale * h_level(D, level), lhs)
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_type_count(level: Level, budget: int | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    rep = VerificationReport("typecount", str(level))
    rep.add("classes in the genus of f_{S^0}", type_number(level), len(genus_enumerate(s0_genus_key(level), budget)))
    rep.elapsed = time.perf_counter() - t0
    return rep


def class_one_form(level: Level) -> TernaryForm:
    """f_{S^0} of the unique order type at a level with T = 1.

    The order comes from the genus of f_O, whose discriminant is only N1*N2.
    """
    found = genus_enumerate(order_genus_key(level), budget=max(level.N, 1))
    if len(found) != 1:
        raise ValueError(f"level {level} has {len(found)} order types, not 1")
    return half_integral_form(clifford_order(found[0]))


def verify_class_one(levels: Iterable[Level] | None = None, dmax: int = DEFAULT_DMAX) -> VerificationReport:
    """R_f(D) = 2^(-e-1) H^(N1,N2)(D) |Aut f| for the single class f of each level.

    The genus is a singleton because 1/|Aut f| already equals its mass.
    """
    t0 = time.perf_counter()
    if levels is None:
        levels = [admissible_level(*x) for x in CLASS_ONE_LEVELS]
    levels = list(levels)
    rep = VerificationReport("classone", f"{len(levels)} levels")
    for level in levels:
        f = class_one_form(level)
        aut = aut_count(f)
        rep.add(f"{level} type number", 1, type_number(level))
        rep.add(f"{level} singleton mass of {f}", mass(level), Fraction(1, aut))
        reps = rep_numbers(f, dmax)
        scale = Fraction(aut, 2 ** (level.e + 1))
        for D in range(1, dmax + 1):
            if D % 4 in (0, 3):
                rep.add(f"{level} R({D})", scale * h_level(D, level), reps[D])
    rep.elapsed = time.perf_counter() - t0
    return rep


def verify_tables(include_prime_power: bool = True) -> VerificationReport:
    """Recompute every frozen table row.

    For rows with a recorded correction, the recomputed value is compared
    with the corrected entry.
    """
    t0 = time.perf_counter()
    rep = VerificationReport("tables", "small levels" + (" + prime powers" if include_prime_power else ""))
    rows = [("small", r) for r in TABLE_SMALL_LEVELS]
    if include_prime_power:
        rows += [("prime-power", r) for r in TABLE_PRIME_POWER]
    for tag, (n1, n2, h, t) in rows:
        level = admissible_level(n1, n2)
        if tag == "prime-power" and (n1, n2) in TABLE_PRIME_POWER_CORRECTIONS:
            t = TABLE_PRIME_POWER_CORRECTIONS[(n1, n2)][1]
        rep.add(f"{tag} {level} h", h, class_number(level))
        rep.add(f"{tag} {level} T", t, type_number(level))
    rep.elapsed = time.perf_counter() - t0
    return rep


def density_cases(primes=(2, 3, 5, 7), us=(0, 1), vs=(0, 1, 2, 3, 4), nmax: int = 500):
    """(description, closed form value, form, p, n) for the whole density grid."""
    for p in primes:
        for n in range(1, nmax + 1):
            if p == 2:
                for u in us:
                    yield f"aniso_two u={u} n={n}", dens.density_aniso_two(u, n), dens.aniso_two_form(u), 2, n
                    yield (
                        f"aniso_two rewritten u={u} n={n}",
                        dens.density_aniso_two_rewritten(u, n), dens.aniso_two_form(u), 2, n,
                    )
                for v in vs:
                    yield f"iso_two v={v} n={n}", dens.density_iso_two(v, n), dens.iso_two_form(v), 2, n
                for kind, f in dens.DYADIC_BASE_FORMS.items():
                    yield f"{kind} n={n}", dens.density_dyadic_base(kind, n), f, 2, n
                continue
            yield f"siegel p={p} n={n}", dens.density_siegel_unramified(p, n), dens.siegel_form(), p, n
            for u in us:
                yield f"aniso_odd p={p} u={u} n={n}", dens.density_aniso_odd(p, u, n), dens.aniso_odd_form(p, u), p, n
            for v in vs:
                yield f"iso_odd p={p} v={v} n={n}", dens.density_iso_odd(p, v, n), dens.iso_odd_form(p, v), p, n
    for p in primes:
        if p == 2:
            for e in sorted(set(us) | set(vs)):
                for kind in ("aniso_two", "iso_two"):
                    f = dens.special_form(kind, 2, e)
                    yield f"{kind} special e={e}", dens.density_special_values(kind, 2, e, 1), f, 2, 1
            continue
        for n in (1, 4):
            for u in us:
                f = dens.special_form("aniso_odd", p, u)
                yield f"aniso_odd special p={p} u={u} n={n}", dens.density_special_values("aniso_odd", p, u, n), f, p, n
            for v in vs:
                if v == 0:
                    continue
                f = dens.special_form("iso_odd", p, v)
                yield f"iso_odd special p={p} v={v} n={n}", dens.density_special_values("iso_odd", p, v, n), f, p, n


def verify_densities(primes=(2, 3, 5, 7), us=(0, 1), vs=(0, 1, 2, 3, 4), nmax: int = 500) -> VerificationReport:
    """Every closed form against the exact p-adic count."""
    t0 = time.perf_counter()
    rep = VerificationReport("densities", f"p in {list(primes)}, n <= {nmax}")
    for desc, closed, f, p, n in density_cases(primes, us, vs, nmax):
        rep.add(desc, closed, dens.local_density(f, p, n))
    rep.elapsed = time.perf_counter() - t0
    return rep
