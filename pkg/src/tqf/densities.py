"""p-adic local representation densities of ternary forms.

d_p(f, n) is the limit of #{x mod p^t : f(x) = n mod p^t} / p^(2t).

``local_density`` computes it exactly from a Jordan splitting of f over Z_p.
Write f = f0 + p f1, where f0 collects the unimodular components (in
variables x_U).  Solutions with x_U not divisible by p have a gradient of
valuation at most 1, so they lift uniformly from level p^k (k = 1 for odd p,
k = 3 at p = 2).  Solutions with x_U = p y_U become solutions of
f1 + p f0(y_U) = n / p.  Each step strips one factor of p from n.

``brute_density`` counts residues directly.  It is only usable for small
p^t and serves as the oracle for the recursion.

The remaining functions are closed forms for the diagonal families that
appear in the mass computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .arith import is_prime, kronecker, legendre, valuation
from .ternary.forms import TernaryForm
from .ternary.local import jordan_decomposition

__all__ = [
    "DensityQuery",
    "DensityError",
    "density_count",
    "local_density",
    "brute_density",
    "stabilized_density",
    "least_nonresidue",
    "siegel_form",
    "aniso_odd_form",
    "iso_odd_form",
    "aniso_two_form",
    "iso_two_form",
    "special_form",
    "density_siegel_unramified",
    "density_aniso_odd",
    "density_iso_odd",
    "density_aniso_two",
    "density_aniso_two_rewritten",
    "density_iso_two",
    "density_iso_two_rewritten",
    "density_dyadic_base",
    "DYADIC_BASE_FORMS",
    "density_special_values",
    "closed_form_density",
]

# (e, unit coefficients): p^e * u x^2 for one entry, p^e * (al y^2 + w yz + be z^2) for three
Component = tuple[int, tuple[Fraction, ...]]

MAX_STABILIZATION_T = 20


class DensityError(ArithmeticError):
    """Density computation did not stabilize or got bad input."""


@dataclass(frozen=True)
class DensityQuery:
    form: TernaryForm
    p: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")


def density_count(q: DensityQuery) -> Fraction:
    return local_density(q.form, q.p, q.n)


def _fval(x: Fraction, p: int) -> int:
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def _components(f: TernaryForm, p: int) -> tuple[Component, ...]:
    if f.disc == 0:
        raise DensityError(f"form {f} is degenerate")
    _, blocks = jordan_decomposition(f.gram(), p)
    comps = []
    for b in blocks:
        if b.dim == 1:
            q = b.matrix[0][0] / 2
            e = _fval(q, p)
            comps.append((e, (q / Fraction(p) ** e,)))
        else:
            scale = Fraction(p) ** b.scale
            (m00, m01), (_, m11) = b.matrix
            comps.append((b.scale, (m00 / 2 / scale, m01 / scale, m11 / 2 / scale)))
    return tuple(comps)


def _residue(x: Fraction, m: int) -> int:
    return x.numerator * pow(x.denominator, -1, m) % m


@lru_cache(maxsize=None)
def _good_count(comps: tuple[Component, ...], p: int, n_mod: int) -> int:
    """#{x mod p^k : x_U not 0 mod p, f(x) = n mod p^k}."""
    k = 1 if p != 2 else 3
    m = p**k
    terms = []  # (variable slots, p^e mod m, integer coefficients mod m)
    pos = 0
    unit_slots = []
    for e, coeffs in comps:
        dim = 1 if len(coeffs) == 1 else 2
        slots = tuple(range(pos, pos + dim))
        pos += dim
        if e == 0:
            unit_slots.extend(slots)
        terms.append((slots, pow(p, e, m), tuple(_residue(c, m) for c in coeffs)))
    count = 0
    for x in product(range(m), repeat=3):
        if all(x[i] % p == 0 for i in unit_slots):
            continue
        val = 0
        for slots, pe, cs in terms:
            if len(slots) == 1:
                val += pe * cs[0] * x[slots[0]] ** 2
            else:
                y, z = x[slots[0]], x[slots[1]]
                val += pe * (cs[0] * y * y + cs[1] * y * z + cs[2] * z * z)
        if (val - n_mod) % m == 0:
            count += 1
    return count


@lru_cache(maxsize=None)
def _density(comps: tuple[Component, ...], p: int, n: int) -> Fraction:
    unit = [c for c in comps if c[0] == 0]
    if not unit:
        if n % p:
            return Fraction(0)
        return p * _density(tuple((e - 1, cs) for e, cs in comps), p, n // p)
    k = 1 if p != 2 else 3
    good = Fraction(_good_count(comps, p, n % p**k), p ** (2 * k))
    if n % p:
        return good
    r1 = sum(1 if len(cs) == 1 else 2 for e, cs in comps if e > 0)
    shifted = tuple((e - 1, cs) if e > 0 else (1, cs) for e, cs in comps)
    return good + Fraction(p) ** (r1 - 2) * _density(shifted, p, n // p)


def local_density(f: TernaryForm, p: int, n: int) -> Fraction:
    """Exact d_p(f, n) for a nondegenerate integral ternary form and n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return _density(_components(f, p), p, n)


def brute_density(f: TernaryForm, p: int, n: int, t: int) -> Fraction:
    """#{x mod p^t : f(x) = n mod p^t} / p^(2t), by direct enumeration."""
    m = p**t
    if m**3 > 5 * 10**7:
        raise DensityError(f"p^t = {m} too large for direct counting")
    a, b, c, r, s, tt = f.coefficients
    x = np.arange(m, dtype=np.int64)
    X, Y = np.meshgrid(x, x, indexing="ij")
    base = (a * X * X + b * Y * Y + tt * X * Y) % m
    count = 0
    for z in range(m):
        vals = (base + (c * z * z) + (r * z) * Y + (s * z) * X) % m
        count += int(np.count_nonzero(vals == n % m))
    return Fraction(count, p ** (2 * t))


def stabilized_density(f: TernaryForm, p: int, n: int, t_cap: int = MAX_STABILIZATION_T) -> Fraction:
    """brute_density at increasing t until two consecutive levels agree."""
    t = valuation(f.disc, p) + valuation(n, p) + 2 + (p == 2)
    prev = brute_density(f, p, n, t)
    while t < t_cap:
        t += 1
        cur = brute_density(f, p, n, t)
        if cur == prev:
            return cur
        prev = cur
    raise DensityError(f"no stabilization for {f} at p={p}, n={n} up to t={t_cap}")


# the diagonal families


def least_nonresidue(p: int) -> int:
    return next(e for e in range(2, p) if legendre(e, p) == -1)


def siegel_form() -> TernaryForm:
    """-x^2 - yz."""
    return TernaryForm(-1, 0, 0, -1, 0, 0)


def aniso_odd_form(p: int, u: int) -> TernaryForm:
    """-eps x^2 + p^(2u+1) y^2 - eps p^(2u+1) z^2 with eps a nonresidue."""
    eps = least_nonresidue(p)
    q = p ** (2 * u + 1)
    return TernaryForm(-eps, q, -eps * q, 0, 0, 0)


def iso_odd_form(p: int, v: int) -> TernaryForm:
    """-x^2 - p^v yz."""
    return TernaryForm(-1, 0, 0, -(p**v), 0, 0)


def aniso_two_form(u: int) -> TernaryForm:
    """3x^2 - 2^(2u+3) (y^2 + z^2 + yz)."""
    q = 2 ** (2 * u + 3)
    return TernaryForm(3, -q, -q, -q, 0, 0)


def iso_two_form(v: int) -> TernaryForm:
    """-x^2 - 2^(v+2) yz."""
    return TernaryForm(-1, 0, 0, -(2 ** (v + 2)), 0, 0)


def _split(n: int, p: int) -> tuple[int, int]:
    """n = m p^l with p not dividing m."""
    if n < 1:
        raise ValueError("n must be positive")
    l = valuation(n, p)
    return n // p**l, l


def _split4(n: int) -> tuple[int, int]:
    """n = 4^l m with 4 not dividing m."""
    if n < 1:
        raise ValueError("n must be positive")
    l = 0
    while n % 4 == 0:
        n //= 4
        l += 1
    return n, l


def _pw(p: int, e: int) -> Fraction:
    return Fraction(p) ** e


def density_siegel_unramified(p: int, n: int) -> Fraction:
    """d_p(-x^2 - yz, n) for odd p."""
    m, l = _split(n, p)
    k = l // 2
    if l % 2 == 0:
        return 1 + Fraction(1, p) + _pw(p, -(k + 1)) * (legendre(-m, p) - 1)
    return (1 + Fraction(1, p)) * (1 - _pw(p, -(k + 1)))


def density_aniso_odd(p: int, u: int, n: int) -> Fraction:
    """d_p(-eps x^2 + p^(2u+1) y^2 - eps p^(2u+1) z^2, n)."""
    m, l = _split(n, p)
    k = l // 2
    chi = legendre(-m, p)
    if l % 2:
        return Fraction(0) if k < u else _pw(p, 2 * u - k) * (1 + Fraction(1, p))
    if k <= u:
        return _pw(p, k) * (1 - chi)
    return _pw(p, 2 * u - k) * (1 - chi)


def density_iso_odd(p: int, v: int, n: int) -> Fraction:
    """d_p(-x^2 - p^v yz, n)."""
    m, l = _split(n, p)
    k = l // 2
    chi = legendre(-m, p)
    odd = l % 2 == 1
    if v % 2 == 0:
        h = v // 2
        if odd and l < v:
            return Fraction(0)
        if not odd and l < v:
            return _pw(p, k) * (1 + chi)
        if odd:
            return _pw(p, h - 1) + _pw(p, h) - _pw(p, v - k - 2) - _pw(p, v - k - 1)
        return _pw(p, h) + _pw(p, h - 1) + chi * _pw(p, v - k - 1) - _pw(p, v - k - 1)
    h = (v - 1) // 2
    if odd and l < v:
        return Fraction(0)
    if not odd and l < v:
        return _pw(p, k) * (1 + chi)
    if odd:
        return 2 * _pw(p, h) - _pw(p, v - k - 2) - _pw(p, v - k - 1)
    return 2 * _pw(p, h) - _pw(p, v - k - 1) + chi * _pw(p, v - k - 1)


def density_aniso_two(u: int, n: int) -> Fraction:
    """d_2(3x^2 - 2^(2u+3)(y^2 + z^2 + yz), n)."""
    m, l = _split4(n)
    if l <= u:
        return _pw(2, l + 2) if m % 8 == 3 else Fraction(0)
    if m % 8 == 3:
        return _pw(2, 2 * u + 2 - l)
    if m % 8 == 7:
        return Fraction(0)
    return 3 * _pw(2, 2 * u + 1 - l)


def _fundamental_split(n: int) -> tuple[int, int, int] | None:
    """n = 4^k m with -m fundamental; returns (k, m, m0) or None if n = 1, 2 mod 4."""
    if n % 4 in (1, 2):
        return None
    k = 0
    while True:
        if n % 4 == 3:
            return k, n, 0
        m0 = n // 4
        if m0 % 4 in (1, 2):
            return k, n, m0
        n = m0
        k += 1


def density_aniso_two_rewritten(u: int, n: int) -> Fraction:
    """The same density, organized by fundamental discriminants."""
    split = _fundamental_split(n)
    if split is None:
        return Fraction(0)
    k, m, m0 = split
    if m0 == 0:
        factor = 1 - kronecker(-m, 2)
        return _pw(2, k + 1) * factor if k < u else _pw(2, 2 * u + 1 - k) * factor
    return Fraction(0) if k < u else 3 * _pw(2, 2 * u - k)


def density_iso_two(v: int, n: int) -> Fraction:
    """d_2(-x^2 - 2^(v+2) yz, n)."""
    m, l = _split4(n)
    if v % 2 == 0:
        h = v // 2
        if 2 * l <= v - 2:
            return _pw(2, l + 2) if m % 8 == 7 else Fraction(0)
        if 2 * l == v:
            return {7: 3 * _pw(2, l), 3: _pw(2, l)}.get(m % 8, Fraction(0))
        if m % 8 == 7:
            return 3 * _pw(2, h)
        if m % 8 == 3:
            return 3 * _pw(2, h) - _pw(2, v + 1 - l)
        return 3 * (_pw(2, h) - _pw(2, v - l))
    top = _pw(2, (v + 3) // 2)
    if 2 * l < v + 1:
        return _pw(2, l + 2) if m % 8 == 7 else Fraction(0)
    if m % 8 == 7:
        return top
    if m % 8 == 3:
        return top - _pw(2, v + 1 - l)
    return top - 3 * _pw(2, v - l)


def density_iso_two_rewritten(v: int, n: int) -> Fraction:
    """Fundamental-discriminant rewrite of density_iso_two, as printed.

    Kept for regression only: its m0 = 1, 2 (mod 4) rows disagree with the
    direct count (e.g. they go negative for even v at 2k = v).
    """
    split = _fundamental_split(n)
    if split is None:
        return Fraction(0)
    k, m, m0 = split
    if v % 2 == 0:
        h = v // 2
        if 2 * k <= v - 2:
            return _pw(2, k + 1) * (1 + kronecker(-m, 2)) if m0 == 0 else Fraction(0)
        if m0 == 0:
            return 3 * _pw(2, h) if m % 8 == 7 else 3 * _pw(2, h) - _pw(2, v + 1 - k)
        return 3 * (_pw(2, h) - _pw(2, v + 1 - k))
    top = _pw(2, (v + 3) // 2)
    if 2 * k < v - 1:
        return _pw(2, k + 1) * (1 + kronecker(-m, 2)) if m0 == 0 else Fraction(0)
    if m0 == 0:
        return top if m % 8 == 7 else top - _pw(2, v + 1 - k)
    return top - 3 * _pw(2, v + 1 - k)


_DYADIC_BASE = {
    # form literal -> (value at m = 7 mod 8, m = 3 mod 8, m = 1, 2 mod 4) as functions of a
    "-x^2-yz": (
        lambda a: Fraction(3, 2),
        lambda a: Fraction(3, 2) - _pw(2, -(a + 1)),
        lambda a: Fraction(3, 2) - 3 * _pw(2, -(a + 2)),
    ),
    "-x^2-2yz": (
        lambda a: Fraction(2),
        lambda a: 2 - _pw(2, -a),
        lambda a: 2 - 3 * _pw(2, -(a + 1)),
    ),
    "-x^2-4yz": (
        lambda a: Fraction(3),
        lambda a: 3 - _pw(2, 1 - a),
        lambda a: 3 - 3 * _pw(2, -a),
    ),
    "3x^2-2(y^2+z^2+yz)": (
        lambda a: Fraction(0),
        lambda a: _pw(2, -a),
        lambda a: 3 * _pw(2, -(a + 1)),
    ),
}

DYADIC_BASE_FORMS = {
    "-x^2-yz": TernaryForm(-1, 0, 0, -1, 0, 0),
    "-x^2-2yz": TernaryForm(-1, 0, 0, -2, 0, 0),
    "-x^2-4yz": TernaryForm(-1, 0, 0, -4, 0, 0),
    "3x^2-2(y^2+z^2+yz)": TernaryForm(3, -2, -2, -2, 0, 0),
}


def density_dyadic_base(kind: str, n: int) -> Fraction:
    """Dyadic densities of the four small forms in DYADIC_BASE_FORMS."""
    m, a = _split4(n)
    seven, three, rest = _DYADIC_BASE[kind]
    if m % 8 == 7:
        return seven(a)
    if m % 8 == 3:
        return three(a)
    return rest(a)


def special_form(kind: str, p: int, exponent: int) -> TernaryForm:
    if kind == "aniso_odd":
        eps = least_nonresidue(p)
        return TernaryForm(-eps * p ** (2 * exponent + 1), 1, -eps, 0, 0, 0)
    if kind == "iso_odd":
        return TernaryForm(-(p**exponent), 0, 0, -1, 0, 0)
    if kind == "aniso_two":
        return TernaryForm(3 * 2 ** (2 * exponent + 3), -1, -1, -1, 0, 0)
    if kind == "iso_two":
        return TernaryForm(-(2 ** (exponent + 2)), 0, 0, -1, 0, 0)
    raise ValueError(f"unknown kind {kind!r}")


def density_special_values(kind: str, p: int, exponent: int, n: int) -> Fraction:
    """Densities at n = 1 (and n = 4 for odd p) of the forms in special_form.

    iso_odd needs exponent >= 1: at exponent 0 the form is -x^2 - yz, whose
    density at 1 is 1 + (-1/p)/p.
    """
    if kind in ("aniso_odd", "iso_odd"):
        if p == 2 or n not in (1, 4):
            raise ValueError("odd-prime special values need odd p and n in {1, 4}")
        if kind == "aniso_odd":
            return 1 + Fraction(1, p)
        if exponent < 1:
            raise ValueError("iso_odd special value needs exponent >= 1")
        return 1 - Fraction(1, p)
    if kind in ("aniso_two", "iso_two"):
        if p != 2 or n != 1:
            raise ValueError("dyadic special values need p = 2 and n = 1")
        return Fraction(3, 2) if kind == "aniso_two" else Fraction(1, 2)
    raise ValueError(f"unknown kind {kind!r}")


def closed_form_density(f: TernaryForm, p: int, n: int, max_exponent: int = 30) -> Fraction:
    """Closed-form density when f is literally one of the families above."""
    if p != 2:
        if f == siegel_form():
            return density_siegel_unramified(p, n)
        for e in range(max_exponent + 1):
            if f == iso_odd_form(p, e):
                return density_iso_odd(p, e, n)
            if f == aniso_odd_form(p, e):
                return density_aniso_odd(p, e, n)
            if n in (1, 4) and (f == special_form("aniso_odd", p, e) or (e and f == special_form("iso_odd", p, e))):
                kind = "aniso_odd" if f == special_form("aniso_odd", p, e) else "iso_odd"
                return density_special_values(kind, p, e, n)
    else:
        for kind, g in DYADIC_BASE_FORMS.items():
            if f == g:
                return density_dyadic_base(kind, n)
        for e in range(max_exponent + 1):
            if f == iso_two_form(e):
                return density_iso_two(e, n)
            if f == aniso_two_form(e):
                return density_aniso_two(e, n)
            if n == 1 and f in (special_form("aniso_two", 2, e), special_form("iso_two", 2, e)):
                kind = "aniso_two" if f == special_form("aniso_two", 2, e) else "iso_two"
                return density_special_values(kind, 2, e, n)
    raise DensityError(f"no closed form known for {f} at p={p}")
