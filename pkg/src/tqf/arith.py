"""Exact integer primitives: Kronecker symbols, valuations, factorization,
unitary divisors and fundamental discriminants.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod

Rational = Fraction
Factorization = tuple[tuple[int, int], ...]

__all__ = [
    "Rational",
    "Factorization",
    "kronecker",
    "legendre",
    "valuation",
    "factorize",
    "prime_divisors",
    "is_prime",
    "unitary_divisors",
    "fundamental_part",
    "is_fundamental_discriminant",
    "squarefree_part",
    "hilbert_symbol",
    "as_rational",
    "format_rational",
]


def valuation(n: int, p: int) -> int:
    """Exponent of the prime ``p`` in the nonzero integer ``n``."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _kronecker_two(a: int) -> int:
    if a % 2 == 0:
        return 0
    return 1 if a % 8 in (1, 7) else -1


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for arbitrary integers."""
    if n == 0:
        return 1 if abs(a) == 1 else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    v = 0
    while n % 2 == 0:
        n //= 2
        v += 1
    if v:
        k2 = _kronecker_two(a)
        if k2 == 0:
            return 0
        if v % 2 and k2 == -1:
            result = -result
    # n is now odd and positive: Jacobi symbol via reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol for an odd prime ``p``."""
    return kronecker(a, p)


_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


@lru_cache(maxsize=65536)
def factorize(n: int) -> Factorization:
    """Prime factorization as a sorted tuple of ``(prime, exponent)``."""
    if n < 1:
        raise ValueError(f"factorize expects a positive integer, got {n}")
    out = []
    for p in (2, 3, 5):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p, i = 7, 0
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += _WHEEL[i]
        i = (i + 1) % 8
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def prime_divisors(n: int) -> tuple[int, ...]:
    return tuple(p for p, _ in factorize(abs(n)))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == ((n, 1),)


def unitary_divisors(n: int) -> list[int]:
    """Divisors ``d`` of ``n`` with ``gcd(d, n // d) == 1``, ascending."""
    divs = [1]
    for p, e in factorize(n):
        q = p**e
        divs += [d * q for d in divs]
    return sorted(divs)


def squarefree_part(n: int) -> int:
    """Squarefree kernel of a nonzero integer, keeping the sign."""
    sign = -1 if n < 0 else 1
    return sign * prod(p for p, e in factorize(abs(n)) if e % 2)


def is_fundamental_discriminant(D: int) -> bool:
    if D % 4 == 1:
        return squarefree_part(D) == D and D != 1
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree_part(m) == m
    return False


def fundamental_part(n: int) -> tuple[int, int]:
    """Write ``-4n = -n0 * n1**2`` with ``-n0`` a fundamental discriminant."""
    if n < 1:
        raise ValueError("fundamental_part expects n >= 1")
    D = -4 * n
    core = squarefree_part(D)  # negative, squarefree
    D0 = core if core % 4 == 1 else 4 * core
    n1 = isqrt(D // D0)
    assert D0 * n1 * n1 == D
    return -D0, n1


def _hilbert_odd(a: int, b: int, p: int) -> int:
    alpha, beta = valuation(a, p), valuation(b, p)
    u, v = a // p**alpha, b // p**beta
    s = -1 if (alpha * beta) % 2 and p % 4 == 3 else 1
    if beta % 2:
        s *= legendre(u, p)
    if alpha % 2:
        s *= legendre(v, p)
    return s


def _hilbert_two(a: int, b: int) -> int:
    alpha, beta = valuation(a, 2), valuation(b, 2)
    u, v = a // 2**alpha, b // 2**beta
    e = _eps(u) * _eps(v) + alpha * _omega(v) + beta * _omega(u)
    return -1 if e % 2 else 1


def _eps(x: int) -> int:
    return ((x - 1) // 2) % 2


def _omega(x: int) -> int:
    return ((x * x - 1) // 8) % 2


def hilbert_symbol(a, b, p: int) -> int:
    """Hilbert symbol (a, b)_p for nonzero rationals ``a``, ``b``."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    # x/y and x*y lie in the same square class
    ai = a.numerator * a.denominator
    bi = b.numerator * b.denominator
    if p == 2:
        return _hilbert_two(ai, bi)
    return _hilbert_odd(ai, bi, p)


def as_rational(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def format_rational(x) -> str:
    """Exact text form: ``"7"`` or ``"-5/24"``."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def lcm(*xs: int) -> int:
    out = 1
    for x in xs:
        out = out * x // gcd(out, x)
    return out
