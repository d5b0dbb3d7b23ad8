"""Slow, deliberately naive reference implementations used only by tests."""

from fractions import Fraction
from itertools import product


def kronecker_brute(a: int, p: int) -> int:
    """(a/p) for an odd prime p by Euler's criterion."""
    r = pow(a % p, (p - 1) // 2, p)
    return 0 if a % p == 0 else (1 if r == 1 else -1)


def hurwitz_brute(D: int) -> Fraction:
    """Weighted count of SL2(Z)-classes of positive binary forms of discriminant -D.

    Forms are listed with -a < b <= a <= c (b >= 0 when a = c); multiples of
    x^2 + y^2 weigh 1/2 and multiples of x^2 + xy + y^2 weigh 1/3.
    """
    if D % 4 in (1, 2):
        return Fraction(0)
    total = Fraction(0)
    a = 1
    while 3 * a * a <= D:
        for b in range(-a + 1, a + 1):
            if (b * b + D) % (4 * a):
                continue
            c = (b * b + D) // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if (b, c) == (0, a):
                total += Fraction(1, 2)
            elif (b, c) == (a, a):
                total += Fraction(1, 3)
            else:
                total += 1
        a += 1
    return total


def divisor_sum(n: int) -> int:
    return sum(d for d in range(1, n + 1) if n % d == 0)


def rep_count_box(coeffs, n: int, box: int) -> int:
    a, b, c, r, s, t = coeffs
    rng = range(-box, box + 1)
    return sum(
        1
        for x, y, z in product(rng, rng, rng)
        if a * x * x + b * y * y + c * z * z + r * y * z + s * x * z + t * x * y == n
    )
