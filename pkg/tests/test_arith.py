import pytest

from oracles import kronecker_brute
from tqf.arith import (
    factorize,
    format_rational,
    fundamental_part,
    hilbert_symbol,
    is_prime,
    kronecker,
    legendre,
    unitary_divisors,
    valuation,
)


@pytest.mark.parametrize("a,n,want", [(-3, 2, -1), (-4, 2, 0), (5, 1, 1), (2, 7, 1), (-1, 2, 1), (3, 2, -1)])
def test_kronecker_examples(a, n, want):
    assert kronecker(a, n) == want


def test_kronecker_matches_euler_criterion():
    for p in (3, 5, 7, 11, 13, 101):
        for a in range(-60, 61):
            assert kronecker(a, p) == kronecker_brute(a, p) == legendre(a, p)


def test_kronecker_multiplicative_in_modulus():
    for a in range(-30, 31):
        for m in range(1, 25):
            for n in range(1, 25):
                assert kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n)


def test_valuation():
    assert valuation(12, 2) == 2
    assert valuation(12, 3) == 1
    assert valuation(7, 5) == 0
    assert valuation(-250, 5) == 3


def test_factorize():
    assert list(factorize(1)) == []
    assert list(factorize(35152)) == [(2, 4), (13, 3)]
    assert list(factorize(60)) == [(2, 2), (3, 1), (5, 1)]
    for n in range(2, 500):
        prod = 1
        for p, e in factorize(n):
            assert is_prime(p)
            prod *= p**e
        assert prod == n


def test_unitary_divisors():
    assert unitary_divisors(12) == [1, 3, 4, 12]
    assert unitary_divisors(8) == [1, 8]
    assert unitary_divisors(30) == [1, 2, 3, 5, 6, 10, 15, 30]
    from math import gcd

    for n in range(1, 200):
        brute = [d for d in range(1, n + 1) if n % d == 0 and gcd(d, n // d) == 1]
        assert unitary_divisors(n) == brute


def test_fundamental_part():
    assert fundamental_part(1) == (4, 1)
    assert fundamental_part(9) == (4, 3)
    assert fundamental_part(2) == (8, 1)
    for n in range(1, 300):
        n0, n1 = fundamental_part(n)
        assert n0 * n1 * n1 == 4 * n


def test_hilbert_symbol_reciprocity():
    primes = [2, 3, 5, 7, 11, 13]
    for a in (-7, -3, -1, 2, 3, 5, 6, 10, 15):
        for b in (-5, -2, -1, 3, 7, 11, 14):
            places = [hilbert_symbol(a, b, p) for p in primes]
            real = -1 if a < 0 and b < 0 else 1
            prod = real
            for s in places:
                prod *= s
            assert prod == 1


def test_format_rational():
    from fractions import Fraction

    assert format_rational(Fraction(-5, 24)) == "-5/24"
    assert format_rational(Fraction(7)) == "7"
