from fractions import Fraction

import pytest

from oracles import divisor_sum, hurwitz_brute
from tqf.hurwitz import hurwitz, reduced_forms


@pytest.mark.parametrize("D,want", [(3, Fraction(1, 3)), (4, Fraction(1, 2)), (23, 3), (5, 0), (7, 1), (8, 1)])
def test_hurwitz_examples(D, want):
    assert hurwitz(D) == want


def test_reduced_forms_23():
    assert sorted(reduced_forms(23)) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


def test_hurwitz_against_independent_enumeration():
    for D in range(1, 2001):
        assert hurwitz(D) == hurwitz_brute(D), D


def test_class_number_relation():
    # sum over r of H(4n - r^2) = 2 sigma(n) - sum_{d | n} min(d, n/d), with H(0) = -1/12
    for n in range(1, 300):
        total = Fraction(0)
        r = 0
        while r * r <= 4 * n:
            D = 4 * n - r * r
            value = Fraction(-1, 12) if D == 0 else hurwitz(D)
            total += value if r == 0 else 2 * value
            r += 1
        expected = 2 * divisor_sum(n) - sum(min(d, n // d) for d in range(1, n + 1) if n % d == 0)
        assert total == expected, n


def test_hurwitz_rejects_zero():
    with pytest.raises(ValueError):
        hurwitz(0)
