from fractions import Fraction

import pytest

from tqf.eisenstein_h import LevelError, a_factor, admissible_level, admissible_levels, h_level, h_level_squarefree, square_part


def test_admissible_level():
    assert admissible_level(2, 1).N == 2
    assert admissible_level(30, 1).e == 3
    with pytest.raises(LevelError, match="even"):
        admissible_level(4, 3)
    with pytest.raises(LevelError):
        admissible_level(6, 1)  # two ramified primes
    with pytest.raises(LevelError):
        admissible_level(3, 3)


def test_admissible_levels_head():
    got = [(lv.N1, lv.N2) for lv in admissible_levels(10)]
    assert got == [(2, 1), (3, 1), (5, 1), (2, 3), (3, 2), (7, 1), (8, 1), (2, 5), (5, 2)]


def test_square_part():
    assert square_part(4, admissible_level(2, 1)).f == 1
    assert square_part(12, admissible_level(3, 1)).f == 1
    assert square_part(16, admissible_level(2, 1)).f == 2


def test_a_factor():
    lv = admissible_level(2, 1)
    assert a_factor(3, 2, lv) == 2
    assert a_factor(4, 2, lv) == 1
    assert a_factor(8, 2, lv) == 1


def test_h_level_examples():
    lv = admissible_level(2, 1)
    assert h_level(0, lv) == Fraction(1, 12)
    assert h_level(3, lv) == Fraction(2, 3)
    assert h_level(4, lv) == Fraction(1, 2)
    assert h_level(5, admissible_level(3, 1)) == 0


def test_squarefree_levels_agree_with_independent_path():
    for lv in admissible_levels(200):
        if any(e > 1 for _, e in lv.n1_factors + lv.n2_factors):
            continue
        for D in range(0, 150):
            assert h_level(D, lv) == h_level_squarefree(D, lv), (lv, D)
