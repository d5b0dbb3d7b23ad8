import pytest

from tqf.classtype import DEFAULT_RRANGE, NonIntegralError, RRange, b_factor, c_factor, class_number, type_number
from tqf.eisenstein_h import admissible_level
from tqf.tables import TABLE_SMALL_LEVELS


def test_b_factor():
    assert b_factor(8, 2) == 2
    assert b_factor(4, 2) == 3
    assert b_factor(9, 3) == 4


def test_c_factor():
    assert c_factor(4, 2) == 1
    assert c_factor(44, 2) == 2
    assert c_factor(3, 3) == 1


@pytest.mark.parametrize("n1,n2,h,t", [(2, 1, 1, 1), (125, 1, 9, 7), (11, 1, 2, 2), (27, 5, 10, 4), (2187, 1, 122, 70)])
def test_class_and_type_examples(n1, n2, h, t):
    level = admissible_level(n1, n2)
    assert class_number(level) == h
    assert type_number(level) == t


def test_largest_correction():
    assert type_number(admissible_level(13**3, 16)) == 1027


def test_integral_for_all_levels_up_to_2000():
    from tqf.eisenstein_h import admissible_levels

    count = 0
    for level in admissible_levels(2000):
        assert type_number(level) >= 1
        count += 1
    assert count > 4000


def test_trace_zero_is_pinned():
    assert DEFAULT_RRANGE is RRange.TRACE_ZERO


def test_all_r_variant_diverges_on_4_exact_levels():
    """Summing r over {-4, 0, 4} for the n = 4 term breaks integrality exactly when 4 || N2."""
    bad = []
    for n1, n2, _, t in TABLE_SMALL_LEVELS:
        level = admissible_level(n1, n2)
        assert type_number(level) == t
        try:
            value = type_number(level, RRange.ALL)
        except NonIntegralError:
            bad.append((n1, n2))
            continue
        assert value == t
    assert bad == [r[:2] for r in TABLE_SMALL_LEVELS if r[1] % 8 == 4]
    assert len(bad) == 12
