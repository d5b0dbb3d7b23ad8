import pytest

from tqf.arith import valuation
from tqf.clifford import associated_form, half_integral_form, orders_of_level, trace_zero_form
from tqf.eisenstein_h import admissible_level, admissible_levels
from tqf.ternary import (
    aut_count,
    equivalent,
    lehman_case,
    normalize_at_p,
    phi_chain,
    phi_p,
    phi_p_inv,
    rep_number,
    restricted_rep_number,
    watson_lambda4,
)
from tqf.ternary.forms import TernaryForm


def s0_form(n1, n2, index=0):
    return half_integral_form(orders_of_level(admissible_level(n1, n2))[index])


def chain_primes(level):
    """2 applied first, then the odd primes."""
    return sorted(set(level.primes) - {2}, reverse=True) + [2]


LEVELS = admissible_levels(30)


def test_phi_chain_maps_s0_to_order_form():
    for level in LEVELS:
        for o in orders_of_level(level):
            f_s0, f_o = half_integral_form(o), associated_form(o)
            image = phi_chain(f_s0, chain_primes(level))
            assert equivalent(image, f_o)[0], level
            assert aut_count(image) == aut_count(f_s0)


def test_lambda4_maps_s0_to_trace_zero_form():
    for level in LEVELS:
        if level.N % 4 == 0:
            continue
        for o in orders_of_level(level):
            f_s0 = half_integral_form(o)
            image = watson_lambda4(f_s0)
            assert image.disc == f_s0.disc // 16
            assert equivalent(image, trace_zero_form(o))[0], level
            assert aut_count(image) == aut_count(f_s0)


def test_lambda4_level_two_gives_sum_of_three_squares():
    assert equivalent(watson_lambda4(s0_form(2, 1)), TernaryForm(1, 1, 1, 0, 0, 0))[0]


def test_phi_inverse_round_trip():
    for level in LEVELS:
        for o in orders_of_level(level):
            f = half_integral_form(o)
            for p in sorted(level.primes):
                try:
                    lehman_case(f, p)
                except ValueError:
                    continue
                g = phi_p(f, p)
                assert g.level == f.level
                assert equivalent(phi_p_inv(g, p), f)[0], (level, p)
                assert aut_count(g) == aut_count(f)


def test_normalize_odd_shape_at_27():
    f = s0_form(27, 1)
    assert lehman_case(f, 3) == "odd"
    g, U = normalize_at_p(f, 3)
    assert f.transform(U) == g
    a, b, c, r, s, t = g.coefficients
    for coeff in (a, b, r, s, t):
        assert coeff % 27 == 0
    assert (a // 27) % 3 and c % 3


def test_normalize_dyadic_high_shape_at_8_5():
    f = s0_form(8, 5)
    assert lehman_case(f, 2) == "high"
    gexp = valuation(f.level, 2)
    g, U = normalize_at_p(f, 2)
    assert f.transform(U) == g
    a, b, c, r, s, t = g.coefficients
    for coeff in (a, b, r, s, t):
        assert coeff % 2**gexp == 0
    assert c % 2


def test_normalize_is_identity_on_shaped_input():
    f, _ = normalize_at_p(s0_form(27, 1), 3)
    g, U = normalize_at_p(f, 3)
    assert g == f and U == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_phi_at_27_then_dyadic_reaches_order_form():
    o = orders_of_level(admissible_level(27, 1))[0]
    image = phi_p(phi_p(half_integral_form(o), 2), 3)
    assert (image.disc, image.level) == (27, 108)
    assert equivalent(image, associated_form(o))[0]


@pytest.mark.parametrize("n1,n2,p", [(27, 1, 3), (2, 9, 3), (5, 1, 5), (3, 25, 5)])
def test_restricted_count_identity_odd(n1, n2, p):
    f = s0_form(n1, n2)
    g = valuation(f.level, p)
    shaped, _ = normalize_at_p(f, p)
    target = phi_p(f, p)
    for n in range(1, 40):
        assert restricted_rep_number(shaped, p**g * n, p**g) == rep_number(target, n)


@pytest.mark.parametrize("n1,n2", [(8, 1), (8, 3)])
def test_restricted_count_identity_dyadic(n1, n2):
    f = s0_form(n1, n2)
    g = valuation(f.level, 2)
    assert g == 5 or lehman_case(f, 2) == "high"
    shaped, _ = normalize_at_p(f, 2)
    target = phi_p(f, 2)
    for n in range(1, 40):
        assert restricted_rep_number(shaped, 2**g * n, 2 ** (g - 1)) == rep_number(target, n)
