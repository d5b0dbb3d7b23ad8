from fractions import Fraction

from tqf.eisenstein_h import admissible_level, admissible_levels
from tqf.tables import CLASS_ONE_LEVELS, TABLE_PRIME_POWER, TABLE_PRIME_POWER_CORRECTIONS, TABLE_SMALL_LEVELS
from tqf.ternary import aut_count, equivalent, genus_enumerate, order_genus_key, s0_genus_key
from tqf.verify import (
    class_one_form,
    mass,
    verify_class_one,
    verify_mass,
    verify_tables,
    verify_theta_identity,
    verify_type_count,
)


def test_mass_examples():
    assert mass(admissible_level(2, 1)) == Fraction(1, 48)
    assert mass(admissible_level(11, 1)) == sum(
        Fraction(1, n) for n in (12, 8)
    )


def test_theta_row_zero_is_the_mass():
    level = admissible_level(7, 2)
    rep = verify_theta_identity(level, dmax=40)
    assert rep.passed
    assert rep.checks[0].expected == mass(level)
    assert len(rep.checks) == 41


def test_report_summary_and_dict():
    rep = verify_mass(admissible_level(5, 1))
    assert rep.summary() == "PASS mass (5,1): 1/1 checks"
    d = rep.to_dict()
    assert d["pass"] and d["checks"][0]["expected"] == d["checks"][0]["actual"]


def test_failed_check_is_reported():
    rep = verify_type_count(admissible_level(3, 1))
    rep.add("deliberately wrong", 1, 2)
    assert not rep.passed
    assert rep.summary().startswith("FAIL")
    assert len(rep.failures) == 1


def test_tables_are_consistent():
    assert len(TABLE_SMALL_LEVELS) == 144
    assert len(TABLE_PRIME_POWER) == 23
    assert len(CLASS_ONE_LEVELS) == 26
    assert verify_tables().passed


def test_printed_1331_row_differs_from_recomputation():
    printed = next(r for r in TABLE_PRIME_POWER if r[:2] == (1331, 1))
    assert printed[3] == 54
    assert TABLE_PRIME_POWER_CORRECTIONS[(1331, 1)] == (54, 62)
    level = admissible_level(1331, 1)
    forms = genus_enumerate(order_genus_key(level))
    assert len(forms) == 62
    assert sum(Fraction(1, aut_count(f)) for f in forms) == Fraction(605, 24)


def test_class_one_form_matches_enumerated_genus():
    for n1, n2 in CLASS_ONE_LEVELS:
        level = admissible_level(n1, n2)
        if 16 * level.N**2 > 20000:
            continue
        (only,) = genus_enumerate(s0_genus_key(level))
        assert equivalent(class_one_form(level), only)[0]


def test_class_one_suite_small():
    levels = [admissible_level(n1, n2) for n1, n2 in CLASS_ONE_LEVELS[:5]]
    assert verify_class_one(levels, dmax=60).passed


def test_mass_and_type_count_up_to_20():
    for level in admissible_levels(20):
        assert verify_mass(level).passed
        assert verify_type_count(level).passed
