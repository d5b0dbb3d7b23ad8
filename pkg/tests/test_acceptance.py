"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line. pytest prints them in the
terminal summary, and ``python tests/test_acceptance.py`` prints them directly.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product

from oracles import hurwitz_brute
from tqf.classtype import NonIntegralError, RRange, class_number, type_number
from tqf.clifford import associated_form, clifford_order, half_integral_form, orders_of_level, rho_table, trace_zero_form
from tqf.eisenstein_h import admissible_level, admissible_levels
from tqf.hurwitz import hurwitz
from tqf.tables import TABLE_PRIME_POWER, TABLE_PRIME_POWER_CORRECTIONS, TABLE_SMALL_LEVELS
from tqf.ternary import TernaryForm, aut_count, equivalent, genus_enumerate, phi_chain, reduce, rep_numbers, s0_genus_key, watson_lambda4
from tqf.ternary.genus import reduced_candidates
from tqf.verify import mass, verify_class_one, verify_densities, verify_theta_identity

RESULTS: dict[int, str] = {}


def record(number: int, title: str, ok: bool, detail: str, started: float) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:>2}: {title} ({detail}, {time.perf_counter() - started:.1f}s)"
    RESULTS[number] = line
    print(line)
    assert ok, line


def test_criterion_01_small_level_table():
    t0 = time.perf_counter()
    levels = list(admissible_levels(100))
    computed = [(lv.N1, lv.N2, class_number(lv), type_number(lv)) for lv in levels]
    ok = computed == list(TABLE_SMALL_LEVELS)
    record(1, "small-level table", ok, f"{sum(a == b for a, b in zip(computed, TABLE_SMALL_LEVELS))}/{len(TABLE_SMALL_LEVELS)} rows", t0)


def test_criterion_02_prime_power_table():
    t0 = time.perf_counter()
    named = {(27, 5): (10, 4), (125, 8): (None, 28), (3**7, 1): (122, 70), (13**3, 16): (4056, 1027),
             (5**7, 1): (5209, 2667), (7**7, 1): (58825, 29584)}
    good = 0
    for n1, n2, h, t in TABLE_PRIME_POWER:
        t = TABLE_PRIME_POWER_CORRECTIONS.get((n1, n2), (t, t))[1]
        lv = admissible_level(n1, n2)
        good += (class_number(lv), type_number(lv)) == (h, t)
    named_ok = all(
        (want_h is None or class_number(admissible_level(*k)) == want_h) and type_number(admissible_level(*k)) == want_t
        for k, (want_h, want_t) in named.items()
    )
    ok = named_ok and good == len(TABLE_PRIME_POWER)
    record(2, "prime-power table with corrections", ok, f"{good}/{len(TABLE_PRIME_POWER)} rows, named rows {'ok' if named_ok else 'bad'}", t0)


def test_criterion_03_integrality():
    t0 = time.perf_counter()
    count, bad = 0, []
    for lv in admissible_levels(2000):
        count += 1
        try:
            class_number(lv)
            type_number(lv)
        except NonIntegralError:
            bad.append((lv.N1, lv.N2))
    record(3, "integrality up to N1N2 = 2000", not bad, f"{count} levels, {len(bad)} non-integral", t0)


def test_criterion_04_hurwitz_oracle():
    t0 = time.perf_counter()
    mismatches = [D for D in range(1, 2001) if hurwitz(D) != hurwitz_brute(D)]
    spots = (hurwitz(3), hurwitz(4), hurwitz(23)) == (Fraction(1, 3), Fraction(1, 2), 3)
    record(4, "Hurwitz class numbers", not mismatches and spots, f"D <= 2000, {len(mismatches)} mismatches", t0)


def test_criterion_05_density_closed_forms():
    t0 = time.perf_counter()
    rep = verify_densities()
    record(5, "density closed forms vs exact count", rep.passed, f"{len(rep.checks) - len(rep.failures)}/{len(rep.checks)} values", t0)


def test_criterion_06_clifford_round_trip():
    t0 = time.perf_counter()
    total, bad = 0, 0
    for d in range(1, 101):
        for coeffs in reduced_candidates(d):
            f = TernaryForm(*coeffs)
            if not f.is_primitive or reduce(f) != f:
                continue
            total += 1
            bad += associated_form(clifford_order(f)) != f
    record(6, "Clifford round trip", bad == 0 and total > 100, f"{total} forms with d <= 100", t0)


def test_criterion_07_order_roots_vs_s0_reps():
    t0 = time.perf_counter()
    checks, bad = 0, 0
    for lv in admissible_levels(30):
        for o in orders_of_level(lv):
            reps = rep_numbers(half_integral_form(o), 100)
            table = rho_table(o, 26)
            for n, r in product(range(26), range(-10, 11)):
                D = 4 * n - r * r
                if 0 <= D <= 100:
                    checks += 1
                    bad += table.get((n, r), 0) != reps[D]
    record(7, "rho(n, r) = R_S0(4n - r^2)", bad == 0, f"{checks} pairs", t0)


def test_criterion_08_bijection_chains():
    t0 = time.perf_counter()
    orders, bad = 0, 0
    for lv in admissible_levels(30):
        primes = sorted(set(lv.primes) - {2}, reverse=True) + [2]
        for o in orders_of_level(lv):
            orders += 1
            f_s0 = half_integral_form(o)
            image = phi_chain(f_s0, primes)
            bad += not equivalent(image, associated_form(o))[0] or aut_count(image) != aut_count(f_s0)
            if lv.N % 4:
                lam = watson_lambda4(f_s0)
                bad += not equivalent(lam, trace_zero_form(o))[0] or aut_count(lam) != aut_count(f_s0)
    record(8, "lambda_4 and phi chains", bad == 0, f"{orders} orders", t0)


def test_criterion_09_genus_counts_and_masses():
    t0 = time.perf_counter()
    levels, bad = 0, 0
    for lv in admissible_levels(30):
        levels += 1
        forms = genus_enumerate(s0_genus_key(lv))
        bad += len(forms) != type_number(lv)
        bad += sum(Fraction(1, aut_count(f)) for f in forms) != mass(lv)
    two = genus_enumerate(s0_genus_key(admissible_level(2, 1)))
    ok = bad == 0 and len(two) == 1 and Fraction(1, aut_count(two[0])) == Fraction(1, 48)
    record(9, "genus class counts and masses", ok, f"{levels} levels", t0)


def test_criterion_10_theta_identity_and_class_one():
    t0 = time.perf_counter()
    reports = [verify_theta_identity(lv, dmax=200) for lv in admissible_levels(30)]
    class_one = verify_class_one(dmax=200)
    ok = all(r.passed for r in reports) and class_one.passed
    record(10, "theta identity and class-one levels", ok, f"{len(reports)} levels, {len(class_one.checks)} class-one checks", t0)


def test_criterion_11_trace_zero_range():
    t0 = time.perf_counter()
    named = {(3, 4): 1, (5, 4): 1, (7, 4): 2, (11, 4): 3, (13, 4): 2, (17, 4): 3, (19, 4): 4, (23, 4): 6}
    rows = [r for r in TABLE_SMALL_LEVELS if r[1] % 8 == 4]
    pinned = all(type_number(admissible_level(n1, n2)) == t for n1, n2, _, t in rows)
    pinned &= all(type_number(admissible_level(*k)) == t for k, t in named.items())
    diverged = 0
    for n1, n2, _, t in rows:
        try:
            diverged += type_number(admissible_level(n1, n2), RRange.ALL) != t
        except NonIntegralError:
            diverged += 1
    record(11, "n = 4 trace range", pinned and diverged > 0, f"pinned variant {len(rows)}/{len(rows)}, other diverges on {diverged}", t0)


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for test in tests:
        try:
            test()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
