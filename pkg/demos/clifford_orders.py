"""From a ternary form to its quaternion order and back, and the forms hanging off the order.

Run: python demos/clifford_orders.py
"""

from tqf.clifford import associated_form, half_integral_form, orders_of_level, rho_table, trace_zero_form
from tqf.eisenstein_h import admissible_level
from tqf.ternary import equivalent, phi_chain, rep_numbers, watson_lambda4

level = admissible_level(5, 2)
for o in orders_of_level(level):
    f_o, f_o0, f_s0 = associated_form(o), trace_zero_form(o), half_integral_form(o)
    print(f"order from {o.seed_form}")
    print(f"  f_O  = {f_o}   d = {f_o.disc}")
    print(f"  f_O0 = {f_o0}   d = {f_o0.disc}")
    print(f"  f_S0 = {f_s0}   d = {f_s0.disc}")

    # lambda_4 and the phi chain land back on the other two forms.
    print("  lambda_4(f_S0) ~ f_O0:", equivalent(watson_lambda4(f_s0), f_o0)[0])
    print("  phi_5 phi_2 (f_S0) ~ f_O:", equivalent(phi_chain(f_s0, [5, 2]), f_o)[0])

    # Elements with norm n and trace r are counted by f_S0 at 4n - r^2.
    reps = rep_numbers(f_s0, 40)
    table = rho_table(o, 10)
    pairs = [(n, r) for n in range(1, 11) for r in range(0, 7) if 0 <= 4 * n - r * r <= 40]
    agree = all(table.get((n, r), 0) == reps[4 * n - r * r] for n, r in pairs)
    print(f"  roots of X^2 - rX + n vs R_S0(4n - r^2) on {len(pairs)} pairs: {'agree' if agree else 'DIFFER'}")
