"""Enumerate a genus of ternary forms and check it against the type number and the mass.

Run: python demos/genus_and_mass.py [N1 N2]
"""

import sys
from fractions import Fraction

from tqf.classtype import type_number
from tqf.eisenstein_h import admissible_level, h_level
from tqf.ternary import aut_count, genus_enumerate, rep_numbers, s0_genus_key
from tqf.verify import mass

n1, n2 = (int(x) for x in sys.argv[1:3]) if len(sys.argv) > 2 else (11, 2)
level = admissible_level(n1, n2)
key = s0_genus_key(level)
forms = genus_enumerate(key)

print(f"level {level}: genus with N = {key.level}, d = {key.disc}, anisotropic at {sorted(key.aniso)}")
for f in forms:
    print(f"  {f}   |Aut| = {aut_count(f)}")
weights = sum(Fraction(1, aut_count(f)) for f in forms)
print(f"classes: {len(forms)}   type number: {type_number(level)}")
print(f"sum of 1/|Aut|: {weights}   mass formula: {mass(level)}")

# The weighted theta series of the genus equals a scaled H^(N1,N2).
scale = Fraction(1, 2 ** (level.e + 1))
print()
print(" D   sum R_f(D)/|Aut f|   2^(-e-1) H(D)")
series = [(rep_numbers(f, 40), Fraction(1, aut_count(f))) for f in forms]
for D in range(0, 41):
    if D % 4 in (1, 2):
        continue
    lhs = sum(r[D] * w for r, w in series)
    print(f"{D:2d}   {str(lhs):>18}   {str(scale * h_level(D, level)):>13}")
