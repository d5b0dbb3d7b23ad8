"""Class and type numbers for small levels, with the pieces of the type number formula.

Run: python demos/type_numbers.py
"""

from tqf.classtype import RRange, NonIntegralError, type_number
from tqf.eisenstein_h import admissible_level, admissible_levels, h_level
from tqf.classtype import class_number

print("level   N1   N2    h    T")
for level in admissible_levels(40):
    print(f"{level.N:5d} {level.N1:4d} {level.N2:4d} {class_number(level):4d} {type_number(level):4d}")

# The type number is a weighted sum of modified Hurwitz class numbers.
level = admissible_level(2, 1)
print()
print("H^(2,1)(D) for D = 0..12:")
print("  " + ", ".join(str(h_level(D, level)) for D in range(13)))

# At n = 4 only trace-zero elements contribute. Letting r range over
# {-4, 0, 4} instead breaks integrality whenever 4 exactly divides N2.
print()
for pair in [(3, 4), (7, 4), (23, 4)]:
    level = admissible_level(*pair)
    try:
        other = type_number(level, RRange.ALL)
    except NonIntegralError:
        other = "not an integer"
    print(f"T{pair} = {type_number(level)}; summing r over -4, 0, 4 gives {other}")
