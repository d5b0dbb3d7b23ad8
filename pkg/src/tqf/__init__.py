"""Class numbers and type numbers of quaternion orders of level (N1, N2).

The totals come from modified Hurwitz class numbers.  Type numbers are
checked independently against genera of ternary quadratic forms.
"""

__version__ = "0.1.0"
