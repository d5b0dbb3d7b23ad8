"""Closed-form local densities next to an exact p-adic count and a direct count mod p^t.

Run: python demos/density_crosscheck.py
"""

from tqf import densities as dens

f = dens.iso_odd_form(3, 1)
print(f"form {f} at p = 3")
print(" n   closed    exact    mod 3^t")
for n in range(1, 13):
    closed = dens.density_iso_odd(3, 1, n)
    exact = dens.local_density(f, 3, n)
    try:
        direct = dens.stabilized_density(f, 3, n, t_cap=8)
    except dens.DensityError:
        direct = "-"  # 3^t too large to count directly
    print(f"{n:2d}   {str(closed):>6}   {str(exact):>6}   {str(direct):>6}")

# Two printed forms of the dyadic isotropic density disagree at some n.
print()
print("iso_two v=2: where the rewritten closed form departs from the exact count")
for n in range(1, 200):
    a, b = dens.density_iso_two(2, n), dens.density_iso_two_rewritten(2, n)
    if a != b:
        print(f"  n = {n}: exact {dens.local_density(dens.iso_two_form(2), 2, n)}, closed {a}, rewritten {b}")
