"""Representation numbers R_f(n) and restricted variants."""

from __future__ import annotations

from functools import lru_cache

from .forms import FormError, TernaryForm
from .lattice import theta_series, ternary_vectors
from .reduction import reduce, reduce_with_witness

__all__ = ["rep_number", "rep_numbers", "restricted_rep_number"]


def _check(f: TernaryForm) -> None:
    if not f.is_positive_definite():
        raise FormError(f"form {f} is not positive definite")


def rep_number(f: TernaryForm, n: int) -> int:
    """#{(x, y, z) in Z^3 : f(x, y, z) = n}."""
    _check(f)
    if n < 0:
        return 0
    return sum(1 for *_, v in ternary_vectors(reduce(f), n) if v == n)


@lru_cache(maxsize=4096)
def rep_numbers(f: TernaryForm, nmax: int) -> tuple[int, ...]:
    """(R_f(0), ..., R_f(nmax)) in one enumeration pass."""
    _check(f)
    return tuple(theta_series(reduce(f), nmax))


def restricted_rep_number(f: TernaryForm, n: int, z_divisor: int = 1) -> int:
    """#{(x, y, z) : f(x, y, z) = n, z_divisor | z}.

    Vectors are listed on the reduced form h = f o U and mapped back by U,
    which keeps the count fast for badly skewed inputs.
    """
    _check(f)
    if n < 0:
        return 0
    h, U = reduce_with_witness(f)
    u0, u1, u2 = U[2]
    return sum(
        1 for x, y, z, v in ternary_vectors(h, n) if v == n and (u0 * x + u1 * y + u2 * z) % z_divisor == 0
    )
