"""Lehman's maps phi_p and Watson's lambda_4 on classes of ternary forms.

normalize_at_p brings a form into the divisibility shape phi_p needs.  It
splits the Gram matrix over Z_p, truncates the p-integral change of basis
modulo a high power of p, and lifts that matrix to SL_3(Z).  Every result
is checked against the target shape, so a failure is loud.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from ..arith import valuation
from .forms import FormError, TernaryForm, mat_det, mat_mul, mat_transpose
from .lattice import hnf_rows
from .local import JordanBlock, jordan_decomposition
from .reduction import reduce

__all__ = [
    "NormalizationError",
    "lehman_case",
    "normalize_at_p",
    "phi_p",
    "phi_p_inv",
    "phi_chain",
    "watson_lambda4",
]


class NormalizationError(FormError):
    """The requested p-local shape could not be produced."""


def _gh(f: TernaryForm, p: int) -> tuple[int, int]:
    return valuation(f.level, p), valuation(f.disc, p)


def lehman_case(f: TernaryForm, p: int) -> str:
    """Which shape applies: 'odd', or 'low', 'middle', 'high' at p = 2."""
    g, h = _gh(f, p)
    if p != 2:
        if g == 0:
            raise NormalizationError(f"{p} does not divide the level of {f}")
        return "odd"
    if h == g - 2:
        return "low"
    if g <= h <= 2 * g - 2:
        return "middle"
    if h == 2 * g:
        return "high"
    raise NormalizationError(f"no dyadic shape for g={g}, h={h}")


# Shape of the normalized form: for each of (a, b, c, r, s, t) the exact or
# minimal power of p, and which coefficients must be p-units after division.
def _shape(case: str, g: int, h: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if case == "odd":
        return (g, h - g, 0, h - g, g, g), (0, 2)
    if case == "low":
        return (g - 2, 0, 0, 0, g - 1, g - 1), (0, 2)
    if case == "middle":
        return (g - 2, h - g, 0, h - g + 1, g - 1, g - 1), (0, 2)
    return (g, g, 0, g, g, g), (0, 2)


def _has_shape(f: TernaryForm, p: int, case: str, g: int, h: int) -> bool:
    exps, units = _shape(case, g, h)
    coeffs = f.coefficients
    if any(x % p**e for x, e in zip(coeffs, exps)):
        return False
    return all((coeffs[i] // p ** exps[i]) % p for i in units)


def _lift_to_sl3(A, m: int):
    """An integer matrix in SL_3(Z) congruent to A modulo m (det A = 1 mod m)."""
    n = 3
    A = [[x % m for x in row] for row in A]
    ops = []  # (i, j, k): row_i += k * row_j

    def rowop(i, j, k):
        k %= m
        if k:
            A[i] = [(x + k * y) % m for x, y in zip(A[i], A[j])]
            ops.append((i, j, k))

    def unit(x):
        return gcd(x, m) == 1

    for col in range(n):
        if not unit(A[col][col]):
            piv = next((r for r in range(col + 1, n) if unit(A[r][col])), None)
            if piv is None:
                raise NormalizationError("matrix is not invertible modulo m")
            rowop(col, piv, 1)
        if A[col][col] != 1:
            u = A[col][col]
            if col + 1 < n:
                nxt = col + 1
                rowop(nxt, col, (pow(u, -1, m) * (1 - A[nxt][col])) % m)
                rowop(col, nxt, 1 - A[col][col])
            else:
                raise NormalizationError("determinant is not 1 modulo m")
        for r in range(n):
            if r != col:
                rowop(r, col, -A[r][col])
    # E_k ... E_1 A = I, hence A = E_1^-1 ... E_k^-1
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    for i, j, k in reversed(ops):
        # left-multiply by E^-1: row_i -= k * row_j
        U[i] = [x - k * y for x, y in zip(U[i], U[j])]
    return tuple(tuple(r) for r in U)


def normalize_at_p(f: TernaryForm, p: int):
    """(g, U) with g = f o U in the shape phi_p expects at p."""
    case = lehman_case(f, p)
    G, H = _gh(f, p)
    if _has_shape(f, p, case, G, H):
        return f, ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    M = f.gram()
    P, blocks = jordan_decomposition(M, p)
    cols = _assign_columns(blocks, case, G, H, p)
    Pcols = [[P[i][j] for i in range(3)] for j in cols]
    K = 2 * G + H + 6
    m = p**K
    Q = [[_mod(Pcols[j][i], m) for j in range(3)] for i in range(3)]
    det = mat_det(Q) % m
    inv = pow(det, -1, m)
    for i in range(3):
        Q[i][2] = Q[i][2] * inv % m  # scale the last column by a unit
    U = _lift_to_sl3(Q, m)
    g = f.transform(U)
    g, V = _fix_units(g, p, case, G, H)
    U = mat_mul(U, V)
    if not _has_shape(g, p, case, G, H):
        raise NormalizationError(f"could not bring {f} into the {case} shape at {p}")
    return g, U


def _mod(x: Fraction, m: int) -> int:
    return x.numerator * pow(x.denominator, -1, m) % m


def _assign_columns(blocks: list[JordanBlock], case: str, g: int, h: int, p: int) -> list[int]:
    """Order the Jordan basis vectors as (x, y, z) for the target shape.

    Scales are valuations of the Gram matrix M = 2 * (half-form).
    """
    start = []
    pos = 0
    for b in blocks:
        start.append(pos)
        pos += b.dim
    one = [(b.scale, start[i]) for i, b in enumerate(blocks) if b.dim == 1]
    two = [(b.scale, start[i]) for i, b in enumerate(blocks) if b.dim == 2]
    if case == "odd":
        want = [g, h - g, 0]
        return _match_singles(one, want)
    if case == "middle":
        if two:
            raise NormalizationError("even Jordan block where the middle shape needs a diagonal")
        return _match_singles(one, [g - 1, h - g + 1, 1])
    if case == "low":
        # x: odd 1x1 at scale g-1, (y, z): even block at scale 0
        if len(two) != 1 or two[0][0] != 0 or len(one) != 1 or one[0][0] != g - 1:
            raise NormalizationError("dyadic low shape not matched by the splitting")
        s = two[0][1]
        return [one[0][1], s, s + 1]
    # high: (x, y) even block at scale g, z odd at scale 1
    if len(two) != 1 or two[0][0] != g or len(one) != 1 or one[0][0] != 1:
        raise NormalizationError("dyadic high shape not matched by the splitting")
    s = two[0][1]
    return [s, s + 1, one[0][1]]


def _match_singles(one, want):
    pool = list(one)
    cols = []
    for w in want:
        hit = next((e for e in pool if e[0] == w), None)
        if hit is None:
            raise NormalizationError(f"no Jordan component at scale {w}")
        pool.remove(hit)
        cols.append(hit[1])
    return cols


def _fix_units(g: TernaryForm, p: int, case: str, G: int, H: int):
    """Inside an even 2x2 block make the required diagonal entry a unit."""
    I = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    if p != 2 or case in ("odd", "middle"):
        return g, I
    exps, _ = _shape(case, G, H)
    if case == "low":
        pair, need = (1, 2), 2  # c must be odd
    else:
        pair, need = (0, 1), 0  # a must be odd
    coeffs = g.coefficients
    if (coeffs[need] // 2 ** exps[need]) % 2:
        return g, I
    other = pair[0] if need == pair[1] else pair[1]
    if (coeffs[other] // 2 ** exps[other]) % 2:
        V = [list(r) for r in I]
        V[need][need] = V[other][other] = 0
        V[need][other] = V[other][need] = 1
        V[3 - need - other][3 - need - other] = -1  # keep det = 1
    else:
        V = [list(r) for r in I]
        V[other][need] = 1  # e_need <- e_need + e_other
    V = tuple(tuple(r) for r in V)
    return g.transform(V), V


def phi_p(f: TernaryForm, p: int) -> TernaryForm:
    """Lehman's map C(N, p^h d') -> C(N, p^(3g-h) d') (p^(3g-h-2) at p = 2).

    Returns the reduced representative of the image class.
    """
    case = lehman_case(f, p)
    g_, h = _gh(f, p)
    nf, _ = normalize_at_p(f, p)
    A, B, C, R, S, T = nf.coefficients
    q = p
    if case == "odd":
        a, b, c = A // q**g_, B // q ** (h - g_), C
        r, s, t = R // q ** (h - g_), S // q**g_, T // q**g_
        out = (a, q ** (2 * g_ - h) * b, q**g_ * c, q**g_ * r, q**g_ * s, q ** (2 * g_ - h) * t)
    elif case == "low":
        a, s, t = A // 2 ** (g_ - 2), S // 2 ** (g_ - 1), T // 2 ** (g_ - 1)
        e = 2**g_
        out = (a, e * B, e * C, e * R, e * s, e * t)
    elif case == "middle":
        a, b, c = A // 2 ** (g_ - 2), B // 2 ** (h - g_), C
        r, s, t = R // 2 ** (h - g_ + 1), S // 2 ** (g_ - 1), T // 2 ** (g_ - 1)
        out = (
            a, 2 ** (2 * g_ - h - 2) * b, 2 ** (g_ - 2) * c,
            2 ** (g_ - 1) * r, 2 ** (g_ - 1) * s, 2 ** (2 * g_ - h - 1) * t,
        )
    else:
        e = 2**g_
        a, b, c, r, s, t = A // e, B // e, C, R // e, S // e, T // e
        out = (a, b, 2 ** (g_ - 2) * c, 2 ** (g_ - 1) * r, 2 ** (g_ - 1) * s, t)
    res = TernaryForm(*out)
    dh = (3 * g_ - h) if p != 2 else (3 * g_ - h - 2)
    if res.disc != f.disc // p**h * p**dh or res.level != f.level:
        raise AssertionError(f"phi_{p}({f}) = {res} has wrong invariants")
    return reduce(res)


def phi_p_inv(f: TernaryForm, p: int) -> TernaryForm:
    """Inverse of phi_p on classes.

    The image of a normalized form, with x and z swapped, is again in the
    normalized shape for the exchanged exponent, and the coefficient rewrite
    then returns the original form.  So the inverse on classes is phi_p itself.
    """
    return phi_p(f, p)


def phi_chain(f: TernaryForm, primes) -> TernaryForm:
    """Apply phi_p for p in ``primes`` from right to left (the last one first)."""
    for p in reversed(list(primes)):
        f = phi_p(f, p)
    return f


def watson_lambda4(f: TernaryForm) -> TernaryForm:
    """Watson's transformation with m = 4."""
    N, d = f.level, f.disc
    vN, vd = valuation(N, 2), valuation(d, 2)
    if not ((vN == 2 and vd == 4) or (vN == 3 and vd == 6)):
        raise FormError(f"lambda_4 needs 4||N, 16||d or 8||N, 64||d; got N={N}, d={d}")
    M = f.gram()
    gens = [[4 * int(i == j) for j in range(3)] for i in range(3)]
    for x in range(4):
        for y in range(4):
            for z in range(4):
                v = (x, y, z)
                if f(*v) % 4:
                    continue
                if any(sum(M[i][j] * v[j] for j in range(3)) % 4 for i in range(3)):
                    continue
                gens.append(list(v))
    basis = hnf_rows(gens)
    Bt = mat_transpose(basis)  # columns span Lambda_4
    G = mat_mul(mat_mul(basis, M), Bt)
    if any(x % 4 for row in G for x in row) or any(G[i][i] % 8 for i in range(3)):
        raise AssertionError("Lambda_4 form is not integral")
    return TernaryForm.from_gram([[x // 4 for x in row] for row in G])
