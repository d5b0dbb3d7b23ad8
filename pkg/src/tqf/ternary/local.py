"""Local invariants: Hasse symbols, anisotropic primes, p-adic Jordan splittings."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..arith import factorize, hilbert_symbol, legendre, prime_divisors, valuation
from .forms import FormError, TernaryForm
from .lattice import ldl

__all__ = [
    "FormInvariants",
    "JordanBlock",
    "invariants",
    "hasse_symbol",
    "aniso_primes",
    "diagonalize",
    "jordan_decomposition",
    "split_primes",
    "exponents_admissible",
    "is_even_inverse_multiple",
]


def _frac_val(x: Fraction, p: int) -> int:
    if x == 0:
        return 10**9
    return valuation(x.numerator, p) - valuation(x.denominator, p)


def diagonalize(f: TernaryForm) -> tuple[Fraction, Fraction, Fraction]:
    """Rational (a, b, c) with f equivalent over Q to a x^2 + b y^2 + c z^2."""
    q, _ = ldl(f.bilinear())
    return tuple(q)


def _relevant_primes(diag) -> set[int]:
    primes = {2}
    for x in diag:
        primes.update(prime_divisors(abs(x.numerator)))
        primes.update(prime_divisors(x.denominator))
    return primes


def hasse_symbol(f: TernaryForm, p: int) -> int:
    """S_p(f) from a rational diagonalization."""
    a, b, c = diagonalize(f)
    h = hilbert_symbol
    return (
        h(a, -1, p) * h(b, -1, p) * h(c, -1, p)
        * h(a, b, p) * h(b, c, p) * h(c, a, p)
    )


def aniso_primes(f: TernaryForm) -> frozenset[int]:
    """Primes p with S*_p(f) = -1, i.e. f anisotropic over Q_p."""
    diag = diagonalize(f)
    a, b, c = diag
    h = hilbert_symbol
    out = set()
    for p in _relevant_primes(diag):
        s = h(a, -1, p) * h(b, -1, p) * h(c, -1, p) * h(a, b, p) * h(b, c, p) * h(c, a, p)
        if p == 2:
            s = -s
        if s == -1:
            out.add(p)
    return frozenset(out)


@dataclass(frozen=True)
class FormInvariants:
    disc: int
    divisor: int
    level: int
    hasse: dict
    aniso_primes: frozenset


def invariants(f: TernaryForm) -> FormInvariants:
    if not f.is_primitive():
        raise FormError(f"form {f} is not primitive")
    if not f.is_positive_definite():
        raise FormError(f"form {f} is not positive definite")
    diag = diagonalize(f)
    hasse = {p: hasse_symbol(f, p) for p in sorted(_relevant_primes(diag))}
    aniso = aniso_primes(f)
    inv = FormInvariants(f.disc, f.divisor, f.level, hasse, aniso)
    if len(aniso) % 2 == 0:
        raise AssertionError(f"{f}: even number of anisotropic primes {sorted(aniso)}")
    if not exponents_admissible(inv.level, inv.disc):
        raise AssertionError(f"{f}: level/discriminant exponents {inv.level}, {inv.disc} impossible")
    return inv


def exponents_admissible(N: int, d: int) -> bool:
    """The exponent constraints between level and discriminant of a primitive form."""
    n0, d0 = valuation(N, 2), valuation(d, 2)
    if n0 < 2:
        return False
    if not (d0 == n0 - 2 or d0 == 2 * n0 or n0 <= d0 <= 2 * n0 - 2):
        return False
    odd_N = dict((p, e) for p, e in factorize(N) if p != 2)
    for p, _ in factorize(d):
        if p != 2 and p not in odd_N:
            return False
    d_odd = {p: valuation(d, p) for p in odd_N}
    if any(not (e <= d_odd[p] <= 2 * e) for p, e in odd_N.items()):
        return False
    if n0 % 2 == 0 and all(e % 2 == 0 for e in odd_N.values()):
        if not (n0 <= d0 <= 2 * n0 - 2) and all(v % 2 == 0 for v in d_odd.values()):
            return False
    return True


def is_even_inverse_multiple(f: TernaryForm, N: int) -> bool:
    """True when N * M^{-1} is integral with even diagonal."""
    adj = f.cofactors()  # M^{-1} = adj / det, det = 2d
    m11, m22, m33, m23, m13, m12 = adj
    den = 2 * f.disc
    if any((N * x) % den for x in (m23, m13, m12)):
        return False
    return all((N * x) % (2 * den) == 0 for x in (m11, m22, m33))


@dataclass(frozen=True)
class JordanBlock:
    """A block of the p-adic splitting of the Gram matrix M.

    ``matrix`` is p^scale times a unimodular 1x1 or 2x2 matrix.
    """

    scale: int
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.matrix)


def jordan_decomposition(M, p: int):
    """Split the Gram matrix over Z_p.

    Returns (P, blocks) with P p-integral, det P a p-unit, and P^T M P block
    diagonal with the listed blocks in order of increasing scale.
    """
    n = len(M)
    A = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in P:
            row[i], row[j] = row[j], row[i]

    def add_col(dst, src, c):
        # e_dst <- e_dst + c e_src
        for row in P:
            row[dst] += c * row[src]
        col = [row[dst] for row in P]
        for k in range(n):
            A[dst][k] = A[k][dst] = _bil(M, col, [row[k] for row in P])

    blocks = []
    i = 0
    while i < n:
        entries = [(j, k) for j in range(i, n) for k in range(j, n)]
        vmin = min(_frac_val(A[j][k], p) for j, k in entries)
        diag = [j for j in range(i, n) if _frac_val(A[j][j], p) == vmin]
        if diag:
            swap(i, diag[0])
            for k in range(i + 1, n):
                c = A[k][i] / A[i][i]
                if c:
                    add_col(k, i, -c)
            blocks.append(JordanBlock(vmin, ((A[i][i],),)))
            i += 1
            continue
        j, k = next((j, k) for j, k in entries if j != k and _frac_val(A[j][k], p) == vmin)
        if p != 2:
            add_col(j, k, Fraction(1))
            continue
        swap(i, j)
        swap(i + 1, k if k != i else j)
        a11, a12, a22 = A[i][i], A[i][i + 1], A[i + 1][i + 1]
        det = a11 * a22 - a12 * a12
        for l in range(i + 2, n):
            u, w = A[i][l], A[i + 1][l]
            c1 = (a22 * u - a12 * w) / det
            c2 = (a11 * w - a12 * u) / det
            if c1:
                add_col(l, i, -c1)
            if c2:
                add_col(l, i + 1, -c2)
        blocks.append(JordanBlock(vmin, ((A[i][i], A[i][i + 1]), (A[i + 1][i], A[i + 1][i + 1]))))
        i += 2
    return tuple(tuple(r) for r in P), blocks


def _bil(M, u, v):
    n = len(M)
    return sum(u[i] * M[i][j] * v[j] for i in range(n) for j in range(n))


def _quad(M, u):
    return _bil(M, u, u)


def _constituents(blocks) -> dict[int, list[JordanBlock]]:
    out: dict[int, list[JordanBlock]] = {}
    for b in blocks:
        out.setdefault(b.scale, []).append(b)
    return out


def _unit(x: Fraction, p: int) -> Fraction:
    return x / Fraction(p) ** _frac_val(x, p)


def _is_hyperbolic_plane(blocks: list[JordanBlock], p: int) -> bool:
    """Whether a rank-2 constituent (given by its blocks) is p^v times a hyperbolic plane."""
    if sum(b.dim for b in blocks) != 2:
        return False
    if p != 2:
        u1, u2 = (_unit(b.matrix[0][0], p) for b in blocks)
        prod = -u1 * u2
        return legendre(prod.numerator * prod.denominator, p) == 1
    if len(blocks) != 1:
        return False  # odd (type I) constituent
    (m11, m12), (_, m22) = blocks[0].matrix
    scale = Fraction(2) ** blocks[0].scale
    alpha, beta = m11 / scale / 2, m22 / scale / 2
    prod = alpha * beta
    return (prod.numerator * prod.denominator) % 2 == 0


def split_primes(f: TernaryForm, primes) -> frozenset[int]:
    """The primes among ``primes`` at which the rank-2 Jordan constituent is hyperbolic."""
    M = f.gram()
    out = set()
    for p in primes:
        _, blocks = jordan_decomposition(M, p)
        for comp in _constituents(blocks).values():
            if _is_hyperbolic_plane(comp, p):
                out.add(p)
    return frozenset(out)
