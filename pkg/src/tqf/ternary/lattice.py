"""Exact lattice helpers: vector enumeration, LLL, Hermite normal form, kernels.

Everything here is integer or Fraction arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, isqrt
from typing import Iterator, Sequence

from .forms import TernaryForm

__all__ = [
    "ternary_vectors",
    "theta_series",
    "vectors_of_norm",
    "ldl",
    "short_vectors",
    "lll_gram",
    "hnf_rows",
    "integer_kernel",
    "lattice_basis",
]


def _isqrt_or_none(x: int):
    return None if x < 0 else isqrt(x)


def ternary_vectors(f: TernaryForm, bound: int) -> Iterator[tuple[int, int, int, int]]:
    """All (x, y, z, f(x,y,z)) with f(x,y,z) <= bound, f positive definite."""
    a, b, c, r, s, t = f.coefficients
    d = f.disc
    A = 4 * a * b - t * t
    zmax = isqrt(bound * A // d) if bound >= 0 else -1
    for z in range(-zmax, zmax + 1):
        B = (4 * a * r - 2 * s * t) * z
        C = (4 * a * c - s * s) * z * z - 4 * a * bound
        sq = _isqrt_or_none(B * B - 4 * A * C)
        if sq is None:
            continue
        ylo = -((B + sq) // (2 * A))
        yhi = (sq - B) // (2 * A)
        for y in range(ylo, yhi + 1):
            L = t * y + s * z
            K = b * y * y + c * z * z + r * y * z
            sx = _isqrt_or_none(L * L - 4 * a * (K - bound))
            if sx is None:
                continue
            xlo = -((L + sx) // (2 * a))
            xhi = (sx - L) // (2 * a)
            for x in range(xlo, xhi + 1):
                yield x, y, z, a * x * x + L * x + K


def theta_series(f: TernaryForm, nmax: int) -> list[int]:
    """[R_f(0), ..., R_f(nmax)]."""
    out = [0] * (nmax + 1)
    for *_, v in ternary_vectors(f, nmax):
        out[v] += 1
    return out


def vectors_of_norm(f: TernaryForm, n: int) -> list[tuple[int, int, int]]:
    return [(x, y, z) for x, y, z, v in ternary_vectors(f, n) if v == n]


def ldl(B: Sequence[Sequence[Fraction]]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """x^T B x = sum_i q[i] * (x_i + sum_{j>i} mu[i][j] x_j)^2."""
    n = len(B)
    Q = [[Fraction(B[i][j]) for j in range(n)] for i in range(n)]
    q = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        q[i] = Q[i][i]
        if q[i] <= 0:
            raise ValueError("matrix is not positive definite")
        for j in range(i + 1, n):
            mu[i][j] = Q[i][j] / q[i]
        for j in range(i + 1, n):
            for k in range(j, n):
                Q[j][k] -= mu[i][j] * Q[i][k]
                Q[k][j] = Q[j][k]
    return q, mu


def _int_range(center: Fraction, radius_sq: Fraction) -> range:
    """Integers x with (x - center)^2 <= radius_sq."""
    if radius_sq < 0:
        return range(0)
    rad = isqrt(floor(radius_sq)) + 1
    base = floor(center)
    lo, hi = base - rad, base + rad + 1
    while lo <= hi and (lo - center) ** 2 > radius_sq:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > radius_sq:
        hi -= 1
    return range(lo, hi + 1)


def short_vectors(B: Sequence[Sequence[Fraction]], bound) -> Iterator[tuple[tuple[int, ...], Fraction]]:
    """Fincke-Pohst enumeration of x with x^T B x <= bound (zero included)."""
    q, mu = ldl(B)
    n = len(q)
    bound = Fraction(bound)
    x = [0] * n

    def rec(i: int, remaining: Fraction) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        center = -sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        for xi in _int_range(center, remaining / q[i]):
            x[i] = xi
            rest = remaining - q[i] * (xi - center) ** 2
            if i == 0:
                yield tuple(x), bound - rest
            else:
                yield from rec(i - 1, rest)
        x[i] = 0

    yield from rec(n - 1, bound)


def lll_gram(G: Sequence[Sequence[int]], delta: Fraction = Fraction(99, 100)):
    """LLL on a lattice given by its integral Gram matrix.

    Returns (G', U) with G' = U^T G U and U unimodular (columns = new basis).
    """
    n = len(G)
    G = [list(map(int, row)) for row in G]
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap(i, j):
        for row in G:
            row[i], row[j] = row[j], row[i]
        G[i], G[j] = G[j], G[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def sub(k, j, m):
        # b_k <- b_k - m b_j
        if m == 0:
            return
        for row in U:
            row[k] -= m * row[j]
        for i in range(n):
            G[i][k] -= m * G[i][j]
        for i in range(n):
            G[k][i] = G[i][k] if i != k else G[k][k]
        G[k][k] = G[k][k] - m * G[j][k]
        # re-symmetrise the row of k
        for i in range(n):
            G[k][i] = G[i][k]

    def gso():
        mu = [[Fraction(0)] * n for _ in range(n)]
        Bs = [Fraction(0)] * n
        for i in range(n):
            for j in range(i):
                mu[i][j] = (Fraction(G[i][j]) - sum(mu[j][k] * mu[i][k] * Bs[k] for k in range(j))) / Bs[j]
            Bs[i] = Fraction(G[i][i]) - sum(mu[i][k] ** 2 * Bs[k] for k in range(i))
        return mu, Bs

    k = 1
    while k < n:
        mu, Bs = gso()
        for j in range(k - 1, -1, -1):
            m = round(mu[k][j])
            if m:
                sub(k, j, m)
                mu, Bs = gso()
        if Bs[k] >= (delta - mu[k][k - 1] ** 2) * Bs[k - 1]:
            k += 1
        else:
            swap(k, k - 1)
            k = max(k - 1, 1)
    return tuple(tuple(r) for r in G), tuple(tuple(r) for r in U)


def hnf_rows(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row Hermite normal form; zero rows removed."""
    A = [list(map(int, r)) for r in rows]
    if not A:
        return []
    m = len(A[0])
    out_rows = []
    col = 0
    while A and col < m:
        nz = [r for r in A if r[col] != 0]
        zero = [r for r in A if r[col] == 0]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // piv[col]
                r2 = [x - q * y for x, y in zip(r, piv)]
                (rest if r2[col] != 0 else zero).append(r2)
            nz = [piv] + rest
        piv = nz[0]
        if piv[col] < 0:
            piv = [-x for x in piv]
        out_rows.append(piv)
        A = zero
        col += 1
    # reduce entries above pivots
    for i, row in enumerate(out_rows):
        pc = next(j for j, x in enumerate(row) if x)
        for k in range(i):
            q = out_rows[k][pc] // row[pc]
            if q:
                out_rows[k] = [x - q * y for x, y in zip(out_rows[k], row)]
    return out_rows


def lattice_basis(generators: Sequence[Sequence[int]]) -> list[list[int]]:
    """A basis (as rows) of the Z-span of integer generators."""
    return hnf_rows(generators)


def integer_kernel(row: Sequence[int]) -> list[list[int]]:
    """Basis of {x in Z^n : row . x = 0}."""
    n = len(row)
    # column operations on [row; I]: track unimodular U with row*U = (g, 0, ..., 0)
    r = list(map(int, row))
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    while sum(1 for v in r if v) > 1:
        idx = [i for i in range(n) if r[i]]
        p = min(idx, key=lambda i: abs(r[i]))
        for j in idx:
            if j != p:
                q = r[j] // r[p]
                r[j] -= q * r[p]
                for i in range(n):
                    U[i][j] -= q * U[i][p]
    nonzero = [i for i in range(n) if r[i]]
    return [[U[i][j] for i in range(n)] for j in range(n) if j not in nonzero]
