"""Canonical reduction, automorphism groups and equivalence of positive forms.

The canonical representative of a class is chosen among the forms whose
basis realises the successive minima (these all satisfy the Eisenstein
inequalities 0 < a <= b <= c, |r| <= b, |s| <= a, |t| <= a).  Ties are
broken by the smallest key (a, b, c, |r|, |s|, |t|, -r, -s, -t), so positive
off-diagonal signs win.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .forms import FormError, TernaryForm, mat_det, mat_inverse, mat_mul, mat_transpose
from .lattice import lll_gram, ternary_vectors

__all__ = ["reduce", "reduce_with_witness", "aut_count", "automorphisms", "equivalent", "canonical_key"]


def canonical_key(f: TernaryForm) -> tuple[int, ...]:
    a, b, c, r, s, t = f.coefficients
    return (a, b, c, abs(r), abs(s), abs(t), -r, -s, -t)


def _lll(f: TernaryForm):
    G, U = lll_gram(f.gram())
    return TernaryForm.from_gram(G), U


def _successive_minima_vectors(g: TernaryForm):
    """Vectors of norm lambda_1, lambda_2, lambda_3 for an LLL-reduced g."""
    bound = max(g.a, g.b, g.c)
    vecs = sorted(((v, (x, y, z)) for x, y, z, v in ternary_vectors(g, bound) if v), key=lambda e: e[0])
    minima = []
    basis: list[tuple[int, int, int]] = []
    for v, x in vecs:
        if len(basis) == 0:
            basis.append(x)
            minima.append(v)
        elif len(basis) == 1:
            a = basis[0]
            cross = (a[1] * x[2] - a[2] * x[1], a[2] * x[0] - a[0] * x[2], a[0] * x[1] - a[1] * x[0])
            if any(cross):
                basis.append(x)
                minima.append(v)
        else:
            if mat_det((basis[0], basis[1], x)):
                minima.append(v)
                break
    by_norm: dict[int, list[tuple[int, int, int]]] = {}
    for v, x in vecs:
        if v in minima:
            by_norm.setdefault(v, []).append(x)
    return minima, by_norm


def reduce_with_witness(f: TernaryForm) -> tuple[TernaryForm, tuple]:
    """Canonical form h and unimodular U with h = f o U."""
    if not f.is_positive_definite():
        raise FormError(f"form {f} is not positive definite")
    g, U0 = _lll(f)
    minima, by_norm = _successive_minima_vectors(g)
    best: Optional[tuple] = None
    for v1 in by_norm[minima[0]]:
        for v2 in by_norm[minima[1]]:
            t = g.polar(v1, v2)
            if abs(t) > minima[0]:
                continue
            for v3 in by_norm[minima[2]]:
                V = mat_transpose((v1, v2, v3))
                if mat_det(V) not in (1, -1):
                    continue
                s = g.polar(v1, v3)
                r = g.polar(v2, v3)
                h = TernaryForm(minima[0], minima[1], minima[2], r, s, t)
                k = canonical_key(h)
                if best is None or k < best[0]:
                    best = (k, h, V)
    _, h, V = best
    U = mat_mul(U0, V)
    assert f.transform(U) == h
    return h, U


@lru_cache(maxsize=1 << 16)
def reduce(f: TernaryForm) -> TernaryForm:
    return reduce_with_witness(f)[0]


def automorphisms(f: TernaryForm) -> list:
    """All V in GL_3(Z) with f o V = f."""
    M = f.gram()
    bound = max(f.a, f.b, f.c)
    by_norm: dict[int, list] = {}
    for x, y, z, v in ternary_vectors(f, bound):
        if v in (f.a, f.b, f.c):
            by_norm.setdefault(v, []).append((x, y, z))
    out = []
    for v1 in by_norm[f.a]:
        for v2 in by_norm[f.b]:
            if f.polar(v1, v2) != M[0][1]:
                continue
            for v3 in by_norm[f.c]:
                if f.polar(v1, v3) == M[0][2] and f.polar(v2, v3) == M[1][2]:
                    out.append(mat_transpose((v1, v2, v3)))
    return out


@lru_cache(maxsize=1 << 16)
def _aut_count_canonical(h: TernaryForm) -> int:
    return len(automorphisms(h))


def aut_count(f: TernaryForm) -> int:
    return _aut_count_canonical(reduce(f))


def equivalent(f: TernaryForm, g: TernaryForm):
    """(True, W) with M_f = W M_g W^T, or (False, None)."""
    if f.disc != g.disc or f.level != g.level:
        return False, None
    hf, Uf = reduce_with_witness(f)
    hg, Ug = reduce_with_witness(g)
    if hf != hg:
        return False, None
    # f o Uf = g o Ug, so f = g o (Ug Uf^-1) and M_f = X^T M_g X
    X = mat_mul(Ug, mat_inverse(Uf))
    W = mat_transpose(X)
    assert mat_mul(mat_mul(W, g.gram()), mat_transpose(W)) == f.gram()
    return True, W
