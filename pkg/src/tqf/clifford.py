"""Even Clifford algebra of a ternary form and the forms attached to the order.

For f = (a, b, c, r, s, t) the order has basis (1, e1, e2, e3) with

    e1^2 = r e1 - bc,   e2 e3 = a (r - e1),
    e2^2 = s e2 - ac,   e3 e1 = b (s - e2),
    e3^2 = t e3 - ab,   e1 e2 = c (t - e3).

The reversed products follow from associativity (e.g. expand e1 (e1 e2) =
(e1 e1) e2 and solve for e1 e3):

    e3 e2 = a e1 + t e2 + s e3 - st,
    e1 e3 = t e1 + b e2 + r e3 - rt,
    e2 e1 = s e1 + r e2 + c e3 - rs.

Every order is re-checked for associativity when built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .eisenstein_h import Level
from .ternary.forms import FormError, TernaryForm
from .ternary.genus import genus_enumerate, order_genus_key
from .ternary.lattice import integer_kernel, short_vectors

__all__ = [
    "OrderBasis",
    "DualBasis",
    "clifford_order",
    "dual_basis",
    "associated_form",
    "trace_zero_form",
    "half_integral_form",
    "rho",
    "rho_table",
    "orders_of_level",
]

Vec4 = tuple[int, int, int, int]


def _mul_table(f: TernaryForm) -> tuple[tuple[Vec4, ...], ...]:
    a, b, c, r, s, t = f.coefficients
    one, e1, e2, e3 = (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    table = [[None] * 4 for _ in range(4)]
    for i, e in enumerate((one, e1, e2, e3)):
        table[0][i] = table[i][0] = e
    table[1][1] = (-b * c, r, 0, 0)
    table[2][2] = (-a * c, 0, s, 0)
    table[3][3] = (-a * b, 0, 0, t)
    table[2][3] = (a * r, -a, 0, 0)
    table[3][1] = (b * s, 0, -b, 0)
    table[1][2] = (c * t, 0, 0, -c)
    table[3][2] = (-s * t, a, t, s)
    table[1][3] = (-r * t, t, b, r)
    table[2][1] = (-r * s, s, r, c)
    return tuple(tuple(row) for row in table)


@dataclass(frozen=True)
class OrderBasis:
    seed_form: TernaryForm
    table: tuple[tuple[Vec4, ...], ...]

    @property
    def trace_vector(self) -> Vec4:
        f = self.seed_form
        return (2, f.r, f.s, f.t)

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        out = [0, 0, 0, 0]
        for i in range(4):
            if not x[i]:
                continue
            for j in range(4):
                if not y[j]:
                    continue
                coef = x[i] * y[j]
                for k, v in enumerate(self.table[i][j]):
                    out[k] += coef * v
        return tuple(out)

    def trace(self, x: Sequence) -> int:
        return sum(u * v for u, v in zip(self.trace_vector, x))

    def conj(self, x: Sequence) -> tuple:
        tr = self.trace(x)
        return (tr - x[0], -x[1], -x[2], -x[3])

    def norm(self, x: Sequence):
        p = self.mul(x, self.conj(x))
        if any(p[1:]):
            raise ArithmeticError(f"x * conj(x) is not scalar: {p}")
        return p[0]

    def gram(self) -> tuple[tuple[int, ...], ...]:
        """Matrix tr(e_i conj(e_j)); n(x) = x^T G x / 2."""
        basis = [tuple(int(i == j) for j in range(4)) for i in range(4)]
        return tuple(
            tuple(self.trace(self.mul(u, self.conj(v))) for v in basis) for u in basis
        )

    def norm_form(self, vectors: Sequence[Sequence[int]]) -> TernaryForm:
        """The norm restricted to the Z-span of three elements."""
        G = self.gram()
        M = [[sum(u[i] * G[i][j] * v[j] for i in range(4) for j in range(4)) for v in vectors] for u in vectors]
        return TernaryForm.from_gram(M)

    def check_associative(self) -> None:
        basis = [tuple(int(i == j) for j in range(4)) for i in range(4)]
        for x, y, z in product(basis, repeat=3):
            if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                raise AssertionError(f"multiplication not associative on {x}, {y}, {z}")


def clifford_order(f: TernaryForm) -> OrderBasis:
    if f.disc == 0:
        raise FormError(f"form {f} is degenerate")
    o = OrderBasis(f, _mul_table(f))
    o.check_associative()
    return o


@dataclass(frozen=True)
class DualBasis:
    """Coordinates of e0', e1', e2', e3' over (1, e1, e2, e3)."""

    vectors: tuple[tuple[Fraction, ...], ...]
    denominator: int


def dual_basis(o: OrderBasis) -> DualBasis:
    """Elements e_j' with tr(e_i conj(e_j')) = delta_ij."""
    G = [[Fraction(x) for x in row] for row in o.gram()]
    n = 4
    aug = [G[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    inv = [row[n:] for row in aug]
    vecs = tuple(tuple(inv[k][j] for k in range(n)) for j in range(n))
    return DualBasis(vecs, o.seed_form.disc)


def associated_form(o: OrderBasis) -> TernaryForm:
    """d * n(x e1' + y e2' + z e3')."""
    dual = dual_basis(o)
    G = o.gram()
    d = dual.denominator
    vecs = dual.vectors[1:]
    M = [
        [d * sum(u[i] * G[i][j] * v[j] for i in range(4) for j in range(4)) for v in vecs]
        for u in vecs
    ]
    if any(x.denominator != 1 for row in M for x in row):
        raise ArithmeticError("associated form is not integral")
    return TernaryForm.from_gram([[int(x) for x in row] for row in M])


def trace_zero_basis(o: OrderBasis) -> list[list[int]]:
    return integer_kernel(o.trace_vector)


def trace_zero_form(o: OrderBasis) -> TernaryForm:
    """Norm form on O^0 = {x in O : tr(x) = 0}."""
    return o.norm_form(trace_zero_basis(o))


def half_integral_basis(o: OrderBasis) -> list[Vec4]:
    """Basis 2 e_i - tr(e_i) of (Z + 2 O) intersected with the trace-zero space."""
    _, r, s, t = o.trace_vector
    return [(-r, 2, 0, 0), (-s, 0, 2, 0), (-t, 0, 0, 2)]


def half_integral_form(o: OrderBasis) -> TernaryForm:
    """Norm form on S^0 for S = Z + 2 O."""
    return o.norm_form(half_integral_basis(o))


def rho_table(o: OrderBasis, nmax: int) -> dict[tuple[int, int], int]:
    """{(n, r): #{x in O : n(x) = n, tr(x) = r}} for all n <= nmax."""
    G = o.gram()
    B = [[Fraction(G[i][j], 2) for j in range(4)] for i in range(4)]
    out: dict[tuple[int, int], int] = {}
    for x, val in short_vectors(B, nmax):
        key = (int(val), o.trace(x))
        out[key] = out.get(key, 0) + 1
    return out


def rho(o: OrderBasis, n: int, r: int) -> int:
    """Number of roots of X^2 - r X + n in the order."""
    if 4 * n - r * r < 0:
        raise ValueError("need 4n - r^2 >= 0")
    return rho_table(o, n).get((n, r), 0)


def orders_of_level(level: Level, budget: int | None = None) -> list[OrderBasis]:
    """One order per type of the given level, via the genus of f_O."""
    return [clifford_order(f) for f in genus_enumerate(order_genus_key(level), budget)]
