"""Integral ternary quadratic forms a x^2 + b y^2 + c z^2 + r yz + s xz + t xy."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

__all__ = ["TernaryForm", "FormError", "Matrix", "mat_mul", "mat_det", "mat_transpose", "mat_inverse"]


class FormError(ValueError):
    """Input form violates an operation's precondition."""


@dataclass(frozen=True)
class TernaryForm:
    a: int
    b: int
    c: int
    r: int
    s: int
    t: int

    @classmethod
    def parse(cls, text: str) -> "TernaryForm":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 6:
            raise FormError(f"expected six comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            raise FormError(f"bad form literal {text!r}") from exc

    @classmethod
    def from_gram(cls, M) -> "TernaryForm":
        """Form with Gram matrix M (even diagonal, symmetric)."""
        if any(M[i][i] % 2 for i in range(3)):
            raise FormError("Gram matrix must have even diagonal")
        return cls(
            int(M[0][0]) // 2, int(M[1][1]) // 2, int(M[2][2]) // 2,
            int(M[1][2]), int(M[0][2]), int(M[0][1]),
        )

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.coefficients)

    @property
    def coefficients(self) -> tuple[int, int, int, int, int, int]:
        return (self.a, self.b, self.c, self.r, self.s, self.t)

    def __call__(self, x: int, y: int, z: int) -> int:
        a, b, c, r, s, t = self.coefficients
        return a * x * x + b * y * y + c * z * z + r * y * z + s * x * z + t * x * y

    def gram(self) -> Matrix:
        a, b, c, r, s, t = self.coefficients
        return ((2 * a, t, s), (t, 2 * b, r), (s, r, 2 * c))

    def polar(self, u: Sequence[int], v: Sequence[int]) -> int:
        """f(u + v) - f(u) - f(v)."""
        M = self.gram()
        return sum(u[i] * M[i][j] * v[j] for i in range(3) for j in range(3))

    @property
    def disc(self) -> int:
        """d = det(M) / 2."""
        a, b, c, r, s, t = self.coefficients
        return 4 * a * b * c + r * s * t - a * r * r - b * s * s - c * t * t

    def cofactors(self) -> tuple[int, int, int, int, int, int]:
        """(M11, M22, M33, M23, M13, M12) of the Gram matrix."""
        a, b, c, r, s, t = self.coefficients
        return (
            4 * b * c - r * r,
            4 * a * c - s * s,
            4 * a * b - t * t,
            s * t - 2 * a * r,
            r * t - 2 * b * s,
            r * s - 2 * c * t,
        )

    @property
    def divisor(self) -> int:
        m11, m22, m33, m23, m13, m12 = self.cofactors()
        return gcd(m11, m22, m33, 2 * m23, 2 * m13, 2 * m12)

    @property
    def level(self) -> int:
        return 4 * self.disc // self.divisor

    @property
    def content(self) -> int:
        return gcd(*self.coefficients)

    def is_primitive(self) -> bool:
        return self.content == 1

    def is_positive_definite(self) -> bool:
        return self.a > 0 and 4 * self.a * self.b - self.t**2 > 0 and self.disc > 0

    def transform(self, U) -> "TernaryForm":
        """The form x -> f(U x); its Gram matrix is U^T M U."""
        M = self.gram()
        Ut = mat_transpose(U)
        return TernaryForm.from_gram(mat_mul(mat_mul(Ut, M), U))

    def scaled(self, k: int) -> "TernaryForm":
        return TernaryForm(*(k * v for v in self.coefficients))

    def adjoint(self) -> "TernaryForm":
        """Form with Gram matrix adj(M); diagonal entries 2*M_ii/2 = M_ii."""
        m11, m22, m33, m23, m13, m12 = self.cofactors()
        return TernaryForm(m11, m22, m33, 2 * m23, 2 * m13, 2 * m12)

    def bilinear(self) -> tuple[tuple[Fraction, ...], ...]:
        """Rational matrix B with f(x) = x^T B x."""
        M = self.gram()
        return tuple(tuple(Fraction(M[i][j], 2) for j in range(3)) for i in range(3))


def mat_mul(A, B):
    n, m, k = len(A), len(B), len(B[0])
    return tuple(tuple(sum(A[i][l] * B[l][j] for l in range(m)) for j in range(k)) for i in range(n))


def mat_transpose(A):
    return tuple(tuple(A[i][j] for i in range(len(A))) for j in range(len(A[0])))


def mat_det(A) -> int:
    return (
        A[0][0] * (A[1][1] * A[2][2] - A[1][2] * A[2][1])
        - A[0][1] * (A[1][0] * A[2][2] - A[1][2] * A[2][0])
        + A[0][2] * (A[1][0] * A[2][1] - A[1][1] * A[2][0])
    )


def mat_adj(A):
    C = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [k for k in range(3) if k != i]
            cols = [k for k in range(3) if k != j]
            minor = A[rows[0]][cols[0]] * A[rows[1]][cols[1]] - A[rows[0]][cols[1]] * A[rows[1]][cols[0]]
            C[j][i] = (-1) ** (i + j) * minor
    return tuple(tuple(row) for row in C)


def mat_inverse(A):
    """Inverse of a 3x3 matrix with entries in Fractions, or exact ints when det = +-1."""
    d = mat_det(A)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    adj = mat_adj(A)
    if d in (1, -1):
        return tuple(tuple(d * x for x in row) for row in adj)
    return tuple(tuple(Fraction(x) / d for x in row) for row in adj)
