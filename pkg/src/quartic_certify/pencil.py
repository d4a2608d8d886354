"""The conic pencil attached to a monic quartic form.

A monic quartic f factors through the Veronese map as
f(x, y) = [x^2, xy, y^2] . M(lam) . [x^2, xy, y^2]^T for every lam, where
M(lam) = A1 + lam * A2 is a one-parameter family of symmetric 3x3 matrices.
Its determinant is the cubic

    g(lam) = -1/4 lam^3 + b2 lam^2 + b1 lam + b0,

    b0 = (-a1^2 + a1 a2 a3 - a0 a3^2) / 4,
    b1 = (4 a0 - a2^2 - a1 a3) / 4,
    b2 = a2 / 2,

and the distinguished parameter lam0 = (4 b2 + 2 sqrt(3 b1 + 4 b2^2)) / 3
is the larger stationary point of g.  lam0 lives in Q(sqrt(d)) with
d = 3 b1 + 4 b2^2; when d < 0 it is not real, which already settles the
definiteness question (see the positivity module).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadExt, as_fraction, sign_of
from .forms import MonicQuartic

__all__ = [
    "PencilCubic",
    "Sym3Matrix",
    "CriticalParam",
    "pencil_coeffs",
    "base_matrices",
    "pencil_matrix",
    "g_eval",
    "g_prime_eval",
    "critical_param",
    "discriminant_g",
    "boundary_identity_check",
]

Scalar = Fraction | QuadExt


@dataclass(frozen=True)
class PencilCubic:
    """Coefficients (b0, b1, b2) of g(lam) = -1/4 lam^3 + b2 lam^2 + b1 lam + b0."""

    b0: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self) -> None:
        for name in ("b0", "b1", "b2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @property
    def radicand(self) -> Fraction:
        return 3 * self.b1 + 4 * self.b2**2

    def as_poly(self) -> tuple[Fraction, ...]:
        """Low-to-high coefficient tuple of g."""
        return (self.b0, self.b1, self.b2, Fraction(-1, 4))


@dataclass(frozen=True)
class Sym3Matrix:
    """Symmetric 3x3 matrix over exact scalars; upper triangle stored."""

    m11: Scalar
    m12: Scalar
    m13: Scalar
    m22: Scalar
    m23: Scalar
    m33: Scalar

    def rows(self) -> tuple[tuple[Scalar, Scalar, Scalar], ...]:
        return (
            (self.m11, self.m12, self.m13),
            (self.m12, self.m22, self.m23),
            (self.m13, self.m23, self.m33),
        )

    def det(self) -> Scalar:
        return (
            self.m11 * (self.m22 * self.m33 - self.m23 * self.m23)
            - self.m12 * (self.m12 * self.m33 - self.m23 * self.m13)
            + self.m13 * (self.m12 * self.m23 - self.m22 * self.m13)
        )

    def leading_principal_minors(self) -> tuple[Scalar, Scalar, Scalar]:
        return (
            self.m11,
            self.m11 * self.m22 - self.m12 * self.m12,
            self.det(),
        )

    def principal_minors(self) -> tuple[Scalar, ...]:
        """All seven principal minors: 1x1, 2x2, then the determinant."""
        return (
            self.m11,
            self.m22,
            self.m33,
            self.m11 * self.m22 - self.m12 * self.m12,
            self.m11 * self.m33 - self.m13 * self.m13,
            self.m22 * self.m33 - self.m23 * self.m23,
            self.det(),
        )

    def two_by_two_minors(self) -> tuple[Scalar, ...]:
        """All nine 2x2 minors; rank <= 1 iff every one vanishes."""
        r = self.rows()
        out = []
        for i in range(3):
            for j in range(i + 1, 3):
                for k in range(3):
                    for l in range(k + 1, 3):
                        out.append(r[i][k] * r[j][l] - r[i][l] * r[j][k])
        return tuple(out)

    def rank(self) -> int:
        if sign_of(self.det()) != 0:
            return 3
        if any(sign_of(m) != 0 for m in self.two_by_two_minors()):
            return 2
        if any(sign_of(e) != 0 for e in (self.m11, self.m12, self.m13,
                                         self.m22, self.m23, self.m33)):
            return 1
        return 0

    def form_value(self, x, y) -> Scalar:
        """[x^2, xy, y^2] . M . [x^2, xy, y^2]^T."""
        x, y = as_fraction(x), as_fraction(y)
        v = (x * x, x * y, y * y)
        r = self.rows()
        total: Scalar = Fraction(0)
        for i in range(3):
            for j in range(3):
                total = total + r[i][j] * v[i] * v[j]
        return total

    def negated(self) -> Sym3Matrix:
        return Sym3Matrix(-self.m11, -self.m12, -self.m13,
                          -self.m22, -self.m23, -self.m33)


@dataclass(frozen=True)
class CriticalParam:
    """lam0 when real (exactly, in Q(sqrt(d))), or the marker that it is not."""

    radicand: Fraction
    value: QuadExt | None

    @property
    def is_real(self) -> bool:
        return self.value is not None


def pencil_coeffs(m: MonicQuartic) -> PencilCubic:
    a3, a2, a1, a0 = m.a3, m.a2, m.a1, m.a0
    return PencilCubic(
        (-(a1**2) + a1 * a2 * a3 - a0 * a3**2) / 4,
        (4 * a0 - a2**2 - a1 * a3) / 4,
        a2 / 2,
    )


def base_matrices(m: MonicQuartic) -> tuple[Sym3Matrix, Sym3Matrix]:
    """(A1, A2) with M(lam) = A1 + lam * A2; A2 is the fixed Veronese conic."""
    half = Fraction(1, 2)
    a1 = Sym3Matrix(Fraction(1), m.a3 * half, m.a2 * half,
                    Fraction(0), m.a1 * half, m.a0)
    a2 = Sym3Matrix(Fraction(0), Fraction(0), -half,
                    Fraction(1), Fraction(0), Fraction(0))
    return a1, a2


def pencil_matrix(m: MonicQuartic, lam: Scalar) -> Sym3Matrix:
    half = Fraction(1, 2)
    return Sym3Matrix(
        Fraction(1),
        m.a3 * half,
        (m.a2 - lam) * half,
        lam,
        m.a1 * half,
        m.a0,
    )


def g_eval(p: PencilCubic, lam: Scalar) -> Scalar:
    """Horner evaluation of g; exact over Q or Q(sqrt(d))."""
    acc: Scalar = Fraction(-1, 4)
    for c in (p.b2, p.b1, p.b0):
        acc = acc * lam + c
    return acc


def g_prime_eval(p: PencilCubic, lam: Scalar) -> Scalar:
    return (Fraction(-3, 4) * lam + 2 * p.b2) * lam + p.b1


def critical_param(p: PencilCubic) -> CriticalParam:
    d = p.radicand
    if d < 0:
        return CriticalParam(radicand=d, value=None)
    # QuadExt collapses to a plain rational automatically when d is a square
    value = QuadExt(Fraction(4, 3) * p.b2, Fraction(2, 3), d)
    return CriticalParam(radicand=d, value=value)


def discriminant_g(p: PencilCubic) -> Fraction:
    """Discriminant of g; negative iff g has a conjugate complex root pair."""
    d = p.radicand
    return (16 * d**3 - (27 * p.b0 + 36 * p.b1 * p.b2 + 32 * p.b2**3) ** 2) / 432


def boundary_identity_check(m: MonicQuartic) -> tuple[Fraction, Fraction]:
    """(g(a3^2/4), -(8 a1 - 4 a2 a3 + a3^3)^2 / 256); always equal."""
    tau = m.a3**2 / 4
    lhs = g_eval(pencil_coeffs(m), tau)
    rhs = -((8 * m.a1 - 4 * m.a2 * m.a3 + m.a3**3) ** 2) / 256
    assert isinstance(lhs, Fraction)
    return lhs, rhs
