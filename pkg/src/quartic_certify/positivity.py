"""Definiteness decisions with verifiable matrix certificates.

The decision path for a monic form is two exact sign tests in Q(sqrt(d)):

    PSD  iff  lam0 >= a3^2/4  and  g(lam0) >= 0,
    PD   iff  lam0 >  a3^2/4  and  g(lam0) >  0,

with a non-real lam0 (d < 0) immediately indefinite.  Whenever the verdict
is PSD or PD the matrix M(lam0) is emitted as a certificate: it is positive
(semi)definite exactly when the form is, and it reproduces the form through
the Veronese representation, so a verifier needs nothing but Sylvester's
criterion and a matrix-vector product.  The equivalent Sylvester-based test
on M(lam0) is kept as `sylvester_pd`/`sylvester_psd` for cross-checking but
never decides the user-facing verdict.

Negative-side problems arrive here already sign-flipped to monic positive
side (see forms.from_plain_coeffs); `decide_negative_side` maps the classes
back.  Forms with vanishing leading coefficient get the dedicated
`decide_degenerate_leading` treatment since they can never be PD but may
still be semidefinite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import QuadExt, as_fraction, sign_of
from .forms import MonicQuartic, NormalizedProblem, Orientation, evaluate_plain
from .pencil import Sym3Matrix, critical_param, g_eval, pencil_coeffs, pencil_matrix

__all__ = [
    "Definiteness",
    "Verdict",
    "sylvester_pd",
    "sylvester_psd",
    "decide_monic",
    "decide_negative_side",
    "decide_degenerate_leading",
    "decide_problem",
]


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive-definite"
    POSITIVE_SEMIDEFINITE = "positive-semidefinite-not-definite"
    INDEFINITE = "indefinite"
    NEGATIVE_DEFINITE = "negative-definite"
    NEGATIVE_SEMIDEFINITE = "negative-semidefinite-not-definite"
    ZERO = "identically-zero"


Point = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class Verdict:
    """Outcome of a definiteness decision.

    `certificate` is present for every verdict in {PD, PSD, ND, NSD, ZERO};
    it is always the positive-semidefinite Gram matrix of the decided
    (positive-side) problem, so for negative-side classes the certified
    matrix of the original form is its negation.  `witnesses` accompanies
    every indefinite verdict: two rational points where the decided form is
    exactly positive and exactly negative.
    """

    classification: Definiteness
    certificate: Sym3Matrix | None = None
    witnesses: tuple[Point, Point] | None = None


def sylvester_pd(mat: Sym3Matrix) -> bool:
    """Positive definite iff all three leading principal minors are > 0."""
    return all(sign_of(minor) > 0 for minor in mat.leading_principal_minors())


def sylvester_psd(mat: Sym3Matrix) -> bool:
    """Positive semidefinite iff all seven principal minors are >= 0.

    Leading minors alone do not suffice for semidefiniteness, e.g.
    diag(1, 0, -1) has leading minors 1, 0, 0.
    """
    return all(sign_of(minor) >= 0 for minor in mat.principal_minors())


def decide_monic(m: MonicQuartic) -> Verdict:
    cubic = pencil_coeffs(m)
    lam0 = critical_param(cubic)
    if not lam0.is_real:
        return _indefinite_with_witnesses(m)
    tau = m.a3**2 / 4
    slack = sign_of(lam0.value - tau)
    value = sign_of(g_eval(cubic, lam0.value))
    if slack > 0 and value > 0:
        cls = Definiteness.POSITIVE_DEFINITE
    elif slack >= 0 and value >= 0:
        cls = Definiteness.POSITIVE_SEMIDEFINITE
    else:
        return _indefinite_with_witnesses(m)
    return Verdict(cls, certificate=pencil_matrix(m, lam0.value))


def _indefinite_with_witnesses(m: MonicQuartic) -> Verdict:
    from .classifier import witness_search

    return Verdict(Definiteness.INDEFINITE, witnesses=witness_search(m))


def decide_negative_side(m: MonicQuartic) -> Verdict:
    """Decide the sign-flipped monic form of a negative-leading quartic and
    map PD -> ND, PSD -> NSD.  The certificate stays the PSD matrix of the
    flipped form (its negation certifies the original)."""
    verdict = decide_monic(m)
    mapping = {
        Definiteness.POSITIVE_DEFINITE: Definiteness.NEGATIVE_DEFINITE,
        Definiteness.POSITIVE_SEMIDEFINITE: Definiteness.NEGATIVE_SEMIDEFINITE,
    }
    cls = mapping.get(verdict.classification, verdict.classification)
    return Verdict(cls, certificate=verdict.certificate, witnesses=verdict.witnesses)


def decide_degenerate_leading(e3, e2, e1, e0) -> Verdict:
    """Decide f = y * (e3 x^3 + e2 x^2 y + e1 x y^2 + e0 y^3).

    f(1, 0) = 0 rules out PD and ND.  A cubic factor in x forces a sign
    change, so semidefiniteness requires e3 = 0, in which case f = y^2 * q
    with q = e2 x^2 + e1 x y + e0 y^2 and the verdict is that of the
    quadratic form q; its Gram matrix embeds as a certificate on the
    squared-monomial basis.
    """
    e3, e2, e1, e0 = map(as_fraction, (e3, e2, e1, e0))
    if e3 == e2 == e1 == e0 == 0:
        zero = Fraction(0)
        return Verdict(
            Definiteness.ZERO,
            certificate=Sym3Matrix(zero, zero, zero, zero, zero, zero),
        )
    if e3 != 0:
        return Verdict(
            Definiteness.INDEFINITE, witnesses=_cubic_sign_witnesses(e3, e2, e1, e0)
        )
    disc = e1**2 - 4 * e2 * e0
    gram = Sym3Matrix(Fraction(0), Fraction(0), Fraction(0), e2, e1 / 2, e0)
    if e2 >= 0 and e0 >= 0 and disc <= 0:
        return Verdict(Definiteness.POSITIVE_SEMIDEFINITE, certificate=gram)
    if e2 <= 0 and e0 <= 0 and disc <= 0:
        return Verdict(Definiteness.NEGATIVE_SEMIDEFINITE, certificate=gram.negated())
    return Verdict(
        Definiteness.INDEFINITE, witnesses=_quadratic_sign_witnesses(e2, e1, e0)
    )


def _cubic_sign_witnesses(e3, e2, e1, e0) -> tuple[Point, Point]:
    # odd degree in x: f(t, 1) follows sign(e3 * t^3) for large |t|
    def value(t: Fraction) -> Fraction:
        return evaluate_plain(0, e3, e2, e1, e0, t, 1)

    t = Fraction(1)
    while value(t) * e3 <= 0:
        t *= 2
    s = Fraction(-1)
    while value(s) * e3 >= 0:
        s *= 2
    pos, neg = ((t, Fraction(1)), (s, Fraction(1)))
    if e3 < 0:
        pos, neg = neg, pos
    return pos, neg


def _quadratic_sign_witnesses(e2, e1, e0) -> tuple[Point, Point]:
    # q = e2 x^2 + e1 xy + e0 y^2 indefinite; f = y^2 q shares signs at y = 1
    def value(t: Fraction) -> Fraction:
        return e2 * t**2 + e1 * t + e0

    one = Fraction(1)
    if e2 != 0:
        vertex = -e1 / (2 * e2)
        extreme = value(vertex)  # opposite sign to e2 since disc > 0
        far = vertex + max(Fraction(1), abs(vertex)) * 4
        while value(far) * e2 <= 0:
            far *= 2
        if e2 > 0:
            return (far, one), (vertex, one)
        return (vertex, one), (far, one)
    # e2 = 0, e1 != 0: linear in t
    t = (abs(e0) + 1) / e1
    assert value(t) > 0 and value(-t) < 0
    return (t, one), (-t, one)


def decide_problem(problem: NormalizedProblem) -> Verdict:
    """Route a normalised problem to the right decision procedure."""
    if problem.degenerate_leading:
        assert problem.degenerate_coeffs is not None
        return decide_degenerate_leading(*problem.degenerate_coeffs)
    assert problem.form is not None
    if problem.orientation is Orientation.NEGATIVE_SIDE:
        return decide_negative_side(problem.form)
    return decide_monic(problem.form)
