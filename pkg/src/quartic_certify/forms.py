"""Binary quartic forms and input normalisation.

`MonicQuartic` is the working representation x^4 + a3 x^3 y + a2 x^2 y^2 +
a1 x y^3 + a0 y^4.  `GeneralQuartic` carries the binomially weighted
coefficients c0 x^4 + 4 c1 x^3 y + 6 c2 x^2 y^2 + 4 c3 x y^3 + c4 y^4 used
by the classical cross-check.  `from_plain_coeffs` turns arbitrary plain
coefficients (e4, e3, e2, e1, e0) into a `NormalizedProblem`: positive
leading coefficients are scaled to monic, negative ones are additionally
sign-flipped so that negativity questions become positivity questions, and
e4 = 0 inputs are flagged for the dedicated degenerate path.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import as_fraction

__all__ = [
    "MonicQuartic",
    "GeneralQuartic",
    "Orientation",
    "NormalizedProblem",
    "from_plain_coeffs",
    "to_weighted",
    "from_weighted",
    "evaluate",
    "evaluate_plain",
]


@dataclass(frozen=True)
class MonicQuartic:
    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __post_init__(self) -> None:
        for name in ("a3", "a2", "a1", "a0"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    def coefficients(self) -> tuple[Fraction, ...]:
        """Plain coefficients (1, a3, a2, a1, a0), highest degree in x first."""
        return (Fraction(1), self.a3, self.a2, self.a1, self.a0)

    def dehomogenized(self) -> tuple[Fraction, ...]:
        """Coefficients of f(x, 1), low degree first."""
        return (self.a0, self.a1, self.a2, self.a3, Fraction(1))


@dataclass(frozen=True)
class GeneralQuartic:
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction
    c4: Fraction

    def __post_init__(self) -> None:
        for name in ("c0", "c1", "c2", "c3", "c4"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))


class Orientation(enum.Enum):
    POSITIVE_SIDE = "positive-side"
    NEGATIVE_SIDE = "negative-side"


@dataclass(frozen=True)
class NormalizedProblem:
    """A definiteness question reduced to a monic positive-side form.

    `form` is the monic quartic actually decided; for negative-side inputs
    it is the monic form of -f/|e4|, so its positivity classes map back to
    the original's negativity classes.  `scale` is |e4| (0 when the leading
    coefficient vanishes and `degenerate_leading` is set; then `form` is
    None and the lower coefficients live in `degenerate_coeffs`).
    """

    form: MonicQuartic | None
    orientation: Orientation | None
    scale: Fraction
    degenerate_leading: bool
    degenerate_coeffs: tuple[Fraction, Fraction, Fraction, Fraction] | None = None


def from_plain_coeffs(e4, e3, e2, e1, e0) -> NormalizedProblem:
    e4, e3, e2, e1, e0 = map(as_fraction, (e4, e3, e2, e1, e0))
    if e4 == 0:
        return NormalizedProblem(
            form=None,
            orientation=None,
            scale=Fraction(0),
            degenerate_leading=True,
            degenerate_coeffs=(e3, e2, e1, e0),
        )
    # dividing by e4 both scales to monic and, when e4 < 0, negates the
    # lower coefficients, which swaps the negative-side question for the
    # positive-side one
    form = MonicQuartic(e3 / e4, e2 / e4, e1 / e4, e0 / e4)
    orientation = Orientation.POSITIVE_SIDE if e4 > 0 else Orientation.NEGATIVE_SIDE
    return NormalizedProblem(
        form=form,
        orientation=orientation,
        scale=abs(e4),
        degenerate_leading=False,
    )


def to_weighted(m: MonicQuartic) -> GeneralQuartic:
    return GeneralQuartic(Fraction(1), m.a3 / 4, m.a2 / 6, m.a1 / 4, m.a0)


def from_weighted(v: GeneralQuartic) -> MonicQuartic:
    if v.c0 != 1:
        raise ValueError(f"expected a monic weighted form (c0 = 1), got c0 = {v.c0}")
    return MonicQuartic(4 * v.c1, 6 * v.c2, 4 * v.c3, v.c4)


def evaluate(m: MonicQuartic, x, y) -> Fraction:
    return evaluate_plain(Fraction(1), m.a3, m.a2, m.a1, m.a0, x, y)


def evaluate_plain(e4, e3, e2, e1, e0, x, y) -> Fraction:
    x, y = as_fraction(x), as_fraction(y)
    e4, e3, e2, e1, e0 = map(as_fraction, (e4, e3, e2, e1, e0))
    return (
        e4 * x**4
        + e3 * x**3 * y
        + e2 * x**2 * y**2
        + e1 * x * y**3
        + e0 * y**4
    )
