"""Classical invariant-based positive definiteness test (cross-check only).

For the weighted form V = c0 x^4 + 4 c1 x^3 y + 6 c2 x^2 y^2 + 4 c3 x y^3
+ c4 y^4 with c0 > 0, positive definiteness is equivalent to one of

    (1)  Delta = 0, G = 0, 12 H^2 - c0^2 I = 0, H > 0
    (2)  Delta > 0, H >= 0
    (3)  Delta > 0, H < 0, 12 H^2 - c0^2 I < 0

in the classical invariants G, H, I, J, Delta = I^3 - 27 J^2.  This module
never feeds the user-facing verdict; it exists so that every pencil-based
decision can be validated against an algebraically independent criterion.
There is no semidefinite analogue here: boundary cases are cross-checked
against the root-configuration oracle instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .forms import GeneralQuartic

__all__ = ["ClassicalQuantities", "classical_quantities", "classical_is_pd"]


@dataclass(frozen=True)
class ClassicalQuantities:
    G: Fraction
    H: Fraction
    I: Fraction
    J: Fraction
    delta: Fraction
    aux: Fraction  # 12 H^2 - c0^2 I


def classical_quantities(v: GeneralQuartic) -> ClassicalQuantities:
    c0, c1, c2, c3, c4 = v.c0, v.c1, v.c2, v.c3, v.c4
    G = c0**2 * c3 - 3 * c0 * c1 * c2 + 2 * c1**3
    H = c0 * c2 - c1**2
    I = c0 * c4 - 4 * c1 * c3 + 3 * c2**2
    J = (
        c0 * (c2 * c4 - c3**2)
        - c1 * (c1 * c4 - c2 * c3)
        + c2 * (c1 * c3 - c2**2)
    )
    delta = I**3 - 27 * J**2
    return ClassicalQuantities(G, H, I, J, delta, 12 * H**2 - c0**2 * I)


def classical_is_pd(v: GeneralQuartic) -> bool:
    if v.c0 <= 0:
        raise ValueError(f"criterion requires a positive leading coefficient, got {v.c0}")
    q = classical_quantities(v)
    if q.delta == 0 and q.G == 0 and q.aux == 0 and q.H > 0:
        return True
    if q.delta > 0 and q.H >= 0:
        return True
    if q.delta > 0 and q.H < 0 and q.aux < 0:
        return True
    return False
