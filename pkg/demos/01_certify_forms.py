#!/usr/bin/env python3
"""Walk through definiteness certification on a handful of quartic forms.

Each form is decided exactly; positive or semidefinite verdicts come with
a symmetric matrix certificate that reproduces the form through the
squared-monomial vector [x^2, xy, y^2].
"""

from fractions import Fraction

from quartic_certify import (
    certify,
    critical_param,
    g_eval,
    pencil_coeffs,
    to_decimal,
)

FORMS = [
    ("x^4 + x y^3 + y^4", (1, 0, 0, 1, 1)),
    ("x^4 - 8x^3y + 26x^2y^2 - 40xy^3 + 25y^4", (1, -8, 26, -40, 25)),
    ("x^4 + x^3y + xy^3 + y^4", (1, 1, 0, 1, 1)),
    ("x^4 + 4x^3y + 2x^2y^2 - 4xy^3 + y^4", (1, 4, 2, -4, 1)),
    ("(x + y)^4", (1, 4, 6, 4, 1)),
    ("-x^4 + 6x^3y - 13x^2y^2 + 24xy^3 - 36y^4", (-1, 6, -13, 24, -36)),
    ("(x^2 - y^2)(x^2 - 4y^2)", (1, 0, -5, 0, 4)),
    ("y^2 (x^2 + y^2)", (0, 0, 1, 0, 1)),
]

for name, coeffs in FORMS:
    problem, verdict = certify(*map(Fraction, coeffs))
    print(f"\n{name}")
    print(f"  verdict: {verdict.classification.value}")
    if problem.form is not None:
        cubic = pencil_coeffs(problem.form)
        lam0 = critical_param(cubic)
        print(f"  cubic coefficients: b0={cubic.b0}, b1={cubic.b1}, b2={cubic.b2}")
        if lam0.is_real:
            print(f"  lambda0 = {lam0.value}  (~{to_decimal(lam0.value, 10)})")
            print(f"  g(lambda0) = {g_eval(cubic, lam0.value)}")
        else:
            print(f"  lambda0 is non-real (radicand {lam0.radicand} < 0)")
    if verdict.certificate is not None:
        print("  certificate rows:")
        for row in verdict.certificate.rows():
            print("   ", [str(entry) for entry in row])
    if verdict.witnesses is not None:
        (px, py), (nx, ny) = verdict.witnesses
        print(f"  witnesses: positive at ({px}, {py}), negative at ({nx}, {ny})")
