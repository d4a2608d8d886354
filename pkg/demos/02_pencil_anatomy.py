#!/usr/bin/env python3
"""Dissect the conic pencil behind one quartic form.

The form factors through the Veronese embedding as a one-parameter family
of conics M(lam) = A1 + lam*A2.  The parameters where det M(lam) = 0 give
the three degenerate members (line-pairs or repeated lines through the
intersection points of the base conics); their type and position relative
to a3^2/4 carry the whole definiteness story.
"""

from fractions import Fraction

from quartic_certify import (
    MonicQuartic,
    base_matrices,
    critical_param,
    cubic_root_profile,
    degenerate_conic_type,
    discriminant_g,
    g_eval,
    pencil_coeffs,
    pencil_matrix,
)

m = MonicQuartic(Fraction(-8), Fraction(26), Fraction(-40), Fraction(25))
print("form: x^4 - 8x^3y + 26x^2y^2 - 40xy^3 + 25y^4  [= (x^2-4xy+5y^2)^2]")

a1, a2 = base_matrices(m)
print("\nbase conics:")
for label, mat in (("A1", a1), ("A2", a2)):
    for i, row in enumerate(mat.rows()):
        prefix = f"{label} = " if i == 1 else "     "
        print(f"  {prefix}[{', '.join(str(x) for x in row)}]")

cubic = pencil_coeffs(m)
terms = "".join(
    f" {'-' if c < 0 else '+'} {abs(c)}{suffix}"
    for c, suffix in ((cubic.b2, " lam^2"), (cubic.b1, " lam"), (cubic.b0, ""))
)
print(f"\ng(lam) = -1/4 lam^3{terms}")
print(f"discriminant of g: {discriminant_g(cubic)}")

profile = cubic_root_profile(cubic)
tau = m.a3**2 / 4
print(f"\na3^2/4 = {tau}")
print("degenerate members:")
for root, mult in profile.rational_roots:
    mat = pencil_matrix(m, root)
    kind = degenerate_conic_type(mat)
    rel = "<" if root < tau else ("=" if root == tau else ">")
    print(f"  lam = {root} (multiplicity {mult}): {kind}, lam {rel} a3^2/4")

lam0 = critical_param(cubic)
print(f"\nlambda0 = {lam0.value}, g(lambda0) = {g_eval(cubic, lam0.value)}")
print("lambda0 > a3^2/4 and g(lambda0) > 0, so M(lambda0) is positive definite")
print("and the form is positive definite.")

print("\nM(lambda0) =")
for row in pencil_matrix(m, lam0.value).rows():
    print(f"  [{', '.join(str(x) for x in row)}]")
