#!/usr/bin/env python3
"""One form per intersection case: the root configuration of the quartic,
the matching case id from the cubic's root structure, and the verdict.

Cases 2 and 7 are exactly the positive definite forms; 2, 5, 6, 7, 9 the
semidefinite ones.
"""

from quartic_certify import (
    MonicQuartic,
    classify_case,
    decide_monic,
    quartic_root_nature,
)

SUITE = [
    ("(x^2-y^2)(x^2-4y^2)", MonicQuartic(0, -5, 0, 4)),
    ("x^4 + xy^3 + y^4", MonicQuartic(0, 0, 1, 1)),
    ("(x^2-y^2)(x^2+4y^2)", MonicQuartic(0, 3, 0, -4)),
    ("(x-y)(x+y)(x-2y)^2", MonicQuartic(-4, 3, 4, -4)),
    ("x^4 + x^3y + xy^3 + y^4", MonicQuartic(1, 0, 1, 1)),
    ("x^4 + 4x^3y + 2x^2y^2 - 4xy^3 + y^4", MonicQuartic(4, 2, -4, 1)),
    ("(x^2 - 4xy + 5y^2)^2", MonicQuartic(-8, 26, -40, 25)),
    ("(x-y)^3 (x+3y)", MonicQuartic(0, -6, 8, -3)),
    ("(x+y)^4", MonicQuartic(4, 6, 4, 1)),
]

print(f"{'form':38} {'case':>4}  {'verdict':34} root configuration")
print("-" * 118)
for name, m in SUITE:
    case = classify_case(m)
    verdict = decide_monic(m).classification.value
    nature = quartic_root_nature(m)
    pieces = []
    for label, count in (
        ("real simple", nature.real_simple),
        ("real double", nature.real_double),
        ("real triple", nature.real_triple),
        ("real quadruple", nature.real_quadruple),
        ("conj pair", nature.conjugate_simple_pairs),
        ("conj double pair", nature.conjugate_double_pairs),
    ):
        if count:
            pieces.append(f"{count} {label}")
    print(f"{name:38} {case.case_id:>4}  {verdict:34} {', '.join(pieces)}")
