import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartic_certify import (
    MonicQuartic,
    Orientation,
    evaluate,
    evaluate_plain,
    from_plain_coeffs,
    from_weighted,
    to_weighted,
)

F = Fraction

fractions = st.fractions(max_denominator=40)


def test_from_plain_monicises_positive_leading():
    p = from_plain_coeffs(1, 0, 0, 1, 1)
    assert p.form == MonicQuartic(F(0), F(0), F(1), F(1))
    assert p.orientation is Orientation.POSITIVE_SIDE
    assert not p.degenerate_leading


def test_from_plain_positive_scaling_is_noop():
    assert from_plain_coeffs(2, 0, 0, 2, 2).form == from_plain_coeffs(1, 0, 0, 1, 1).form


def test_from_plain_negative_side_flips():
    p = from_plain_coeffs(-1, 6, -13, 24, -36)
    assert p.form == MonicQuartic(F(-6), F(13), F(-24), F(36))
    assert p.orientation is Orientation.NEGATIVE_SIDE
    assert p.scale == 1


def test_from_plain_degenerate_leading():
    p = from_plain_coeffs(0, 1, 2, 3, 4)
    assert p.degenerate_leading
    assert p.form is None and p.orientation is None
    assert p.degenerate_coeffs == (F(1), F(2), F(3), F(4))


def test_to_weighted_examples():
    assert to_weighted(MonicQuartic(0, 0, 1, 1)) == to_weighted(
        from_plain_coeffs(1, 0, 0, 1, 1).form
    )
    v = to_weighted(MonicQuartic(0, 0, 1, 1))
    assert (v.c0, v.c1, v.c2, v.c3, v.c4) == (1, 0, 0, F(1, 4), 1)
    v = to_weighted(MonicQuartic(0, 0, 0, 0))
    assert (v.c0, v.c1, v.c2, v.c3, v.c4) == (1, 0, 0, 0, 0)
    v = to_weighted(MonicQuartic(4, 6, 4, 1))
    assert (v.c0, v.c1, v.c2, v.c3, v.c4) == (1, 1, 1, 1, 1)


@given(fractions, fractions, fractions, fractions)
@settings(max_examples=150)
def test_weighted_round_trip(a3, a2, a1, a0):
    m = MonicQuartic(a3, a2, a1, a0)
    assert from_weighted(to_weighted(m)) == m


def test_from_weighted_requires_monic():
    v = to_weighted(MonicQuartic(0, 0, 0, 0))
    object.__setattr__(v, "c0", F(2))
    with pytest.raises(ValueError):
        from_weighted(v)


def test_evaluate_examples():
    m = MonicQuartic(0, 0, 1, 1)
    assert evaluate(m, 1, 1) == 3
    assert evaluate(MonicQuartic(7, -2, 5, 9), 1, 0) == 1
    assert evaluate(MonicQuartic(4, 6, 4, 1), 1, -1) == 0


def test_evaluate_rejects_floats():
    with pytest.raises(TypeError):
        evaluate(MonicQuartic(0, 0, 0, 0), 0.5, 1)


def test_orientation_soundness():
    rng = random.Random(17)
    for _ in range(200):
        coeffs = [F(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(5)]
        if coeffs[0] == 0:
            coeffs[0] = F(rng.randint(1, 50))
        p = from_plain_coeffs(*coeffs)
        sign = 1 if p.orientation is Orientation.POSITIVE_SIDE else -1
        x, y = F(rng.randint(-9, 9)), F(rng.randint(-9, 9))
        original = evaluate_plain(*coeffs, x, y)
        assert original == p.scale * sign * evaluate(p.form, x, y)


def test_dehomogenized_matches_evaluation():
    rng = random.Random(19)
    for _ in range(100):
        m = MonicQuartic(*(F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(4)))
        x, y = F(rng.randint(-9, 9)), F(rng.randint(1, 9))
        lo = m.dehomogenized()
        value = sum(c * (x / y) ** i for i, c in enumerate(lo))
        assert evaluate(m, x, y) == y**4 * value
