import random
from fractions import Fraction

from quartic_certify import (
    MonicQuartic,
    PencilCubic,
    QuadExt,
    base_matrices,
    boundary_identity_check,
    critical_param,
    cubic_root_profile,
    discriminant_g,
    evaluate,
    g_eval,
    pencil_coeffs,
    pencil_matrix,
    sign_of,
)
from quartic_certify.pencil import g_prime_eval

from conftest import random_fraction, random_monic

F = Fraction

EX1 = MonicQuartic(0, 0, 1, 1)
EX2 = MonicQuartic(-8, 26, -40, 25)
EX3 = MonicQuartic(1, 0, 1, 1)
EX4 = MonicQuartic(4, 2, -4, 1)
EX5 = MonicQuartic(4, 6, 4, 1)


class TestPencilCoeffs:
    def test_example_forms(self):
        assert pencil_coeffs(EX1) == PencilCubic(F(-1, 4), F(1), F(0))
        assert pencil_coeffs(EX2) == PencilCubic(F(1280), F(-224), F(13))
        assert pencil_coeffs(MonicQuartic(0, 0, 0, 0)) == PencilCubic(0, 0, 0)

    def test_more_examples(self):
        assert pencil_coeffs(EX3) == PencilCubic(F(-1, 2), F(3, 4), F(0))
        assert pencil_coeffs(EX4) == PencilCubic(F(-16), F(4), F(1))
        assert pencil_coeffs(EX5) == PencilCubic(F(16), F(-12), F(3))


class TestPencilMatrix:
    def test_rank_one_member(self):
        mat = pencil_matrix(EX5, F(4))
        assert mat.rows() == (
            (1, 2, 1),
            (2, 4, 2),
            (1, 2, 1),
        )
        assert mat.rank() == 1

    def test_corner_vanishes_at_a2(self):
        m = MonicQuartic(3, F(7, 2), -1, 5)
        assert pencil_matrix(m, m.a2).m13 == 0

    def test_lambda_zero_gives_first_base_conic(self):
        a1, a2 = base_matrices(EX1)
        assert pencil_matrix(EX1, F(0)) == a1
        assert a1.rows() == ((1, 0, 0), (0, 0, F(1, 2)), (0, F(1, 2), 1))
        assert a2.rows() == ((0, 0, F(-1, 2)), (0, 1, 0), (F(-1, 2), 0, 0))


class TestGEval:
    def test_rational_point(self):
        assert g_eval(pencil_coeffs(EX2), F(56, 3)) == F(64, 27)

    def test_quadratic_extension_point(self):
        lam = QuadExt(F(0), F(2, 3), F(3))  # 2/sqrt(3)
        assert g_eval(pencil_coeffs(EX1), lam) == QuadExt(F(-1, 4), F(4, 9), F(3))

    def test_boundary_zero(self):
        assert g_eval(pencil_coeffs(EX5), F(4)) == 0


class TestCriticalParam:
    def test_irrational(self):
        lam0 = critical_param(PencilCubic(F(-1, 4), F(1), F(0)))
        assert lam0.is_real and lam0.radicand == 3
        assert lam0.value == QuadExt(F(0), F(2, 3), F(3))

    def test_perfect_square_collapse(self):
        lam0 = critical_param(PencilCubic(F(1280), F(-224), F(13)))
        assert lam0.radicand == 4
        assert lam0.value.is_rational and lam0.value.as_fraction() == F(56, 3)

    def test_non_real(self):
        # f = x^4 - y^4 has b1 = -1, b2 = 0, so the radicand is -3
        cubic = pencil_coeffs(MonicQuartic(0, 0, 0, -1))
        assert (cubic.b1, cubic.b2) == (-1, 0)
        lam0 = critical_param(cubic)
        assert not lam0.is_real and lam0.radicand == -3 and lam0.value is None


class TestDiscriminant:
    def test_triple_root_vanishes(self):
        assert discriminant_g(PencilCubic(F(16), F(-12), F(3))) == 0
        assert discriminant_g(PencilCubic(0, 0, 0)) == 0

    def test_three_distinct_real_roots_positive(self):
        assert discriminant_g(PencilCubic(F(-1, 4), F(1), F(0))) == F(229, 256)

    def test_repeated_root_vanishes(self):
        assert discriminant_g(PencilCubic(F(-16), F(4), F(1))) == 0
        assert discriminant_g(PencilCubic(F(1280), F(-224), F(13))) == 0


class TestBoundaryIdentity:
    def test_examples(self):
        assert boundary_identity_check(EX4) == (F(0), F(0))
        assert boundary_identity_check(EX1) == (F(-1, 4), F(-1, 4))
        assert boundary_identity_check(MonicQuartic(0, 0, 0, 0)) == (F(0), F(0))


class TestIdentities:
    def test_representation_and_determinant(self):
        rng = random.Random(23)
        for _ in range(300):
            m = random_monic(rng, num=60, den=12)
            cubic = pencil_coeffs(m)
            lam = random_fraction(rng, 40, 8)
            mat = pencil_matrix(m, lam)
            assert mat.det() == g_eval(cubic, lam)
            x, y = random_fraction(rng, 12, 4), random_fraction(rng, 12, 4)
            assert mat.form_value(x, y) == evaluate(m, x, y)

    def test_boundary_identity_random(self):
        rng = random.Random(29)
        for _ in range(300):
            lhs, rhs = boundary_identity_check(random_monic(rng, num=60, den=12))
            assert lhs == rhs

    def test_stationarity_of_lambda0(self):
        rng = random.Random(31)
        seen_real = 0
        for _ in range(400):
            cubic = pencil_coeffs(random_monic(rng, num=60, den=12))
            lam0 = critical_param(cubic)
            if not lam0.is_real:
                continue
            seen_real += 1
            assert g_prime_eval(cubic, lam0.value) == 0
            other = QuadExt(F(4, 3) * cubic.b2, F(-2, 3), lam0.radicand)
            assert lam0.value >= other
        assert seen_real > 50

    def test_discriminant_sign_matches_root_profile(self, small_corpus):
        for m in small_corpus:
            cubic = pencil_coeffs(m)
            profile = cubic_root_profile(cubic)
            assert (sign_of(discriminant_g(cubic)) < 0) == profile.conjugate_pair
