import random
from fractions import Fraction

import pytest

from crystalball.cyclo import (
    CycNum,
    CycPoly,
    CycZeroDivisionError,
    FieldConfigError,
    NotRealError,
    RatPoly,
    cyclotomic_factor_scan,
    cyclotomic_int_poly,
    embed_constant,
    euler_phi,
    feasible_factor_degrees,
    galois_norm,
    is_irreducible,
    is_root_of_unity,
    rotation_eigenvalue,
    sign_of_real,
)

ONE = CycNum.one()
ZERO = CycNum.zero()


def test_cyclotomic_polynomials():
    assert cyclotomic_int_poly(1) == (-1, 1)
    assert cyclotomic_int_poly(3) == (1, 1, 1)
    assert cyclotomic_int_poly(8) == (1, 0, 0, 0, 1)
    assert cyclotomic_int_poly(72) == tuple([1] + [0] * 11 + [-1] + [0] * 11 + [1])
    assert euler_phi(72) == 24


class TestEmbedConstant:
    def test_sqrt2_squares_to_two(self):
        assert embed_constant("sqrt2") ** 2 == CycNum.rational(2)

    def test_omega_is_primitive_cube_root(self):
        w = embed_constant("omega")
        assert w ** 2 + w + 1 == ZERO
        assert w ** 3 == ONE
        assert not w == ONE

    def test_isqrt2_is_zeta8_plus_zeta8_cubed(self):
        v = embed_constant("isqrt2")
        assert v == CycNum.zeta_power(9) + CycNum.zeta_power(27)
        assert v ** 2 == CycNum.rational(-2)

    def test_i_squares_to_minus_one(self):
        assert embed_constant("i") ** 2 == CycNum.rational(-1)

    def test_sqrt3(self):
        assert embed_constant("sqrt3") ** 2 == CycNum.rational(3)

    @pytest.mark.parametrize("p", [2, 3, 4, 6])
    def test_u_has_order_3p(self, p):
        u = rotation_eigenvalue(p)
        assert u ** (3 * p) == ONE
        assert is_root_of_unity(u) == 3 * p

    def test_u_infinity_is_one(self):
        import math

        assert rotation_eigenvalue(math.inf) == ONE

    def test_rejects_constant_outside_field(self):
        with pytest.raises(FieldConfigError) as exc:
            embed_constant("u(4)", order=9)
        assert "12" in str(exc.value)
        with pytest.raises(FieldConfigError):
            embed_constant("sqrt2", order=12)

    def test_zeta_k(self):
        assert embed_constant("zeta(8)") == CycNum.zeta_power(9)
        with pytest.raises(FieldConfigError):
            embed_constant("zeta(5)")


class TestFieldOps:
    def test_inverse_of_sqrt2(self):
        s = embed_constant("sqrt2")
        assert s.inverse() == s * Fraction(1, 2)
        assert s * s.inverse() == ONE

    def test_conj_sigma1(self):
        s1 = embed_constant("sigma1")
        assert s1.conj() == CycNum.rational(-1) - embed_constant("isqrt2")
        assert s1 * s1.conj() == CycNum.rational(3)

    def test_zeta_order(self):
        z = CycNum.zeta_power(1)
        assert z ** 72 == ONE
        assert not z ** 36 == ONE

    def test_division_by_zero_is_distinct_error(self):
        with pytest.raises(CycZeroDivisionError):
            ZERO.inverse()
        with pytest.raises(CycZeroDivisionError):
            ONE / ZERO

    def test_conj_is_ring_automorphism(self):
        rng = random.Random(7)
        for _ in range(25):
            x = _random_cyc(rng)
            y = _random_cyc(rng)
            assert (x * y).conj() == x.conj() * y.conj()
            assert (x + y).conj() == x.conj() + y.conj()
            assert x.conj().conj() == x

    def test_inverse_round_trip(self):
        rng = random.Random(11)
        for _ in range(15):
            x = _random_cyc(rng)
            if x.is_zero():
                continue
            assert x * x.inverse() == ONE

    def test_real_iff_conj_fixed(self):
        assert embed_constant("sqrt2").is_real()
        assert not embed_constant("isqrt2").is_real()
        assert embed_constant("isqrt2").norm_square() == CycNum.rational(2)

    def test_mixed_rational_arithmetic(self):
        s = embed_constant("sqrt2")
        assert s * 2 - s == s
        assert (s + Fraction(1, 3)) - Fraction(1, 3) == s


class TestSignOfReal:
    def test_paper_negative_witness(self):
        x = CycNum.rational(88) - CycNum.rational(64) * embed_constant("sqrt2")
        assert sign_of_real(x) == -1

    def test_zero(self):
        assert sign_of_real(ZERO) == 0

    def test_two_minus_sqrt3_positive(self):
        assert sign_of_real(CycNum.rational(2) - embed_constant("sqrt3")) == 1

    def test_rejects_non_real(self):
        with pytest.raises(NotRealError):
            sign_of_real(embed_constant("i"))

    def test_zero_iff_zero_vector(self):
        rng = random.Random(3)
        for _ in range(20):
            x = _random_cyc(rng)
            r = x + x.conj()
            assert (sign_of_real(r) == 0) == r.is_zero()

    def test_tiny_but_nonzero(self):
        x = (CycNum.rational(Fraction(1, 10 ** 25))
             * (embed_constant("sqrt2") - CycNum.rational(Fraction(239, 169))))
        assert sign_of_real(x) == sign_of_real(embed_constant("sqrt2") - CycNum.rational(Fraction(239, 169)))


class TestRootsOfUnity:
    def test_paper_order_12_root(self):
        x = -(embed_constant("i") + embed_constant("sqrt3")) * Fraction(1, 2)
        assert is_root_of_unity(x) == 12

    def test_one(self):
        assert is_root_of_unity(ONE) == 1

    def test_sigma1_is_not(self):
        assert is_root_of_unity(embed_constant("sigma1")) is None

    def test_zeta_powers(self):
        assert is_root_of_unity(CycNum.zeta_power(8)) == 9
        assert is_root_of_unity(-ONE) == 2


class TestRatPoly:
    def test_gcd_is_monic(self):
        a = RatPoly([-2, 0, 2])  # 2x^2 - 2
        b = RatPoly([3, 3])  # 3x + 3
        g = a.gcd(b)
        assert g.leading() == 1
        assert g == RatPoly([1, 1])

    def test_divmod(self):
        n = RatPoly([-1, 0, 0, 1])
        q, r = divmod(n, RatPoly([-1, 1]))
        assert r.is_zero()
        assert q == RatPoly([1, 1, 1])

    def test_squarefree_part(self):
        p = RatPoly([1, 1]) ** 3 * RatPoly([-2, 0, 1])
        assert p.squarefree_part() == (RatPoly([1, 1]) * RatPoly([-2, 0, 1])).monic()

    def test_integer_coeffs_primitive(self):
        p = RatPoly([Fraction(1, 2), Fraction(3, 4)])
        assert p.integer_coeffs() == (2, 3)


class TestCyclotomicScan:
    def test_phi3(self):
        assert cyclotomic_factor_scan(RatPoly([1, 1, 1])) == [3]

    def test_sqrt3_poly_has_none(self):
        assert cyclotomic_factor_scan(RatPoly([-3, 0, 1])) == []

    def test_product(self):
        p = RatPoly.cyclotomic(8) * RatPoly.cyclotomic(12) * RatPoly([-3, 1])
        assert cyclotomic_factor_scan(p) == [8, 12]


class TestGaloisNorm:
    def test_linear_sqrt2(self):
        q = CycPoly(72, [-embed_constant("sqrt2"), ONE])
        n = galois_norm(q)
        assert n == RatPoly([-2, 0, 1]) ** 12

    def test_linear_one(self):
        q = CycPoly(72, [-ONE, ONE])
        assert galois_norm(q) == RatPoly([-1, 1]) ** 24

    def test_norm_of_rational_poly_is_power(self):
        q = CycPoly.from_rational(RatPoly([1, 1, 1]))
        assert galois_norm(q) == RatPoly([1, 1, 1]) ** 24


class TestEnclosureOracle:
    def test_horner_and_term_sum_agree(self):
        # independent direct-sum evaluator vs the production Horner route,
        # at width below 1e-40
        rng = random.Random(2024)
        for _ in range(100):
            x = _random_cyc(rng)
            hr, hi = x.enclosure(180)
            tr, ti = x.enclosure_term_sum(180)
            assert hr.delta < 1e-40 and tr.delta < 1e-40
            assert hr.b >= tr.a and tr.b >= hr.a  # overlap => both contain the value
            assert hi.b >= ti.a and ti.b >= hi.a

    def test_enclosure_matches_exact_rational(self):
        x = CycNum.rational(Fraction(22, 7))
        re, im = x.enclosure(80)
        assert float(re.delta) < 1e-20
        assert abs(float(re.mid) - 22 / 7) < 1e-15
        assert float(im.a) <= 0 <= float(im.b)


class TestIrreducibility:
    def test_cyclotomic_irreducible(self):
        # Phi_12's Galois group has no 4-cycle, so the mod-p sieve alone is
        # inconclusive and the subset-product search must close the case
        assert feasible_factor_degrees(RatPoly.cyclotomic(12)) != {0, 4}
        assert is_irreducible(RatPoly.cyclotomic(12)) is True
        assert is_irreducible(RatPoly.cyclotomic(7)) is True

    def test_sieve_conclusive_case(self):
        assert feasible_factor_degrees(RatPoly([-2, 0, 1])) == {0, 2}

    def test_product_reducible(self):
        p = RatPoly([-2, 0, 1]) * RatPoly([-3, 0, 1])
        assert is_irreducible(p) is False
        assert is_irreducible(RatPoly([-4, 0, 1])) is False

    def test_find_factor_exact(self):
        from crystalball.cyclo import find_integer_factor

        p = RatPoly([-2, 0, 1]) * RatPoly([1, 0, 1])
        g = find_integer_factor(p)
        assert g is not None and divmod(p, g)[1].is_zero()

    def test_feasible_degrees_of_known_product(self):
        p = RatPoly([1, 1]) * RatPoly([1, 1, 1])
        assert {0, 1, 2, 3}.issuperset(feasible_factor_degrees(p))
        assert 1 in feasible_factor_degrees(p)


def _random_cyc(rng: random.Random) -> CycNum:
    num = [rng.randint(-4, 4) if rng.random() < 0.4 else 0 for _ in range(24)]
    den = rng.randint(1, 6)
    return CycNum._make(72, num, den)


def test_serialize_round_trip_forms():
    # zeta^27 reduces to zeta^15 - zeta^3 over the order-72 basis
    s = embed_constant("sigma1")
    assert s.serialize() == "-1 - z^3 + z^9 + z^15"
    assert ZERO.serialize() == "0"
