import random

import pytest

from agcodec.curvering import BOTTOM, Curve, Monomial, Semigroup
from agcodec.gf import Field

from support import naive_reduce, random_ring_element


class TestBottom:
    def test_orders_below_integers(self):
        assert BOTTOM < 0
        assert BOTTOM < -10
        assert not BOTTOM < BOTTOM
        assert 0 > BOTTOM
        assert 0 >= BOTTOM
        assert not BOTTOM >= 0
        assert BOTTOM >= BOTTOM

    def test_absorbs_addition(self):
        assert BOTTOM + 5 is BOTTOM
        assert 5 + BOTTOM is BOTTOM


class TestCurveConstruction:
    def test_hermitian_q3(self, curve_q3):
        assert (curve_q3.a, curve_q3.b) == (3, 4)
        assert curve_q3.field.order == 9
        # y^3 + y - x^4 = 0: d = -1, single coefficient c_{0,1} = 1
        assert curve_q3.d == -curve_q3.field.one
        assert curve_q3.coeffs == {Monomial(0, 1): curve_q3.field.one}

    def test_hermitian_q2(self):
        curve = Curve.hermitian(2)
        assert (curve.a, curve.b) == (2, 3)
        assert curve.field.order == 4

    def test_not_coprime(self):
        field = Field(3, 2)
        with pytest.raises(ValueError):
            Curve(field, 2, 2, field.one, {})

    def test_zero_d(self):
        field = Field(3, 2)
        with pytest.raises(ValueError):
            Curve(field, 2, 3, field.zero, {})

    def test_coefficient_outside_region(self):
        field = Field(3, 2)
        with pytest.raises(ValueError):
            Curve(field, 2, 3, field.one, {(3, 0): field.one})  # 2*3 >= 6


class TestReduction:
    def test_y_cubed(self, curve_q3):
        one = curve_q3.field.one
        reduced = curve_q3.element({(0, 3): one})
        assert reduced == curve_q3.monomial(4, 0) - curve_q3.monomial(0, 1)

    def test_y_fourth_matches_multiply_oracle(self, curve_q3):
        one = curve_q3.field.one
        y = curve_q3.monomial(0, 1)
        y3 = curve_q3.element({(0, 3): one})
        assert curve_q3.element({(0, 4): one}) == y * y3

    def test_idempotent_on_reduced(self, curve_q3):
        f = curve_q3.monomial(5, 0)
        assert curve_q3.element({(5, 0): curve_q3.field.one}) == f

    def test_against_naive_long_division(self, curve_q3):
        rng = random.Random(11)
        elems = curve_q3.field.elements()
        for _ in range(40):
            raw = {(rng.randrange(7), rng.randrange(9)):
                   elems[rng.randrange(1, 9)] for _ in range(6)}
            assert curve_q3.element(raw) == naive_reduce(curve_q3, raw)

    def test_general_curve_reduction(self):
        # y^4 + x^5 + 2*x*y = 0 over GF(7): a=4, b=5
        field = Field(7)
        curve = Curve(field, 4, 5, field.one, {(1, 1): field.element(2)})
        rng = random.Random(3)
        elems = field.elements()
        for _ in range(25):
            raw = {(rng.randrange(6), rng.randrange(10)):
                   elems[rng.randrange(1, 7)] for _ in range(5)}
            assert curve.element(raw) == naive_reduce(curve, raw)


class TestRingArithmetic:
    def test_x_times_x(self, curve_q3):
        x = curve_q3.monomial(1, 0)
        assert x * x == curve_q3.monomial(2, 0)

    def test_y2_times_y(self, curve_q3):
        y = curve_q3.monomial(0, 1)
        y2 = curve_q3.monomial(0, 2)
        assert y2 * y == curve_q3.monomial(4, 0) - y

    def test_y2_times_y2(self, curve_q3):
        y2 = curve_q3.monomial(0, 2)
        expected = curve_q3.monomial(4, 1) - curve_q3.monomial(0, 2)
        assert y2 * y2 == expected

    def test_delta_examples(self, curve_q3):
        assert curve_q3.monomial(1, 0).delta() == 3
        assert curve_q3.monomial(0, 1).delta() == 4
        assert curve_q3.one().delta() == 0
        assert curve_q3.zero().delta() is BOTTOM

    def test_delta_laws(self, curve_q3):
        rng = random.Random(5)
        for _ in range(40):
            f = random_ring_element(curve_q3, rng)
            g = random_ring_element(curve_q3, rng)
            if f.is_zero or g.is_zero:
                continue
            assert (f * g).delta() == f.delta() + g.delta()
            assert (f + g).delta() <= max(f.delta(), g.delta())

    def test_mixed_curves_rejected(self, curve_q3):
        other = Curve.hermitian(2)
        with pytest.raises(ValueError):
            curve_q3.one() + other.one()


class TestSemigroup:
    def test_gaps_of_3_4(self):
        assert Semigroup(3, 4).gaps() == (1, 2, 5)

    def test_phi_16(self):
        assert Semigroup(3, 4).phi(16) == Monomial(4, 1)

    def test_phi_0(self):
        assert Semigroup(3, 4).phi(0) == Monomial(0, 0)

    def test_phi_of_gap_raises(self):
        with pytest.raises(ValueError):
            Semigroup(3, 4).phi(5)

    def test_gaps_below(self):
        assert Semigroup(3, 4).gaps_below(5) == (1, 2)

    def test_bijection_up_to_500(self):
        sg = Semigroup(3, 4)
        for s in range(501):
            if sg.is_nongap(s):
                m = sg.phi(s)
                assert m.j < 3
                assert sg.degree(m) == s

    def test_divides(self):
        sg = Semigroup(3, 4)
        assert sg.divides(3, 9)
        assert sg.quotient(3, 9) == Monomial(2, 0)
        assert not sg.divides(4, 9)  # 9 - 4 = 5 is a gap
        assert sg.divides(7, 7)
        assert sg.quotient(7, 7) == Monomial(0, 0)

    def test_lcm_examples(self):
        sg = Semigroup(3, 4)
        assert sg.lcms(32, 27) == (35, 36)
        assert sg.monomial_lcms(Monomial(8, 2), Monomial(9, 0)) == \
            (Monomial(9, 2), Monomial(12, 0))
        assert sg.lcms(24, 27) == (27,)
        assert sg.lcms(3, 4) == (7, 12)

    def test_lcms_cover_brute_force(self):
        # every common multiple is divisible by a reported lcm, and each
        # reported lcm is itself a common multiple
        for a, b in [(3, 4), (4, 5)]:
            sg = Semigroup(a, b)
            rng = random.Random(a * 100 + b)
            nongaps = sg.nongaps(200)
            for _ in range(80):
                s = rng.choice(nongaps)
                t = rng.choice(nongaps)
                lcms = sg.lcms(s, t)
                bound = s + t + a * b
                for l in lcms:
                    assert sg.divides(s, l) and sg.divides(t, l)
                for c in sg.nongaps(bound):
                    if sg.divides(s, c) and sg.divides(t, c):
                        assert any(sg.divides(l, c) for l in lcms)

    def test_non_multiples_size(self):
        for a, b in [(3, 4), (4, 5)]:
            sg = Semigroup(a, b)
            for s in sg.nongaps(40):
                assert len(sg.non_multiples(s)) == s


class TestFootprint:
    def test_principal(self):
        sg = Semigroup(3, 4)
        assert len(sg.footprint([Monomial(9, 0)])) == 27

    def test_two_generators_rowwise(self):
        sg = Semigroup(3, 4)
        expected = {Monomial(i, 0) for i in range(9)}
        expected |= {Monomial(i, j) for j in (1, 2) for i in range(7)}
        assert sg.footprint([Monomial(9, 0), Monomial(7, 1)]) == expected

    def test_unit_kills_everything(self):
        sg = Semigroup(3, 4)
        assert sg.footprint([Monomial(0, 0)]) == frozenset()

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            Semigroup(3, 4).footprint([])


class TestMonomialText:
    def test_formats(self):
        assert str(Monomial(0, 0)) == "1"
        assert str(Monomial(1, 0)) == "x"
        assert str(Monomial(0, 2)) == "y^2"
        assert str(Monomial(4, 1)) == "x^4*y"
        assert str(Monomial(1, 1)) == "x*y"
