import mpmath as mp
import pytest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from trigold.errors import DivideByZero, DivisionNotExact
from trigold.exactmath import (
    GOLDEN_POINT,
    TAU,
    FloatApprox,
    GoldenValue,
    IntPoly,
    falling_factorial_poly,
    golden_sign,
    golden_to_float,
    poly_eval_golden,
    tau_power,
)

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=40
)
goldens = st.builds(GoldenValue, rationals, rationals)


class TestGoldenValue:
    def test_tau_defining_identity(self):
        assert TAU * TAU == TAU + 1
        assert GoldenValue(1) / TAU == TAU - 1

    def test_golden_point(self):
        assert GOLDEN_POINT == GoldenValue(Fraction(3, 2), Fraction(1, 2))
        assert GOLDEN_POINT == TAU ** 2

    def test_norm_is_conj_product(self):
        x = GoldenValue(3, 1)
        assert x * x.conj() == GoldenValue(4)
        assert x.norm() == 4

    def test_abs_is_sign_flip(self):
        assert abs(TAU - 2) == 2 - TAU
        assert abs(TAU - 2) == GoldenValue(Fraction(3, 2), Fraction(-1, 2))

    def test_sign_examples(self):
        assert GoldenValue(-11, 5).sign() == 1  # 121 < 125
        assert (TAU - 2).sign() == -1
        assert GoldenValue(0, 0).sign() == 0
        assert GoldenValue(11, -5).sign() == -1
        assert golden_sign(GoldenValue(0, -3)) == -1

    def test_division(self):
        x = GoldenValue(Fraction(2, 3), Fraction(-7, 5))
        y = GoldenValue(Fraction(1, 2), 4)
        assert (x / y) * y == x
        with pytest.raises(DivideByZero):
            x / GoldenValue(0)

    def test_tau_power_examples(self):
        assert tau_power(0) == GoldenValue(1)
        assert tau_power(-1) == GoldenValue(Fraction(-1, 2), Fraction(1, 2))
        assert tau_power(-1) == TAU - 1
        assert tau_power(2) == GoldenValue(Fraction(3, 2), Fraction(1, 2))

    @given(st.integers(-64, 64), st.integers(-64, 64))
    def test_tau_power_additivity(self, j, k):
        assert tau_power(j) * tau_power(k) == tau_power(j + k)

    @given(goldens, goldens, goldens)
    @settings(max_examples=60)
    def test_field_axioms(self, x, y, z):
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z

    @given(goldens)
    def test_sign_consistent_with_float(self, x):
        approx = golden_to_float(x, 128)
        if not x.is_zero():
            assert golden_sign(x) == (1 if approx.value > 0 else -1)

    def test_to_float_examples(self):
        v = golden_to_float(TAU - 1, 64)
        assert abs(float(v.value) - 0.6180339887) < 1e-9
        one = golden_to_float(GoldenValue(1), 53)
        assert float(one.value) == 1.0
        h = golden_to_float(GoldenValue(Fraction(7, 2), Fraction(-3, 2)), 64)
        assert abs(float(h.value) - 0.145898) < 1e-6

    def test_to_float_bound_honored(self):
        # severe cancellation: coordinates are huge, the value is ~1e-32
        x = (TAU - 1) ** 153
        approx = x.to_mpf(80)
        ref = x.to_mpf(300).value
        assert abs(approx.value - ref) <= approx.rel_bound * abs(ref)
        assert isinstance(approx, FloatApprox)

    def test_ordering(self):
        assert TAU - 2 < 0 < TAU - 1 < 1 < TAU < 2
        assert GoldenValue(-11, 5) > 0

    def test_json_round_trip(self):
        x = GoldenValue(Fraction(-3, 2), Fraction(7, 4))
        assert GoldenValue.from_json(x.to_json()) == x
        assert x.to_json() == {"a": "-3/2", "b": "7/4"}


PK3 = IntPoly((0, 2, -3, 1))  # q(q-1)(q-2)


class TestIntPoly:
    def test_mul_example(self):
        assert IntPoly((-1, 1)) * IntPoly((-2, 1)) == IntPoly((2, -3, 1))

    def test_div_exact(self):
        assert PK3.div_exact(IntPoly((0, 1))) == IntPoly((2, -3, 1))
        with pytest.raises(DivisionNotExact):
            IntPoly((2, -3, 1)).div_exact(IntPoly((-3, 1)))  # remainder 2
        with pytest.raises(DivideByZero):
            PK3.div_exact(IntPoly())

    def test_div_exact_rejects_rational_quotient(self):
        with pytest.raises(DivisionNotExact):
            IntPoly((1, 1)).div_exact(IntPoly((2,)))

    def test_eval_golden_examples(self):
        assert poly_eval_golden(PK3, GOLDEN_POINT) == GOLDEN_POINT
        pk4 = PK3 * IntPoly((-3, 1))
        assert poly_eval_golden(pk4, GOLDEN_POINT) == GoldenValue(-1)
        lam_tc = IntPoly((-32, 29, -9, 1))
        assert poly_eval_golden(lam_tc, GOLDEN_POINT) == GoldenValue(-11, 5)

    @given(
        st.lists(st.integers(-100, 100), max_size=8),
        st.integers(-20, 20),
    )
    def test_eval_golden_matches_integer_eval(self, coeffs, x):
        p = IntPoly(coeffs)
        assert p.eval_golden(GoldenValue(x)) == GoldenValue(p(x))

    def test_degree_and_normalization(self):
        assert IntPoly((1, 2, 0, 0)).degree == 1
        assert IntPoly().degree == -1
        assert IntPoly((0,)).is_zero()

    def test_pow(self):
        assert IntPoly((-1, 1)) ** 3 == IntPoly((-1, 3, -3, 1))
        assert IntPoly((5, 2)) ** 0 == IntPoly((1,))

    def test_derivative(self):
        assert PK3.derivative() == IntPoly((2, -6, 3))

    def test_sign_at(self):
        p = IntPoly((-32, 29, -9, 1))
        assert p.sign_at(Fraction(2)) == -1
        assert p.sign_at(Fraction(3)) == 1
        assert PK3.sign_at(Fraction(1)) == 0
        assert p.sign_at_neg_inf() == -1
        assert p.sign_at_pos_inf() == 1

    def test_falling_factorial(self):
        assert falling_factorial_poly(3) == PK3
        assert falling_factorial_poly(0) == IntPoly((1,))

    def test_json_round_trip(self):
        p = IntPoly((0, -40240, 36408, 1))
        assert IntPoly.from_json(p.to_json()) == p
        assert p.to_json() == {"coeffs": ["0", "-40240", "36408", "1"]}

    @given(st.lists(st.integers(-30, 30), max_size=6), st.lists(st.integers(-30, 30), min_size=1, max_size=6))
    @settings(max_examples=60)
    def test_mul_div_round_trip(self, a, b):
        pa, pb = IntPoly(a), IntPoly(b)
        if pb.is_zero():
            return
        assert (pa * pb).div_exact(pb) == pa
