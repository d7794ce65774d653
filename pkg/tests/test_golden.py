import math
from fractions import Fraction

import mpmath as mp
import pytest

from reference_values import ASYMPTOTIC_CONSTANTS, BERAHA_7
from trigold.chromatic import complete_poly
from trigold.errors import (
    AllCoefficientsVanish,
    DegreeMismatch,
    InvalidParameter,
    OutOfRange,
)
from trigold.exactmath import GOLDEN_POINT, TAU, GoldenValue, IntPoly, tau_power
from trigold.families import ChromaticForm, FamilySpec, FormTerm, family_form, family_poly
from trigold.golden import (
    GridSpec,
    asymptotic_constant,
    b_locus_scan,
    beraha,
    cm_ratio_base,
    empirical_w,
    family_asymptotic_constant,
    family_entropy,
    paper_ratio_formula,
    ratio_formula_check,
    tutte_bound,
    tutte_ratio,
)

Q = IntPoly((0, 1))


class TestTutteBound:
    def test_examples(self):
        assert tutte_bound(5) == GoldenValue(1)
        assert tutte_bound(3) == TAU + 1
        assert tutte_bound(6) == TAU - 1
        with pytest.raises(InvalidParameter):
            tutte_bound(2)

    def test_ratio_base_cases(self):
        r3 = tutte_ratio(complete_poly(3), 3)
        assert r3.ratio == GoldenValue(1) and not r3.violation
        r4 = tutte_ratio(complete_poly(4), 4)
        assert r4.ratio == TAU - 1

    def test_ce12_ratio(self):
        p = family_poly(FamilySpec("CE12"))
        rep = tutte_ratio(p, 12)
        assert rep.ratio == GoldenValue(101, -45)
        assert abs(rep.ratio_float - 0.376941) < 1e-6

    def test_ratio_identity(self):
        p = family_poly(FamilySpec("B", 9))
        rep = tutte_ratio(p, 9)
        assert rep.ratio == abs(rep.value) * tau_power(9 - 5)
        assert rep.bound == tau_power(5 - 9)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            tutte_ratio(complete_poly(3), 4)


class TestRatioFormulas:
    @pytest.mark.parametrize(
        "family,params",
        [
            ("R", range(1, 11)),
            ("TC", range(2, 9)),
            ("I", range(1, 6)),
            ("B", range(5, 16)),
            ("H", range(8, 16)),
            ("CM", range(1, 6)),
            ("CE12", [None]),
        ],
    )
    def test_exact_agreement(self, family, params):
        for check in ratio_formula_check(family, list(params)):
            assert check.equal, (family, check.param)

    def test_b_alternation_around_limit(self):
        # r(B_n) - (tau-1) alternates: + for even n, - for odd n
        for n in range(6, 41):
            r = paper_ratio_formula("B", n)
            s = (r - (TAU - 1)).sign()
            assert s == (1 if n % 2 == 0 else -1), n

    def test_h_limit_geometric_approach(self):
        # |r(H_n) - (7-3sqrt5)/2| shrinks by |1-tau| each step, exactly
        limit = GoldenValue(Fraction(7, 2), Fraction(-3, 2))
        prev = None
        for n in range(9, 41):
            gap = abs(paper_ratio_formula("H", n) - limit)
            if prev is not None:
                assert gap == prev * abs(1 - TAU)
            prev = gap

    def test_r_m4(self):
        assert paper_ratio_formula("R", 4) == (TAU - 1) ** 3


class TestAsymptotics:
    def test_family_values(self):
        for fam, expect in ASYMPTOTIC_CONSTANTS.items():
            rep = family_asymptotic_constant(fam)
            assert abs(rep.a - expect) < 1e-5, fam

    def test_r_exact(self):
        rep = family_asymptotic_constant("R")
        assert rep.a_exact == GoldenValue(Fraction(-1, 2), Fraction(1, 2))

    def test_tc_against_closed_form(self):
        rep = family_asymptotic_constant("TC")
        with mp.workprec(80):
            want = mp.cbrt(3 - mp.sqrt(5))
        assert abs(rep.a - float(want)) < 1e-12

    def test_b_dominance_excludes_vanishing_coefficient(self):
        rep = family_asymptotic_constant("B")
        assert rep.dominant_index == 1  # lambda = q-2 wins once c_3 drops out
        assert rep.a_exact == GoldenValue(1)
        assert rep.lambda_dom_at_golden == TAU - 1

    def test_h_is_one(self):
        rep = family_asymptotic_constant("H")
        assert rep.a_exact == GoldenValue(1)

    def test_all_coefficients_vanish(self):
        # q^2 - 3q + 1 vanishes exactly at tau+1
        form = ChromaticForm((FormTerm(IntPoly((1, -3, 1)), Q, 1, 0),), "m")
        with pytest.raises(AllCoefficientsVanish):
            asymptotic_constant(form, 1)

    def test_cm_reconciliation(self):
        base = cm_ratio_base()
        assert base == GoldenValue(Fraction(115, 2), Fraction(-51, 2))
        rep = family_asymptotic_constant("CM")
        assert abs(rep.a - float(base) ** (1 / 8)) < 1e-12
        assert abs(rep.a - 0.9124000389) < 1e-9
        # the other published candidate is (101-45sqrt5)^(1/8) = 0.885185...,
        # which the exact computation rules out
        assert abs(rep.a - 0.885185) > 1e-2


class TestBeraha:
    def test_small_cases(self):
        assert beraha(2).value == 0.0
        assert beraha(2).exact == GoldenValue(0)
        assert beraha(3).exact == GoldenValue(1)
        assert beraha(4).exact == GoldenValue(2)
        assert beraha(6).exact == GoldenValue(3)

    def test_golden_cases(self):
        b5 = beraha(5)
        assert b5.exact == GOLDEN_POINT
        assert abs(b5.value - 2.6180339887) < 1e-10
        b10 = beraha(10)
        assert b10.exact == GoldenValue(Fraction(5, 2), Fraction(1, 2))

    def test_q7(self):
        b = beraha(7)
        assert b.exact is None
        assert abs(b.value - BERAHA_7) < 1e-12

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            beraha(1)


class TestLocusScan:
    def make_scan(self, res=64):
        return b_locus_scan(GridSpec(Fraction(1), Fraction(4), Fraction(-2), Fraction(2), res))

    def test_vertical_line_marked(self):
        scan = self.make_scan()
        pts = {(p.x, p.y): p.pair for p in scan.points}
        assert pts.get((2.5, 2.0)) == (1, 2)
        assert pts.get((2.5, -1.5)) == (1, 2)

    def test_region_interior_not_marked(self):
        scan = self.make_scan()
        assert all(not (p.x == 4.0 and p.y == 0.0) for p in scan.points)
        # q = 2.5 on the real axis lies inside region R_3, not on the locus
        assert all(not (p.x == 2.5 and p.y == 0.0) for p in scan.points)

    def test_qc_detected_at_three(self):
        scan = self.make_scan()
        assert scan.q_c == 3.0

    def test_triple_points(self):
        scan = self.make_scan()
        assert len(scan.triple_points) == 2
        cell = 1 / 64
        for cx, cy in scan.triple_points:
            assert abs(cx - 2.5) <= 2 * cell
            assert abs(abs(cy) - math.sqrt(3) / 2) <= 2 * cell

    def test_resolution_floor(self):
        with pytest.raises(InvalidParameter):
            GridSpec(Fraction(1), Fraction(4), Fraction(-2), Fraction(2), 8)


class TestEntropy:
    def test_icosahedron_at_four(self):
        rep = family_entropy("I", 4)
        assert abs(rep.w - 10 ** (1 / 9)) < 1e-12
        assert abs(rep.w - 1.29155) < 1e-5
        assert rep.s0 > 0 and rep.limit_order == "both-equal"

    def test_r_at_four(self):
        rep = family_entropy("R", 4)
        assert rep.w == 1.0 and rep.s0 == 0.0

    def test_tc_crosses_one_at_three(self):
        assert family_entropy("TC", 3).dominant_modulus == GoldenValue(1)
        assert family_entropy("TC", Fraction(29, 10)).w < 1.0
        assert family_entropy("TC", Fraction(31, 10)).w > 1.0

    def test_bh_is_q_minus_two(self):
        for fam in ("B", "H"):
            rep = family_entropy(fam, 4)
            assert abs(rep.w - 2.0) < 1e-14
            assert rep.limit_order == "both-equal"

    def test_b_noncommutativity_at_golden(self):
        nq = family_entropy("B", GOLDEN_POINT, order="nq")
        qn = family_entropy("B", GOLDEN_POINT, order="qn")
        assert qn.w == 1.0  # dominant lambda_3 = -1 without the q-first rule
        assert nq.dominant_modulus == TAU - 1
        assert abs(nq.w - float(TAU - 1)) < 1e-14
        assert nq.limit_order == "nq" and qn.limit_order == "qn"
        assert not nq.in_formula_range

    def test_out_of_range_when_w_vanishes(self):
        with pytest.raises(OutOfRange):
            family_entropy("R", 3)  # q-3 = 0

    def test_validation(self):
        with pytest.raises(InvalidParameter):
            family_entropy("CE12", 4)
        with pytest.raises(InvalidParameter):
            family_entropy("B", 4, order="sideways")


class TestEmpiricalW:
    def test_r_family(self):
        rep = empirical_w("R", 5, list(range(10, 51, 10)))
        assert rep.monotone_tail
        assert abs(rep.limit_estimate - 2.0) < 1e-12

    def test_tc_family(self):
        rep = empirical_w("TC", 4, [10, 20, 30])
        assert abs(rep.limit_estimate - 4 ** (1 / 3)) < 1e-12

    def test_b_family_rational(self):
        rep = empirical_w("B", 4, list(range(10, 101, 10)))
        assert abs(rep.limit_estimate - 2.0) < 1e-9

    def test_b_family_golden_noncommutativity(self):
        rep = empirical_w("B", GOLDEN_POINT, list(range(6, 201)))
        target = float(TAU - 1)
        assert abs(rep.limit_estimate - target) < 1e-12
        assert abs(rep.w_values[-1] - target) < 1e-2
        assert rep.monotone_tail
        # the tail is nowhere near the other-order limit 1
        assert all(w < 0.7 for w in rep.w_values[20:])

    def test_asymptotic_constant_matches_ratio_tail(self):
        # |a - r^(1/n)| shrinks from m=20 to m=40 for every graph family
        for fam, alpha_params in (("R", (20, 40)), ("TC", (20, 40)), ("I", (20, 40)), ("B", (20, 40))):
            a = family_asymptotic_constant(fam).a
            gaps = []
            for m in alpha_params:
                spec = FamilySpec(fam, m)
                from trigold.families import family_n

                r = abs(paper_ratio_formula(fam, m))
                n = family_n(spec)
                with mp.workprec(400):
                    rn = mp.root(r.to_mpf(400).value, n)
                gaps.append(abs(float(rn) - a))
            assert gaps[1] < gaps[0], fam
