import pytest

from trigold.chromatic import chromatic_glue, chromatic_poly, complete_poly
from trigold.errors import InvalidParameter, UnsupportedFamily
from trigold.exactmath import GOLDEN_POINT, IntPoly
from trigold.families import (
    CE12_OCTIC,
    ChromaticForm,
    F_CM,
    F_I,
    FamilySpec,
    LAMBDA_TC,
    PK3,
    PK4,
    WOODALL_CUBIC,
    family_form,
    family_graph,
    family_n,
    family_poly,
    form_expand,
    icosahedron,
)
from trigold.graphs import validate_triangulation

Q = IntPoly((0, 1))


class TestFamilySpec:
    def test_param_ranges(self):
        FamilySpec("R", 1)
        FamilySpec("TC", 2)
        FamilySpec("B", 5)
        FamilySpec("H", 8)
        FamilySpec("CE12")
        for fam, bad in (("R", 0), ("TC", 1), ("I", 0), ("B", 4), ("H", 7), ("CM", 0)):
            with pytest.raises(InvalidParameter):
                FamilySpec(fam, bad)
        with pytest.raises(InvalidParameter):
            FamilySpec("CE12", 3)
        with pytest.raises(InvalidParameter):
            FamilySpec("XX", 1)

    def test_family_n(self):
        assert family_n(FamilySpec("I", 2)) == 21
        assert family_n(FamilySpec("CM", 1)) == 11
        assert family_n(FamilySpec("CE12")) == 12
        assert family_n(FamilySpec("R", 4)) == 6
        assert family_n(FamilySpec("TC", 5)) == 15
        assert family_n(FamilySpec("B", 9)) == 9
        assert family_n(FamilySpec("H", 12)) == 12


class TestFamilyGraphs:
    def test_r2_is_k4(self):
        g, cert = family_graph(FamilySpec("R", 2))
        assert g.n == 4 and g.edge_count == 6
        assert validate_triangulation(g, cert).ok

    def test_tc2_is_octahedron(self):
        g, cert = family_graph(FamilySpec("TC", 2))
        assert (g.n, g.edge_count) == (6, 12)
        assert all(g.degree(v) == 4 for v in range(6))
        assert validate_triangulation(g, cert).ok

    def test_icosahedron_counts(self):
        g, cert = family_graph(FamilySpec("I", 1))
        assert (g.n, g.edge_count) == (12, 30)
        assert all(g.degree(v) == 5 for v in range(12))
        assert validate_triangulation(g, cert).ok

    def test_b_family(self):
        g, cert = family_graph(FamilySpec("B", 7))
        assert (g.n, g.edge_count) == (7, 15)
        assert validate_triangulation(g, cert).ok
        degs = sorted(g.degree(v) for v in range(7))
        assert degs == [4, 4, 4, 4, 4, 5, 5]

    def test_i2_glued(self):
        g, cert = family_graph(FamilySpec("I", 2))
        assert g.n == 21
        assert validate_triangulation(g, cert).ok

    def test_all_family_graphs_validate(self):
        for fam, params in (("R", range(1, 9)), ("TC", range(2, 7)), ("B", range(5, 15))):
            for p in params:
                g, cert = family_graph(FamilySpec(fam, p))
                assert validate_triangulation(g, cert).ok, (fam, p)

    def test_unsupported(self):
        for fam in ("H", "CM", "CE12"):
            with pytest.raises(UnsupportedFamily):
                family_graph(FamilySpec(fam, 8 if fam == "H" else (1 if fam == "CM" else None)))


class TestForms:
    def test_b_form_terms(self):
        form = family_form(FamilySpec("B", 6))
        lams = [t.base for t in form.terms]
        assert lams == [IntPoly((-2, 1)), IntPoly((-3, 1)), IntPoly((-1,))]
        cs = [t.coeff for t in form.terms]
        assert cs == [Q, Q * IntPoly((-1, 1)), Q * IntPoly((1, -3, 1))]
        assert all(t.exp_slope == 1 and t.exp_offset == -2 for t in form.terms)

    def test_h_form_terms(self):
        form = family_form(FamilySpec("H", 8))
        lams = [t.base for t in form.terms]
        assert lams == [IntPoly((-2, 1)), IntPoly((-3, 1)), IntPoly((-1,))]
        c3 = form.terms[2].coeff
        assert c3 == -(Q * IntPoly((-3, 1)) * IntPoly((-5, 1)) * IntPoly((1, -3, 1)))
        c2 = form.terms[1].coeff
        assert c2 == Q * IntPoly((-1, 1)) * WOODALL_CUBIC

    def test_cm_form_single_term(self):
        form = family_form(FamilySpec("CM", 1))
        assert len(form.terms) == 1
        term = form.terms[0]
        assert term.coeff == PK3 and term.base == F_CM
        assert (term.exp_slope, term.exp_offset) == (1, 0)

    def test_ce12_fixed_exponent(self):
        form = family_form(FamilySpec("CE12"))
        (term,) = form.terms
        assert term.coeff == PK3 * IntPoly((-3, 1))
        assert term.base == CE12_OCTIC
        assert (term.exp_slope, term.exp_offset) == (0, 1)

    def test_r_at_1_is_pk3(self):
        assert family_poly(FamilySpec("R", 1)) == PK3

    def test_json_round_trip(self):
        form = family_form(FamilySpec("H", 10))
        assert ChromaticForm.from_json(form.to_json()).terms == form.terms

    def test_negative_exponent_rejected(self):
        form = family_form(FamilySpec("B", 5))
        with pytest.raises(InvalidParameter):
            form_expand(form, 1)


class TestExpansion:
    def test_degree_matches_family_n(self):
        cases = [("R", range(1, 31)), ("TC", range(2, 31)), ("I", range(1, 31)),
                 ("B", range(5, 31)), ("H", range(8, 31)), ("CM", range(1, 31)),
                 ("CE12", [None])]
        for fam, params in cases:
            for p in params:
                spec = FamilySpec(fam, p)
                assert family_poly(spec).degree == family_n(spec), (fam, p)

    def test_engine_cross_checks(self):
        for fam, params in (("R", range(1, 7)), ("TC", range(2, 5)), ("B", range(5, 11))):
            for p in params:
                spec = FamilySpec(fam, p)
                g, _ = family_graph(spec)
                assert chromatic_poly(g) == family_poly(spec), (fam, p)

    def test_icosahedron_cross_check(self):
        spec = FamilySpec("I", 1)
        g, _ = family_graph(spec)
        assert chromatic_poly(g) == family_poly(spec) == PK3 * F_I

    def test_b_even_odd_factors(self):
        for n in range(5, 16):
            p = family_poly(FamilySpec("B", n))
            if n % 2 == 0:
                p.div_exact(PK3)  # no remainder
            else:
                p.div_exact(PK4)

    def test_h_contains_pk4(self):
        for n in range(8, 21):
            family_poly(FamilySpec("H", n)).div_exact(PK4)

    def test_glue_recursion_reproduces_forms(self):
        p_tc2 = family_poly(FamilySpec("TC", 2))
        acc = p_tc2
        for m in range(3, 7):
            acc = chromatic_glue(acc, p_tc2, 3)
            assert acc == family_poly(FamilySpec("TC", m)), m
        p_i1 = family_poly(FamilySpec("I", 1))
        acc = p_i1
        for m in range(2, 4):
            acc = chromatic_glue(acc, p_i1, 3)
            assert acc == family_poly(FamilySpec("I", m)), m

    def test_golden_denominators_divide_two(self):
        for fam, params in (("R", [5]), ("TC", [4]), ("I", [2]), ("B", [9]),
                            ("H", [11]), ("CM", [2]), ("CE12", [None])):
            for p in params:
                v = family_poly(FamilySpec(fam, p)).eval_golden(GOLDEN_POINT)
                assert v.a.denominator in (1, 2) and v.b.denominator in (1, 2), fam
