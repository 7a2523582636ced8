"""Tests for class numbers, regulators, kappa_K, and the Brauer--Siegel ratio."""

import math

import pytest

from nfzeta.analytic import DomainError, dirichlet_L
from nfzeta.classdata import (
    INGESTED_RTOL,
    ClassData,
    ResidueValue,
    RoundingGapError,
    _kappa_formula,
    brauer_siegel_ratio,
    class_data_discrepancy,
    class_data_imaginary,
    class_data_real,
    class_number_imaginary,
    residue_kappa,
    roots_of_unity_count,
)
from nfzeta.numberfield import (
    Cyclotomic,
    Ingested,
    Monogenic,
    Quadratic,
    UnsupportedKindError,
    field_invariants,
    fundamental_discriminants_in,
)


class TestClassNumberImaginary:
    @pytest.mark.parametrize(
        "D,h",
        [
            (-3, 1),
            (-4, 1),
            (-7, 1),
            (-8, 1),
            (-11, 1),
            (-15, 2),
            (-20, 2),
            (-23, 3),
            (-47, 5),
            (-163, 1),
            (-5460, 16),  # largest |D| with one class per genus territory
        ],
    )
    def test_pinned(self, D, h):
        assert class_number_imaginary(D) == h

    def test_deep_example(self):
        # a specific fundamental discriminant near -10^6; the count is frozen
        # after dual-path agreement with the analytic formula
        assert class_number_imaginary(-1000119) == 924

    def test_domain_errors(self):
        for D in (5, 0, -12, -9, -100):
            with pytest.raises(DomainError):
                class_number_imaginary(D)

    def test_matches_analytic_formula_window(self):
        for D in fundamental_discriminants_in(-600, -1):
            h = class_number_imaginary(D)
            w = 6 if D == -3 else 4 if D == -4 else 2
            ha = w * math.sqrt(-D) * dirichlet_L(1.0, D) / (2 * math.pi)
            assert h == round(ha) and abs(ha - h) < 1e-3, D


class TestClassDataReal:
    @pytest.mark.parametrize(
        "D,h,R",
        [
            (5, 1, 0.4812118250596034474978),
            (8, 1, 0.8813735870195430252326),
            (13, 1, 1.1947632172871093041120),
            (229, 3, 2.7124653051843439746810),
            (376, 1, 15.2710021030311828769300),  # Q(sqrt 94), long unit
        ],
    )
    def test_pinned(self, D, h, R):
        cd = class_data_real(D)
        assert cd.h == h
        assert cd.R == pytest.approx(R, rel=1e-13)
        assert cd.w == 2 and cd.source == "computed"

    def test_domain_errors(self):
        for D in (1, -4, 12 + 1, 4):  # 13 is fundamental; use non-fundamental 4
            if D == 13:
                continue
            with pytest.raises(DomainError):
                class_data_real(D)

    def test_rounding_gap_within_tolerance_window(self):
        # the analytic class number must land within 1e-3 of an integer for
        # every fundamental 0 < D < 10^4 (far stronger than the 0.1 hard gate)
        for D in fundamental_discriminants_in(2, 10**4):
            cd = class_data_real(D)
            gap = abs(math.sqrt(D) * dirichlet_L(1.0, D) / (2 * cd.R) - cd.h)
            assert gap < 1e-3, (D, gap)


class TestRootsOfUnity:
    def test_quadratic_rule(self):
        assert roots_of_unity_count(Quadratic(-3)) == 6
        assert roots_of_unity_count(Quadratic(-1)) == 4
        assert roots_of_unity_count(Quadratic(-2)) == 2
        assert roots_of_unity_count(Quadratic(5)) == 2

    def test_cyclotomic_rule(self):
        assert roots_of_unity_count(Cyclotomic(5)) == 10
        assert roots_of_unity_count(Cyclotomic(8)) == 8
        assert roots_of_unity_count(Cyclotomic(12)) == 12
        assert roots_of_unity_count(Cyclotomic(3)) == 6

    def test_ingested(self):
        rec = Ingested("x", 2, -4, (0, 1), torsion_w=4)
        assert roots_of_unity_count(rec) == 4
        real_cubic = Ingested("y", 3, -23, (1, 1))
        assert roots_of_unity_count(real_cubic) == 2
        cm_no_data = Ingested("z", 4, 125, (0, 2))
        with pytest.raises(UnsupportedKindError):
            roots_of_unity_count(cm_no_data)

    def test_monogenic_unsupported(self):
        with pytest.raises(UnsupportedKindError):
            roots_of_unity_count(Monogenic((1, 0, 1)))


class TestResidueKappa:
    def test_gaussian_pinned(self):
        rv = residue_kappa(field_invariants(Quadratic(-1)), class_data_imaginary(-4))
        assert rv.kappa == pytest.approx(math.pi / 4, rel=1e-15)
        assert rv.components == (0, 1, 1, 1.0, 4, 4)
        assert rv.log_kappa == pytest.approx(math.log(math.pi / 4), rel=1e-15)

    def test_real_pinned(self):
        cd = class_data_real(5)
        rv = residue_kappa(field_invariants(Quadratic(5)), cd)
        assert rv.kappa == pytest.approx(4 * cd.R / (2 * math.sqrt(5)), rel=1e-15)
        assert rv.kappa == pytest.approx(0.4304089409640040388894, rel=1e-12)

    def test_bit_identical_recompute(self):
        rv = residue_kappa(field_invariants(Quadratic(-6)), class_data_imaginary(-24))
        assert _kappa_formula(*rv.components) == rv.kappa  # exact, not approx

    def test_tampered_kappa_rejected(self):
        rv = residue_kappa(field_invariants(Quadratic(-1)), class_data_imaginary(-4))
        with pytest.raises(ValueError):
            ResidueValue(kappa=rv.kappa * (1 + 1e-15), components=rv.components)

    def test_kappa_is_residue_for_quadratics(self):
        # kappa_K = L(1, chi_D) (identity between the residue formula and the
        # character factorization)
        for D in (-3, -4, -20, -163, 5, 8, 229):
            m = D if D % 4 == 1 else D // 4
            F = Quadratic(m)
            cd = class_data_imaginary(D) if D < 0 else class_data_real(D)
            rv = residue_kappa(field_invariants(F), cd)
            assert rv.kappa == pytest.approx(dirichlet_L(1.0, D), rel=1e-10), D


class TestBrauerSiegelRatio:
    def test_gaussian_is_zero(self):
        assert brauer_siegel_ratio(
            field_invariants(Quadratic(-1)), class_data_imaginary(-4)
        ) == 0.0

    def test_real_pinned(self):
        cd = class_data_real(5)
        got = brauer_siegel_ratio(field_invariants(Quadratic(5)), cd)
        want = math.log(cd.R) / (0.5 * math.log(5))
        assert got == want
        assert got == pytest.approx(-0.908948043819521642, rel=1e-12)

    def test_deep_example(self):
        D = -1000119
        cd = class_data_imaginary(D)
        assert cd.h == 924
        got = brauer_siegel_ratio(field_invariants(Quadratic(D)), cd)
        assert got == pytest.approx(math.log(924) / (0.5 * math.log(1000119)), rel=1e-15)
        assert got == pytest.approx(0.98855, abs=5e-5)


class TestIngestedValidation:
    def test_true_data_has_tiny_discrepancy(self):
        inv = field_invariants(Quadratic(-5))  # D = -20, h = 2
        cd = ClassData(h=2, R=1.0, w=2, source="ingested")
        assert class_data_discrepancy(inv, cd) < 1e-10

    def test_corrupted_h_flagged(self):
        inv = field_invariants(Quadratic(-5))
        bad = ClassData(h=3, R=1.0, w=2, source="ingested")
        assert class_data_discrepancy(inv, bad) > INGESTED_RTOL

    def test_higher_degree_unsupported(self):
        inv = field_invariants(Cyclotomic(5))
        cd = ClassData(h=1, R=1.0, w=10, source="ingested")
        with pytest.raises(UnsupportedKindError):
            class_data_discrepancy(inv, cd)


class TestClassDataValidation:
    def test_field_constraints(self):
        with pytest.raises(ValueError):
            ClassData(h=0, R=1.0, w=2)
        with pytest.raises(ValueError):
            ClassData(h=1, R=0.0, w=2)
        with pytest.raises(ValueError):
            ClassData(h=1, R=1.0, w=3)
        with pytest.raises(ValueError):
            ClassData(h=1, R=1.0, w=2, source="guessed")
