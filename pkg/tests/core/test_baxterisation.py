"""Tests for the Baxterisation engine and the R-matrix property suite."""

from fractions import Fraction

import pytest

from baxterise.core.baxterisation import (
    ResolventError,
    SpectralPoint,
    a_operator,
    a_operator_product,
    baxterise_sigma,
    baxterise_tau,
    check_a_commutativity,
    check_braided_ybe,
    check_locality,
    check_regularity,
    check_rmatrix_suite,
    check_unitarity,
    hecke_rmatrix,
    product_rfunction,
    product_rmatrix,
    resolvent,
    rmatrix_transform,
    sigma_rmatrix,
    tau_rmatrix,
)
from baxterise.core.catalog import Family, FamilyInstance, PoleError, build_family, derive_tasep_T
from baxterise.core.linalg import (
    LinalgError,
    as_matrix,
    commutator,
    identity,
    is_zero,
    mat_equal,
)
from baxterise.core.sampling import draw_admissible

S4_SAMPLE = FamilyInstance.of("S4", a=1, b=2, c=3, d=4)
POINT = SpectralPoint.of("1/3", -2, "3/5")
OTHER_POINT = SpectralPoint.of(5, "-1/7", "2/9")


@pytest.fixture
def s4():
    return build_family(S4_SAMPLE)


@pytest.fixture
def tasep_pair():
    s = build_family(FamilyInstance.of("TASEP_S", 2, rho1=2, mu1_2=3))
    t = build_family(FamilyInstance.of("TASEP_T", 2, zeta2=4, nu1_2=6))
    return s, t


class TestResolvent:
    """Test (I - tS)^-1 and the two Baxterisations."""

    def test_resolvent_inverts(self, s4):
        """Test that the resolvent inverts I - tS."""
        inv = resolvent(s4, "1/3")
        assert mat_equal((identity(4) - Fraction(1, 3) * s4.mat) @ inv, identity(4))

    def test_singular_resolvent_names_parameter(self, s4):
        """Test that a singular resolvent names its parameter."""
        with pytest.raises(ResolventError) as exc_info:
            resolvent(s4, "1/2", "y")
        assert exc_info.value.name == "y"
        assert exc_info.value.value == Fraction(1, 2)
        assert "y=1/2" in str(exc_info.value)

    def test_sigma_regular(self, s4):
        """Test that R(x, x) = I."""
        assert mat_equal(baxterise_sigma(s4, 3, 3), identity(4))

    def test_sigma_at_zero_y(self, s4):
        """Test that Ř(x, 0) is the resolvent itself."""
        assert mat_equal(baxterise_sigma(s4, "1/3", 0), resolvent(s4, "1/3"))

    def test_tau_swaps_parameters(self, s4):
        """Test that Ř_τ(x, y) = Ř_σ(y, x) for the same matrix."""
        assert mat_equal(baxterise_tau(s4, "1/3", -2), baxterise_sigma(s4, -2, "1/3"))

    def test_spectral_point_dict(self):
        """Test the JSON form of a spectral point."""
        assert POINT.to_dict() == {"x": "1/3", "y": "-2", "z": "3/5"}


class TestPropertySuite:
    """Test YBE, unitarity, regularity and locality."""

    def test_s4_passes_everything(self, s4):
        """Test that S4 passes every R-matrix property."""
        results = check_rmatrix_suite(sigma_rmatrix(s4), 2, [POINT, OTHER_POINT])
        assert set(results) == {"ybe", "unitarity", "regularity", "locality"}
        assert all(report.passed for report in results.values())

    def test_tasep_t_on_tau_side(self, tasep_pair):
        """Test that the tau-side R-matrix of TASEP_T passes the suite."""
        _, t = tasep_pair
        results = check_rmatrix_suite(tau_rmatrix(t), 2, [POINT])
        assert all(report.passed for report in results.values())

    def test_generic_fails_ybe(self, generic_op):
        """Test that a non-solution fails the YBE."""
        r = sigma_rmatrix(generic_op)
        report = check_braided_ybe(r, 2, POINT.x, POINT.y, POINT.z)
        assert not report.passed
        assert report.witness.desc == "braided YBE"

    def test_unitarity_needs_no_relation(self, generic_op):
        """Test that unitarity, regularity and locality hold for any operator."""
        r = sigma_rmatrix(generic_op)
        assert check_unitarity(r, 2, [POINT]).passed
        assert check_regularity(r, 2, [POINT]).passed
        assert check_locality(r, 2, [POINT]).passed

    def test_broken_unitarity_reported(self):
        """Test that a non-unitary R-matrix is reported."""
        def not_unitary(x, y):
            return 2 * identity(4)

        report = check_unitarity(not_unitary, 2, [POINT])
        assert not report.passed
        assert report.witness.residual == 3


class TestAOperator:
    """Test the three-site operator A(x)."""

    def test_factored_form(self, s4, generic_op):
        """Test that A(x) matches its factored form."""
        for op in (s4, generic_op):
            assert mat_equal(a_operator(op, "2/3"), a_operator_product(op, "2/3"))

    def test_commutativity_tracks_ybe(self, s4, generic_op):
        """Test that [A(x), A(y)] vanishes exactly when the YBE holds."""
        assert check_a_commutativity(s4, POINT.x, POINT.y).passed
        assert not check_a_commutativity(generic_op, POINT.x, POINT.y).passed


class TestTransforms:
    """Test R-matrices induced by generator symmetries."""

    @pytest.mark.parametrize("kind", ["transpose-flip", "conjugate"])
    def test_transformed_ybe(self, s4, kind):
        """Test that transformed R-matrices still satisfy the YBE."""
        q = as_matrix([[1, 2], [-1, 3]])
        r = rmatrix_transform(sigma_rmatrix(s4), 2, kind, q)
        assert check_braided_ybe(r, 2, POINT.x, POINT.y, POINT.z).passed

    def test_conjugate_needs_q(self, s4):
        """Test that conjugation needs a matrix."""
        with pytest.raises(ValueError):
            rmatrix_transform(sigma_rmatrix(s4), 2, "conjugate")


class TestHeckeRMatrix:
    """Test the closed form for idempotent braid generators."""

    def test_value(self, idempotent_g):
        """Test the Hecke R-matrix at sample parameters."""
        assert mat_equal(hecke_rmatrix(idempotent_g, 3, 5), identity(4) + idempotent_g.mat)

    def test_matches_baxterisation(self, idempotent_g):
        """Test that the Hecke R-matrix is the Baxterisation of g."""
        assert mat_equal(
            hecke_rmatrix(idempotent_g, "2/3", -4), baxterise_sigma(idempotent_g, "2/3", -4)
        )

    def test_matches_baxterisation_at_random_points(self, rng, idempotent_g):
        """Test the Hecke R-matrix against the Baxterisation at 20 admissible points."""
        for _ in range(20):
            point, (hecke, engine) = draw_admissible(
                rng,
                lambda p: (
                    hecke_rmatrix(idempotent_g, p.x, p.y),
                    baxterise_sigma(idempotent_g, p.x, p.y),
                ),
            )
            assert mat_equal(hecke, engine), point

    def test_pole(self, idempotent_g):
        """Test that z1 = 1 is a pole."""
        with pytest.raises(PoleError) as exc_info:
            hecke_rmatrix(idempotent_g, 1, 2)
        assert exc_info.value.factor == "z1-1"


class TestProductRMatrix:
    """Test the product of an S-side and a commuting T-side Baxterisation."""

    def test_commuting_partner(self, tasep_pair):
        """Test that the derived partner commutes with S."""
        s, t = tasep_pair
        assert is_zero(commutator(s.mat, t.mat))

    def test_violated_constraint(self, tasep_pair):
        """Test that a wrong nu makes S and T not commute."""
        s, _ = tasep_pair
        t = build_family(FamilyInstance.of("TASEP_T", 2, zeta2=4, nu1_2=5))
        assert not is_zero(commutator(s.mat, t.mat))

    def test_violated_constraint_breaks_ybe(self, rng, tasep_pair):
        """Test that rho1 nu1_2 != mu1_2 zeta2 breaks the YBE of the product."""
        # Setup
        s, _ = tasep_pair
        t = build_family(FamilyInstance.of("TASEP_T", 2, zeta2=4, nu1_2=5))
        r = product_rfunction(s, t)

        # Run
        results = [
            draw_admissible(rng, lambda p: check_braided_ybe(r, 2, p.x, p.y, p.z))[1]
            for _ in range(5)
        ]

        # Verify
        assert not all(report.passed for report in results)

    def test_m3_partner_and_broken_partner(self, rng):
        """Test that the derived m=3 partner passes the YBE and a perturbed nu fails it."""
        # Setup
        s_spec = FamilyInstance.of("TASEP_S", 3, rho1=2, rho2=3, mu1_2=5, mu1_3=7, mu2_3=11)
        partner = derive_tasep_T(s_spec, {2: 13, 3: 17})
        broken = FamilyInstance(
            Family.TASEP_T, 3, {**partner.params, "nu1_2": partner["nu1_2"] + 1}
        )
        s = build_family(s_spec)
        good = product_rfunction(s, build_family(partner))
        bad = product_rfunction(s, build_family(broken))

        # Run
        point, report = draw_admissible(rng, lambda p: check_braided_ybe(good, 3, p.x, p.y, p.z))
        failures = [
            draw_admissible(rng, lambda p: check_braided_ybe(bad, 3, p.x, p.y, p.z))[1]
            for _ in range(3)
        ]

        # Verify
        assert report.passed, point
        assert not all(f.passed for f in failures)

    def test_ybe_and_unitarity(self, tasep_pair):
        """Test the YBE and unitarity of the product R-matrix."""
        s, t = tasep_pair
        r = product_rfunction(s, t)
        for p in (POINT, OTHER_POINT):
            assert check_braided_ybe(r, 2, p.x, p.y, p.z).passed
        assert check_unitarity(r, 2, [POINT, OTHER_POINT]).passed

    def test_regular(self, tasep_pair):
        """Test that the product R-matrix is regular."""
        s, t = tasep_pair
        assert mat_equal(product_rmatrix(s, t, "2/7", "2/7"), identity(4))

    def test_dimension_mismatch(self, tasep_pair):
        """Test that S and T of different sizes are refused."""
        s, _ = tasep_pair
        t3 = build_family(
            FamilyInstance.of("TASEP_T", 3, zeta2=1, zeta3=1, nu1_2=1, nu1_3=1, nu2_3=1)
        )
        with pytest.raises(LinalgError):
            product_rmatrix(s, t3, 2, 3)
