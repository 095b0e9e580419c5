"""Tests for the representation catalog and the closed-form R-matrices."""

from fractions import Fraction

import pytest

from baxterise.core.algebra import check_S_relation, check_T_relation
from baxterise.core.baxterisation import ResolventError, baxterise_sigma
from baxterise.core.catalog import (
    CLASSIFIED,
    CatalogError,
    Family,
    FamilyInstance,
    PoleError,
    build_family,
    closed_form_poles,
    closed_form_R,
    derive_tasep_T,
    parse_family,
    required_params,
)
from baxterise.core.linalg import mat_equal
from baxterise.core.sampling import draw_admissible, draw_params
from baxterise.core.scalar import ScalarError


class TestFamilyInstance:
    """Test parameter validation."""

    def test_parse_family_case_insensitive(self):
        """Test that family names ignore case and whitespace."""
        assert parse_family(" s4 ") is Family.S4
        assert parse_family("tasep_t") is Family.TASEP_T

    def test_unknown_family(self):
        """Test that unknown family names are refused."""
        with pytest.raises(CatalogError) as exc_info:
            parse_family("S9")
        assert "Unknown family" in str(exc_info.value)

    def test_missing_param(self):
        """Test that a missing parameter is named."""
        with pytest.raises(CatalogError) as exc_info:
            FamilyInstance.of("S4", a=1, b=2, c=3)
        assert "Missing parameter" in str(exc_info.value)

    def test_unknown_param(self):
        """Test that an extra parameter is named."""
        with pytest.raises(CatalogError) as exc_info:
            FamilyInstance.of("S7", a=1, b=2, c=3, d=4)
        assert "Unknown parameter" in str(exc_info.value)

    def test_classified_needs_m2(self):
        """Test that 4x4 families need m=2."""
        with pytest.raises(CatalogError):
            FamilyInstance.of("S5", 3, a=1, b=2, c=3, d=4)

    def test_s3_rejects_zero_c(self):
        """Test that S3 needs c != 0."""
        with pytest.raises(CatalogError) as exc_info:
            FamilyInstance.of("S3", a=1, b=2, c=0, d=3)
        assert "c != 0" in str(exc_info.value)

    def test_tasep_param_names(self):
        """Test the TASEP parameter names at m=3."""
        assert required_params(Family.TASEP_S, 3) == ("rho1", "rho2", "mu1_2", "mu1_3", "mu2_3")
        assert required_params(Family.TASEP_T, 2) == ("zeta2", "nu1_2")

    def test_dict_form(self):
        """Test building an instance from its dict form."""
        data = {"family": "s6", "params": {"a": "1/2", "b": 0, "c": "3", "d": "-1"}}
        spec = FamilyInstance.from_dict(data)
        assert spec.family is Family.S6
        assert spec["a"] == Fraction(1, 2)
        assert spec.to_dict() == {
            "family": "S6",
            "m": 2,
            "params": {"a": "1/2", "b": "0", "c": "3", "d": "-1"},
        }

    def test_dict_form_malformed(self):
        """Test that a malformed dict is refused."""
        with pytest.raises(CatalogError):
            FamilyInstance.from_dict({"params": {}})
        with pytest.raises(ScalarError):
            FamilyInstance.from_dict({"family": "S4", "params": {"a": "x"}})


class TestBuildFamily:
    """Test matrix placement of the concrete families."""

    def test_s3_entry(self):
        """Test the derived (2,2) entry of S3."""
        s = build_family(FamilyInstance.of("S3", a=1, b=2, c=4, d=3))
        assert s.mat[1, 1] == 2

    def test_s4_idempotent_placement(self):
        """Test the entries of an S4 idempotent."""
        s = build_family(FamilyInstance.of("S4", a=0, b=1, c=1, d=0))
        nonzero = {(r, c) for r in range(4) for c in range(4) if s.mat[r, c] != 0}
        assert nonzero == {(1, 1), (2, 1)}

    def test_tasep_s_m2(self):
        """Test the entries of TASEP_S at m=2."""
        s = build_family(FamilyInstance.of("TASEP_S", 2, rho1=2, mu1_2=3))
        assert s.mat[1, 1] == 2
        assert s.mat[2, 1] == 3
        assert sum(1 for v in s.mat.flat if v != 0) == 2

    def test_tasep_t_m2(self):
        """Test the entries of TASEP_T at m=2."""
        t = build_family(FamilyInstance.of("TASEP_T", 2, zeta2=4, nu1_2=6))
        assert t.mat[1, 1] == 4
        assert t.mat[2, 1] == 6

    def test_tasep_s_m3_placements(self):
        """Test where TASEP_S places its rates at m=3."""
        params = dict(rho1=1, rho2=2, mu1_2=3, mu1_3=4, mu2_3=5)
        s = build_family(FamilyInstance.of("TASEP_S", 3, **params))
        assert s.m == 3
        # |12>, |13>, |23> sit at 1, 2, 5; their swaps at 3, 6, 7
        assert (s.mat[1, 1], s.mat[2, 2], s.mat[5, 5]) == (1, 1, 2)
        assert (s.mat[3, 1], s.mat[6, 2], s.mat[7, 5]) == (3, 4, 5)

    def test_classified_solve_relation(self, rng):
        """Test that 20 random instances of each classified family solve the S relation."""
        for family in CLASSIFIED:
            for _ in range(20):
                s = build_family(draw_params(rng, family))
                assert check_S_relation(s).passed, family

    @pytest.mark.parametrize("m", [2, 3])
    def test_tasep_solve_relations(self, rng, m):
        """Test that random TASEP instances solve their relations."""
        assert check_S_relation(build_family(draw_params(rng, Family.TASEP_S, m))).passed
        assert check_T_relation(build_family(draw_params(rng, Family.TASEP_T, m))).passed


class TestDeriveTasepT:
    """Test the partner construction rho_i nu_ij = mu_ij zeta_j."""

    def test_example(self):
        """Test the partner of a TASEP_S instance at m=2."""
        s_spec = FamilyInstance.of("TASEP_S", 2, rho1=2, mu1_2=3)
        partner = derive_tasep_T(s_spec, {2: 4})
        assert partner.family is Family.TASEP_T
        assert partner["nu1_2"] == 6

    def test_m3_rates_satisfy_constraint(self):
        """Test that the m=3 partner satisfies rho_i nu_ij = mu_ij zeta_j."""
        s_spec = FamilyInstance.of("TASEP_S", 3, rho1=2, rho2=3, mu1_2=5, mu1_3=7, mu2_3=11)
        partner = derive_tasep_T(s_spec, {2: 13, 3: 17})
        for i, j in [(1, 2), (1, 3), (2, 3)]:
            lhs = s_spec[f"rho{i}"] * partner[f"nu{i}_{j}"]
            assert lhs == s_spec[f"mu{i}_{j}"] * partner[f"zeta{j}"]

    def test_zero_rho(self):
        """Test that a zero rho is refused."""
        s_spec = FamilyInstance.of("TASEP_S", 2, rho1=0, mu1_2=3)
        with pytest.raises(CatalogError):
            derive_tasep_T(s_spec, {2: 4})


class TestClosedForm:
    """Test the explicit R-matrices against the Baxterisation formula."""

    def test_s5_diagonal(self):
        """Test the diagonal of the S5 closed form."""
        spec = FamilyInstance.of("S5", a=3, b=1, c=4, d=5)
        r = closed_form_R(spec, Fraction(1, 2), 2)
        assert [r[k, k] for k in range(4)] == [10, -2, 7, 6]
        assert r[0, 1] == 0

    def test_pole_names_factor(self):
        """Test that a closed-form pole names the vanishing factor."""
        spec = FamilyInstance.of("S5", a=3, b=1, c=2, d=5)
        assert closed_form_poles(spec, Fraction(1, 3)) == "xa-1"
        with pytest.raises(PoleError) as exc_info:
            closed_form_R(spec, Fraction(1, 3), 1)
        assert exc_info.value.factor == "xa-1"

    def test_no_pole(self):
        """Test a point away from the closed-form poles."""
        spec = FamilyInstance.of("S5", a=3, b=1, c=2, d=5)
        assert closed_form_poles(spec, Fraction(1, 7)) is None

    def test_tasep_has_no_closed_form(self):
        """Test that TASEP families have no closed form."""
        spec = FamilyInstance.of("TASEP_S", 2, rho1=1, mu1_2=1)
        with pytest.raises(CatalogError):
            closed_form_R(spec, 1, 2)

    @pytest.mark.parametrize("family", CLASSIFIED)
    def test_matches_baxterisation(self, rng, family):
        """Test that the closed form equals (I - yS)(I - xS)^-1 at 20 admissible draws."""
        for _ in range(20):
            spec = draw_params(rng, family)
            s = build_family(spec)
            _, (closed, engine) = draw_admissible(
                rng,
                lambda p, spec=spec, s=s: (
                    closed_form_R(spec, p.x, p.y),
                    baxterise_sigma(s, p.x, p.y),
                ),
            )
            assert mat_equal(closed, engine), family

    def test_resolvent_pole_matches(self):
        """Test that the resolvent is singular where the closed form has a linear pole."""
        spec = FamilyInstance.of("S4", a=2, b=3, c=5, d=7)
        with pytest.raises(ResolventError):
            baxterise_sigma(build_family(spec), Fraction(1, 2), 1)
