"""Tests for input validation."""

import json
from fractions import Fraction

import pytest

from baxterise.core.catalog import Family
from baxterise.utils.validators import (
    ValidationError,
    build_instance,
    load_matrix_file,
    load_spec_file,
    parse_checks,
    parse_families,
    parse_params,
    validate_family,
    validate_local_dimension,
    validate_log_level,
    validate_positive,
    validate_scalar,
    validate_scan_bounds,
)


class TestValidateFamily:
    """Test family name validation."""

    @pytest.mark.parametrize("name", ["S1", "s7", " TASEP_S ", "tasep_t"])
    def test_valid(self, name):
        """Test that family names are normalized."""
        assert isinstance(validate_family(name), Family)

    def test_invalid(self):
        """Test that unknown families are refused with the known names."""
        with pytest.raises(ValidationError) as exc_info:
            validate_family("S8")
        assert "❌ Unknown family: 'S8'" in str(exc_info.value)
        assert "Available families: S1" in str(exc_info.value)


class TestParseParams:
    """Test name=value parsing."""

    def test_valid(self):
        """Test parsing name=value pairs into fractions."""
        assert parse_params("a=1, b=2/3,c=-4") == {
            "a": Fraction(1),
            "b": Fraction(2, 3),
            "c": Fraction(-4),
        }

    @pytest.mark.parametrize("text", [None, "", "   "])
    def test_empty(self, text):
        """Test that empty input gives no parameters."""
        assert parse_params(text) == {}

    @pytest.mark.parametrize("text", ["a", "=1", "a=1,b"])
    def test_malformed(self, text):
        """Test that pairs without '=' are refused."""
        with pytest.raises(ValidationError) as exc_info:
            parse_params(text)
        assert "Invalid parameter" in str(exc_info.value)

    def test_duplicate(self):
        """Test that repeated names are refused."""
        with pytest.raises(ValidationError) as exc_info:
            parse_params("a=1,a=2")
        assert "given more than once" in str(exc_info.value)

    def test_bad_value(self):
        """Test that non-rational values are refused."""
        with pytest.raises(ValidationError) as exc_info:
            parse_params("a=1/0")
        assert "Invalid value for parameter 'a'" in str(exc_info.value)

    def test_scalar(self):
        """Test that scalars are reduced."""
        assert validate_scalar("-3/9", "--x") == Fraction(-1, 3)


class TestParseLists:
    """Test check and family lists."""

    def test_checks_default(self):
        """Test the default check list."""
        assert parse_checks(None) == ["relation", "ybe", "unitarity", "regularity", "locality"]

    def test_checks_order_and_duplicates(self):
        """Test that checks keep their order without duplicates."""
        assert parse_checks("YBE, relation,ybe") == ["ybe", "relation"]

    def test_checks_unknown(self):
        """Test that unknown checks are refused."""
        with pytest.raises(ValidationError) as exc_info:
            parse_checks("ybe,speed")
        assert "Unknown check: 'speed'" in str(exc_info.value)

    def test_checks_restricted(self):
        """Test that checks outside the allowed set are refused."""
        with pytest.raises(ValidationError):
            parse_checks("hecke", allowed=["ybe"])

    def test_families(self):
        """Test that family lists are normalized and deduplicated."""
        assert parse_families("s4,S4,tasep_t,") == [Family.S4, Family.TASEP_T]

    def test_families_empty(self):
        """Test that an empty family list is refused."""
        with pytest.raises(ValidationError):
            parse_families(",")


class TestBounds:
    """Test numeric guards."""

    def test_positive(self):
        """Test the positive integer guard."""
        assert validate_positive(1, "--trials") == 1
        with pytest.raises(ValidationError):
            validate_positive(0, "--trials")

    @pytest.mark.parametrize("max_m,max_n", [(2, 2), (3, 4)])
    def test_scan_bounds_ok(self, max_m, max_n):
        """Test scan bounds inside the limits."""
        assert validate_scan_bounds(max_m, max_n) == (max_m, max_n)

    @pytest.mark.parametrize(
        "max_m,max_n,flag", [(1, 3, "--max-m"), (4, 3, "--max-m"), (3, 5, "--max-n")]
    )
    def test_scan_bounds_rejected(self, max_m, max_n, flag):
        """Test that scan bounds outside the limits name the flag."""
        with pytest.raises(ValidationError) as exc_info:
            validate_scan_bounds(max_m, max_n)
        assert flag in str(exc_info.value)

    @pytest.mark.parametrize("m", [2, 3])
    def test_local_dimension_ok(self, m):
        """Test that m=2 and m=3 are accepted."""
        assert validate_local_dimension(m) == m

    @pytest.mark.parametrize("m", [1, 4, 9])
    def test_local_dimension_rejected(self, m):
        """Test that local dimensions outside 2..3 are refused with the matrix size."""
        with pytest.raises(ValidationError) as exc_info:
            validate_local_dimension(m)
        assert f"got m={m}" in str(exc_info.value)
        assert f"{m**3}x{m**3}" in str(exc_info.value)

    def test_log_level(self):
        """Test log level normalization."""
        assert validate_log_level(" info ") == "INFO"
        with pytest.raises(ValidationError):
            validate_log_level("TRACE")


class TestFiles:
    """Test --spec and --matrix files."""

    def test_spec_file(self, tmp_path):
        """Test loading an instance from a spec file."""
        path = tmp_path / "spec.json"
        params = {"rho1": "1", "rho2": "2", "mu1_2": "3", "mu1_3": "4", "mu2_3": "5/2"}
        path.write_text(json.dumps({"family": "TASEP_S", "m": 3, "params": params}))

        spec = load_spec_file(path)

        assert spec.family is Family.TASEP_S
        assert spec["mu2_3"] == Fraction(5, 2)

    def test_spec_file_missing(self, tmp_path):
        """Test that a missing spec file is refused."""
        with pytest.raises(ValidationError) as exc_info:
            load_spec_file(tmp_path / "missing.json")
        assert "File not found" in str(exc_info.value)

    def test_spec_file_invalid_json(self, tmp_path):
        """Test that malformed JSON is refused."""
        path = tmp_path / "spec.json"
        path.write_text("{not json")
        with pytest.raises(ValidationError) as exc_info:
            load_spec_file(path)
        assert "Invalid JSON" in str(exc_info.value)

    def test_spec_file_not_object(self, tmp_path):
        """Test that a JSON array is refused."""
        path = tmp_path / "spec.json"
        path.write_text("[1, 2]")
        with pytest.raises(ValidationError):
            load_spec_file(path)

    def test_spec_file_bad_instance(self, tmp_path):
        """Test that catalog errors surface as validation errors."""
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"family": "S4", "params": {"a": "1"}}))
        with pytest.raises(ValidationError) as exc_info:
            load_spec_file(path)
        assert "Missing parameter" in str(exc_info.value)

    def test_matrix_file(self, tmp_path):
        """Test loading a two-site operator."""
        path = tmp_path / "op.json"
        entries = [["1" if r == c else "0" for c in range(9)] for r in range(9)]
        path.write_text(json.dumps({"dim": 9, "entries": entries}))

        op = load_matrix_file(path)

        assert op.m == 3

    @pytest.mark.parametrize(
        "payload",
        [
            {"dim": 2, "entries": [["1", "0"], ["0", "1"]]},
            {"dim": 4, "entries": [["1"] * 4] * 3},
            {"entries": [["1"]]},
            ["not", "an", "object"],
        ],
    )
    def test_matrix_file_invalid(self, tmp_path, payload):
        """Test that malformed matrix files are refused."""
        path = tmp_path / "op.json"
        path.write_text(json.dumps(payload))
        with pytest.raises(ValidationError) as exc_info:
            load_matrix_file(path)
        assert "Invalid matrix" in str(exc_info.value)


class TestBuildInstance:
    """Test --family/--params/--spec resolution."""

    def test_from_flags(self):
        """Test building an instance from --family and --params."""
        spec = build_instance("s7", "a=1,b=2,c=3", 2, None)
        assert spec.family is Family.S7

    def test_neither(self):
        """Test that a missing family is refused."""
        with pytest.raises(ValidationError) as exc_info:
            build_instance(None, None, 2, None)
        assert "No representation given" in str(exc_info.value)

    def test_both(self, tmp_path):
        """Test that --spec and --family together are refused."""
        with pytest.raises(ValidationError):
            build_instance("S4", None, 2, tmp_path / "spec.json")

    def test_wrong_m(self):
        """Test that a 4x4 family at m=3 is refused."""
        with pytest.raises(ValidationError) as exc_info:
            build_instance("S4", "a=1,b=2,c=3,d=4", 3, None)
        assert "Invalid parameters for S4" in str(exc_info.value)
