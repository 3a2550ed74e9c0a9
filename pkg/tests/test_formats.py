"""Tests for reading and writing JSON documents."""

import json

import pytest

from liepi.action import trivial_action
from liepi.exceptions import (
    AlgebraMismatch,
    AlgebraValidationError,
    DimensionMismatch,
    IndexOutOfRange,
    MalformedInput,
    ZeroDenominator,
)
from liepi.formats import (
    dump_json,
    emit_action,
    emit_algebra,
    load_json,
    parse_action,
    parse_algebra,
    parse_algebra_file,
    parse_certificate,
)
from liepi.library import bahturin, direct_sum, glue10, heisenberg, nonsplit_sl2, sl2, solvable2

from .example_algebras import ALGEBRA_FIXTURES, JACOBI_BROKEN, load_action, load_algebra


class TestAlgebraDocuments:
    """Test algebra parsing against the builders."""

    @pytest.mark.parametrize("name,builder", [
        ("sl2", sl2),
        ("heisenberg", heisenberg),
        ("solvable2", solvable2),
        ("sl2_plus_sl2", lambda: direct_sum(sl2(), sl2())),
        ("nonsplit6", nonsplit_sl2),
        ("bahturin_m2", lambda: bahturin(2)),
        ("glue10", glue10),
    ])
    def test_fixture_matches_builder(self, name, builder):
        """Shipped JSON and the library agree on names, labels and brackets."""
        assert load_algebra(name) == builder()

    @pytest.mark.parametrize("name", ALGEBRA_FIXTURES)
    def test_emit_reads_back(self, name):
        """emit_algebra produces a document parse_algebra accepts unchanged."""
        algebra = load_algebra(name)
        assert parse_algebra(emit_algebra(algebra)) == algebra

    def test_omitted_pairs_are_zero(self):
        """Only listed pairs carry brackets."""
        algebra = parse_algebra({"name": "abelian", "dim": 2})
        assert algebra.canonical_table() == {}
        assert algebra.labels == ["e0", "e1"]

    def test_integer_coefficients(self):
        """Plain JSON integers are accepted next to "p/q" strings."""
        algebra = parse_algebra({
            "name": "h", "dim": 3,
            "brackets": [{"i": 0, "j": 1, "value": [[2, 1]]}],
        })
        assert algebra == parse_algebra({
            "name": "h", "dim": 3,
            "brackets": [{"i": 0, "j": 1, "value": [[2, "2/2"]]}],
        })

    def test_emit_is_deterministic(self):
        """dump_json sorts keys."""
        text = dump_json(emit_algebra(load_algebra("heisenberg")))
        assert text == dump_json(json.loads(text))
        assert text.index('"basis"') < text.index('"brackets"') < text.index('"dim"')


class TestAlgebraErrors:
    """Test rejection of malformed algebra documents."""

    def test_index_out_of_range(self):
        """Result indices must be basis indices."""
        with pytest.raises(IndexOutOfRange) as exc_info:
            parse_algebra({"name": "x", "dim": 3, "brackets": [{"i": 0, "j": 1, "value": [[5, "1"]]}]})
        assert exc_info.value.context == {"index": 5, "dim": 3}
        assert exc_info.value.exit_code == 3

    def test_zero_denominator(self):
        """A "p/0" literal is refused."""
        with pytest.raises(ZeroDenominator) as exc_info:
            parse_algebra({"name": "x", "dim": 2, "brackets": [{"i": 0, "j": 1, "value": [[0, "1/0"]]}]})
        assert exc_info.value.context["literal"] == "1/0"

    def test_duplicate_pair(self):
        """Each pair may be listed once."""
        entry = {"i": 0, "j": 1, "value": [[0, "1"]]}
        with pytest.raises(MalformedInput, match="listed twice"):
            parse_algebra({"name": "x", "dim": 2, "brackets": [entry, entry]})

    @pytest.mark.parametrize("i,j", [(1, 0), (1, 1)])
    def test_pair_order(self, i, j):
        """Only pairs with i < j may be listed."""
        with pytest.raises(MalformedInput, match="i < j") as exc_info:
            parse_algebra({"name": "x", "dim": 2, "brackets": [{"i": i, "j": j, "value": [[0, "1"]]}]})
        assert exc_info.value.exit_code == 3

    def test_missing_field(self):
        """name and dim are required."""
        with pytest.raises(MalformedInput, match="Missing field 'dim'"):
            parse_algebra({"name": "x"})

    def test_boolean_dim(self):
        """true is not an integer here."""
        with pytest.raises(MalformedInput):
            parse_algebra({"name": "x", "dim": True})

    def test_bad_term(self):
        """Terms are [k, "p/q"] pairs."""
        with pytest.raises(MalformedInput, match="terms"):
            parse_algebra({"name": "x", "dim": 2, "brackets": [{"i": 0, "j": 1, "value": [["1"]]}]})

    def test_bad_literal(self):
        """Decimals are not rational literals."""
        with pytest.raises(MalformedInput, match="Cannot parse"):
            parse_algebra({"name": "x", "dim": 2, "brackets": [{"i": 0, "j": 1, "value": [[0, "0.5"]]}]})

    def test_validation(self):
        """Jacobi violations are reported unless validation is skipped."""
        with pytest.raises(AlgebraValidationError) as exc_info:
            parse_algebra(JACOBI_BROKEN)
        assert exc_info.value.context["violation_count"] >= 1
        assert parse_algebra(JACOBI_BROKEN, validate=False).dim == 3

    def test_invalid_json(self, tmp_path):
        """Syntax errors carry the path."""
        path = tmp_path / "broken.json"
        path.write_text("{\"name\": ", encoding="utf-8")
        with pytest.raises(MalformedInput) as exc_info:
            parse_algebra_file(path)
        assert exc_info.value.context["path"] == str(path)
        assert "Invalid JSON" in exc_info.value.message

    def test_missing_file(self, tmp_path):
        """Unreadable files are input errors."""
        with pytest.raises(MalformedInput, match="Cannot read file"):
            load_json(tmp_path / "absent.json")

    def test_top_level_array(self, tmp_path):
        """Documents are objects."""
        path = tmp_path / "list.json"
        path.write_text("[]", encoding="utf-8")
        with pytest.raises(MalformedInput, match="must be an object"):
            load_json(path)


class TestActionDocuments:
    """Test action parsing."""

    def test_emit_reads_back(self):
        """Generators keep name, kind and matrix."""
        algebra = load_algebra("bahturin_m2")
        action = load_action("phi", algebra)
        again = parse_action(emit_action(action), algebra)
        assert [g.name for g in again.generators] == ["phi"]
        assert again.generators[0].matrix == action.generators[0].matrix
        assert again.dim == action.dim == 2

    def test_empty_generators(self):
        """No generators gives the trivial action."""
        algebra = load_algebra("sl2")
        action = parse_action({"algebra": "sl2", "generators": []}, algebra)
        assert action.dim == trivial_action(algebra).dim == 1

    def test_algebra_mismatch(self):
        """The action names the loaded algebra."""
        algebra = load_algebra("sl2")
        with pytest.raises(AlgebraMismatch) as exc_info:
            parse_action({"algebra": "heisenberg", "generators": []}, algebra)
        assert exc_info.value.context == {"expected": "sl2", "actual": "heisenberg"}

    def test_row_count(self):
        """Matrices are dim x dim."""
        algebra = load_algebra("sl2")
        document = {
            "algebra": "sl2",
            "generators": [{"name": "g", "kind": "derivation", "matrix": [["0", "0", "0"]]}],
        }
        with pytest.raises(DimensionMismatch) as exc_info:
            parse_action(document, algebra)
        assert exc_info.value.context == {"expected": 3, "actual": 1}

    def test_row_length(self):
        """Every row has dim entries."""
        algebra = load_algebra("heisenberg")
        document = {
            "algebra": "heisenberg",
            "generators": [{"name": "g", "kind": "derivation", "matrix": [["0"], ["0"], ["0"]]}],
        }
        with pytest.raises(DimensionMismatch):
            parse_action(document, algebra)


class TestCertificateDocuments:
    """Test certificate parsing."""

    def test_optional_parts(self):
        """T, S and B may be omitted."""
        algebra = load_algebra("heisenberg")
        cert = parse_certificate({"pairs": [{"I": [["0", "0", "1"]]}]}, algebra)
        assert cert.pairs[0].I.dim == 1
        assert cert.pairs[0].J.is_zero()
        assert cert.pairs[0].T is None
        assert cert.S is None
        assert cert.B is None

    def test_vector_length(self):
        """Vectors live in the algebra."""
        algebra = load_algebra("heisenberg")
        with pytest.raises(MalformedInput, match="length 3"):
            parse_certificate({"pairs": [{"I": [["1", "0"]]}]}, algebra)

    def test_pairs_required(self):
        """A certificate lists its pairs."""
        with pytest.raises(MalformedInput, match="pairs"):
            parse_certificate({}, load_algebra("sl2"))

    def test_subspace_shape(self):
        """Subspaces are lists of vectors."""
        with pytest.raises(MalformedInput, match="non-vector"):
            parse_certificate({"pairs": [{"I": ["1"]}]}, load_algebra("sl2"))
