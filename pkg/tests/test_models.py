"""
Tests for the Pydantic validation layer and canonical serialization.

Verifies:
- Strict mode rejects implicit type coercion
- Extra fields are rejected
- Oracle constraints are enforced at construction
- Canonical JSON is stable
"""

import math

import pytest
from pydantic import ValidationError

from src.errors import OracleSpecError, QubitIndexError
from src.models.requests import EngineKind, RunConfig, SearchRequest, VerifyRequest
from src.models.responses import ErrorResponse, RunReport, TopState, canonical_json


class TestRunConfigValidation:
    """Tests for RunConfig validation."""

    def test_valid_config_accepted(self):
        config = RunConfig(num_qubits=4, solutions=[9, 2], engine=EngineKind.GATE, shots=10, seed=2**64 - 1)
        assert config.oracle.solutions == (2, 9)
        assert config.iterations is None

    def test_strict_mode_rejects_string_number(self):
        """Strict mode should reject '3' where int expected."""
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(num_qubits="3", solutions=[5])
        assert "num_qubits" in str(exc_info.value)

    def test_strict_mode_rejects_float_index(self):
        with pytest.raises(ValidationError):
            RunConfig(num_qubits=3, solutions=[5.0])

    def test_extra_fields_forbidden(self):
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(num_qubits=3, solutions=[5], verbose=True)
        assert "extra" in str(exc_info.value).lower()

    @pytest.mark.parametrize("num_qubits", [0, 31])
    def test_qubit_range(self, num_qubits):
        with pytest.raises(ValidationError):
            RunConfig(num_qubits=num_qubits, solutions=[0])

    def test_seed_range(self):
        with pytest.raises(ValidationError):
            RunConfig(num_qubits=3, solutions=[5], seed=2**64)
        with pytest.raises(ValidationError):
            RunConfig(num_qubits=3, solutions=[5], seed=-1)

    def test_empty_solutions(self):
        with pytest.raises(ValidationError):
            RunConfig(num_qubits=3, solutions=[])

    def test_duplicate_solutions(self):
        """OracleSpecError is a ValueError, so pydantic reports it."""
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(num_qubits=3, solutions=[4, 4])
        assert "duplicate" in str(exc_info.value).lower()

    def test_out_of_range_is_index_error(self):
        with pytest.raises(QubitIndexError):
            RunConfig(num_qubits=2, solutions=[4])

    def test_frozen(self):
        config = RunConfig(num_qubits=3, solutions=[5])
        with pytest.raises(ValidationError):
            config.num_qubits = 4


class TestSearchRequestValidation:

    def test_engine_string_accepted(self):
        request = SearchRequest(num_qubits=3, solutions=[5], engine="gate")
        assert request.engine is EngineKind.GATE
        assert request.to_config().engine is EngineKind.GATE

    def test_invalid_engine_rejected(self):
        with pytest.raises(ValidationError) as exc_info:
            SearchRequest(num_qubits=3, solutions=[5], engine="analog")
        assert "engine" in str(exc_info.value)

    def test_solution_list_limit(self):
        with pytest.raises(ValidationError):
            SearchRequest(num_qubits=10, solutions=list(range(65)))

    def test_bool_not_int(self):
        with pytest.raises(ValidationError):
            SearchRequest(num_qubits=True, solutions=[0])


class TestVerifyRequestValidation:

    def test_defaults(self):
        request = VerifyRequest(num_qubits=4)
        assert (request.trials, request.seed) == (20, 0)

    def test_trials_limit(self):
        with pytest.raises(ValidationError):
            VerifyRequest(num_qubits=4, trials=0)


class TestRunReport:

    def _report(self, distribution: list[float]) -> RunReport:
        return RunReport(
            config=RunConfig(num_qubits=1, solutions=[1]),
            iterations_used=0,
            distribution=distribution,
            top=TopState(index=0, state_bits="0", probability=distribution[0]),
            success_probability=distribution[1],
            expected_success_probability=0.5,
        )

    def test_normalized_distribution(self):
        assert self._report([0.5, 0.5]).top_state == 0

    def test_unnormalized_rejected(self):
        with pytest.raises(ValidationError):
            self._report([0.5, 0.6])

    def test_document_keys(self):
        doc = self._report([0.5, 0.5]).to_document()
        assert set(doc) == {
            "config",
            "iterations_used",
            "distribution",
            "top",
            "success_probability",
            "expected_success_probability",
            "timings_ns",
        }
        assert doc["config"]["engine"] == "fast"


class TestCanonicalJson:

    def test_sorted_keys_and_compact(self):
        assert canonical_json({"b": 1, "a": [True, None]}) == '{"a":[true,null],"b":1}'

    def test_float_precision(self):
        assert canonical_json({"p": 0.1}) == '{"p":0.10000000000000001}'
        assert canonical_json({"p": 1.0}) == '{"p":1}'

    def test_nested_keys_sorted(self):
        assert canonical_json({"z": {"y": 1, "x": 2}}) == '{"z":{"x":2,"y":1}}'

    def test_string_escaping(self):
        assert canonical_json({"s": 'a"\n'}) == '{"s":"a\\"\\n"}'

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            canonical_json({"p": math.nan})


def test_error_response_shape():
    body = ErrorResponse(error="invalid_simulation", detail="bad").model_dump(mode="json")
    assert body["success"] is False
    assert set(body) == {"success", "error", "detail", "timestamp"}


def test_oracle_errors_are_value_errors():
    assert issubclass(OracleSpecError, ValueError)
    assert issubclass(QubitIndexError, IndexError)
