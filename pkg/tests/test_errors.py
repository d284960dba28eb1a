from __future__ import annotations

import pytest

from transference_lab.errors import (
    ContractViolationError,
    FormatError,
    InputError,
    LabError,
    error_payload,
)
from transference_lab.harness import manifest_from_dict
from transference_lab.hypergraphs import UniformHypergraph


def test_input_errors_exit_with_two():
    error = InputError("bad n", payload={"field": "n"})

    assert error.exit_code == 2
    assert isinstance(FormatError("x"), InputError)
    assert ContractViolationError("x").exit_code == 2


def test_exit_code_can_be_overridden():
    assert LabError("unreliable", exit_code=1).exit_code == 1


def test_payload_with_single_field_becomes_field_errors():
    payload = error_payload(InputError("'n' must be positive.", payload={"field": "n"}))

    assert payload == {
        "message": "'n' must be positive.",
        "exit_code": 2,
        "field": "n",
        "field_errors": {"n": ["'n' must be positive."]},
    }


def test_nested_errors_are_flattened():
    error = InputError(
        "Manifest is invalid.",
        payload={"errors": {"family": {"n": ["Missing data."]}, "trials": ["Too small.", None]}},
    )

    payload = error_payload(error)

    assert "errors" not in payload
    assert payload["field_errors"] == {"family.n": ["Missing data."], "trials": ["Too small."]}


def test_blank_message_uses_exit_code_default():
    payload = error_payload(LabError("", exit_code=1))

    assert payload["message"] == "Result flagged unreliable."
    assert "field_errors" not in payload


def test_library_raises_input_errors_with_field():
    with pytest.raises(InputError) as excinfo:
        UniformHypergraph(1, 3, ((0,),))

    assert excinfo.value.exit_code == 2


def test_manifest_errors_reach_field_errors(load_json_fixture):
    document = load_json_fixture("manifest_ap9.json")
    document["trials"] = -1

    with pytest.raises(InputError) as excinfo:
        manifest_from_dict(document)

    assert "trials" in error_payload(excinfo.value)["field_errors"]
