import json

import jsonschema
import pytest

from tangentcone.analysis import (SCHEMA_VERSION, AnalysisReport, analyze, hf_from_lengths,
                                  load_schema)
from tangentcone.semigroup import GeneratorTuple


@pytest.fixture(scope="module")
def schema():
    return load_schema()


@pytest.mark.parametrize("gens", [(9, 11, 34, 35), (2, 3, 4, 5), (49, 63, 65, 78),
                                  (35, 10, 22, 17)])
def test_reports_validate_and_round_trip(gens, schema):
    rep = analyze(gens)
    d = json.loads(rep.to_json())
    jsonschema.validate(d, schema)
    assert d["schema_version"] == SCHEMA_VERSION
    back = AnalysisReport.from_json(rep.to_json())
    assert back == rep


def test_payload_is_deterministic():
    a = analyze((10, 17, 22, 28)).to_json(timings=False)
    b = analyze((10, 17, 22, 28)).to_json(timings=False)
    assert a == b
    assert "timings" not in json.loads(a)


def test_input_order_is_recorded():
    rep = analyze((28, 10, 22, 17))
    assert rep.input == [28, 10, 22, 17]
    assert rep.sorted == [10, 17, 22, 28]
    assert rep.permutation == [3, 0, 2, 1]


def test_hf_agrees_with_factorization_lengths():
    rep = analyze((9, 11, 34, 35), horizon=15)
    assert rep.hf == hf_from_lengths(GeneratorTuple.from_input((9, 11, 34, 35)), 15)


def test_skip_oracle_and_no_hilbert():
    rep = analyze((9, 11, 34, 35), run_oracle=False, hilbert_series=False)
    assert rep.cm["method"] == "closed_form(2b)"
    assert rep.tangent_cone is None and rep.hf == []
