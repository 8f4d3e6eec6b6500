# Copyright 2026 The qoracle Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import math

import pytest

import qoracle


def test_range_a_marks_upper_half():
    c = qoracle.build("range-a", qubits=3, n1=4, n2=7)
    profile = qoracle.phase_profile(c)
    assert len(profile["entries"]) == 8
    for e in profile["entries"]:
        assert e["magnitude"] == pytest.approx(1 / math.sqrt(8), abs=1e-10)
        assert e["phase"] == pytest.approx(math.pi if e["state"] >= 4 else 0.0, abs=1e-9)


def test_range_b_matches_a_on_uniform_input():
    a = qoracle.simulate(qoracle.build("range-a", qubits=3, n1=4, n2=7))
    b = qoracle.simulate(qoracle.build("range-b", qubits=3, n1=4, n2=7))
    assert max(abs(x - y) for x, y in zip(a, b)) < 1e-9


def test_adder_on_basis_state():
    out = qoracle.simulate(qoracle.build("add", qubits=3, a=3), "basis:4")
    assert abs(out[7] - 1) < 1e-9


def test_unitary_and_decompose():
    c = qoracle.build("less-than", qubits=3, m=4)
    u = qoracle.unitary(c)
    assert [u[i][i].real for i in range(8)] == pytest.approx([-1] * 4 + [1] * 4)
    d = qoracle.decompose(c)
    kinds = {line.split()[0] for line in d.to_text().splitlines()[1:]}
    assert kinds <= {"X", "SX", "RZ", "CX"}
    assert qoracle.Circuit.from_text(d.to_text()) == d
    assert qoracle.Circuit.from_json(d.to_json()) == d


def test_verify():
    assert qoracle.verify("range-a", qubits=3, n1=4, n2=7)["passed"]
    bad = qoracle.verify("range-b", qubits=3, n1=4, n2=7, level="state", input="basis:0")
    assert not bad["passed"]
    assert bad["output"] == "-1|4>"


def test_depth_and_sweep():
    rec = qoracle.measure_pair(3, 4, 7)
    assert rec["depth_a"] == 4
    result = qoracle.sweep(3, 3)
    assert len(result["records"]) == 15
    assert qoracle.sweep_csv(3, 3).splitlines()[2] == "n,n1,n2,depth_a,depth_b,gates_a,gates_b"


def test_card_round_trip_and_check():
    text = qoracle.card("range-b", qubits=3, n1=4, n2=7)
    card = json.loads(text)
    assert card["preconditions"]["input_state"] == "uniform"
    assert all(c["passed"] for c in qoracle.check_card(text)["checks"])
    card["preconditions"]["input_state"] = "any"
    assert not all(c["passed"] for c in qoracle.check_card(card)["checks"])
    assert "## Black Box" in qoracle.card("range-a", qubits=3, n1=4, n2=7, format="markdown")


def test_errors_raise_value_error():
    with pytest.raises(ValueError):
        qoracle.build("range-a", qubits=3, n1=5, n2=2)
    with pytest.raises(ValueError):
        qoracle.build("grover")


def test_cards_match_published_schema():
    jsonschema = pytest.importorskip("jsonschema")
    import pathlib

    schema_path = pathlib.Path(__file__).resolve().parents[2] / "docs" / "card-schema.json"
    schema = json.loads(schema_path.read_text())
    for oracle, params in [
        ("range-a", dict(n1=4, n2=7)),
        ("range-b", dict(n1=4, n2=7)),
        ("less-than", dict(m=5)),
        ("mcz", dict(participants=[0, 2])),
        ("add", dict(a=3)),
        ("qft", {}),
    ]:
        card = json.loads(qoracle.card(oracle, qubits=3, sweep_n_max=3 if oracle.startswith("range") else 0, **params))
        jsonschema.validate(card, schema)
    card["extra"] = 1
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(card, schema)
