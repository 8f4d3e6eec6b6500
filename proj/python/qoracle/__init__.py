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

"""Phase oracles for integer ranges: builders, simulation, depth sweeps and doc cards."""

import json

from ._qoracle import (
    Circuit,
    QOracleError,
    build,
    card,
    decompose,
    simulate,
    sweep_csv,
    unitary,
)
from . import _qoracle

__all__ = [
    "Circuit",
    "QOracleError",
    "build",
    "card",
    "check_card",
    "decompose",
    "measure_pair",
    "phase_profile",
    "simulate",
    "sweep",
    "sweep_csv",
    "unitary",
    "verify",
]


def phase_profile(circuit, input="uniform"):
    """Magnitude and phase (relative to the first nonzero entry) per basis state."""
    return json.loads(_qoracle.phase_profile_json(circuit, input))


def verify(oracle, *, level="unitary", tol=1e-9, input="", **params):
    """Checks an oracle against its closed-form contract. Returns the report as a dict."""
    return json.loads(_qoracle.verify_json(oracle, level=level, tol=tol, input=input, **params))


def measure_pair(n, n1, n2, basis=""):
    return json.loads(_qoracle.measure_pair_json(n, n1, n2, basis))


def sweep(n_min=3, n_max=8, basis="", threads=0):
    return json.loads(_qoracle.sweep_json(n_min, n_max, basis, threads))


def check_card(card_json, tol=1e-9):
    if not isinstance(card_json, str):
        card_json = json.dumps(card_json)
    return json.loads(_qoracle.check_card_json(card_json, tol))
