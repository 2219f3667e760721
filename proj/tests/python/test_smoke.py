# Copyright 2026 The spinclass Authors
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

import math

import pytest

import spinclass


def bell_like():
    # (|0,0> + |1,1>)/sqrt2 in the Dicke basis of two spins.
    m = [[[0.0, 0.0] for _ in range(3)] for _ in range(3)]
    for r in (0, 2):
        for c in (0, 2):
            m[r][c] = [0.5, 0.0]
    return {"N": 2, "matrix": m}


def test_coherent_tensor_is_rank_one():
    theta, phi = 0.7, 1.9
    t = spinclass.coherent_tensor(2, theta, phi)
    n = [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    v = [1.0] + n
    vals = {tuple(e["idx"]): e["val"] for e in t["entries"]}
    for i in range(4):
        for j in range(i, 4):
            assert vals.get((i, j), 0.0) == pytest.approx(v[i] * v[j], abs=1e-12)


def test_density_round_trip():
    rho = {"N": 1, "matrix": [[[0, 0], [0, 0]], [[0, 0], [1, 0]]]}
    t = spinclass.density_to_tensor(rho)
    assert spinclass.is_regular_symmetric(t)
    back = spinclass.tensor_to_density(t)
    for r in range(2):
        for c in range(2):
            assert back["matrix"][r][c][0] == pytest.approx(rho["matrix"][r][c][0], abs=1e-12)
            assert back["matrix"][r][c][1] == pytest.approx(0.0, abs=1e-12)


def test_classical_mixture_is_classical():
    mix = {"N": 2, "terms": [{"w": 0.6, "theta": 0.4, "phi": 0.1},
                             {"w": 0.4, "theta": 2.2, "phi": 3.0}]}
    verdict = spinclass.classify(spinclass.mixture_to_tensor(mix), seed=3)
    assert verdict["status"] == "Classical"
    assert verdict["certificate"]["residual"] <= 1e-6


def test_entangled_state_is_refuted():
    verdict = spinclass.classify(spinclass.density_to_tensor(bell_like()))
    assert verdict["status"] == "NotClassical"
    assert verdict["witness"]["value"] == pytest.approx(-1.0, abs=1e-6)


def test_sos_and_sphere_minimum_on_coherent_state():
    t = spinclass.coherent_tensor(4, 1.1, 5.9)
    assert spinclass.sos_check(t)["status"] == "Certified"
    assert spinclass.restricted_min(t)["value"] >= -1e-9
    assert spinclass.decompose(t) is not None


def test_evaluate_matches_definition():
    t = spinclass.coherent_tensor(2, 0.0, 0.0)
    assert spinclass.evaluate(t, [1.0, 0.0, 0.0, 1.0]) == pytest.approx(4.0)


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        spinclass.classify({"order": 2, "dim": 4})
    with pytest.raises(ValueError):
        spinclass.classify("{not json")
    with pytest.raises(ValueError):
        spinclass.evaluate(spinclass.coherent_tensor(1, 0.0, 0.0), [1.0])
