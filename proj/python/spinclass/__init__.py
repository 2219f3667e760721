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

"""Classicality certification for permutation-symmetric spin states.

Documents are plain dicts in the same JSON schemas as the ``spinclass``
command-line tool:

* tensor:  ``{"order": m, "dim": d, "entries": [{"idx": [...], "val": x}, ...]}``
* density: ``{"N": n, "matrix": [[[re, im], ...], ...]}``
* mixture: ``{"N": n, "terms": [{"w": w, "theta": t, "phi": p}, ...]}``

Solver keyword arguments (``grid``, ``starts``, ``max_iter``, ``tol_psd``,
``tol_sos``, ``tau_dec``, ``seed``) mirror the command-line options.
"""

import json

from . import _spinclass as _core

__all__ = [
    "classify",
    "coherent_tensor",
    "decompose",
    "density_to_tensor",
    "evaluate",
    "is_regular_symmetric",
    "min_z_eig",
    "mixture_to_tensor",
    "restricted_min",
    "sos_check",
    "tensor_to_density",
]


def _enc(doc):
    return doc if isinstance(doc, str) else json.dumps(doc)


def density_to_tensor(rho):
    return json.loads(_core.density_to_tensor(_enc(rho)))


def tensor_to_density(tensor):
    return json.loads(_core.tensor_to_density(_enc(tensor)))


def mixture_to_tensor(mixture):
    return json.loads(_core.mixture_to_tensor(_enc(mixture)))


def coherent_tensor(n, theta, phi):
    return json.loads(_core.coherent_tensor(int(n), float(theta), float(phi)))


def is_regular_symmetric(tensor, tol=1e-10):
    return _core.is_regular_symmetric(_enc(tensor), tol)


def evaluate(tensor, x):
    """A . x^{(x)m} for a point ``x`` of length ``dim``."""
    return _core.evaluate(_enc(tensor), [float(v) for v in x])


def classify(tensor, **cfg):
    return json.loads(_core.classify(_enc(tensor), **cfg))


def decompose(tensor, **cfg):
    """Regular decomposition, or None when the search fails."""
    text = _core.decompose(_enc(tensor), **cfg)
    return None if text is None else json.loads(text)


def sos_check(tensor, **cfg):
    return json.loads(_core.sos_check(_enc(tensor), **cfg))


def min_z_eig(tensor, **cfg):
    return json.loads(_core.min_z_eig(_enc(tensor), **cfg))


def restricted_min(tensor, **cfg):
    return json.loads(_core.restricted_min(_enc(tensor), **cfg))
