# Copyright 2026 The semiart Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the semiart core library."""

import json

from . import _core
from ._core import Ordinal, Poset, PosetError, ResourceBound, check_names

__all__ = [
    "Ordinal",
    "Poset",
    "PosetError",
    "ResourceBound",
    "analyze",
    "check_names",
    "load",
    "poset",
    "simp",
    "verify",
]

OMEGA = Ordinal.omega_pow(1)


def poset(elements, relations=(), polar=()):
    """Build a poset from element names and (lower, upper) pairs."""
    doc = {"elements": list(elements), "relations": [list(r) for r in relations], "polar": list(polar)}
    return Poset.from_json_text(json.dumps(doc))


def load(path):
    with open(path, encoding="utf-8") as f:
        return Poset.from_json_text(f.read())


def analyze(p, max_upper_sets=12):
    return json.loads(_core.analyze_text(p, max_upper_sets))


def verify(p, **config):
    """Run the verification checks; returns (exit_code, list of check records)."""
    only = config.pop("only", ())
    code, text = _core.verify_text(p, only=list(only), **config)
    return code, json.loads(text)


def simp(p, prime=5, budget=1):
    """Reconstructed simple-module poset as DOT, and whether it matches p."""
    iso, dot = _core.simp_dot(p, prime, budget)
    return iso, dot

