# Copyright 2026 The szx Authors
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

"""Scalable ZX semantics, diagonal gate compilation and spider-nest certificates.

Structured arguments accept either JSON text or plain Python values; rationals
may be given as ``fractions.Fraction``, ``int`` or ``"p/q"`` strings and come
back as ``Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    DimensionError,
    DomainError,
    Error,
    NotInvertibleError,
    ParseError,
    SizeLimitError,
    TypeMismatchError,
    rule_ids,
    suite_names,
)

__all__ = [
    "DimensionError",
    "DomainError",
    "Error",
    "NotInvertibleError",
    "ParseError",
    "SizeLimitError",
    "TypeMismatchError",
    "closed_form_S",
    "cnot_synthesize",
    "decompose",
    "diagram_type",
    "eval_diagram",
    "family_de2020fast",
    "kravchuk_transform",
    "binomial_transform",
    "local_complement",
    "moebius",
    "munson_check",
    "nest_check",
    "nest_numeric",
    "pauli_push_check",
    "rule_ids",
    "run_suite",
    "suite_names",
    "verify_local_comp",
    "verify_rule",
    "walsh",
]


def _plain(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def _text(value):
    return value if isinstance(value, str) else json.dumps(_plain(value))


def _rational(text):
    return Fraction(text)


def _phasefn(values):
    """Accepts a {"n", "values"} mapping, JSON text or a bare list of 2^n values."""
    if isinstance(values, (list, tuple)):
        n = max(len(values) - 1, 0).bit_length()
        return _text({"n": n, "values": list(values)})
    return _text(values)


def _symmetric(by_weight):
    if isinstance(by_weight, (list, tuple)):
        return _text({"n": len(by_weight) - 1, "by_weight": list(by_weight)})
    return _text(by_weight)


def _rationals(report, *keys):
    for key in keys:
        value = report.get(key)
        if isinstance(value, list):
            report[key] = [_rational(v) for v in value]
        elif isinstance(value, str):
            report[key] = _rational(value)
    return report


def eval_diagram(diagram, max_wire_qubits=20):
    """Complex matrix (numpy array) of a diagram."""
    return _core.eval_diagram(_text(diagram), max_wire_qubits)


def diagram_type(diagram):
    """(domain registers, codomain registers)."""
    return _core.diagram_type(_text(diagram))


def verify_rule(rule, params, tol=1e-9):
    """(holds, max_delta) for one instance of a registered rule."""
    return _core.verify_rule(rule, _text(params), tol)


def run_suite(name, sizes=3, seed=0, tol=1e-9):
    return json.loads(_core.run_suite(name, sizes, seed, tol))


def decompose(phasefn, transform="walsh"):
    """{"constant": Fraction, "kind": ..., "terms": [(support, Fraction), ...]}."""
    d = json.loads(_core.decompose(_phasefn(phasefn), transform))
    return {
        "constant": _rational(d["constant"]),
        "kind": d["kind"],
        "terms": [(t["support"], _rational(t["phase"])) for t in d["terms"]],
    }


def walsh(phasefn):
    return [_rational(v) for v in json.loads(_core.walsh(_phasefn(phasefn)))["values"]]


def moebius(phasefn):
    return [_rational(v) for v in json.loads(_core.moebius(_phasefn(phasefn)))["values"]]


def kravchuk_transform(by_weight):
    return [_rational(v) for v in json.loads(_core.kravchuk_transform(_symmetric(by_weight)))["by_weight"]]


def binomial_transform(by_weight):
    return [_rational(v) for v in json.loads(_core.binomial_transform(_symmetric(by_weight)))["by_weight"]]


def family_de2020fast(n):
    return [_rational(v) for v in json.loads(_core.family_de2020fast(n))["by_weight"]]


def nest_check(spectrum):
    """Exact spider-nest certificate for a symmetric Walsh spectrum."""
    report = json.loads(_core.nest_check(_symmetric(spectrum)))
    return _rationals(report, "S", "residues", "global_phase_exponent")


def nest_numeric(spectrum):
    return _core.nest_numeric(_symmetric(spectrum))


def closed_form_S(n, m):
    return _rational(_core.closed_form_S(n, m))


def munson_check(alpha, n):
    report = json.loads(_core.munson_check(str(Fraction(alpha)), n))
    return _rationals(report, "alpha", "G_tilde", "residues")


def cnot_synthesize(matrix):
    """CNOTs as 1-based (source, target) pairs; raises NotInvertibleError."""
    return _core.cnot_synthesize(_text(matrix))


def _graph(graph):
    if isinstance(graph, tuple) and len(graph) == 2:
        n, edges = graph
        return _text({"n": n, "edges": [list(e) for e in edges]})
    return _text(graph)


def local_complement(graph, u):
    g = json.loads(_core.local_complement(_graph(graph), u))
    return g["n"], [tuple(e) for e in g["edges"]]


def verify_local_comp(graph, u, tol=1e-9):
    """(holds, fidelity, global_phase)."""
    return _core.verify_local_comp(_graph(graph), u, tol)


def pauli_push_check(graph, i):
    return _core.pauli_push_check(_graph(graph), i)
