"""Toughness certification from distance signless Laplacian spectra."""

import json

from ._qdtough import (
    Graph,
    NumericFailure,
    QdtoughError,
    build_family,
    complete_graph,
    cycle_graph,
    eta1,
    lemma_names,
    path_graph,
    read_graph,
    star_graph,
    transmissions,
    wiener_index,
)
from . import _qdtough

DEFAULT_SEED = 20240531

__all__ = [
    "DEFAULT_SEED",
    "Graph",
    "NumericFailure",
    "QdtoughError",
    "build_family",
    "certify",
    "compare",
    "complete_graph",
    "cycle_graph",
    "eta1",
    "is_t_tough",
    "lemma_names",
    "path_graph",
    "read_graph",
    "spectra",
    "star_graph",
    "sweep",
    "toughness",
    "transmissions",
    "verify_lemma",
    "wiener_index",
]


def spectra(graph):
    return json.loads(_qdtough._spectra(graph))


def toughness(graph, cap=24):
    return json.loads(_qdtough._toughness(graph, cap))


def is_t_tough(graph, t, variant="tau", cap=24):
    if variant not in ("tau", "tau-prime"):
        raise ValueError("variant must be 'tau' or 'tau-prime'")
    return json.loads(_qdtough._is_t_tough(graph, str(t), variant == "tau-prime", cap))


def certify(graph, theorem, param=1):
    return json.loads(_qdtough._certify(graph, theorem, param))


def compare(s, parts, p):
    return json.loads(_qdtough._compare(s, list(parts), p))


def sweep(theorem, param=1, n_min=12, n_max=20, delta=2, seed=DEFAULT_SEED, count=50):
    return json.loads(_qdtough._sweep(theorem, param, n_min, n_max, delta, seed, count))


def verify_lemma(lemma, seed=DEFAULT_SEED, cases=200):
    return json.loads(_qdtough._verify_lemma(lemma, seed, cases))
