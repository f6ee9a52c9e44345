"""Exact computation in right-angled Artin groups and their singular monoids."""

from .desing import (
    GroupRingElement,
    TruncatedSeries,
    birman_scan,
    coeff_c,
    deg,
    eta,
    eta_tilde,
    eta_word,
)
from .graph import DefiningGraph, GraphError, commutes, parse_graph
from .products import GraphProduct, Kind, OrbitTooLarge
from .singular import ConjugateVertex, SingularElement, SingularMonoid, WordError, parse_word
from .traces import lemma42_verify, trace_concat, trace_equals, trace_normal_form

__version__ = "0.1.0"
