"""Orbit verification harness for graph-product normal forms.

How an expression's M-operation orbit is shaped depends only on the graph,
the support, and, per vertex, which contiguous runs of that vertex's
weights multiply to the identity (same-vertex syllables can never pass each
other, so every merge combines such a run).  ``orbit_scan`` therefore walks
every support and, for each vertex, one weight sequence per realizable
zero-run pattern.  ``exhaustive=True`` walks every weight assignment
instead; it is only practical for short expressions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .graph import DefiningGraph
from .products import GraphProduct, Kind, check_orbit

__all__ = ["zero_run_catalog", "orbit_scan", "OrbitReport"]


@lru_cache(maxsize=None)
def zero_run_catalog(kind: Kind, length: int, bound: int) -> tuple:
    """One weight sequence for each set of identity-summing runs.

    Sequences of ``length`` weights from ``kind.weights(bound)``; the
    result is ordered by the first sequence realizing each pattern.
    """
    weights = kind.weights(bound)
    if length == 0:
        return ((),)
    comps = np.array([w if kind.is_pair else (w,) for w in weights], dtype=np.int16)
    idx = np.indices((len(weights),) * length, dtype=np.int32).reshape(length, -1).T
    vals = comps[idx]  # (count, length, components)
    prefix = np.concatenate(
        [np.zeros((vals.shape[0], 1, vals.shape[2]), dtype=np.int16), np.cumsum(vals, axis=1, dtype=np.int16)],
        axis=1,
    )
    mask = np.zeros(vals.shape[0], dtype=np.int64)
    for bit, (i, j) in enumerate(combinations(range(length + 1), 2)):
        zero = np.all(prefix[:, j] == prefix[:, i], axis=1)
        mask |= zero.astype(np.int64) << bit
    _, first = np.unique(mask, return_index=True)
    first.sort()
    return tuple(tuple(weights[k] for k in idx[r]) for r in first)


@dataclass
class OrbitReport:
    kind: Kind
    expressions: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = [f"{self.kind.value}: expressions {self.expressions}, failures {len(self.failures)}"]
        out += [f"  {f}" for f in self.failures[:20]]
        return out


def _pattern_expressions(engine: GraphProduct, max_syll: int, bound: int):
    kind = engine.kind
    for n in range(max_syll + 1):
        for support in product(engine.graph.vertices, repeat=n):
            where: dict = {}
            for pos, v in enumerate(support):
                where.setdefault(v, []).append(pos)
            verts = list(where)
            choices = [zero_run_catalog(kind, len(where[v]), bound) for v in verts]
            for pick in product(*choices):
                weights = [None] * n
                for v, seq in zip(verts, pick):
                    for pos, w in zip(where[v], seq):
                        weights[pos] = w
                yield tuple(zip(support, weights))


def orbit_scan(
    graph: DefiningGraph, kind: Kind, max_syll: int, bound: int, exhaustive: bool = False
) -> OrbitReport:
    engine = GraphProduct(graph, kind)
    report = OrbitReport(kind)
    if exhaustive:
        exprs = engine.enumerate_expressions(max_syll, bound)
    else:
        exprs = _pattern_expressions(engine, max_syll, bound)
    for e in exprs:
        report.expressions += 1
        for problem in check_orbit(engine, e):
            report.failures.append(f"{engine.format(e)}: {problem}")
    return report
