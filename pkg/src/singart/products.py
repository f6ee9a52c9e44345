"""Graph products of abelian vertex groups and monoids.

An element is stored as a tuple of syllables ``(vertex, weight)``.  The
weight lives in the vertex group ``K_u`` fixed by the engine's kind:

=========  ===================  ================================
kind       ``K_u``              weight
=========  ===================  ================================
NAT        N (trace monoid)     ``p >= 1``
INT        Z (graph group)      ``q != 0``
INT_NAT    Z x N (singular)     ``(q, p)`` with ``p >= 0``
INT_INT    Z x Z (enveloping)   ``(q, p) != (0, 0)``
=========  ===================  ================================

For the two pair kinds ``q`` counts sigma letters and ``p`` counts tau
letters.  Reduction merges equal-vertex syllables that can be brought
together by commuting swaps; the normal form is the reduced expression
whose support is lexicographically least.
"""

from __future__ import annotations

import re
from collections import deque
from enum import Enum
from itertools import product

from .graph import DefiningGraph

__all__ = ["Kind", "GraphProduct", "OrbitTooLarge", "check_orbit"]


class Kind(Enum):
    NAT = "N"
    INT = "Z"
    INT_NAT = "ZxN"
    INT_INT = "ZxZ"

    @property
    def is_pair(self) -> bool:
        return self in (Kind.INT_NAT, Kind.INT_INT)

    @property
    def is_group(self) -> bool:
        return self in (Kind.INT, Kind.INT_INT)

    @property
    def identity(self):
        return (0, 0) if self.is_pair else 0

    def is_identity(self, w) -> bool:
        return w == (0, 0) if self.is_pair else w == 0

    def add(self, a, b):
        if self.is_pair:
            return (a[0] + b[0], a[1] + b[1])
        return a + b

    def neg(self, w):
        if not self.is_group:
            raise ValueError(f"weights of kind {self.value} have no inverse")
        if self.is_pair:
            return (-w[0], -w[1])
        return -w

    def valid(self, w) -> bool:
        if self.is_pair:
            if not (isinstance(w, tuple) and len(w) == 2):
                return False
            q, p = w
            if not (_is_int(q) and _is_int(p)) or (q, p) == (0, 0):
                return False
            return self is Kind.INT_INT or p >= 0
        if not _is_int(w):
            return False
        return w >= 1 if self is Kind.NAT else w != 0

    def weights(self, bound: int) -> list:
        """All non-identity weights with every component bounded by ``bound``."""
        r = range(-bound, bound + 1)
        if self is Kind.NAT:
            return list(range(1, bound + 1))
        if self is Kind.INT:
            return [q for q in r if q]
        ps = range(0, bound + 1) if self is Kind.INT_NAT else r
        return [(q, p) for q in r for p in ps if (q, p) != (0, 0)]

    def format_weight(self, w) -> str:
        if self.is_pair:
            return f"({w[0]},{w[1]})"
        return str(w)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


class OrbitTooLarge(ValueError):
    pass


_SYLLABLE = re.compile(r"([A-Za-z0-9_]+)\^(-?\d+|\((-?\d+),(-?\d+)\))\Z")


class GraphProduct:
    """Normal-form arithmetic in the graph product of one weight kind."""

    def __init__(self, graph: DefiningGraph, kind: Kind):
        self.graph = graph
        self.kind = kind
        self._adj = {v: graph.neighbours(v) for v in graph.vertices}

    def __repr__(self):
        return f"GraphProduct({self.graph.to_text()!r}, {self.kind})"

    # -- validation and text -------------------------------------------------

    def check(self, e) -> tuple:
        e = tuple(e)
        for v, w in e:
            self.graph.index(v)
            if not self.kind.valid(w):
                raise ValueError(f"invalid {self.kind.value} weight {w!r} at {v}")
        return e

    def format(self, x) -> str:
        if not x:
            return "1"
        fw = self.kind.format_weight
        return ".".join(f"{v}^{fw(w)}" for v, w in x)

    def parse(self, text: str) -> tuple:
        """Read the canonical text form back (any expression, not only normal forms)."""
        text = text.strip()
        if text == "1":
            return ()
        out = []
        for item in text.split("."):
            m = _SYLLABLE.match(item)
            if not m:
                raise ValueError(f"bad syllable {item!r}")
            v = m.group(1)
            if m.group(3) is not None:
                w = (int(m.group(3)), int(m.group(4)))
            else:
                w = int(m.group(2))
            out.append((v, w))
        return self.check(out)

    # -- reduction and normal form ------------------------------------------

    def reduce(self, e) -> tuple:
        """Return an M-reduced expression for the same element.

        Each incoming syllable is merged into the nearest earlier syllable of
        the same vertex when everything in between commutes with it.  The
        output prefix is kept reduced, which makes a single pass enough: a
        cancellation can never unblock a pair that sits on its left.
        """
        adj = self._adj
        kind = self.kind
        out: list = []
        for v, w in e:
            nbrs = adj[v]
            for i in range(len(out) - 1, -1, -1):
                u = out[i][0]
                if u == v:
                    merged = kind.add(out[i][1], w)
                    if kind.is_identity(merged):
                        del out[i]
                    else:
                        out[i] = (v, merged)
                    break
                if u not in nbrs:
                    out.append((v, w))
                    break
            else:
                out.append((v, w))
        return tuple(out)

    def normal_form(self, e) -> tuple:
        rest = list(self.reduce(e))
        adj = self._adj
        out = []
        while rest:
            best = None
            best_v = None
            for i, (v, _) in enumerate(rest):
                if best is not None and v >= best_v:
                    continue
                nbrs = adj[v]
                if all(u in nbrs for u, _ in rest[:i]):
                    best, best_v = i, v
            out.append(rest.pop(best))
        return tuple(out)

    def one(self) -> tuple:
        return ()

    def multiply(self, x, y) -> tuple:
        return self.normal_form(tuple(x) + tuple(y))

    def invert(self, x) -> tuple:
        if not self.kind.is_group:
            raise ValueError(f"{self.kind.value} graph products have no inverses")
        neg = self.kind.neg
        return self.normal_form(tuple((v, neg(w)) for v, w in reversed(x)))

    def equals(self, x, y) -> bool:
        return tuple(x) == tuple(y)

    @staticmethod
    def syllable_length(x) -> int:
        return len(x)

    # -- elementary M-operations --------------------------------------------

    def m_moves(self, e, type_ii_only: bool = False):
        """Yield ``(kind, result)`` for every single elementary M-operation."""
        e = tuple(e)
        for i in range(len(e) - 1):
            (u, a), (v, b) = e[i], e[i + 1]
            if u == v:
                if type_ii_only:
                    continue
                s = self.kind.add(a, b)
                mid = () if self.kind.is_identity(s) else ((u, s),)
                yield "I", e[:i] + mid + e[i + 2:]
            elif v in self._adj[u]:
                yield "II", e[:i] + (e[i + 1], e[i]) + e[i + 2:]

    def mop_orbit(self, e, cap: int = 100_000, type_ii_only: bool = False) -> set:
        """Closure of ``{e}`` under single M-operations."""
        start = tuple(e)
        seen = {start}
        todo = deque([start])
        while todo:
            cur = todo.popleft()
            for _, nxt in self.m_moves(cur, type_ii_only):
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise OrbitTooLarge(f"orbit exceeds cap {cap}")
                    todo.append(nxt)
        return seen

    def enumerate_expressions(self, max_syll: int, bound: int):
        """Every expression of at most ``max_syll`` syllables with bounded weights."""
        syllables = [(v, w) for v in self.graph.vertices for w in self.kind.weights(bound)]
        for n in range(max_syll + 1):
            yield from product(syllables, repeat=n)


def check_orbit(engine: GraphProduct, e, cap: int = 100_000) -> list[str]:
    """Verify the orbit statements for one expression; return the failures.

    Checked: the normal form is constant on the orbit, its length is the
    orbit minimum, every shortest member is reachable from it by swaps
    alone, and the only member carrying its support is itself.
    """
    orbit = engine.mop_orbit(e, cap)
    nf = engine.normal_form(e)
    problems = []
    for x in orbit:
        if engine.normal_form(x) != nf:
            problems.append(f"{engine.format(x)} normalizes differently from {engine.format(e)}")
            break
    shortest = min(len(x) for x in orbit)
    if shortest != len(nf):
        problems.append(f"normal form length {len(nf)} but orbit minimum {shortest}")
    swaps = engine.mop_orbit(nf, cap, type_ii_only=True)
    minimal = {x for x in orbit if len(x) == shortest}
    if not minimal <= swaps:
        problems.append("shortest orbit members not swap-connected to the normal form")
    support = [v for v, _ in nf]
    for x in orbit:
        if [v for v, _ in x] == support and x != nf:
            problems.append(f"{engine.format(x)} shares the normal-form support")
            break
    return problems
