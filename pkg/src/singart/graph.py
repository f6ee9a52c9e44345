"""Right-angled defining graphs.

A graph file looks like::

    # the path a - b, with c isolated
    vertices: a b c
    edges: a-b

An edge ``{u, v}`` means the generators of ``u`` and ``v`` commute; a
missing edge means no relation at all between them.  Vertices are always
ordered by name (byte order), whatever order they were declared in.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import combinations

__all__ = ["DefiningGraph", "GraphError", "parse_graph", "commutes", "all_graphs"]

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")


class GraphError(ValueError):
    """Raised on a malformed graph file or an unknown vertex."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


@dataclass(frozen=True)
class DefiningGraph:
    vertices: tuple[str, ...]
    edges: frozenset[frozenset[str]]
    _adjacent: dict[str, frozenset[str]] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(sorted(self.vertices))
        if len(set(names)) != len(names):
            raise GraphError("duplicate vertex")
        for name in names:
            if not _NAME.match(name):
                raise GraphError(f"bad vertex name {name!r}")
        adjacent: dict[str, set[str]] = {v: set() for v in names}
        edges = set()
        for edge in self.edges:
            pair = tuple(edge)
            if len(pair) != 2:
                raise GraphError(f"loop edge {pair[0]}-{pair[0]}")
            u, v = pair
            for end in pair:
                if end not in adjacent:
                    raise GraphError(f"undeclared endpoint {end}")
            adjacent[u].add(v)
            adjacent[v].add(u)
            edges.add(frozenset(pair))
        object.__setattr__(self, "vertices", names)
        object.__setattr__(self, "edges", frozenset(edges))
        object.__setattr__(
            self, "_adjacent", {v: frozenset(n) for v, n in adjacent.items()}
        )
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(names)})

    @classmethod
    def from_edges(cls, vertices, edges=()) -> "DefiningGraph":
        return cls(tuple(vertices), frozenset(frozenset(e) for e in edges))

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def __contains__(self, v) -> bool:
        return v in self._index

    def neighbours(self, v: str) -> frozenset[str]:
        try:
            return self._adjacent[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def commutes(self, u: str, v: str) -> bool:
        """True iff ``u != v`` and ``{u, v}`` is an edge."""
        return v in self.neighbours(u)

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def to_text(self) -> str:
        edges = "".join(f" {u}-{v}" for u, v in self.sorted_edges())
        return f"vertices: {' '.join(self.vertices)}\nedges:{edges}\n"


def commutes(g: DefiningGraph, u: str, v: str) -> bool:
    g.index(u)
    g.index(v)
    return g.commutes(u, v)


def parse_graph(text: str) -> DefiningGraph:
    vertices = None
    edges = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        head = head.strip()
        if not sep or head not in ("vertices", "edges"):
            raise GraphError(f"malformed line {raw.strip()!r}", lineno)
        if head == "vertices":
            if vertices is not None:
                raise GraphError("second 'vertices:' line", lineno)
            vertices = []
            seen = set()
            for name in rest.split():
                if not _NAME.match(name):
                    raise GraphError(f"bad vertex name {name!r}", lineno)
                if name in seen:
                    raise GraphError(f"duplicate vertex {name}", lineno)
                seen.add(name)
                vertices.append(name)
        else:
            if vertices is None:
                raise GraphError("'edges:' before 'vertices:'", lineno)
            if edges is not None:
                raise GraphError("second 'edges:' line", lineno)
            edges = set()
            for item in rest.split():
                parts = item.split("-")
                if len(parts) != 2 or not all(_NAME.match(p) for p in parts):
                    raise GraphError(f"malformed edge {item!r}", lineno)
                u, v = parts
                for end in parts:
                    if end not in seen:
                        raise GraphError(f"undeclared endpoint {end}", lineno)
                if u == v:
                    raise GraphError(f"loop edge {item}", lineno)
                edges.add(frozenset(parts))
    if vertices is None:
        raise GraphError("missing 'vertices:' line")
    if edges is None:
        raise GraphError("missing 'edges:' line")
    return DefiningGraph(tuple(vertices), frozenset(edges))


def all_graphs(names):
    """Every graph on the given vertex names, one per edge pattern."""
    pairs = list(combinations(sorted(names), 2))
    for mask in range(1 << len(pairs)):
        yield DefiningGraph.from_edges(
            names, [p for i, p in enumerate(pairs) if mask >> i & 1]
        )
