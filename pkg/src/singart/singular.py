"""The right-angled singular Artin monoid as a semidirect product.

An element is a pair ``(trace, group)``: a trace over conjugates
``alpha tau_s alpha^-1`` of the singular generators, followed by an element
of the right-angled Artin group.  A conjugate is identified by its image
``alpha sigma_s alpha^-1`` in the group (its *key*), and two conjugates
commute exactly when their keys commute in the group.

The same monoid is also the graph product with vertex monoids Z x N; that
second representation (``evaluate_direct``) shares no code with the first
beyond the generic normal-form engine and is used to cross-check it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .graph import DefiningGraph, GraphError
from .products import GraphProduct, Kind
from .traces import format_trace, trace_equals, trace_normal_form

__all__ = [
    "SIGMA",
    "SIGMA_INV",
    "TAU",
    "TAU_INV",
    "WordError",
    "parse_word",
    "format_word",
    "ConjugateVertex",
    "SingularElement",
    "SingularMonoid",
]

SIGMA, SIGMA_INV, TAU, TAU_INV = "+", "-", "~", "!"


class WordError(ValueError):
    pass


def parse_word(text: str, graph: DefiningGraph, extended: bool = False) -> tuple:
    """Parse ``"+a ~b -c"`` into ``(('+','a'), ('~','b'), ('-','c'))``.

    ``!v`` (an inverted tau) is only accepted when ``extended`` is set.
    """
    allowed = SIGMA + SIGMA_INV + TAU + (TAU_INV if extended else "")
    tokens = text.split()
    if tokens == ["1"]:
        return ()
    out = []
    for tok in tokens:
        if len(tok) < 2 or tok[0] not in allowed:
            raise WordError(f"bad token {tok!r}")
        if tok[1:] not in graph:
            raise WordError(f"unknown vertex {tok[1:]}")
        out.append((tok[0], tok[1:]))
    return tuple(out)


def format_word(word) -> str:
    return " ".join(k + v for k, v in word) or "1"


def shortlex_key(graph: DefiningGraph, g: tuple) -> tuple:
    """Order on group normal forms: length, then per syllable vertex, |exponent|, sign."""
    return (len(g), tuple((graph.index(v), abs(e), e < 0) for v, e in g))


@dataclass(frozen=True)
class ConjugateVertex:
    key: tuple
    witness_alpha: tuple = field(compare=False)
    witness_s: str = field(compare=False)


@dataclass(frozen=True)
class SingularElement:
    trace: tuple
    group: tuple


class SingularMonoid:
    def __init__(self, graph: DefiningGraph):
        self.graph = graph
        self.group = GraphProduct(graph, Kind.INT)
        self.direct = GraphProduct(graph, Kind.INT_NAT)
        self._commute = lru_cache(maxsize=None)(self._keys_commute)
        self._letter_key = lambda cv: shortlex_key(graph, cv.key)

    # -- words --------------------------------------------------------------

    def parse(self, text: str, extended: bool = False) -> tuple:
        return parse_word(text, self.graph, extended)

    def group_word(self, word) -> tuple:
        """Group normal form of a tau-free word."""
        syll = []
        for k, v in word:
            if k not in (SIGMA, SIGMA_INV):
                raise WordError("not a group word")
            syll.append((v, 1 if k == SIGMA else -1))
        return self.group.normal_form(syll)

    # -- conjugate vertices -------------------------------------------------

    def vertex_key(self, alpha: tuple, s: str) -> tuple:
        self.graph.index(s)
        G = self.group
        return G.normal_form(tuple(alpha) + ((s, 1),) + G.invert(alpha))

    def vertex(self, alpha: tuple, s: str) -> ConjugateVertex:
        return ConjugateVertex(self.vertex_key(alpha, s), tuple(alpha), s)

    def _keys_commute(self, a: tuple, b: tuple) -> bool:
        G = self.group
        return G.multiply(a, b) == G.multiply(b, a)

    def vertex_commute(self, u: ConjugateVertex, v: ConjugateVertex) -> bool:
        return self._commute(u.key, v.key)

    def act(self, g: tuple, u: ConjugateVertex) -> ConjugateVertex:
        """Conjugation action of a group element on a vertex."""
        G = self.group
        key = G.normal_form(tuple(g) + u.key + G.invert(g))
        return ConjugateVertex(key, G.multiply(g, u.witness_alpha), u.witness_s)

    def trace_nf(self, letters) -> tuple:
        return trace_normal_form(letters, self.vertex_commute, self._letter_key)

    # -- elements -----------------------------------------------------------

    def one(self) -> SingularElement:
        return SingularElement((), ())

    def evaluate(self, word) -> SingularElement:
        """Fold a word into (trace, group) form, left to right."""
        trace = []
        g: tuple = ()
        G = self.group
        for k, v in word:
            if k == SIGMA:
                g = G.multiply(g, ((v, 1),))
            elif k == SIGMA_INV:
                g = G.multiply(g, ((v, -1),))
            elif k == TAU:
                trace.append(self.vertex(g, v))
            else:
                raise WordError(f"token {k}{v} has no value in the monoid")
        return SingularElement(self.trace_nf(trace), g)

    def evaluate_direct(self, word) -> tuple:
        """Normal form in the Z x N graph product."""
        weights = {SIGMA: (1, 0), SIGMA_INV: (-1, 0), TAU: (0, 1)}
        try:
            syll = [(v, weights[k]) for k, v in word]
        except KeyError as exc:
            raise WordError(f"token {exc.args[0]} has no value in the monoid") from None
        return self.direct.normal_form(syll)

    def multiply(self, x: SingularElement, y: SingularElement) -> SingularElement:
        moved = [self.act(x.group, u) for u in y.trace]
        return SingularElement(
            self.trace_nf(x.trace + tuple(moved)), self.group.multiply(x.group, y.group)
        )

    def element_equals(self, x: SingularElement, y: SingularElement) -> bool:
        return x.group == y.group and trace_equals(
            x.trace, y.trace, self.vertex_commute, self._letter_key
        )

    def equals(self, w1, w2) -> bool:
        """Word problem: do the two words represent the same element?"""
        return self.element_equals(self.evaluate(w1), self.evaluate(w2))

    def theta(self, x: SingularElement) -> tuple:
        syll = [s for u in x.trace for s in u.key]
        return self.group.normal_form(syll + list(x.group))

    def iota(self, g: tuple) -> SingularElement:
        return SingularElement((), self.group.normal_form(g))

    @staticmethod
    def ord(x: SingularElement) -> int:
        return len(x.trace)

    def is_ribbon(self, alpha: tuple, s: str, t: str) -> bool:
        self.graph.index(t)
        return self.vertex_key(alpha, s) == ((t, 1),)

    def frz_decide(self, family: str, alpha, s: str, t: str, k: int) -> bool:
        """Decide ``alpha gen_s^k == gen_t^k alpha`` for gen = sigma or tau."""
        for v in (s, t):
            if v not in self.graph:
                raise GraphError(f"unknown vertex {v}")
        if k == 0:
            raise ValueError("k must be nonzero")
        if family == "sigma":
            tok = SIGMA if k > 0 else SIGMA_INV
        elif family == "tau":
            if k < 0:
                raise ValueError("tau has no inverse in the monoid; k must be positive")
            tok = TAU
        else:
            raise ValueError(f"unknown family {family!r}")
        alpha = tuple(alpha)
        left = alpha + ((tok, s),) * abs(k)
        right = ((tok, t),) * abs(k) + alpha
        return self.equals(left, right)

    # -- text ---------------------------------------------------------------

    def format(self, x: SingularElement) -> str:
        key_text = lambda u: self.group.format(u.key)
        return f"{format_trace(x.trace, key_text)}|{self.group.format(x.group)}"
