"""The desingularization map into the integral group ring.

``eta`` sends sigma to sigma and tau to ``sigma - sigma^-1``.  Inverting tau
needs the completion of the group ring along the degree filtration (degree
is the exponent sum); :class:`TruncatedSeries` keeps an exact window of
degree strata of such a series.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb

from .graph import DefiningGraph
from .products import GraphProduct
from .singular import (
    SIGMA,
    SIGMA_INV,
    TAU,
    TAU_INV,
    SingularElement,
    SingularMonoid,
    WordError,
    shortlex_key,
)

__all__ = [
    "deg",
    "GroupRingElement",
    "TruncatedSeries",
    "eta",
    "eta_word",
    "eta_tilde",
    "coeff_c",
    "nonzero_coefficient",
    "BirmanReport",
    "birman_scan",
]


def deg(g) -> int:
    return sum(e for _, e in g)


class GroupRingElement:
    """Finite integer combination of group normal forms; immutable."""

    __slots__ = ("engine", "terms", "_hash")

    def __init__(self, engine: GraphProduct, terms=None):
        self.engine = engine
        self.terms = {g: c for g, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def unit(cls, engine, g=(), coeff: int = 1) -> "GroupRingElement":
        return cls(engine, {tuple(g): coeff})

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        terms = dict(self.terms)
        for g, c in other.terms.items():
            terms[g] = terms.get(g, 0) + c
        return GroupRingElement(self.engine, terms)

    def __neg__(self):
        return GroupRingElement(self.engine, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "GroupRingElement":
        return GroupRingElement(self.engine, {g: k * c for g, c in self.terms.items()})

    def __mul__(self, other):
        mult = self.engine.multiply
        terms: dict = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                gh = mult(g, h)
                terms[gh] = terms.get(gh, 0) + a * b
        return GroupRingElement(self.engine, terms)

    def degrees(self) -> set[int]:
        return {deg(g) for g in self.terms}

    def stratum(self, d: int) -> "GroupRingElement":
        return GroupRingElement(self.engine, {g: c for g, c in self.terms.items() if deg(g) == d})

    def sorted_terms(self) -> list:
        graph = self.engine.graph
        return sorted(self.terms.items(), key=lambda gc: shortlex_key(graph, gc[0]))

    def format(self) -> str:
        if not self.terms:
            return "0"
        fmt = self.engine.format
        return " ".join(
            f"{'+' if c > 0 else '-'}{abs(c)}*[{fmt(g)}]" for g, c in self.sorted_terms()
        )

    def __repr__(self):
        return f"GroupRingElement({self.format()})"


def ring_multiply(P: GroupRingElement, Q: GroupRingElement) -> GroupRingElement:
    return P * Q


@dataclass
class TruncatedSeries:
    """Strata ``lower..cutoff`` of a series whose strata below ``lower`` vanish.

    Every stratum inside the window is exact.
    """

    engine: GraphProduct
    lower: int
    cutoff: int
    strata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.lower > self.cutoff:
            raise ValueError("lower bound above cutoff")
        zero = GroupRingElement(self.engine)
        clean = {}
        for d, P in self.strata.items():
            if not self.lower <= d <= self.cutoff:
                if P:
                    raise ValueError(f"stratum {d} outside [{self.lower}, {self.cutoff}]")
                continue
            if any(deg(g) != d for g in P.terms):
                raise ValueError(f"stratum {d} holds terms of another degree")
            if P:
                clean[d] = P
        self.strata = clean
        self._zero = zero

    @classmethod
    def from_ring(cls, P: GroupRingElement, cutoff: int, lower: int | None = None):
        ds = P.degrees()
        if lower is None:
            lower = min(ds) if ds else cutoff
        return cls(P.engine, lower, cutoff, {d: P.stratum(d) for d in ds if d <= cutoff})

    def __getitem__(self, d: int) -> GroupRingElement:
        if d > self.cutoff:
            raise KeyError(f"stratum {d} beyond cutoff {self.cutoff}")
        return self.strata.get(d, self._zero)

    def truncate(self, cutoff: int) -> "TruncatedSeries":
        if cutoff > self.cutoff:
            raise ValueError("cannot extend a truncated series")
        cutoff = max(cutoff, self.lower)
        return TruncatedSeries(
            self.engine, self.lower, cutoff, {d: P for d, P in self.strata.items() if d <= cutoff}
        )

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        lower = self.lower + other.lower
        # beyond this, missing strata of a factor would be needed
        cutoff = min(self.cutoff + other.lower, other.cutoff + self.lower)
        strata = {}
        for d in range(lower, cutoff + 1):
            acc = self._zero
            for i in range(self.lower, d - other.lower + 1):
                A = self.strata.get(i)
                B = other.strata.get(d - i)
                if A and B:
                    acc = acc + A * B
            strata[d] = acc
        return TruncatedSeries(self.engine, lower, cutoff, strata)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.lower, self.cutoff, self.strata) == (other.lower, other.cutoff, other.strata)

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        """Equal on every stratum both windows cover (lower bounds may differ)."""
        top = min(self.cutoff, other.cutoff)
        bottom = min(self.lower, other.lower)
        return all(self.strata.get(d, self._zero) == other.strata.get(d, other._zero)
                   for d in range(bottom, top + 1))

    def lines(self) -> list[str]:
        return [f"{d}: {self[d].format()}" for d in range(self.lower, self.cutoff + 1)]

    def format(self) -> str:
        return "\n".join(self.lines())


# -- eta ---------------------------------------------------------------------


def _binomial(G: GraphProduct, key: tuple) -> GroupRingElement:
    return GroupRingElement(G, {key: 1}) - GroupRingElement(G, {G.invert(key): 1})


def eta(monoid: SingularMonoid, x: SingularElement) -> GroupRingElement:
    G = monoid.group
    out = GroupRingElement.unit(G)
    for u in x.trace:
        out = out * _binomial(G, u.key)
    return out * GroupRingElement.unit(G, x.group)


def eta_word(monoid: SingularMonoid, word) -> GroupRingElement:
    """Substitute ``sigma - sigma^-1`` for each tau of the word, letter by letter."""
    G = monoid.group
    out = GroupRingElement.unit(G)
    for k, v in word:
        if k == SIGMA:
            factor = GroupRingElement.unit(G, ((v, 1),))
        elif k == SIGMA_INV:
            factor = GroupRingElement.unit(G, ((v, -1),))
        elif k == TAU:
            factor = _binomial(G, ((v, 1),))
        else:
            raise WordError(f"token {k}{v} has no finite image")
        out = out * factor
    return out


_TOKEN_LOWER = {SIGMA: 1, SIGMA_INV: -1, TAU: -1, TAU_INV: 1}


def _token_series(G: GraphProduct, tok, cutoff: int) -> TruncatedSeries:
    k, v = tok
    if k == SIGMA:
        strata = {1: GroupRingElement.unit(G, ((v, 1),))}
    elif k == SIGMA_INV:
        strata = {-1: GroupRingElement.unit(G, ((v, -1),))}
    elif k == TAU:
        strata = {1: GroupRingElement.unit(G, ((v, 1),)), -1: GroupRingElement.unit(G, ((v, -1),), -1)}
    elif k == TAU_INV:
        strata = {n: GroupRingElement.unit(G, ((v, n),), -1) for n in range(1, cutoff + 1, 2)}
    else:
        raise WordError(f"bad token {k}{v}")
    lower = _TOKEN_LOWER[k]
    cutoff = max(cutoff, lower)
    return TruncatedSeries(G, lower, cutoff, {d: P for d, P in strata.items() if d <= cutoff})


def eta_tilde(monoid: SingularMonoid, word, cutoff: int) -> TruncatedSeries:
    """Image of an extended word (``!v`` allowed) as an exact series up to ``cutoff``."""
    G = monoid.group
    word = tuple(word)
    for k, v in word:
        if k not in _TOKEN_LOWER:
            raise WordError(f"bad token {k}{v}")
    lowers = [_TOKEN_LOWER[k] for k, _ in word]
    total = sum(lowers)
    if cutoff < total:
        raise ValueError(f"cutoff {cutoff} below the lower bound {total}")
    result = TruncatedSeries(G, 0, cutoff - total, {0: GroupRingElement.unit(G)})
    remaining = total
    for tok, low in zip(word, lowers):
        remaining -= low
        # this factor and the partial product must reach cutoff - remaining
        need = cutoff - remaining
        result = result * _token_series(G, tok, need - result.lower)
    return result


# -- coefficients ------------------------------------------------------------


def _laurent_mul(a: dict, b: dict, cutoff: int) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            if i + j <= cutoff:
                out[i + j] = out.get(i + j, 0) + x * y
    return {n: c for n, c in out.items() if c}


def coeff_c(n: int, p: int, q: int) -> int:
    """Coefficient of ``sigma^n`` in ``(sigma - sigma^-1)^p sigma^q``.

    For negative ``p`` the power of ``sigma - sigma^-1`` is read in the
    completion, i.e. as a power of ``-(sigma + sigma^3 + sigma^5 + ...)``.
    """
    if (p, q) == (0, 0):
        raise ValueError("(p, q) = (0, 0) is the identity")
    if p >= 0:
        # (s - 1/s)^p s^q = sum_k C(p,k) (-1)^k s^(p+q-2k)
        twice_k = p + q - n
        if twice_k % 2 or not 0 <= twice_k // 2 <= p:
            return 0
        k = twice_k // 2
        return (-1) ** k * comb(p, k)
    m = -p
    cutoff = n - q
    if cutoff < m:
        return 0
    inv = {j: -1 for j in range(1, cutoff + 1, 2)}
    acc = {0: 1}
    for _ in range(m):
        acc = _laurent_mul(acc, inv, cutoff)
    return acc.get(n - q, 0)


def coefficient_window(p: int, q: int) -> range:
    """Indices where ``coeff_c(., p, q)`` can be nonzero, first few for ``p < 0``."""
    if p >= 0:
        return range(q - p, q + p + 1)
    m = -p
    return range(m + q, m + q + 2 * (m + 2) + 1)


def nonzero_coefficient(p: int, q: int) -> int:
    """The nonzero index ``a`` of least absolute value with ``c(a, p, q) != 0``.

    Ties go to the positive index.
    """
    for a in sorted(coefficient_window(p, q), key=lambda a: (abs(a), a < 0)):
        if a != 0 and coeff_c(a, p, q):
            return a
    raise ValueError(f"no nonzero coefficient for (p, q) = ({p}, {q})")


# -- injectivity scan --------------------------------------------------------


@dataclass
class BirmanReport:
    words: int
    distinct: int
    images: int
    collisions: list

    @property
    def ok(self) -> bool:
        return not self.collisions

    def lines(self) -> list[str]:
        out = [
            f"words: {self.words}",
            f"distinct elements: {self.distinct}",
            f"distinct images: {self.images}",
            f"collisions: {len(self.collisions)}",
        ]
        out += [f"  {a} ~ {b}" for a, b in self.collisions[:20]]
        return out


def birman_scan(graph: DefiningGraph, max_len: int, max_words: int = 5_000_000) -> BirmanReport:
    """Check that eta separates all elements given by words of length <= max_len."""
    from .singular import format_word

    monoid = SingularMonoid(graph)
    tokens = [(k, v) for v in graph.vertices for k in (SIGMA, SIGMA_INV, TAU)]
    total = sum(len(tokens) ** n for n in range(max_len + 1))
    if total > max_words:
        raise ValueError(f"{total} words exceed the bound {max_words}")
    reps: dict = {}
    for n in range(max_len + 1):
        for word in product(tokens, repeat=n):
            reps.setdefault(monoid.evaluate_direct(word), word)
    images: dict = {}
    collisions = []
    for word in reps.values():
        image = eta(monoid, monoid.evaluate(word))
        if image in images:
            collisions.append((format_word(images[image]), format_word(word)))
        else:
            images[image] = word
    return BirmanReport(total, len(reps), len(images), collisions)
