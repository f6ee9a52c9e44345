"""Trace monoids over an arbitrary ordered alphabet.

Letters can be any hashable values; the caller supplies the commutation
predicate and, optionally, a sort key fixing the total order on letters.
The canonical representative of a trace is its lexicographically least
word, built greedily by always emitting the least letter that could be
moved to the front.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Hashable, Sequence

__all__ = [
    "trace_normal_form",
    "trace_equals",
    "trace_concat",
    "format_trace",
    "Lemma42Verdict",
    "lemma42_verify",
    "lemma42_scan",
]

Commute = Callable[[Hashable, Hashable], bool]


def _identity(x):
    return x


def trace_normal_form(word: Sequence, commute: Commute, key=None) -> tuple:
    key = key or _identity
    rest = list(word)
    keys = [key(x) for x in rest]
    out = []
    while rest:
        best = None
        for i, x in enumerate(rest):
            if best is not None and not keys[i] < keys[best]:
                continue
            # an equal letter earlier always wins the tie, so it blocks here
            if all(y != x and commute(y, x) for y in rest[:i]):
                best = i
        out.append(rest.pop(best))
        del keys[best]
    return tuple(out)


def trace_equals(u: Sequence, v: Sequence, commute: Commute, key=None) -> bool:
    if len(u) != len(v) or Counter(u) != Counter(v):
        return False
    return trace_normal_form(u, commute, key) == trace_normal_form(v, commute, key)


def trace_concat(u: Sequence, v: Sequence, commute: Commute, key=None) -> tuple:
    return trace_normal_form(tuple(u) + tuple(v), commute, key)


def format_trace(word: Sequence, text=str) -> str:
    return "{" + " ".join(text(x) for x in word) + "}"


@dataclass(frozen=True)
class Lemma42Verdict:
    hypothesis_holds: bool
    conclusion_vw: bool
    conclusion_commute: bool

    @property
    def consistent(self) -> bool:
        return not self.hypothesis_holds or (self.conclusion_vw and self.conclusion_commute)


def lemma42_verify(v, p: int, u: Sequence, w, commute: Commute, key=None) -> Lemma42Verdict:
    """Test ``v^p u_1...u_l == u_1...u_l w^p`` and the two consequences."""
    if p < 1:
        raise ValueError("p must be positive")
    u = tuple(u)
    hyp = trace_equals((v,) * p + u, u + (w,) * p, commute, key)
    return Lemma42Verdict(
        hypothesis_holds=hyp,
        conclusion_vw=v == w,
        conclusion_commute=all(x == v or commute(x, v) for x in u),
    )


@dataclass
class Lemma42Report:
    instances: int = 0
    hypothesis_true: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def lines(self) -> list[str]:
        out = [
            f"instances: {self.instances}",
            f"hypothesis true: {self.hypothesis_true}",
            f"violations: {len(self.violations)}",
        ]
        out += [f"  {v}" for v in self.violations[:20]]
        return out


def lemma42_scan(max_letters: int = 4, max_l: int = 4, max_p: int = 3) -> Lemma42Report:
    """Exhaustive check over every alphabet size and commutation pattern."""
    report = Lemma42Report()
    for n in range(1, max_letters + 1):
        letters = range(n)
        pairs = list(combinations(letters, 2))
        for mask in range(1 << len(pairs)):
            edges = {frozenset(pq) for i, pq in enumerate(pairs) if mask >> i & 1}

            def commute(x, y, edges=edges):
                return frozenset((x, y)) in edges

            for l in range(max_l + 1):
                for u in product(letters, repeat=l):
                    for v, w in product(letters, repeat=2):
                        for p in range(1, max_p + 1):
                            verdict = lemma42_verify(v, p, u, w, commute)
                            report.instances += 1
                            report.hypothesis_true += verdict.hypothesis_holds
                            if not verdict.consistent:
                                report.violations.append(
                                    f"n={n} edges={sorted(map(sorted, edges))} "
                                    f"v={v} p={p} u={u} w={w}: {verdict}"
                                )
    return report
