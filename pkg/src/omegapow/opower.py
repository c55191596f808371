"""Membership of lasso words in omega-powers L^∞, with blocks of bounded length.

``L`` is anything with an ``alphabet`` and a ``decide(word) -> bool``.
The factorization graph has one node per cut position of ``u·v^ω``, with
positions inside the period folded modulo ``|v|``; its infinite paths from
node 0 are exactly the factorizations into nonempty L-blocks of length at
most ``bound``.  A positive verdict is exact; a negative one only rules out
factorizations whose blocks all fit the bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from .words import LassoWord, Word, enumerate_words


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    length: int
    block: Word


@dataclass
class FactorizationGraph:
    lasso: LassoWord
    bound: int
    edges: dict[int, list[Edge]] = field(default_factory=dict)

    @property
    def nodes(self) -> range:
        return range(len(self.lasso.prefix) + len(self.lasso.period))

    def normalize(self, position: int) -> int:
        u, v = len(self.lasso.prefix), len(self.lasso.period)
        return position if position < u else u + (position - u) % v

    def successors(self, node: int) -> list[Edge]:
        return self.edges.get(node, [])


def build_graph(L, x: LassoWord, bound: int) -> FactorizationGraph:
    if bound < 1:
        raise ValueError("block bound must be at least 1")
    if x.alphabet != L.alphabet:
        raise ValueError(f"lasso over {x.alphabet} but language over {L.alphabet}")
    g = FactorizationGraph(x, bound)
    for p in g.nodes:
        out = []
        for n in range(1, bound + 1):
            block = Word(x.alphabet, x.letters(p, p + n))
            if L.decide(block):
                out.append(Edge(p, g.normalize(p + n), n, block))
        g.edges[p] = out
    return g


@dataclass(frozen=True)
class OmegaVerdict:
    """Outcome of a bounded omega-power query.

    For members, ``stem`` leads from node 0 to the first node of ``cycle``,
    and ``cycle`` returns to it; repeating the cycle forever gives an
    explicit factorization.
    """

    member: bool
    bound: int
    stem: tuple[Edge, ...] = ()
    cycle: tuple[Edge, ...] = ()

    def __bool__(self):
        return self.member

    def cuts(self, repeats: int = 1) -> list[int]:
        """Actual cut positions of the factorization, cycle repeated ``repeats`` times."""
        pos = [0]
        for e in self.stem + self.cycle * repeats:
            pos.append(pos[-1] + e.length)
        return pos

    def blocks(self, lasso: LassoWord, repeats: int = 1) -> Iterator[Word]:
        cuts = self.cuts(repeats)
        for a, b in zip(cuts, cuts[1:]):
            yield Word(lasso.alphabet, lasso.letters(a, b))

    def schedule(self) -> str:
        if not self.member:
            return f"no ≤{self.bound}-block factorization"
        stem = [0]
        for e in self.stem:
            stem.append(stem[-1] + e.length)
        cyc = [stem[-1]]
        for e in self.cycle:
            cyc.append(cyc[-1] + e.length)
        return f"cut@{','.join(map(str, stem))}, cycle=[{','.join(map(str, cyc[1:]))}]"


def _path(g: FactorizationGraph, src: int, targets: set[int]) -> list[Edge] | None:
    """Shortest nonempty edge path from ``src`` into ``targets``."""
    prev: dict[int, Edge] = {}
    queue = deque([src])
    first = True
    while queue:
        n = queue.popleft()
        if n in targets and not first:
            path = []
            while True:
                e = prev[n]
                path.append(e)
                n = e.source
                if n == src:
                    return path[::-1]
        first = False
        for e in g.successors(n):
            if e.target not in prev:
                prev[e.target] = e
                queue.append(e.target)
    return None


def _reachable(g: FactorizationGraph, src: int) -> list[int]:
    seen = {src}
    order = [src]
    queue = deque([src])
    while queue:
        n = queue.popleft()
        for e in g.successors(n):
            if e.target not in seen:
                seen.add(e.target)
                order.append(e.target)
                queue.append(e.target)
    return order


def opower_member_bounded(L, x: LassoWord, bound: int) -> OmegaVerdict:
    g = build_graph(L, x, bound)
    for node in _reachable(g, 0):
        cycle = _path(g, node, {node})
        if cycle is None:
            continue
        stem = [] if node == 0 else _path(g, 0, {node})
        return OmegaVerdict(True, bound, tuple(stem), tuple(cycle))
    return OmegaVerdict(False, bound)


def opower_member_escalating(L, x: LassoWord, max_bound: int) -> OmegaVerdict:
    """Try bounds 1, 2, 4, ... up to ``max_bound``; stop at the first success."""
    if max_bound < 1:
        raise ValueError("max_bound must be at least 1")
    b = 1
    while True:
        v = opower_member_bounded(L, x, b)
        if v.member or b == max_bound:
            return v
        b = min(2 * b, max_bound)


def kleene_star_member(L, w: Word) -> bool:
    """Whether ``w`` splits into zero or more nonempty L-blocks."""
    n = len(w)
    ok = [True] + [False] * n
    for j in range(1, n + 1):
        for i in range(j):
            if ok[i] and L.decide(w[i:j]):
                ok[j] = True
                break
    return ok[n]


class NoBlockFound(ValueError):
    pass


def opower_prefix_member(L, w: Word, probe: int) -> bool:
    """Whether ``w`` is a prefix of some element of L^∞.

    ``w`` must factor as L-blocks followed by a proper prefix of some
    nonempty L-word of length at most ``probe``.
    """
    samples = [u for u in enumerate_words(L.alphabet, probe) if len(u) and L.decide(u)]
    if not samples:
        raise NoBlockFound(f"no nonempty word of {getattr(L, 'name', 'L')} within length {probe}")
    partial = {u.letters[:i] for u in samples for i in range(len(u))}
    n = len(w)
    ok = [True] + [False] * n
    for j in range(1, n + 1):
        ok[j] = any(ok[i] and L.decide(w[i:j]) for i in range(j))
    return any(ok[i] and w.letters[i:] in partial for i in range(n + 1))
