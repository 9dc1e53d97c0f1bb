"""Induced-subgraph detection on power graphs.

``find_induced`` is the generic backtracking search for any pattern on at
most six vertices. The star, C4 and triangle detectors are specialized
fast paths; ``c4_free_structural`` decides induced C4 from the group side
via the cyclic-intersection criterion.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd
from typing import Literal

from . import bits
from .groups import FiniteGroup, maximal_cyclic_subgroups
from .numth import divisors, is_prime_power
from .pgraph import PowerGraph, is_adjacent

MAX_PATTERN = 6


@dataclass(frozen=True)
class PatternGraph:
    k: int
    adjacency: tuple[tuple[bool, ...], ...]
    name: str

    def __post_init__(self):
        if not 1 <= self.k <= MAX_PATTERN:
            raise ValueError(f"pattern size must be 1..{MAX_PATTERN}, got {self.k}")
        a = self.adjacency
        if len(a) != self.k or any(len(r) != self.k for r in a):
            raise ValueError("adjacency must be k x k")
        for i in range(self.k):
            if a[i][i]:
                raise ValueError(f"pattern has a loop at {i}")
            for j in range(self.k):
                if a[i][j] != a[j][i]:
                    raise ValueError("pattern adjacency must be symmetric")

    @classmethod
    def from_edges(cls, k: int, edges, name: str) -> "PatternGraph":
        adj = [[False] * k for _ in range(k)]
        for i, j in edges:
            adj[i][j] = adj[j][i] = True
        return cls(k, tuple(tuple(r) for r in adj), name)

    def degree(self, i: int) -> int:
        return sum(self.adjacency[i])

    def permuted(self, perm) -> "PatternGraph":
        """Relabel vertex ``i`` as ``perm[i]``."""
        inv = {p: i for i, p in enumerate(perm)}
        adj = tuple(tuple(self.adjacency[inv[a]][inv[b]] for b in range(self.k)) for a in range(self.k))
        return PatternGraph(self.k, adj, self.name)


def star(r: int) -> PatternGraph:
    return PatternGraph.from_edges(r + 1, [(0, i) for i in range(1, r + 1)], f"K1,{r}")


CLAW = star(3)
K14 = star(4)
C4 = PatternGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)], "C4")
K3 = PatternGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)], "K3")


@dataclass(frozen=True)
class Witness:
    """Graph vertices ``vertices[i]`` realize pattern vertex ``i``."""

    vertices: tuple[int, ...]
    pattern: PatternGraph

    def verify(self, graph: PowerGraph) -> bool:
        vs = self.vertices
        if len(set(vs)) != self.pattern.k or len(vs) != self.pattern.k:
            return False
        return all(
            is_adjacent(graph, vs[i], vs[j]) == self.pattern.adjacency[i][j]
            for i in range(self.pattern.k) for j in range(i + 1, self.pattern.k)
        )


def _twin_classes(pattern: PatternGraph) -> list[int]:
    """``prev[j]``: the latest earlier twin of ``j`` (same adjacency to
    every other vertex), or -1. Twins are swapped by an automorphism."""
    adj = pattern.adjacency
    prev = [-1] * pattern.k
    for j in range(pattern.k):
        for i in range(j - 1, -1, -1):
            if all(adj[i][c] == adj[j][c] for c in range(pattern.k) if c not in (i, j)):
                prev[j] = i
                break
    return prev


def _one_per_twin_class(rows, mask: int) -> int:
    """Keep the lowest vertex of ``mask`` from each class of vertices with
    equal open or equal closed neighborhoods."""
    out = 0
    seen_closed, seen_open = set(), set()
    for v in bits.iter_bits(mask):
        closed = rows[v] | 1 << v
        if closed in seen_closed or rows[v] in seen_open:
            continue
        seen_closed.add(closed)
        seen_open.add(rows[v])
        out |= 1 << v
    return out


def find_induced(graph: PowerGraph, pattern: PatternGraph) -> Witness | None:
    """First induced copy of ``pattern`` in ``graph``, or None.

    Pattern vertices are placed in descending pattern-degree order. The
    candidates for each are intersected from the rows of already-placed
    vertices, edges and non-edges alike. Twin pattern vertices are
    forced into increasing graph order. For the first pattern vertex only
    one graph vertex per twin class is tried, since swapping two graph
    twins is an automorphism.
    """
    k = pattern.k
    if k > graph.n:
        return None
    order = sorted(range(k), key=lambda i: (-pattern.degree(i), i))
    p = pattern.permuted([order.index(i) for i in range(k)])
    adj = p.adjacency
    prev = _twin_classes(p)
    full = graph.vertices
    rows = graph.rows
    min_deg = [p.degree(i) for i in range(k)]
    max_deg = [graph.n - 1 - (k - 1 - p.degree(i)) for i in range(k)]
    allowed = []
    for i in range(k):
        m = 0
        for v in range(graph.n):
            if min_deg[i] <= rows[v].bit_count() <= max_deg[i]:
                m |= 1 << v
        allowed.append(m)
    allowed[0] = _one_per_twin_class(rows, allowed[0])
    placed: list[int] = []

    def search(i: int) -> bool:
        if i == k:
            return True
        cand = allowed[i]
        for j, v in enumerate(placed):
            cand &= rows[v] if adj[i][j] else full & ~rows[v] & ~(1 << v)
        if prev[i] >= 0:
            cand &= bits.above(placed[prev[i]])
        while cand:
            v = bits.lowest(cand)
            cand &= cand - 1
            placed.append(v)
            if search(i + 1):
                return True
            placed.pop()
        return False

    if not search(0):
        return None
    # undo the degree reordering
    return Witness(tuple(placed[order.index(i)] for i in range(k)), pattern)


def _independent_subset(rows, cand: int, r: int, chosen: list[int]) -> list[int] | None:
    if r == 0:
        return chosen
    while cand and cand.bit_count() >= r:
        v = bits.lowest(cand)
        cand &= cand - 1
        got = _independent_subset(rows, cand & ~rows[v], r - 1, chosen + [v])
        if got is not None:
            return got
    return None


def is_k1r_free(graph: PowerGraph, r: int) -> Witness | None:
    """Induced ``K_{1,r}`` (center first, then ascending leaves), or None
    when the graph is ``K_{1,r}``-free."""
    if r < 2:
        raise ValueError(f"star size must be >= 2, got {r}")
    # a twin of a failed center fails too
    for v in bits.iter_bits(_one_per_twin_class(graph.rows, graph.vertices)):
        nb = graph.rows[v]
        if nb.bit_count() < r:
            continue
        leaves = _independent_subset(graph.rows, nb, r, [])
        if leaves is not None:
            return Witness((v, *leaves), star(r))
    return None


def is_claw_free(graph: PowerGraph) -> Witness | None:
    return is_k1r_free(graph, 3)


def has_induced_c4(graph: PowerGraph) -> Witness | None:
    """Induced 4-cycle ``u, x, w, y`` with ``u`` not adjacent to ``w`` and
    ``x`` not adjacent to ``y``; first one in ascending ``(u, w)`` order."""
    rows = graph.rows
    full = graph.vertices
    for u in bits.iter_bits(_one_per_twin_class(rows, full)):
        non = full & ~rows[u] & bits.above(u)
        for w in bits.iter_bits(non):
            common = rows[u] & rows[w]
            if common.bit_count() < 2:
                continue
            for x in bits.iter_bits(common):
                rest = common & ~rows[x] & bits.above(x)
                if rest:
                    return Witness((u, x, w, bits.lowest(rest)), C4)
    return None


def is_triangle_free(graph: PowerGraph) -> Witness | None:
    """A triangle, or None if the graph has none."""
    rows = graph.rows
    for u in range(graph.n):
        for v in bits.iter_bits(rows[u] & bits.above(u)):
            third = rows[u] & rows[v] & bits.above(v)
            if third:
                return Witness((u, v, bits.lowest(third)), K3)
    return None


def _violates(G: FiniteGroup, x: int, y: int) -> bool:
    mx, my = G.cyclic_masks[x], G.cyclic_masks[y]
    meet = mx & my
    return meet != mx and meet != my and not is_prime_power(meet.bit_count())


def c4_free_structural(G: FiniteGroup,
                       mode: Literal["all_pairs", "maximal_only"] = "maximal_only") -> tuple[int, int] | None:
    """A pair ``(x, y)`` with incomparable cyclic subgroups whose
    intersection does not have prime-power order, or None.

    ``all_pairs`` scans every element pair. ``maximal_only`` scans pairs
    of distinct maximal cyclic subgroups, then looks inside each maximal
    cyclic subgroup for two incomparable subgroups (a cyclic group of
    order 60 has only one maximal cyclic subgroup yet contains a pair).
    """
    if mode == "all_pairs":
        for x in range(G.n):
            for y in range(x + 1, G.n):
                if _violates(G, x, y):
                    return x, y
        return None
    if mode != "maximal_only":
        raise ValueError(f"unknown mode {mode!r}")
    comps = maximal_cyclic_subgroups(G)
    for a, b in itertools.combinations(comps, 2):
        if not is_prime_power((a.members & b.members).bit_count()):
            return a.generator, b.generator
    for c in comps:
        divs = divisors(c.order)
        for d1, d2 in itertools.combinations(divs, 2):
            if d2 % d1 and d1 % d2 and not is_prime_power(gcd(d1, d2)):
                g = c.generator
                return G.power(g, c.order // d1), G.power(g, c.order // d2)
    return None

