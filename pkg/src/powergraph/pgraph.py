"""Power graphs over group element indices, stored as bit-set rows."""
from __future__ import annotations

import json
from dataclasses import dataclass

from . import bits
from .groups import FiniteGroup

INDEPENDENCE_LIMIT = 256


class TooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class PowerGraph:
    """Undirected loopless graph; ``rows[v]`` is the neighbor bit set of ``v``."""

    n: int
    rows: tuple[int, ...]
    group_label: str = ""
    orders: tuple[int, ...] | None = None

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerGraph):
            return self.n == other.n and self.rows == other.rows
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.rows)

    @property
    def vertices(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits.iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()


def power_graph(G: FiniteGroup) -> PowerGraph:
    """``x ~ y`` iff ``x != y`` and one lies in the cyclic subgroup of the other."""
    rows = list(G.cyclic_masks)
    for x, m in enumerate(G.cyclic_masks):
        for y in bits.iter_bits(m):
            rows[y] |= 1 << x
    rows = tuple(r & ~(1 << v) for v, r in enumerate(rows))
    return PowerGraph(G.n, rows, G.label, tuple(int(o) for o in G.orders))


def from_edges(n: int, edges, label: str = "") -> PowerGraph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return PowerGraph(n, tuple(rows), label)


def is_adjacent(graph: PowerGraph, u: int, w: int) -> bool:
    return bool(graph.rows[u] >> w & 1)


def neighbors(graph: PowerGraph, v: int) -> int:
    return graph.rows[v]


def common_neighbors(graph: PowerGraph, u: int, w: int) -> int:
    return graph.rows[u] & graph.rows[w]


def induced_rows(graph: PowerGraph, vertices: list[int]) -> list[list[bool]]:
    return [[is_adjacent(graph, a, b) for b in vertices] for a in vertices]


def independence_number(graph: PowerGraph) -> int:
    """Exact maximum independent set size.

    Branch and bound on the complement: candidates are greedily split into
    cliques of the graph, and the number of cliques bounds how many more
    independent vertices can still be added. Universal vertices are
    dropped first (they only matter when nothing else is left).
    """
    if graph.n > INDEPENDENCE_LIMIT:
        raise TooLarge(f"independence number limited to {INDEPENDENCE_LIMIT} vertices, got {graph.n}")
    if graph.n == 0:
        return 0
    full = graph.vertices
    rows = graph.rows
    cand = 0
    for v in range(graph.n):
        if rows[v] | (1 << v) != full:
            cand |= 1 << v
    if not cand:
        return 1
    best = 0

    def clique_cover(p: int) -> list[tuple[int, int]]:
        """Greedy cover of ``p`` by cliques; returns (vertex, bound) in
        order of non-decreasing bound."""
        order = []
        k = 0
        while p:
            k += 1
            q = p
            while q:
                v = bits.lowest(q)
                q &= rows[v]
                p &= ~(1 << v)
                order.append((v, k))
        return order

    def expand(size: int, p: int) -> None:
        nonlocal best
        for v, bound in reversed(clique_cover(p)):
            if size + bound <= best:
                return
            newp = p & ~rows[v] & ~(1 << v)
            if newp:
                expand(size + 1, newp)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    expand(0, cand)
    return best


def to_dot(graph: PowerGraph) -> str:
    lines = ["graph power_graph {"]
    if graph.group_label:
        lines.append(f'  label="{graph.group_label}";')
    for v in range(graph.n):
        o = graph.orders[v] if graph.orders else "?"
        lines.append(f'  {v} [label="{v} ({o})"];')
    for u, v in graph.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: PowerGraph) -> str:
    doc = {
        "schema": 1,
        "group": graph.group_label,
        "n": graph.n,
        "orders": list(graph.orders) if graph.orders else None,
        "edges": [list(e) for e in graph.edges()],
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def from_json(text: str) -> PowerGraph:
    doc = json.loads(text)
    g = from_edges(doc["n"], [tuple(e) for e in doc["edges"]], doc.get("group", ""))
    orders = tuple(doc["orders"]) if doc.get("orders") else None
    return PowerGraph(g.n, g.rows, g.group_label, orders)
