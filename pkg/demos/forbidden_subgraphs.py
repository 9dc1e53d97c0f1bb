"""Forbidden induced subgraphs: the group side against the graph side.

Each structural test is an arithmetic statement about the group. The
search side looks for the subgraph itself. They should always agree.
"""
from powergraph.catalog import build
from powergraph.classify import (
    claw_free_structural, eppo, k14_free_structural, nilpotent_c4_structural, order_spectrum_conforms,
)
from powergraph.forbidden import C4, c4_free_structural, find_induced, has_induced_c4, is_claw_free, is_k1r_free
from powergraph.pgraph import power_graph


def show(G, w):
    return [(v, int(G.orders[v])) for v in w.vertices]


# Claws. Z12 = Z4 x Z3 has one exponent equal to 1 and is claw-free; Z36
# has both exponents 2 and a claw on elements of orders 1, 4, 6, 9.
for label in ("Z12", "Z36"):
    G = build(label)
    w = is_claw_free(power_graph(G))
    print(label, "structural:", claw_free_structural(G), "| claw:", None if w is None else show(G, w))

# K_{1,4}. The non-cyclic survivors are the Klein group and Q8.
for label in ("Q8", "Z2xZ2", "Z8xZ2", "Z30", "Z72", "Z216"):
    G = build(label)
    w = is_k1r_free(power_graph(G), 4)
    print(f"{label:7s} structural {k14_free_structural(G)!s:5s} search {'free' if w is None else show(G, w)}")

# Induced 4-cycles come from two cyclic subgroups, neither inside the
# other, meeting in a subgroup whose order has two prime factors.
G = build("Z60")
pair = c4_free_structural(G, "maximal_only")
w = has_induced_c4(power_graph(G))
print("Z60 violating pair", [(x, int(G.orders[x])) for x in pair], "C4", show(G, w))
print("order with too many primes:", int(G.orders[order_spectrum_conforms(G)]))

# The generic search finds the same kind of object, slower.
print("generic C4 search on Z60:", show(G, find_induced(power_graph(G), C4)))

# EPPO groups (every element of prime-power order) are always C4-free.
# The converse fails: Z6 has an element of order 6 and no induced C4.
for label in ("S4", "A4", "Z7:Z3(2)", "Z6"):
    G = build(label)
    print(label, "EPPO", eppo(G), "| C4-free", has_induced_c4(power_graph(G)) is None)

# Nilpotent groups: two prime sylows need one of them of prime exponent and
# a cyclic Hughes subgroup in the other.
for label in ("Z6xZ2", "Z4xZ2xZ3", "Z2xZ2xZ9", "Q8xZ3"):
    G = build(label)
    print(label, "nilpotent rule", nilpotent_c4_structural(G), "| search", has_induced_c4(power_graph(G)) is None)
