"""A short tour of power graphs on a handful of small groups.

Run with ``python3 demos/power_graphs_tour.py``.
"""
import numpy as np

from powergraph import groups
from powergraph.catalog import build
from powergraph.pgraph import independence_number, power_graph, to_dot

# Groups are Cayley tables. Element 0 need not be the identity in general,
# but every built-in constructor puts it there.
Z6 = build("Z6")
print(Z6)
print(Z6.table)
print("element orders:", Z6.orders)

# Two elements are adjacent when one is a power of the other. The identity
# is a power of everything, so it touches every vertex.
P = power_graph(Z6)
print("edges of P(Z6):", P.edges())
print("edge count:", P.edge_count())

# In Q8 the element -1 is the square of every element of order 4, so it is
# universal too. The order-4 elements only see their own cyclic subgroup.
Q8 = build("Q8")
PQ = power_graph(Q8)
for v in range(Q8.n):
    print(f"Q8 element {v}: order {Q8.orders[v]}, degree {PQ.degree(v)}")

# Prime-power cyclic groups give complete graphs, so the independence
# number is 1. Two primes give 2, and the Klein group is a star with 3 leaves.
for label in ("Z9", "Z12", "Z2xZ2", "S4"):
    print(label, "alpha =", independence_number(power_graph(build(label))))

# Degree distribution of a bigger group, with numpy doing the counting.
S4 = build("S4")
deg = np.array([power_graph(S4).degree(v) for v in range(S4.n)])
for o in sorted(set(S4.orders.tolist())):
    print(f"S4, order {o}: degrees {sorted(set(deg[S4.orders == o].tolist()))}")

# Permutation groups are closed from generators; the product applies the
# left permutation first.
D8 = groups.from_permutations(4, [[1, 2, 3, 0], [3, 2, 1, 0]], label="D8 on a square")
print(D8, "exponent", groups.exponent(D8))

# DOT output for graphviz.
print(to_dot(power_graph(build("E4"))))
