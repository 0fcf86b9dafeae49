"""
Vertex connectivity
===================

Deleting a vertex set removes every edge that touches it, so cuts are found
by direct search over vertex subsets in increasing size.
"""

from hyperkmax import complete, h_l, kappa, kappa_bar, kappa_bar_bruteforce, min_vertex_cut, separation_triple
from hyperkmax import Hypergraph

# complete hypergraphs: kappa drops by one for every extra vertex in an edge
for r in (2, 3, 4):
    print(r, [kappa(complete(n, r)) for n in range(r, 10)])

# a path graph; the first minimum cut in lexicographic order is reported
path = Hypergraph.from_edges(5, 2, [(0, 1), (1, 2), (2, 3), (3, 4)])
print(min_vertex_cut(path))

# kappa_bar looks inside: a 4-clique hanging off a path
h = Hypergraph.from_edges(7, 2, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6)])
print(kappa(h), kappa_bar(h))
print(kappa_bar_bruteforce(h) == kappa_bar(h))

# separating the lower construction splits off one outside vertex with the hub
tri = separation_triple(h_l(7, 2, 3))
print(sorted(tri.s), sorted(tri.side1), sorted(tri.side2), tri.n1, tri.n2)
