"""
Building r-uniform hypergraphs
==============================

Edges are stored as integer bit masks, vertices are 0..n-1.
"""

from hyperkmax import Hypergraph, complement, complete, empty, h_l, h_u, induced, r_join
from hyperkmax.bounds import bounds_record

# a small 3-uniform hypergraph, edges in any order
h = Hypergraph.from_edges(5, 3, [(2, 3, 4), (0, 1, 2), (0, 2, 3)])
print(h.edges)  # canonical lexicographic order
print(h.degrees(), h.min_degree(), h.max_degree())

# set algebra
print(complement(h).m, "+", h.m, "=", complete(5, 3).m)

# the r-join adds every r-set that meets both sides
j = r_join(complete(2, 3), empty(3, 3))
print(j.n, j.m)  # 5 vertices, C(5,3) - C(3,3) - C(2,3) = 9 edges

# the lower construction is exactly such a join
print(h_l(5, 2, 3) == j)

# induced sub-hypergraphs are relabelled to 0..|Y|-1
sub, labels = induced(complete(6, 3), 0b101011)
print(sub.n, sub.m, labels)

# the upper construction: an edgeless hub joined to disjoint cliques
for n in range(4, 9):
    rec = bounds_record(n, 2, 3)
    print(n, h_u(n, 2, 3).m, rec.hu_size, rec.lower, rec.conj_upper)
