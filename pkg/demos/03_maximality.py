"""
Maximality and saturation
=========================

A hypergraph is vertex-k-maximal when no sub-hypergraph has connectivity
above k but every added edge creates one.
"""

from hyperkmax import empty, h_l, is_vertex_k_maximal, saturate
from hyperkmax.maximality import recheck_certificates

h = h_l(6, 2, 3)
rep = is_vertex_k_maximal(h, 2)
print(rep.verdict, rep.kappa, rep.kappa_bar)

# each missing edge comes with a vertex set that becomes 3-connected
for edge, witness in rep.certificates[:3]:
    print(edge, sorted(witness))
print(recheck_certificates(h, rep))

# removing an edge breaks maximality, and the report says which edge fits back
print(is_vertex_k_maximal(h.remove_edge(h.masks[0]), 2).counterexample)

# greedy saturation from nothing; random orders give different graphs
for seed in range(5):
    g = saturate(empty(8, 2), 2, order="random", seed=seed)
    print(seed, g.m, is_vertex_k_maximal(g, 2).is_maximal)
