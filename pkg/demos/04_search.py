"""
Extremal sizes by search
========================

Exhaustive enumeration of every vertex-k-maximal hypergraph on a small edge
universe, and sampled saturations for larger n.
"""

import time

from hyperkmax.bounds import conjectured_upper, lower_bound
from hyperkmax.harness import Limits, exhaustive_extremal, sample_saturations

for cell in [(5, 2, 3), (5, 2, 2), (6, 3, 2)]:
    t = time.perf_counter()
    res = exhaustive_extremal(*cell)
    print(cell, res.count_maximal, res.histogram, lower_bound(*cell), f"{time.perf_counter() - t:.2f}s")

# budgets never truncate silently
part = exhaustive_extremal(6, 3, 2, Limits(max_nodes=100))
print(part.complete, part.nodes, len(part.maximal))

# for k < r every saturation lands on the same size
print(sample_saturations(7, 2, 3, 30, seed=1).histogram)

# for graphs the sizes spread out between the two bounds
res = sample_saturations(10, 3, 2, 60, seed=1)
print(dict(sorted(res.histogram.items())), lower_bound(10, 3, 2), conjectured_upper(10, 3, 2))
