"""
Checking claims over a grid
===========================

Each claim runs over (n, k, r) cells and reports verified, violated or
skipped for every cell.
"""

import tempfile

from hyperkmax.harness import CLAIMS, Settings, default_grid, verify_claim, write_run

for cid, claim in CLAIMS.items():
    print(f"{cid:9s} {'asserted' if claim.asserted else 'reported'}  {claim.summary}")

settings = Settings(seed=1, samples=2)
rep = verify_claim("thm3.2", default_grid("thm3.2", 7, [2, 3], [2, 3]), settings)
print(rep.counts)

# cells outside the hypothesis are skipped with a reason
print([(c.n, c.k, c.r, c.reason) for c in rep.cells if c.status == "skipped"][:3])

# the k >= r upper bound is only observed
conj = verify_claim("conj2", [(n, 2, 2) for n in range(3, 9)], settings)
for c in conj.cells:
    print(c.n, c.status, c.details["observed_max"], c.details["conj_upper"])

with tempfile.TemporaryDirectory() as d:
    run = write_run(rep, d, stamp="demo")
    print(sorted(p.name for p in run.iterdir()))
