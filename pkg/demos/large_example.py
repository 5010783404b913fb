"""A larger toric ideal in five variables.

The Janet basis has thousands of elements while the reduced Groebner basis
has 19: involutive completion keeps every prolongation-closed element,
which is costly for toric ideals with high-degree generators.
"""

import time
from pathlib import Path

from toricjanet import autoreduce, binomial_janet_basis, buchberger
from toricjanet.formats import parse_ideal

gens, order, names = parse_ideal((Path(__file__).parent / "data" / "large.ideal").read_text())

t0 = time.perf_counter()
stats = {}
G = binomial_janet_basis(gens, order, stats=stats)
t1 = time.perf_counter()
print(f"Janet basis: {len(G)} elements in {t1 - t0:.2f}s")
print("  highest:", *(g.format(names) for g in G[:3]), sep="\n    ")
print("  lowest: ", G[-1].format(names))
print(f"  {stats['prolongations']} prolongations, {stats['criteria']} discarded by the criteria")

R = autoreduce(G, order)
print(f"\nreduced Groebner basis: {len(R)} elements")
for g in R:
    print("  ", g.format(names))

t0 = time.perf_counter()
B = buchberger(gens, order)
print(f"\nBuchberger: {len(B)} elements in {time.perf_counter() - t0:.2f}s, "
      f"same reduced basis: {set(autoreduce(B, order)) == set(R)}")
