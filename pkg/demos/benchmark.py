"""How many tree nodes a Janet-divisor search visits.

Each search visits at most ``n + d + 1`` nodes for ``n`` variables and
maximal degree ``d``, so the ratio of visits to ``n + d`` stays below
VISIT_CONSTANT on the whole sweep.  The linear scan tests every stored
monomial.
"""

import sys

from toricjanet.bench import VISIT_CONSTANT, run_bench, write_csv

rows = run_bench(seed=0, queries=200)
write_csv(rows, sys.stdout)

tree = [r for r in rows if r["structure"] == "janet-tree"]
worst = max(r["mean_visits"] / (r["n"] + r["d"]) for r in tree)
print(f"\nlargest mean_visits / (n + d): {worst:.3f} (bound {VISIT_CONSTANT})")
