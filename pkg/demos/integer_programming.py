"""Integer programming with toric ideals.

To minimise c.x subject to A x = b over the nonnegative integers, build
generators of the toric ideal of A from its integer kernel, complete them
under the cost order, and reduce the monomial of any feasible point.  The
normal form is an optimum.
"""

import itertools

from toricjanet import ToricInstance, ip_solve, kernel_lattice, toric_generators
from toricjanet.monomials import Weight

# Make change for 13 with coins 1, 2, 5 and 10 using as few coins as possible.
A = [[1, 2, 5, 10]]
inst = ToricInstance(A, b=(13,), c=(1, 1, 1, 1), x0=(13, 0, 0, 0))

print("kernel basis:", [v.u for v in kernel_lattice(A)])
order = Weight(inst.c)
print("toric generators:", [g.format(["p", "q", "r", "s"]) for g in toric_generators(A, order)])

path = []
x = ip_solve(inst, path=path)
print("optimum:", x, "coins:", inst.cost(x))
print("reduction path costs:", [inst.cost(u) for u in path])

# Check against brute force.
best = min(inst.cost(y) for y in itertools.product(range(14), range(7), range(3), range(2))
           if inst.feasible(y))
assert inst.cost(x) == best

# A weighted objective on two constraints.
A = [[1, 1, 1, 1], [0, 1, 2, 3]]
inst = ToricInstance(A, b=(6, 9), c=(3, 1, 4, 1), x0=(0, 3, 3, 0))
x = ip_solve(inst)
print("\nsecond instance optimum:", x, "cost:", inst.cost(x))
