"""The Janet tree of five monomials and how a divisor search walks it.

Each node is printed as ``(variable, degree)``.  ``ndg`` moves to the next
degree of the same variable and ``nvr`` to the next variable, skipping
variables that no monomial below uses.
"""

from toricjanet.janet import JanetTree, j_divisor_naive, nm_vars
from toricjanet.monomials import format_monomial

names = ["x", "y", "z"]
U = [(2, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2)]
tree = JanetTree.build(3, U)
print(tree.dump(names))

print("\nnonmultiplicative variables:")
for u, nm in nm_vars(U).items():
    print(f"  {format_monomial(u, names):6} {{{', '.join(names[v] for v in sorted(nm))}}}")

# Every query gets at most one Janet divisor.  The tree finds it in a
# number of steps bounded by variables plus degree; the naive search
# scans all of U.
for w in [(2, 2, 1), (1, 1, 1), (1, 0, 0), (0, 3, 2)]:
    d = tree.find(w)
    assert d == j_divisor_naive(U, w)
    shown = format_monomial(d, names) if d else "none"
    print(f"J-divisor of {format_monomial(w, names):8} -> {shown:6} ({tree.visit_count(w)} nodes visited)")

# Insertion and removal keep the tree identical to a fresh build.
tree.remove((0, 1, 1))
tree.insert((0, 1, 1))
assert tree.dump() == JanetTree.build(3, U).dump()
