"""Janet basis versus reduced Groebner basis for a small toric ideal.

Four variables x > y > z > w under degrevlex.  Janet completion adds
every nonmultiplicative prolongation that does not reduce to zero, so the
Janet basis is larger than the reduced Groebner basis; autoreduction
shrinks it back.
"""

from pathlib import Path

from toricjanet import autoreduce, is_janet_basis
from toricjanet.completion import JanetCompletion
from toricjanet.formats import parse_ideal

gens, order, names = parse_ideal((Path(__file__).parent / "data" / "small.ideal").read_text())
print("generators:")
for f in gens:
    print("  ", f.format(names))

# The completion object exposes counters for what happened along the way.
run = JanetCompletion(len(names), order)
G = run.run(gens)
print(f"\nJanet basis, {len(G)} elements:")
for g in G:
    print("  ", g.format(names))
print("is a Janet basis:", is_janet_basis(G, order))
print("counters:", run.stats)

R = autoreduce(G, order)
print(f"\nreduced Groebner basis, {len(R)} elements:")
for g in R:
    print("  ", g.format(names))
