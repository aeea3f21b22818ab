"""Symmetry laws in action: mirror images, orientation reversal with its
linking-number correction, and mutation invariance."""

from tanglenabla import corpus, transform
from tanglenabla.diagram import Site, linking_number
from tanglenabla.nabla import nabla_all, nabla_hat_all

d = corpus.load("clasp")
print("clasp values:", {str(s): p.pretty() for s, p in nabla_all(d).items()})

m = transform.mirror_diagram(d)
print("mirror:      ", {str(s): p.pretty() for s, p in nabla_all(m).items()})
print("(equals the original with every variable inverted)")

lk = linking_number(d, "t1", "all")
r = transform.reverse_orientation(d, {"t1"})
print(f"\nreversing t1 multiplies the hatted sum by h^{lk} after t1 -> 1/(h t1):")
s = Site(frozenset({"t"}))
print("  before:", nabla_hat_all(d)[s].pretty())
print("  after: ", nabla_hat_all(r)[s].pretty())

p = transform.recolour(corpus.load("pretzel_2m3"), {"q": "p"})
print("\nmutation invariance on the pretzel (open colours identified):")
base = nabla_all(p)
for axis in "xyz":
    mut = nabla_all(transform.mutate_tangle(p, axis))
    same = all(base[s] == mut[s] for s in base)
    print(f"  axis {axis}: all four site values unchanged: {same}")

t = corpus.load("mutorient")
rev = transform.reverse_orientation(t, {"r"})
print("\nreversing only the closed strand of the counterexample tangle:")
print("  before:", nabla_all(t)[Site(frozenset({'b'}))].pretty())
print("  after: ", nabla_all(rev)[Site(frozenset({'b'}))].pretty())
print("(unequal: this is why mutation must reverse all strands together)")
