"""Two-ended tangles and the Conway potential: the trefoil value, and the
closure of a 4-ended tangle at opposite sites giving the same link."""

from tanglenabla import corpus, transform
from tanglenabla.diagram import Site
from tanglenabla.nabla import conway_potential, nabla_at_site

tre = corpus.load("trefoil")
print("trefoil tangle:", nabla_at_site(tre, Site(frozenset())).pretty())
print("potential:     ", conway_potential(tre).pretty())

p = corpus.load("pretzel_2m3")
for arc in ("a", "c"):
    closed = transform.close_tangle(p, arc)
    cp = conway_potential(closed)
    print(f"\npretzel closed at {arc}: open colour {cp.colour}")
    print("  numerator:", cp.numerator.pretty())
    print("  potential:", cp.pretty())
print("\nboth closures represent the same link, so the potentials agree.")
