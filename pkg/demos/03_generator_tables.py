"""The bigraded generator table of the (2,-3)-pretzel tangle and its
decategorification down to the site polynomials."""

from tanglenabla import corpus
from tanglenabla.gradings import (euler_characteristics, generator_gradings,
                                  poincare_table)
from tanglenabla.nabla import nabla_all

d = corpus.load("pretzel_2m3")
gens = generator_gradings(d)
print(f"{len(gens)} generators over 4 sites:")
for g in sorted(gens, key=lambda g: (str(g.site), g.alexander2, g.delta2)):
    a = " ".join(f"{v}^{e/2:+g}" for v, e in g.alexander2)
    print(f"  site {g.site}: {a}  delta^{g.delta2/2:+g}  h={g.h}")

print("\nalternating sums reproduce the site polynomials exactly:")
chis = euler_characteristics(d)
nabs = nabla_all(d)
for s in sorted(chis, key=str):
    mark = "==" if chis[s] == nabs[s] else "!="
    print(f"  site {s}: chi = {chis[s].pretty()}  {mark}  nabla")

print("\ngrouped table (site, Alexander, delta, h, count):")
for row in poincare_table(d):
    print(" ", row)
