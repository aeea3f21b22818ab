"""The randomized property catalogue: every identity in the library,
exercised on seeded random diagrams with reproducible reports."""

from tanglenabla.verify import PROPERTIES, random_diagram, run_check
import random

rng = random.Random(0)
d = random_diagram(rng, n_ends=4, n_crossings=5)
print("a random 4-ended diagram:")
from tanglenabla.diagram import serialize
print(serialize(d))

for prop in sorted(PROPERTIES):
    rep = run_check(prop, seed=1, cases=10)
    note = f"  [{rep.note}]" if rep.note else ""
    print(f"{prop:26s} {'pass' if rep.passed else 'FAIL'}"
          f" ({rep.cases} cases){note}")
