"""Independent reference computations used by the test suite.

These deliberately avoid the quadrant-code machinery: states are checked
against a raw 4^m filter, and the empty-site polynomial of 2-ended tangles
against a crossing-switch resolution that only knows the skein identity,
descending diagrams and split detection.
"""

from itertools import product

from tanglenabla import transform as tr
from tanglenabla.diagram import TangleDiagram, TangleError
from tanglenabla.laurent import LaurentPoly, binomial


def brute_force_states(d: TangleDiagram) -> list[tuple[int, ...]]:
    """All marker assignments passing the occupancy constraints, from the
    full 4^m enumeration."""
    if d.split:
        return []
    m = len(d.crossings)
    kind = {r.rid: r.kind for r in d.regions}
    out = []
    for markers in product(range(4), repeat=m):
        counts: dict[str, int] = {}
        for ci, q in enumerate(markers):
            rid = d.region_of_quadrant[(ci, q)]
            counts[rid] = counts.get(rid, 0) + 1
        ok = all(counts.get(r, 0) == 1 for r, k in kind.items() if k == "closed")
        ok = ok and all(c <= 1 for r, c in counts.items() if kind[r] != "closed")
        if ok:
            out.append(markers)
    return out


def _first_ascending_crossing(d: TangleDiagram):
    """Index of the first crossing met as an under-pass on the canonical
    walk (open strand from its inward end, then closed strands), or None
    for a descending diagram."""
    visited: set[int] = set()
    order = sorted(d.components, key=lambda c: (c.kind != "open", c.edges))
    for comp in order:
        for e in comp.edges:
            _, head = d.flow_ends(e)
            at = d.attach_of_end(head)
            if at[0] != "x":
                continue
            _, ci, slot = at
            if ci in visited:
                continue
            visited.add(ci)
            if slot == 0:   # first passage is the under-strand
                return ci
    return None


def _simplified(d: TangleDiagram):
    """Greedy kink/bigon removal; None means the tangle fell apart (so the
    empty-site polynomial vanishes)."""
    while True:
        kinks = tr.find_kinks(d)
        if kinks:
            try:
                d = tr.rm1_remove(d, kinks[0])
                continue
            except TangleError:
                return None
        bigons = tr.find_bigons(d)
        if bigons:
            try:
                d = tr.rm2_remove(d, bigons[0])
                continue
            except TangleError:
                return None
        return d


def conway_skein(d: TangleDiagram, depth: int = 60) -> LaurentPoly:
    """The single-variable empty-site polynomial of a 2-ended tangle,
    computed purely by skein resolution in the variable t."""
    if depth < 0:
        raise RuntimeError("skein resolution did not terminate")
    if d.n_open != 1:
        raise ValueError("the skein resolver works on 2-ended tangles")
    d = tr.recolour(d, {c: "t" for c in d.colours()})
    if d.split:
        return LaurentPoly.zero()
    d2 = _simplified(d)
    if d2 is None:
        return LaurentPoly.zero()
    d = d2
    if d.split:
        return LaurentPoly.zero()
    if not d.crossings:
        return LaurentPoly.integer(1) if len(d.components) == 1 else LaurentPoly.zero()
    ci = _first_ascending_crossing(d)
    if ci is None:
        # descending: an unknot, or an unlink (hence split) otherwise
        return LaurentPoly.integer(1) if len(d.components) == 1 else LaurentPoly.zero()
    switched = tr.switch_crossing(d, ci)
    smoothed = tr.smooth_crossing(d, ci)
    sm_val = conway_skein(smoothed, depth - 1)
    sw_val = conway_skein(switched, depth - 1)
    t = binomial("t")
    if d.crossings[ci].sign > 0:
        return sw_val + t * sm_val
    return sw_val - t * sm_val
