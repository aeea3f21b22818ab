"""Enumeration of generalised Kauffman states.

A state places one marker per crossing into one of its four quadrant
regions so that every closed region is occupied exactly once and every
open region at most once.  For a connected diagram with n open strands
this forces exactly n-1 occupied open regions.
"""

from __future__ import annotations

from .diagram import Site, TangleDiagram, TangleError


class KauffmanState:
    """Marker assignment crossing -> quadrant (0..3)."""

    __slots__ = ("markers", "_regions")

    def __init__(self, markers: tuple[int, ...], regions: tuple[str, ...]):
        self.markers = markers
        self._regions = regions  # occupied region id per crossing

    def region_of(self, ci: int) -> str:
        return self._regions[ci]

    def __iter__(self):
        return iter(self.markers)

    def __eq__(self, other):
        return isinstance(other, KauffmanState) and self.markers == other.markers

    def __hash__(self):
        return hash(self.markers)

    def __repr__(self):
        return "KauffmanState(" + " ".join(f"x{i + 1}:q{q}" for i, q in enumerate(self.markers)) + ")"


def enumerate_states(d: TangleDiagram) -> list[KauffmanState]:
    """All generalised Kauffman states, sorted by their marker vectors.

    Backtracking assigns the most constrained crossing first; a closed
    region that can no longer reach exactly one marker prunes the branch.
    Split diagrams have no states.
    """
    if d.split:
        return []
    m = len(d.crossings)
    region_kind = {r.rid: r.kind for r in d.regions}
    quad_region = d.region_of_quadrant

    # remaining[r] = number of unassigned crossings adjacent to region r
    remaining: dict[str, int] = {}
    for ci in range(m):
        for q in range(4):
            r = quad_region[(ci, q)]
            remaining[r] = remaining.get(r, 0) + 1
    filled: dict[str, int] = {r: 0 for r in remaining}
    for r in region_kind:
        remaining.setdefault(r, 0)
        filled.setdefault(r, 0)
        if region_kind[r] == "closed" and remaining[r] == 0:
            return []          # an untouchable closed region: no states

    assigned: list[int] = [-1] * m
    todo = set(range(m))
    out: list[tuple[int, ...]] = []

    def admissible(ci: int) -> list[int]:
        quads = []
        for q in range(4):
            r = quad_region[(ci, q)]
            cap = 1
            if filled[r] < cap:
                quads.append(q)
        return quads

    def feasible() -> bool:
        # every unfilled closed region must still have an adjacent free crossing
        for r, k in region_kind.items():
            if k == "closed" and filled[r] == 0 and remaining[r] == 0:
                return False
        return True

    def rec():
        if not todo:
            out.append(tuple(assigned))
            return
        ci = min(todo, key=lambda i: (len(admissible(i)), i))
        quads = admissible(ci)
        if not quads:
            return
        todo.discard(ci)
        for q in range(4):
            quad = quad_region[(ci, q)]
            remaining[quad] -= 1
        for q in quads:
            r = quad_region[(ci, q)]
            assigned[ci] = q
            filled[r] += 1
            if feasible():
                rec()
            filled[r] -= 1
        assigned[ci] = -1
        for q in range(4):
            quad = quad_region[(ci, q)]
            remaining[quad] += 1
        todo.add(ci)

    rec()
    states = []
    for markers in sorted(out):
        regions = tuple(quad_region[(ci, q)] for ci, q in enumerate(markers))
        # closed regions exactly once
        occupied_closed = [r for r in regions if region_kind[r] == "closed"]
        n_closed = sum(1 for r, k in region_kind.items() if k == "closed")
        if len(occupied_closed) != n_closed or len(set(occupied_closed)) != len(occupied_closed):
            continue
        states.append(KauffmanState(markers, regions))
    return states


def site_of(d: TangleDiagram, x: KauffmanState) -> Site:
    """The set of open regions (named by their arcs) occupied by x."""
    kind = {r.rid: r.kind for r in d.regions}
    occupied = frozenset(r for r in x._regions if kind[r] == "open")
    return Site(occupied)


def states_by_site(d: TangleDiagram) -> dict[Site, list[KauffmanState]]:
    out: dict[Site, list[KauffmanState]] = {s: [] for s in d.sites()}
    for x in enumerate_states(d):
        out.setdefault(site_of(d, x), []).append(x)
    return out


def check_state(d: TangleDiagram, x: KauffmanState) -> None:
    """Assert the occupancy constraints; raises TangleError on violation."""
    kind = {r.rid: r.kind for r in d.regions}
    counts: dict[str, int] = {}
    for r in x._regions:
        counts[r] = counts.get(r, 0) + 1
    for r, k in kind.items():
        c = counts.get(r, 0)
        if k == "closed" and c != 1:
            raise TangleError("E_BAD_STATE", f"closed region {r} holds {c} markers")
        if k != "closed" and c > 1:
            raise TangleError("E_BAD_STATE", f"open region {r} holds {c} markers")
    n_open_markers = sum(c for r, c in counts.items() if kind[r] == "open")
    if n_open_markers != d.n_open - 1:
        raise TangleError("E_BAD_STATE", f"{n_open_markers} open markers, expected {d.n_open - 1}")
