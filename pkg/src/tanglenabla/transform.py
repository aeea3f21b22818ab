"""Diagram-level transformations: mirror, orientation reversal, glueing,
closure, mutation, Reidemeister moves and the small surgeries (crossing
switch, oriented smoothing, closed-component deletion) that the property
checks are built from.

All operations are pure: they assemble a fresh validated TangleDiagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagram import Crossing, TangleDiagram, TangleError


def _seeds_of(d: TangleDiagram) -> dict[str, str]:
    return {comp.edges[0]: comp.colour for comp in d.components if comp.edges}


def _dirs_of(d: TangleDiagram) -> dict[str, bool]:
    """Direction flags for boundary-to-boundary edges (rarely needed)."""
    out = {}
    for e in d.edges:
        a, b = d._occ[e]
        if d.attach_of_end(a)[0] == "b" and d.attach_of_end(b)[0] == "b":
            out[e] = not d.incoming[a]
    return out


def _rebuild(d: TangleDiagram, *, crossings=None, boundary=None, arcs=None,
             seeds=None, edge_dirs=None, outer_hint="keep", name=None,
             free_circles=None) -> TangleDiagram:
    return TangleDiagram(
        name if name is not None else d.name,
        d.crossings if crossings is None else crossings,
        d.boundary if boundary is None else boundary,
        d.arcs if arcs is None else arcs,
        _seeds_of(d) if seeds is None else seeds,
        d.outer_hint if outer_hint == "keep" else outer_hint,
        _dirs_of(d) if edge_dirs is None else edge_dirs,
        d.free_circles if free_circles is None else free_circles,
    )


def _fresh_edge(d: TangleDiagram, taken: set[str]) -> str:
    i = len(d.edges) + len(taken) + 1
    while f"e{i}" in d._occ or f"e{i}" in taken:
        i += 1
    taken.add(f"e{i}")
    return f"e{i}"


# ----------------------------------------------------------------------
# elementary symmetries

def mirror_diagram(d: TangleDiagram) -> TangleDiagram:
    """Swap over- and under-strand at every crossing; rotations are kept."""
    new = [Crossing(-c.sign, c.over, c.under) for c in d.crossings]
    return _rebuild(d, crossings=new, name=d.name + "_mirror")


def switch_crossing(d: TangleDiagram, ci: int) -> TangleDiagram:
    if not 0 <= ci < len(d.crossings):
        raise TangleError("E_BAD_LOCATION", f"no crossing {ci}")
    new = list(d.crossings)
    c = new[ci]
    new[ci] = Crossing(-c.sign, c.over, c.under)
    return _rebuild(d, crossings=new)


def reverse_orientation(d: TangleDiagram, colours) -> TangleDiagram:
    """Reverse the flow of every component with a colour in ``colours``."""
    colours = {colours} if isinstance(colours, str) else set(colours)
    unknown = colours - set(d.colours())
    if unknown or not colours:
        raise TangleError("E_UNKNOWN_COLOUR", f"cannot reverse {sorted(unknown or {'nothing'})}")
    new = []
    for c in d.crossings:
        ur = d.colour_of_edge[c.under[0]] in colours
        orv = d.colour_of_edge[c.over[0]] in colours
        under = (c.under[1], c.under[0]) if ur else c.under
        over = (c.over[1], c.over[0]) if orv else c.over
        sign = c.sign * (-1 if ur != orv else 1)
        new.append(Crossing(sign, under, over))
    dirs = _dirs_of(d)
    for e, flag in list(dirs.items()):
        if d.colour_of_edge[e] in colours:
            dirs[e] = not flag
    return _rebuild(d, crossings=new, edge_dirs=dirs, name=d.name + "_rev")


def recolour(d: TangleDiagram, mapping) -> TangleDiagram:
    """Rename strand colours; distinct components may be given one name."""
    seeds = {}
    for comp in d.components:
        if comp.edges:
            seeds[comp.edges[0]] = mapping.get(comp.colour, comp.colour)
    circles = tuple(mapping.get(c, c) for c in d.free_circles)
    return TangleDiagram(d.name, d.crossings, d.boundary, d.arcs, seeds,
                         d.outer_hint, _dirs_of(d), circles)


# ----------------------------------------------------------------------
# splice engine (shared by smoothing, deletion and the removing RM moves)

class _Splicer:
    def __init__(self, d: TangleDiagram):
        self.d = d
        self.parent: dict[str, str] = {}
        self.dead: set[str] = set()   # edges dropped outright (loops, bigon sides)

    def find(self, e: str) -> str:
        while self.parent.get(e, e) != e:
            self.parent[e] = self.parent.get(self.parent[e], self.parent[e])
            e = self.parent[e]
        return e

    def union(self, e1: str, e2: str):
        r1, r2 = self.find(e1), self.find(e2)
        if r1 != r2:
            # keep the lexicographically smaller id
            keep, drop = sorted((r1, r2))
            self.parent[drop] = keep

    def rebuild(self, removed: set[int], name: str, boundary=None, arcs=None,
                outer_hint="keep") -> TangleDiagram:
        d = self.d
        new_crossings = []
        for ci, c in enumerate(d.crossings):
            if ci in removed:
                continue
            new_crossings.append(Crossing(
                c.sign,
                (self.find(c.under[0]), self.find(c.under[1])),
                (self.find(c.over[0]), self.find(c.over[1]))))
        if boundary is None:
            new_boundary = tuple(self.find(e) for e in d.boundary)
        else:
            new_boundary = tuple(boundary)
        new_arcs = d.arcs if arcs is None else tuple(arcs)
        hint = d.outer_hint if outer_hint == "keep" else outer_hint
        # surviving attachment count per representative
        attach: dict[str, int] = {}
        for c in new_crossings:
            for e in (*c.under, *c.over):
                attach[e] = attach.get(e, 0) + 1
        for e in new_boundary:
            attach[e] = attach.get(e, 0) + 1
        reps = {self.find(e) for e in d.edges if e not in self.dead}
        circles = list(d.free_circles)
        seeds: dict[str, str] = {}
        for rep in sorted(reps):
            members = [e for e in d.edges
                       if e not in self.dead and self.find(e) == rep]
            colours = {d.colour_of_edge[e] for e in members}
            if len(colours) != 1:
                raise TangleError("E_ORIENT", "splice would merge different colours")
            if attach.get(rep, 0) == 0:
                circles.append(colours.pop())
            else:
                seeds[rep] = colours.pop()
        # direction flags for merged boundary-to-boundary edges (these only
        # arise in position-preserving rebuilds: smoothing or deletion can
        # reduce an open strand to a bare arc)
        dirs: dict[str, bool] = {}
        m = len(d.crossings)
        if boundary is None:
            for rep in reps:
                spots = [k for k, e in enumerate(new_boundary) if e == rep]
                if len(spots) != 2:
                    continue
                k1, k2 = spots
                tail_first = not d.incoming[4 * m + k1]
                dirs[rep] = tail_first
        return TangleDiagram(name, new_crossings, new_boundary, new_arcs, seeds,
                             hint, dirs, circles)


def smooth_crossing(d: TangleDiagram, ci: int) -> TangleDiagram:
    """Oriented resolution of one crossing (in-ends joined to out-ends
    without crossing).  The two strands must carry the same colour."""
    if not 0 <= ci < len(d.crossings):
        raise TangleError("E_BAD_LOCATION", f"no crossing {ci}")
    c = d.crossings[ci]
    if d.colour_of_edge[c.under[0]] != d.colour_of_edge[c.over[0]]:
        raise TangleError("E_HYPOTHESIS", "smoothing merges strands of different colours")
    sp = _Splicer(d)
    sp.union(c.under[0], c.over[1])
    sp.union(c.over[0], c.under[1])
    return sp.rebuild({ci}, d.name + "_sm")


def delete_component(d: TangleDiagram, colour: str) -> TangleDiagram:
    """Remove a closed component, letting every other strand pass straight
    through its former crossings."""
    victims = [comp for comp in d.components if comp.colour == colour]
    if not victims:
        raise TangleError("E_UNKNOWN_COLOUR", f"no component coloured {colour!r}")
    if any(comp.kind != "closed" for comp in victims):
        raise TangleError("E_HYPOTHESIS", "only closed components can be deleted")
    dead_edges = {e for comp in victims for e in comp.edges}
    sp = _Splicer(d)
    sp.dead.update(dead_edges)
    removed = set()
    for ci, c in enumerate(d.crossings):
        u_dead = c.under[0] in dead_edges
        o_dead = c.over[0] in dead_edges
        if not (u_dead or o_dead):
            continue
        removed.add(ci)
        if u_dead and not o_dead:
            sp.union(c.over[0], c.over[1])
        elif o_dead and not u_dead:
            sp.union(c.under[0], c.under[1])
    new = sp.rebuild(removed, d.name + f"_minus_{colour}")
    circles = tuple(col for col in new.free_circles if col != colour)
    if circles == new.free_circles:
        return new
    return TangleDiagram(new.name, new.crossings, new.boundary, new.arcs,
                         _seeds_of(new), new.outer_hint, _dirs_of(new), circles)


# ----------------------------------------------------------------------
# capping, closure, reopening

def _cap(d: TangleDiagram, arc: str, name: Optional[str] = None) -> TangleDiagram:
    """Join the two boundary ends flanking ``arc`` by an arc inside its
    region.  The region of ``arc`` becomes closed; its two neighbouring arcs
    merge (keeping the lexicographically smaller label)."""
    if arc not in d.arcs or not d.boundary:
        raise TangleError("E_BAD_LOCATION", f"no boundary arc {arc!r}")
    two_n = len(d.boundary)
    if two_n < 2:
        raise TangleError("E_BAD_LOCATION", "nothing to cap")
    k = d.arcs.index(arc)
    m = len(d.crossings)
    e_prev = d.boundary[(k - 1) % two_n]   # end before the arc
    e_next = d.boundary[k]                 # end after the arc
    in_prev = d.incoming[4 * m + (k - 1) % two_n]
    in_next = d.incoming[4 * m + k]
    if two_n == 2 and e_prev == e_next:
        raise TangleError("E_BAD_LOCATION", "capping a crossingless strand")
    if in_prev == in_next:
        raise TangleError("E_ORIENT", "cap would join two inward or two outward ends")
    col1 = d.colour_of_edge[e_prev]
    col2 = d.colour_of_edge[e_next]
    if col1 != col2:
        # the two strands become one; identify their colours
        target = min(col1, col2)
        merging = {e_prev, e_next}
        seeds = {}
        for comp in d.components:
            if not comp.edges:
                continue
            hit = any(e in merging for e in comp.edges)
            seeds[comp.edges[0]] = target if hit else comp.colour
        d = TangleDiagram(d.name, d.crossings, d.boundary, d.arcs, seeds,
                          d.outer_hint, _dirs_of(d), d.free_circles)
    sp = _Splicer(d)
    sp.union(e_prev, e_next)
    keep_positions = [i for i in range(two_n) if i not in ((k - 1) % two_n, k)]
    new_boundary = tuple(sp.find(d.boundary[i]) for i in keep_positions)
    # merge the arcs on both sides of the capped one
    label_prev = d.arcs[(k - 1) % two_n]
    label_next = d.arcs[(k + 1) % two_n]
    merged = min(label_prev, label_next)
    new_arcs = []
    for i in keep_positions:
        lab = d.arcs[i]
        new_arcs.append(merged if lab in (label_prev, label_next) else lab)
    outer_hint = d.outer_hint
    if not new_boundary:
        # closing the last pair of ends: the merged region becomes the outer
        # one; remember it through an edge side
        other_arc = label_prev if label_prev != arc else label_next
        hint = None
        for e in sorted(d.edges):
            for side in ("R", "L"):
                if d.region_beside(e, side) == other_arc and sp.find(e) == e:
                    hint = (e, side)
                    break
            if hint:
                break
        if hint is None:
            for e in sorted(d.edges):
                for side in ("R", "L"):
                    if d.region_beside(e, side) == other_arc:
                        hint = (sp.find(e), side)
                        break
                if hint:
                    break
        if hint is None:
            raise TangleError("E_BAD_LOCATION", "cannot identify the outer region")
        outer_hint = hint
        new_arcs = [merged]
    return sp.rebuild(set(), name or (d.name + "_cap"),
                      boundary=new_boundary, arcs=new_arcs, outer_hint=outer_hint)


def close_tangle(d: TangleDiagram, at: Optional[str] = None) -> TangleDiagram:
    """Close a 2-ended tangle to a link diagram, or a 4-ended tangle to a
    2-ended one, by joining the ends flanking the named arc."""
    if d.n_open == 1:
        arc = at if at is not None else min(d.arcs)
    elif d.n_open == 2:
        if at is None:
            raise TangleError("E_BAD_LOCATION", "closing a 4-ended tangle needs an arc")
        arc = at
    else:
        raise TangleError("E_ARITY", f"cannot close a {2 * d.n_open}-ended tangle")
    return _cap(d, arc, name=d.name + f"_closed_{arc}")


def reopen(d: TangleDiagram, edge: Optional[str] = None) -> TangleDiagram:
    """Cut one strand of a closed (0-ended) diagram next to the outer
    region, producing a 2-ended tangle."""
    if d.boundary or d.split:
        raise TangleError("E_BAD_LOCATION", "reopen expects a closed connected diagram")
    outer = d.arcs[0]
    choices = []
    for e in sorted(d.edges):
        for side in ("L", "R"):
            if d.region_beside(e, side) == outer:
                choices.append((e, side))
    if edge is not None:
        choices = [c for c in choices if c[0] == edge]
    if not choices:
        raise TangleError("E_BAD_LOCATION", "edge does not border the outer region")
    e, side = choices[0]
    taken: set[str] = set()
    e_new = _fresh_edge(d, taken)
    # tail piece keeps the id `e` and exits the disc; the head piece enters
    tail, head = d.flow_ends(e)
    at = d.attach_of_end(head)
    new_crossings = list(d.crossings)
    if at[0] != "x":
        raise TangleError("E_BAD_LOCATION", "cannot reopen a crossingless loop")
    _, ci, s = at
    c = new_crossings[ci]

    def sub(pair, slot_in_pair):
        lst = list(pair)
        lst[slot_in_pair] = e_new
        return tuple(lst)

    strand, is_in = c.role_of_slot(s)
    if strand == "under":
        under = sub(c.under, 0 if is_in else 1)
        new_crossings[ci] = Crossing(c.sign, under, c.over)
    else:
        over = sub(c.over, 0 if is_in else 1)
        new_crossings[ci] = Crossing(c.sign, c.under, over)
    # self-loop edge: `e` may attach twice at the same crossing; only the
    # head occurrence was renamed above, which is what we want.
    if side == "L":
        boundary = (e_new, e)
    else:
        boundary = (e, e_new)
    arcs = ("a", "b")
    seeds = dict(_seeds_of(d))
    seeds[e_new] = d.colour_of_edge[e]
    return TangleDiagram(d.name + "_open", new_crossings, boundary, arcs,
                         seeds, None, {}, d.free_circles)


# ----------------------------------------------------------------------
# glueing

@dataclass
class GlueRecord:
    diagram: TangleDiagram
    arc_map_1: dict[str, str]    # old arc label -> region id of the result
    arc_map_2: dict[str, str]
    iota_1: dict[str, str]       # old colour -> new colour
    iota_2: dict[str, str]


def _arc_labels(n: int) -> list[str]:
    base = "abcdefghijklmnopqrstuvwxyz"
    out = []
    i = 0
    while len(out) < n:
        out.append(base[i % 26] if i < 26 else base[i % 26] + str(i // 26 + 1))
        i += 1
    return out


def glue_diagrams(d1: TangleDiagram, d2: TangleDiagram,
                  start1: int, start2: int, count: int) -> GlueRecord:
    """Glue boundary ends ``start1 .. start1+count-1`` of d1 (ccw) to ends
    ``start2, start2-1, ...`` of d2 (cw), identifying strands end to end.

    Arc labels of the result are assigned fresh, counterclockwise from the
    first surviving d1 end; the returned record maps each input arc to the
    region of the result it became part of, and each input colour to the
    colour it was identified with.
    """
    n1, n2 = len(d1.boundary), len(d2.boundary)
    if not (1 <= count <= min(n1, n2)):
        raise TangleError("E_ARITY", f"cannot glue {count} ends of {n1} and {n2}")
    if count == n1 and count == n2:
        raise TangleError("E_ARITY", "glueing away every end; use close_tangle instead")
    m1 = len(d1.crossings)
    m2 = len(d2.crossings)
    ren2 = {e: "g_" + e for e in d2.edges}

    pairs = []
    for t in range(count):
        p1 = (start1 + t) % n1
        p2 = (start2 - t) % n2
        if d1.incoming[4 * m1 + p1] == d2.incoming[4 * m2 + p2]:
            raise TangleError("E_ORIENT", "glued ends must join an outgoing to an incoming strand")
        pairs.append((p1, p2))

    crossings = list(d1.crossings) + [
        Crossing(c.sign, (ren2[c.under[0]], ren2[c.under[1]]),
                 (ren2[c.over[0]], ren2[c.over[1]])) for c in d2.crossings]

    # union-find on the combined edge set
    parent: dict[str, str] = {}

    def find(e):
        while parent.get(e, e) != e:
            parent[e] = parent.get(parent[e], parent[e])
            e = parent[e]
        return e

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            keep, drop = sorted((ra, rb))
            parent[drop] = keep

    for p1, p2 in pairs:
        union(d1.boundary[p1], ren2[d2.boundary[p2]])

    keep1 = [(start1 + count + t) % n1 for t in range(n1 - count)]
    keep2 = [(start2 + 1 + t) % n2 for t in range(n2 - count)]
    boundary = [find(d1.boundary[i]) for i in keep1]
    boundary += [find(ren2[d2.boundary[i]]) for i in keep2]

    # arc bookkeeping: group old arcs into the arcs/regions of the result
    arc_union: dict[tuple, tuple] = {}

    def afind(x):
        while arc_union.get(x, x) != x:
            arc_union[x] = arc_union.get(arc_union[x], arc_union[x])
            x = arc_union[x]
        return x

    def aunion(x, y):
        rx, ry = afind(x), afind(y)
        if rx != ry:
            arc_union[max(rx, ry)] = min(rx, ry)

    # seam-interior arc pairs (become regions of the result)
    for t in range(1, count):
        aunion((1, d1.arcs[(start1 + t) % n1]), (2, d2.arcs[(start2 - t + 1) % n2]))
    # the two seam-end merges (stay on the boundary)
    aunion((1, d1.arcs[(start1 + count) % n1]), (2, d2.arcs[(start2 - count + 1) % n2]))
    aunion((2, d2.arcs[(start2 + 1) % n2]), (1, d1.arcs[start1 % n1]))

    new_labels = _arc_labels(len(boundary))
    # which result arc does each kept position carry
    arcs_by_class: dict[tuple, str] = {}
    for idx, i in enumerate(keep1):
        arcs_by_class[afind((1, d1.arcs[i]))] = new_labels[idx]
    for idx, i in enumerate(keep2):
        arcs_by_class[afind((2, d2.arcs[i]))] = new_labels[len(keep1) + idx]

    crossings_final = [
        Crossing(c.sign, (find(c.under[0]), find(c.under[1])),
                 (find(c.over[0]), find(c.over[1]))) for c in crossings]

    # identified strands: component-level union-find over both inputs
    comp_of_edge: dict[str, tuple[int, int]] = {}
    for which, d in ((1, d1), (2, d2)):
        for idx, comp in enumerate(d.components):
            for e in comp.edges:
                comp_of_edge[e if which == 1 else ren2[e]] = (which, idx)
    cparent: dict[tuple[int, int], tuple[int, int]] = {}

    def cfind(x):
        while cparent.get(x, x) != x:
            cparent[x] = cparent.get(cparent[x], cparent[x])
            x = cparent[x]
        return x

    for p1, p2 in pairs:
        a = cfind(comp_of_edge[d1.boundary[p1]])
        b = cfind(comp_of_edge[ren2[d2.boundary[p2]]])
        if a != b:
            cparent[max(a, b)] = min(a, b)

    classes: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for which, d in ((1, d1), (2, d2)):
        for idx, comp in enumerate(d.components):
            if comp.edges:
                classes.setdefault(cfind((which, idx)), []).append((which, idx))
    def _comp(key):
        which, idx = key
        return (d1 if which == 1 else d2).components[idx]
    name_taken: set[str] = set()
    seeds: dict[str, str] = {}
    class_colour: dict[tuple[int, int], str] = {}
    for root in sorted(classes):
        members = classes[root]
        base = _comp(members[0]).colour
        colour, k = base, 2
        while colour in name_taken:
            colour = f"{base}_{k}"
            k += 1
        name_taken.add(colour)
        class_colour[root] = colour
        which, idx = members[0]
        e0 = _comp(members[0]).edges[0]
        seeds[find(e0 if which == 1 else ren2[e0])] = colour

    glued = TangleDiagram(f"{d1.name}+{d2.name}", crossings_final, tuple(boundary),
                          tuple(new_labels), seeds,
                          free_circles=d1.free_circles + d2.free_circles)

    # resolve where every old arc ended up
    def region_of_old_arc(d, which, arc):
        cls = afind((which, arc))
        if cls in arcs_by_class:
            return arcs_by_class[cls]
        # interior: identify through an edge side bounding the old region
        mapper = (lambda e: find(e)) if which == 1 else (lambda e: find(ren2[e]))
        for e in sorted(d.edges):
            for side in ("R", "L"):
                if d.region_beside(e, side) == arc:
                    return glued.region_beside(mapper(e), side)
        raise TangleError("E_BAD_LOCATION", f"cannot locate old arc {arc!r}")

    arc_map_1 = {a: region_of_old_arc(d1, 1, a) for a in d1.arcs}
    arc_map_2 = {a: region_of_old_arc(d2, 2, a) for a in d2.arcs}
    iota_1: dict[str, str] = {}
    iota_2: dict[str, str] = {}
    for which, d, iota in ((1, d1, iota_1), (2, d2, iota_2)):
        for idx, comp in enumerate(d.components):
            if not comp.edges:
                iota.setdefault(comp.colour, comp.colour)
                continue
            new_colour = class_colour[cfind((which, idx))]
            if iota.setdefault(comp.colour, new_colour) != new_colour:
                raise TangleError("E_ORIENT",
                                  f"colour {comp.colour!r} maps two ways under glueing")
    return GlueRecord(glued, arc_map_1, arc_map_2, iota_1, iota_2)


# ----------------------------------------------------------------------
# mutation

_AXES = ("x", "y", "z")


def mutate_tangle(d: TangleDiagram, axis: str) -> TangleDiagram:
    """Rotate a 4-ended tangle by pi about the named axis (x horizontal,
    y vertical, z through the viewing direction); arc labels stay attached
    to their boundary positions.  If the rotation lands the strand ends on
    positions with the opposite in/out pattern, every component is reversed.
    """
    if axis not in _AXES:
        raise TangleError("E_BAD_LOCATION", f"axis must be one of {_AXES}")
    if len(d.boundary) != 4:
        raise TangleError("E_NOT_FOURENDED", "mutation needs a 4-ended diagram")
    old_pattern = tuple(not d.incoming[4 * len(d.crossings) + k] for k in range(4))

    if axis == "z":
        boundary = (d.boundary[2], d.boundary[3], d.boundary[0], d.boundary[1])
        crossings = d.crossings
        perm = (2, 3, 0, 1)
    else:
        # reflections compose with an over/under swap at every crossing
        crossings = tuple(Crossing(c.sign, c.over, c.under) for c in d.crossings)
        if axis == "y":
            boundary = (d.boundary[1], d.boundary[0], d.boundary[3], d.boundary[2])
            perm = (1, 0, 3, 2)
        else:
            boundary = (d.boundary[3], d.boundary[2], d.boundary[1], d.boundary[0])
            perm = (3, 2, 1, 0)
    new_pattern = tuple(old_pattern[perm[k]] for k in range(4))
    out = _rebuild(d, crossings=crossings, boundary=boundary,
                   name=d.name + f"_mut{axis}")
    if new_pattern == old_pattern:
        return out
    if new_pattern == tuple(not p for p in old_pattern):
        return reverse_orientation(out, set(out.colours()))
    raise TangleError("E_ORIENT", "mutation cannot match the boundary orientations")


# ----------------------------------------------------------------------
# Reidemeister moves

def _crossing_from_rays(ends, over_tag: str) -> Crossing:
    """Build a crossing from four (angle, edge, strand_tag, incoming) rays.

    The rays are sorted counterclockwise; strand tags pick the over strand.
    """
    tags = {tag for _, _, tag, _ in ends}
    under_tag = (tags - {over_tag}).pop()
    ccw = sorted(ends)
    u_in = next(i for i, (_, _, tag, inc) in enumerate(ccw) if tag == under_tag and inc)
    slots = [ccw[(u_in + k) % 4] for k in range(4)]
    assert slots[2][2] == under_tag and not slots[2][3]
    o_in = 3 if slots[3][3] else 1
    sign = 1 if o_in == 3 else -1
    under = (slots[0][1], slots[2][1])
    over = (slots[o_in][1], slots[(o_in + 2) % 4][1])
    c = Crossing(sign, under, over)
    assert c.slots() == tuple(s[1] for s in slots)
    return c


def _replace_head_occurrence(crossings, boundary, d, edge, new_id):
    """Re-point the head-side occurrence of ``edge`` to a new edge id."""
    tail, head = d.flow_ends(edge)
    at = d.attach_of_end(head)
    crossings = list(crossings)
    boundary = list(boundary)
    if at[0] == "b":
        boundary[at[1]] = new_id
    else:
        _, ci, s = at
        c = crossings[ci]
        strand, is_in = c.role_of_slot(s)
        if strand == "under":
            pair = list(c.under)
            pair[0 if is_in else 1] = new_id
            crossings[ci] = Crossing(c.sign, tuple(pair), c.over)
        else:
            pair = list(c.over)
            pair[0 if is_in else 1] = new_id
            crossings[ci] = Crossing(c.sign, c.under, tuple(pair))
    return crossings, boundary


def rm1_insert(d: TangleDiagram, edge: str, side: str, sign: int) -> TangleDiagram:
    """Insert a kink on an edge; ``side`` ('L'/'R' of the flow) places the
    loop, ``sign`` picks the new crossing's sign."""
    if edge not in d._occ or side not in ("L", "R") or sign not in (1, -1):
        raise TangleError("E_BAD_LOCATION", f"bad kink location {edge!r}/{side}/{sign}")
    taken: set[str] = set()
    k2 = _fresh_edge(d, taken)
    k3 = _fresh_edge(d, taken)
    over_first = (sign > 0) == (side == "R")
    # passage 1: edge -> loop (k2); passage 2: k2 -> k3
    if side == "R":
        rays = [(270.0, edge, "P1", True), (45.0, k2, "P1", False),
                (315.0, k2, "P2", True), (135.0, k3, "P2", False)]
    else:
        rays = [(270.0, edge, "P1", True), (135.0, k2, "P1", False),
                (225.0, k2, "P2", True), (45.0, k3, "P2", False)]
    c = _crossing_from_rays(rays, "P1" if over_first else "P2")
    assert c.sign == sign
    crossings, boundary = _replace_head_occurrence(d.crossings, d.boundary, d, edge, k3)
    crossings.append(c)
    seeds = dict(_seeds_of(d))
    seeds.setdefault(edge, d.colour_of_edge[edge])
    return TangleDiagram(d.name + "_rm1", crossings, tuple(boundary), d.arcs, seeds,
                         d.outer_hint, _dirs_of(d), d.free_circles)


def find_kinks(d: TangleDiagram) -> list[int]:
    """Crossings carrying a removable kink (an edge on two adjacent slots)."""
    out = []
    for ci, c in enumerate(d.crossings):
        slots = c.slots()
        if any(slots[s] == slots[(s + 1) % 4] for s in range(4)):
            out.append(ci)
    return out


def rm1_remove(d: TangleDiagram, ci: int) -> TangleDiagram:
    if ci not in find_kinks(d):
        raise TangleError("E_BAD_LOCATION", f"crossing {ci} carries no kink")
    c = d.crossings[ci]
    slots = c.slots()
    s = next(s for s in range(4) if slots[s] == slots[(s + 1) % 4])
    a, b = slots[(s + 2) % 4], slots[(s + 3) % 4]
    if a == b:
        raise TangleError("E_DISCONNECTS", "removing the kink leaves a bare circle")
    sp = _Splicer(d)
    sp.dead.add(slots[s])
    sp.union(a, b)
    try:
        out = sp.rebuild({ci}, d.name + "_rm1r")
    except TangleError as ex:
        if ex.code == "E_DISCONNECTED":
            raise TangleError("E_DISCONNECTS",
                              "kink removal leaves an invalid diagram") from ex
        raise
    if out.split != d.split:
        raise TangleError("E_DISCONNECTS", "kink removal disconnects the diagram")
    return out


def rm2_insert(d: TangleDiagram, edge1: str, side1: str, edge2: str, side2: str,
               first_over: bool = True) -> TangleDiagram:
    """Push edge1 across edge2; both named sides must face a common region."""
    if d.split:
        raise TangleError("E_BAD_LOCATION", "no moves on split diagrams")
    f1 = d.region_beside(edge1, side1)
    f2 = d.region_beside(edge2, side2)
    if edge1 == edge2 or f1 is None or f1 != f2:
        raise TangleError("E_BAD_LOCATION", "edges do not face a common region")
    taken: set[str] = set()
    a2, a3 = _fresh_edge(d, taken), _fresh_edge(d, taken)
    b2, b3 = _fresh_edge(d, taken), _fresh_edge(d, taken)
    e1_up = side1 == "R"     # local model: E1 on the left, flowing up if 'R'
    e2_down = side2 == "R"   # E2 on the right, flowing down if 'R'
    # pieces: edge1 keeps its id on the tail side; a2 = finger tip, a3 = rest
    #         edge2 keeps its id on the tail side; b2 = middle, b3 = rest
    if e1_up:
        a_south, a_north = edge1, a3
    else:
        a_south, a_north = a3, edge1
    if e2_down:
        b_north, b_south = edge2, b3
    else:
        b_north, b_south = b3, edge2
    x_rays = [(0.0, a2, "A", e1_up), (180.0, a_north, "A", not e1_up),
              (90.0, b_north, "B", e2_down), (270.0, b2, "B", not e2_down)]
    y_rays = [(0.0, a2, "A", not e1_up), (180.0, a_south, "A", e1_up),
              (90.0, b2, "B", e2_down), (270.0, b_south, "B", not e2_down)]
    over = "A" if first_over else "B"
    cx = _crossing_from_rays(x_rays, over)
    cy = _crossing_from_rays(y_rays, over)
    crossings, boundary = _replace_head_occurrence(d.crossings, d.boundary, d, edge1, a3)
    crossings, boundary = _replace_head_occurrence(crossings, boundary,
                                                   d, edge2, b3)
    crossings.extend([cx, cy])
    seeds = dict(_seeds_of(d))
    seeds.setdefault(edge1, d.colour_of_edge[edge1])
    seeds.setdefault(edge2, d.colour_of_edge[edge2])
    return TangleDiagram(d.name + "_rm2", crossings, tuple(boundary), d.arcs, seeds,
                         d.outer_hint, _dirs_of(d), d.free_circles)


def find_bigons(d: TangleDiagram) -> list[str]:
    """Closed regions removable by an RM2 move."""
    out = []
    for r in d.regions:
        if r.kind != "closed" or len(r.corners) != 2:
            continue
        (c1, q1), (c2, q2) = r.corners
        if c1 == c2:
            continue
        e1 = d.crossings[c1].slots()[(q1 + 1) % 4]
        e2 = d.crossings[c2].slots()[(q2 + 1) % 4]
        if e1 == e2:
            continue
        # one strand must be over at both crossings
        over1 = d.crossings[c1].slots().index(e1) in (1, 3)
        # e1 runs from c1's corner to c2; which slot does it take there?
        s_at_c2 = [s for s in range(4) if d.crossings[c2].slots()[s] == e1]
        if not s_at_c2:
            continue
        over1b = s_at_c2[0] in (1, 3)
        if over1 == over1b:
            out.append(r.rid)
    return out


def rm2_remove(d: TangleDiagram, region: str) -> TangleDiagram:
    if region not in find_bigons(d):
        raise TangleError("E_BAD_LOCATION", f"region {region!r} is not a removable bigon")
    r = d.region(region)
    (c1, q1), (c2, q2) = r.corners
    e1 = d.crossings[c1].slots()[(q1 + 1) % 4]
    e2 = d.crossings[c2].slots()[(q2 + 1) % 4]
    sp = _Splicer(d)
    sp.dead.update((e1, e2))
    for g in (e1, e2):
        # outer edges of strand g at both crossings
        outs = []
        for ci in (c1, c2):
            slots = d.crossings[ci].slots()
            s = slots.index(g)
            outs.append(slots[(s + 2) % 4])
        sp.union(outs[0], outs[1])
    try:
        out = sp.rebuild({c1, c2}, d.name + "_rm2r")
    except TangleError as ex:
        if ex.code == "E_DISCONNECTED":
            raise TangleError("E_DISCONNECTS",
                              "bigon removal leaves an invalid diagram") from ex
        raise
    if out.split and not d.split:
        raise TangleError("E_DISCONNECTS", "bigon removal disconnects the diagram")
    return out


def find_triangles(d: TangleDiagram) -> list[str]:
    """Closed triangular regions admitting a slide move (transitive stacking)."""
    out = []
    for r in d.regions:
        if r.kind != "closed" or len(r.corners) != 3:
            continue
        cis = [c for c, _ in r.corners]
        if len(set(cis)) != 3:
            continue
        edges = [d.crossings[c].slots()[(q + 1) % 4] for c, q in r.corners]
        if len(set(edges)) != 3:
            continue
        # over/under relations between the three strands must be acyclic
        beats = set()
        for c, q in r.corners:
            slots = d.crossings[c].slots()
            arrive = slots[q]
            depart = slots[(q + 1) % 4]
            if arrive not in edges:
                break
            hi = arrive if slots.index(arrive) in (1, 3) else depart
            lo = depart if hi == arrive else arrive
            beats.add((hi, lo))
        else:
            e0, e1, e2 = edges
            cyclic = ({(e0, e1), (e1, e2), (e2, e0)} <= beats or
                      {(e1, e0), (e2, e1), (e0, e2)} <= beats)
            if not cyclic:
                out.append(r.rid)
    return out


def rm3(d: TangleDiagram, region: str) -> TangleDiagram:
    """Slide move across a triangular region: each of the three strands
    passes its two crossings in the opposite order afterwards."""
    if region not in find_triangles(d):
        raise TangleError("E_BAD_LOCATION", f"region {region!r} admits no slide move")
    r = d.region(region)
    tri_edges = []
    for c, q in r.corners:
        e = d.crossings[c].slots()[(q + 1) % 4]
        if e not in tri_edges:
            tri_edges.append(e)

    new_slots = {ci: list(d.crossings[ci].slots()) for ci, _ in r.corners}
    for f in tri_edges:
        tail, head = d.flow_ends(f)
        _, ci, p_out = d.attach_of_end(tail)
        _, cj, q_in = d.attach_of_end(head)
        p_in = (p_out + 2) % 4
        q_out = (q_in + 2) % 4
        P = d.crossings[ci].slots()[p_in]
        Q = d.crossings[cj].slots()[q_out]
        new_slots[ci][p_in] = f
        new_slots[ci][p_out] = Q
        new_slots[cj][q_in] = P
        new_slots[cj][q_out] = f

    crossings = list(d.crossings)
    for ci, slots in new_slots.items():
        c = d.crossings[ci]
        under = (slots[0], slots[2])
        oi = c.over_in_slot
        over = (slots[oi], slots[(oi + 2) % 4])
        crossings[ci] = Crossing(c.sign, under, over)
    return _rebuild(d, crossings=crossings, name=d.name + "_rm3")


RM_MOVES = ("RM1_insert", "RM1_remove", "RM2_insert", "RM2_remove", "RM3")


def apply_rm_move(d: TangleDiagram, move: str, location) -> TangleDiagram:
    """Dispatch a Reidemeister move; ``location`` is move-specific:

    RM1_insert: (edge, side, sign); RM1_remove: crossing index;
    RM2_insert: (edge1, side1, edge2, side2, first_over);
    RM2_remove / RM3: region id.
    """
    if move == "RM1_insert":
        return rm1_insert(d, *location)
    if move == "RM1_remove":
        return rm1_remove(d, location)
    if move == "RM2_insert":
        return rm2_insert(d, *location)
    if move == "RM2_remove":
        return rm2_remove(d, location)
    if move == "RM3":
        return rm3(d, location)
    raise TangleError("E_BAD_LOCATION", f"unknown move {move!r}")
