"""Oriented tangle diagrams as planar combinatorial maps.

A diagram is stored declaratively, close to its text form: a list of
crossings (each naming its under/over edge pairs, in flow order, plus a
chirality sign), the counterclockwise sequence of boundary end edges
interleaved with arc labels, and a colour per strand component.  All faces,
orientations and adjacency data are derived and validated on construction.

Conventions (used consistently everywhere):

* Rotations are counterclockwise in the standard drawing plane (x right,
  y up, observer on the +z side).
* The four slots of a crossing are numbered ccw with slot 0 the incoming
  under-strand end.  A crossing is positive exactly when the over-strand
  enters at slot 3, i.e. ccw slot order (u_in, o_out, u_out, o_in);
  negative crossings have ccw order (u_in, o_in, u_out, o_out).
* Quadrant q of a crossing is the corner between slots q and q+1 (mod 4).
* Boundary arcs: arc k precedes boundary end k counterclockwise, so arc k
  runs from end k-1 to end k.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional


class TangleError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(f"{code}: {message}")
        self.code = code


RESERVED_NAMES = {"h", "delta"}
_TOKEN = re.compile(r"^[A-Za-z][A-Za-z0-9_]*$")


@dataclass(frozen=True)
class Crossing:
    """One 4-valent vertex; edge ids listed in flow order per strand."""

    sign: int
    under: tuple[str, str]  # (incoming edge, outgoing edge)
    over: tuple[str, str]

    def slots(self) -> tuple[str, str, str, str]:
        """Edge ids at slots 0..3 in ccw order (slot 0 = under-in)."""
        if self.sign > 0:
            return (self.under[0], self.over[1], self.under[1], self.over[0])
        return (self.under[0], self.over[0], self.under[1], self.over[1])

    @property
    def over_in_slot(self) -> int:
        return 3 if self.sign > 0 else 1

    def role_of_slot(self, s: int) -> tuple[str, bool]:
        """(strand, incoming) for slot s, strand in {'under','over'}."""
        if s == 0:
            return "under", True
        if s == 2:
            return "under", False
        return "over", s == self.over_in_slot


@dataclass(frozen=True)
class Component:
    colour: str
    kind: str                    # 'open' | 'closed'
    edges: tuple[str, ...]       # in flow order


@dataclass(frozen=True)
class Region:
    rid: str
    kind: str                    # 'open' | 'closed' | 'outer'
    corners: tuple[tuple[int, int], ...]   # (crossing index, quadrant)
    arcs: tuple[str, ...]


@dataclass(frozen=True)
class Site:
    """A choice of n-1 boundary arcs (equivalently open regions)."""

    arcs: frozenset[str]

    @classmethod
    def of(cls, *labels: str) -> "Site":
        return cls(frozenset(labels))

    def __str__(self):
        return ",".join(sorted(self.arcs)) if self.arcs else "-"


# attachment encoding used in derived tables:
#   ('x', crossing_index, slot)  or  ('b', boundary_position)
Attach = tuple


class TangleDiagram:
    """Validated oriented tangle diagram.  Treat instances as immutable."""

    def __init__(self, name: str, crossings: Iterable[Crossing],
                 boundary: Iterable[str], arcs: Iterable[str],
                 colour_seeds: Mapping[str, str],
                 outer_hint: Optional[tuple[str, str]] = None,
                 edge_dirs: Optional[Mapping[str, bool]] = None,
                 free_circles: Iterable[str] = ()):
        self.name = name
        self.crossings = tuple(crossings)
        self.boundary = tuple(boundary)
        self.arcs = tuple(arcs)
        self.outer_hint = outer_hint
        # crossingless closed strands with no attachments; their presence
        # always makes the diagram split
        self.free_circles = tuple(free_circles)
        # edge_dirs: for edges whose direction cannot be inferred from any
        # crossing (boundary-to-boundary strands): True = flows from its
        # first occurrence in scan order to the second.
        self._edge_dirs = dict(edge_dirs or {})
        self._validate_shape()
        self._resolve_ends()
        self._orient_edges()
        self._walk_components(colour_seeds)
        # split = a closed part of the diagram is disconnected from the rest
        # (then the invariants vanish); a disconnected OPEN part instead makes
        # the diagram invalid, since some open region meets the boundary
        # circle in more than one arc.
        self.split = bool(self.free_circles) or not self._classify_pieces()
        if not self.split:
            self._trace_faces()

    # ------------------------------------------------------------------
    # shape / occurrence resolution

    def _validate_shape(self):
        if len(self.boundary) % 2:
            raise TangleError("E_SYNTAX", "odd number of boundary ends")
        if self.boundary:
            if len(self.arcs) != len(self.boundary):
                raise TangleError("E_SYNTAX", "need one arc label per boundary end")
        elif len(self.arcs) != 1:
            raise TangleError("E_SYNTAX", "a closed diagram carries exactly one arc label")
        if len(set(self.arcs)) != len(self.arcs):
            raise TangleError("E_SYNTAX", "duplicate arc label")
        for a in self.arcs:
            if not _TOKEN.match(a):
                raise TangleError("E_SYNTAX", f"bad arc label {a!r}")
        if not self.boundary and self.outer_hint is None:
            raise TangleError("E_SYNTAX", "closed diagram needs an outer-region hint")

    def _resolve_ends(self):
        """Number the edge ends: crossing ci slot s -> 4*ci+s, boundary k -> 4m+k."""
        m = len(self.crossings)
        occ: dict[str, list[int]] = {}
        for ci, c in enumerate(self.crossings):
            for s, e in enumerate(c.slots()):
                occ.setdefault(e, []).append(4 * ci + s)
        for k, e in enumerate(self.boundary):
            occ.setdefault(e, []).append(4 * m + k)
        for e, ends in occ.items():
            if len(ends) != 2:
                raise TangleError("E_DANGLING", f"edge {e!r} used {len(ends)} time(s)")
        self.n_ends = 4 * m + len(self.boundary)
        self.alpha = [0] * self.n_ends
        self.edge_of_end = [""] * self.n_ends
        for e, (a, b) in occ.items():
            self.alpha[a], self.alpha[b] = b, a
            self.edge_of_end[a] = self.edge_of_end[b] = e
        self.edges = sorted(occ)
        self._occ = occ

    def attach_of_end(self, end: int) -> Attach:
        m = len(self.crossings)
        if end < 4 * m:
            return ("x", end // 4, end % 4)
        return ("b", end - 4 * m)

    # ------------------------------------------------------------------
    # orientations

    def _orient_edges(self):
        """Mark each end incoming/outgoing; directions come from crossing roles."""
        m = len(self.crossings)
        incoming: list[Optional[bool]] = [None] * self.n_ends
        for ci, c in enumerate(self.crossings):
            for s in range(4):
                _, is_in = c.role_of_slot(s)
                incoming[4 * ci + s] = is_in
        for end in range(4 * m, self.n_ends):
            other = self.alpha[end]
            if incoming[other] is not None:
                incoming[end] = not incoming[other]
        # boundary-to-boundary edges (crossingless strands)
        for e, (a, b) in self._occ.items():
            if incoming[a] is None and incoming[b] is None:
                first_is_tail = self._edge_dirs.get(e, True)
                incoming[a] = not first_is_tail
                incoming[b] = first_is_tail
        for e, (a, b) in self._occ.items():
            if incoming[a] == incoming[b]:
                raise TangleError("E_ORIENT", f"edge {e!r} has inconsistent orientation")
        self.incoming = incoming

    def flow_ends(self, edge: str) -> tuple[int, int]:
        """(tail end, head end) of an edge."""
        a, b = self._occ[edge]
        return (a, b) if self.incoming[b] else (b, a)

    # ------------------------------------------------------------------
    # components and colours

    def _next_edge(self, edge: str) -> Optional[str]:
        """Follow the strand through the attachment at this edge's head."""
        _, head = self.flow_ends(edge)
        at = self.attach_of_end(head)
        if at[0] == "b":
            return None
        _, ci, s = at
        return self.crossings[ci].slots()[(s + 2) % 4]

    def _walk_components(self, colour_seeds: Mapping[str, str]):
        m = len(self.crossings)
        unseen = set(self.edges)
        walks: list[tuple[str, list[str]]] = []
        # open components first, ordered by the boundary position they enter at
        for k, e in enumerate(self.boundary):
            end = 4 * m + k
            if self.incoming[end] or self.edge_of_end[end] not in unseen:
                continue
            walk = []
            cur: Optional[str] = self.edge_of_end[end]
            while cur is not None:
                walk.append(cur)
                unseen.discard(cur)
                cur = self._next_edge(cur)
                if cur is not None and cur not in unseen:
                    cur = None
            walks.append(("open", walk))
        while unseen:
            start = min(unseen)
            walk = [start]
            unseen.discard(start)
            cur = self._next_edge(start)
            while cur is not None and cur != start:
                walk.append(cur)
                unseen.discard(cur)
                cur = self._next_edge(cur)
            if cur is None:
                raise TangleError("E_ORIENT", "open strand not anchored on the boundary")
            walks.append(("closed", walk))

        comps = []
        for kind, walk in walks:
            colours = {colour_seeds[e] for e in walk if e in colour_seeds}
            if len(colours) > 1:
                raise TangleError("E_SYNTAX", f"conflicting colours {sorted(colours)} on one strand")
            if not colours:
                raise TangleError("E_SYNTAX", f"no colour given for the strand through {walk[0]!r}")
            colour = colours.pop()
            if colour in RESERVED_NAMES or not _TOKEN.match(colour):
                raise TangleError("E_SYNTAX", f"bad colour name {colour!r}")
            comps.append(Component(colour, kind, tuple(walk)))
        for colour in self.free_circles:
            comps.append(Component(colour, "closed", ()))
        self.components = tuple(comps)
        self.colour_of_edge = {e: c.colour for c in comps for e in c.edges}
        self.n_open = sum(1 for c in comps if c.kind == "open")
        self.m_closed = len(comps) - self.n_open
        if len(self.boundary) != 2 * self.n_open:
            raise TangleError("E_ORIENT", "boundary ends inconsistent with open strands")

    def colours(self) -> tuple[str, ...]:
        seen: list[str] = []
        for c in self.components:
            if c.colour not in seen:
                seen.append(c.colour)
        return tuple(seen)

    def _classify_pieces(self) -> bool:
        """True if the diagram is connected; False if only closed pieces are
        disconnected (a split diagram); raises if open parts are separated."""
        piece_of: dict[str, int] = {}
        n_pieces = 0
        for comp in self.components:
            for e in comp.edges:
                if e not in piece_of:
                    piece_of[e] = n_pieces
                    n_pieces += 1

        def unite(a: str, b: str):
            pa, pb = piece_of[a], piece_of[b]
            if pa != pb:
                for e, p in piece_of.items():
                    if p == pb:
                        piece_of[e] = pa

        for comp in self.components:
            for e1, e2 in zip(comp.edges, comp.edges[1:]):
                unite(e1, e2)
        for c in self.crossings:
            unite(c.under[0], c.over[0])
        pieces: dict[int, list[str]] = {}
        for e, p in piece_of.items():
            pieces.setdefault(p, []).append(e)
        boundary_set = set(self.boundary)
        open_pieces = sum(1 for es in pieces.values()
                          if any(e in boundary_set for e in es))
        if self.boundary:
            if open_pieces > 1:
                raise TangleError(
                    "E_DISCONNECTED",
                    "two separate parts of the diagram reach the boundary")
            if open_pieces == 0:
                raise TangleError("E_DISCONNECTED", "no strand reaches the boundary")
        return len(pieces) <= 1

    def _crossing_edges(self) -> set[str]:
        out = set()
        for c in self.crossings:
            out.update(c.slots())
        return out

    # ------------------------------------------------------------------
    # faces

    def _trace_faces(self):
        """Orbit-trace the rotation system; identify regions and quadrants.

        Face-of-a-dart semantics: the face on the right-hand side when
        travelling away from the dart's attachment along its edge.
        """
        m = len(self.crossings)
        two_n = len(self.boundary)
        n_str = self.n_ends
        # extra darts for boundary arcs: arc k start -> n_str + 2k, end -> n_str + 2k + 1
        total = n_str + 2 * two_n
        sigma = [0] * total
        alpha = list(self.alpha) + [0] * (2 * two_n)
        for k in range(two_n):
            alpha[n_str + 2 * k] = n_str + 2 * k + 1
            alpha[n_str + 2 * k + 1] = n_str + 2 * k
        for ci in range(m):
            for s in range(4):
                sigma[4 * ci + s] = 4 * ci + (s + 1) % 4
        for k in range(two_n):
            nxt_arc_start = n_str + 2 * ((k + 1) % two_n)
            strand = 4 * m + k
            arc_end = n_str + 2 * k + 1
            sigma[nxt_arc_start] = strand
            sigma[strand] = arc_end
            sigma[arc_end] = nxt_arc_start

        face_of = [-1] * total
        faces: list[list[int]] = []
        for d0 in range(total):
            if face_of[d0] >= 0:
                continue
            orbit = []
            d = d0
            while face_of[d] < 0:
                face_of[d] = len(faces)
                orbit.append(d)
                d = sigma[alpha[d]]
            faces.append(orbit)

        v = m + two_n if two_n else m
        e = len(self.edges) + two_n
        if v - e + len(faces) != 2:
            raise TangleError("E_NONPLANAR", "rotation system is not planar")

        if two_n:
            exterior = face_of[n_str]  # face of arc 0's start dart
        else:
            edge, side = self.outer_hint
            tail, head = self.flow_ends(edge)
            exterior = face_of[tail if side == "R" else head]

        # classify faces
        arc_end_face = {}
        for k in range(two_n):
            arc_end_face[k] = face_of[n_str + 2 * k + 1]
        open_faces: dict[int, list[str]] = {}
        for k, label in enumerate(self.arcs if two_n else ()):
            open_faces.setdefault(arc_end_face[k], []).append(label)
        if two_n:
            if exterior in open_faces:
                raise TangleError("E_DISCONNECTED", "an open region wraps around the diagram")
            for fi, labels in open_faces.items():
                if len(labels) > 1:
                    raise TangleError(
                        "E_DISCONNECTED",
                        f"arcs {labels} lie on one region; the diagram is not connected")
        else:
            open_faces = {exterior: [self.arcs[0]]}

        corners: dict[int, list[tuple[int, int]]] = {}
        for ci in range(m):
            for q in range(4):
                fi = face_of[4 * ci + (q + 1) % 4]
                corners.setdefault(fi, []).append((ci, q))

        regions: list[Region] = []
        closed_faces = [fi for fi in range(len(faces))
                        if fi not in open_faces and (not two_n or fi != exterior)]
        closed_faces.sort(key=lambda fi: min(corners.get(fi, [(m, 4)])))
        named: dict[int, str] = {}
        for fi, labels in sorted(open_faces.items(), key=lambda kv: kv[1][0]):
            kind = "open" if two_n else "outer"
            rid = labels[0]
            named[fi] = rid
            regions.append(Region(rid, kind, tuple(sorted(corners.get(fi, []))), tuple(labels)))
        for idx, fi in enumerate(closed_faces):
            rid = f"r{idx}"
            named[fi] = rid
            regions.append(Region(rid, "closed", tuple(sorted(corners.get(fi, []))), ()))
        self.regions = tuple(sorted(regions, key=lambda r: r.rid))
        self._region_by_id = {r.rid: r for r in self.regions}
        self.region_of_quadrant = {
            (ci, q): named[face_of[4 * ci + (q + 1) % 4]]
            for ci in range(m) for q in range(4)
        }
        # side data for transformations: region on each side of every edge
        self._face_right_of_tail: dict[str, str] = {}
        self._face_left_of_tail: dict[str, str] = {}
        for e_id in self.edges:
            tail, head = self.flow_ends(e_id)
            fr, fl = face_of[tail], face_of[head]
            if fr in named:
                self._face_right_of_tail[e_id] = named[fr]
            if fl in named:
                self._face_left_of_tail[e_id] = named[fl]

    # ------------------------------------------------------------------
    # queries

    def region(self, rid: str) -> Region:
        return self._region_by_id[rid]

    def open_region_ids(self) -> tuple[str, ...]:
        return tuple(r.rid for r in self.regions if r.kind == "open")

    def region_beside(self, edge: str, side: str) -> Optional[str]:
        """Region on the 'L'/'R' side of an edge, w.r.t. its flow direction."""
        table = self._face_right_of_tail if side == "R" else self._face_left_of_tail
        return table.get(edge)

    def sites(self) -> list[Site]:
        """All (n-1)-element subsets of the arcs, in deterministic order."""
        from itertools import combinations
        labels = sorted(self.arcs) if self.boundary else []
        k = self.n_open - 1
        if k < 0:
            return []
        return [Site(frozenset(c)) for c in combinations(labels, k)]

    def end_positions(self) -> list[tuple[str, bool]]:
        """Per boundary position: (edge, strand points into the disc)."""
        m = len(self.crossings)
        return [(e, not self.incoming[4 * m + k]) for k, e in enumerate(self.boundary)]

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def __eq__(self, other):
        if not isinstance(other, TangleDiagram):
            return NotImplemented
        return (self.crossings == other.crossings and self.boundary == other.boundary
                and self.arcs == other.arcs
                and self.colour_of_edge == other.colour_of_edge
                and self.split == other.split)

    def __repr__(self):
        return (f"<TangleDiagram {self.name!r}: {len(self.crossings)} crossings, "
                f"{2 * self.n_open} ends, {self.m_closed} closed>")


def compute_regions(d: TangleDiagram) -> tuple[Region, ...]:
    """The faces of the diagram's combinatorial map, open regions named by
    their boundary arc and closed ones r0, r1, ... deterministically."""
    if d.split:
        raise TangleError("E_SPLIT", "a split diagram has no region structure")
    return d.regions


def linking_number(d: TangleDiagram, i: str, j: str = "all") -> "Fraction":
    """Half the signed count of crossings between colours i and j.

    With j='all', sums lk(i, t) over every other colour t.  Returned as an
    exact Fraction (it is a half-integer).
    """
    from fractions import Fraction
    cols = d.colours()
    if i not in cols or (j != "all" and j not in cols):
        raise TangleError("E_UNKNOWN_COLOUR", f"unknown colour in ({i!r}, {j!r})")
    if i == j:
        raise TangleError("E_UNKNOWN_COLOUR", "linking number needs two distinct colours")
    total = 0
    for c in d.crossings:
        cu = d.colour_of_edge[c.under[0]]
        co = d.colour_of_edge[c.over[0]]
        pair = {cu, co}
        if j == "all":
            if i in pair and len(pair) == 2:
                total += c.sign
        elif pair == {i, j}:
            total += c.sign
    return Fraction(total, 2)


# ----------------------------------------------------------------------
# text format

def parse_tangle(text: str) -> TangleDiagram:
    """Parse the `.tgl` plain-text diagram format.

    Lines: ``tangle <name>``, ``ends <2n>``, ``boundary <arc> <edge> ...``
    (counterclockwise, starting with an arc label), one
    ``crossing <id> <+|-> under <in> <out> over <in> <out>`` per crossing,
    and ``colour <seed-edge> <name>`` per strand.  ``#`` starts a comment.
    """
    name = "tangle"
    ends_declared: Optional[int] = None
    boundary: list[str] = []
    arcs: list[str] = []
    crossings: list[Crossing] = []
    colour_seeds: dict[str, str] = {}
    free_circles: list[str] = []
    outer_hint = None
    seen_ids = set()

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kw = tok[0]
        if kw == "tangle":
            if len(tok) != 2:
                raise TangleError("E_SYNTAX", f"line {lineno}: tangle <name>")
            name = tok[1]
        elif kw == "ends":
            if len(tok) != 2 or not tok[1].isdigit():
                raise TangleError("E_SYNTAX", f"line {lineno}: ends <2n>")
            ends_declared = int(tok[1])
        elif kw == "boundary":
            body = tok[1:]
            if len(body) % 2:
                raise TangleError("E_SYNTAX", f"line {lineno}: boundary alternates arc, edge")
            arcs = body[0::2]
            boundary = body[1::2]
        elif kw == "outer":
            if len(tok) != 4 or tok[3] not in ("L", "R"):
                raise TangleError("E_SYNTAX", f"line {lineno}: outer <arc> <edge> <L|R>")
            arcs = [tok[1]]
            outer_hint = (tok[2], tok[3])
        elif kw == "crossing":
            if (len(tok) != 9 or tok[2] not in ("+", "-")
                    or tok[3] != "under" or tok[6] != "over"):
                raise TangleError(
                    "E_SYNTAX",
                    f"line {lineno}: crossing <id> <+|-> under <in> <out> over <in> <out>")
            if tok[1] in seen_ids:
                raise TangleError("E_SYNTAX", f"line {lineno}: duplicate crossing id {tok[1]!r}")
            seen_ids.add(tok[1])
            crossings.append(Crossing(1 if tok[2] == "+" else -1,
                                      (tok[4], tok[5]), (tok[7], tok[8])))
        elif kw == "colour":
            if len(tok) != 3:
                raise TangleError("E_SYNTAX", f"line {lineno}: colour <seed-edge> <name>")
            colour_seeds[tok[1]] = tok[2]
        elif kw == "circle":
            if len(tok) != 2:
                raise TangleError("E_SYNTAX", f"line {lineno}: circle <colour>")
            free_circles.append(tok[1])
        else:
            raise TangleError("E_SYNTAX", f"line {lineno}: unknown keyword {kw!r}")

    if not crossings:
        raise TangleError("E_NO_CROSSING", "a diagram needs at least one crossing")
    if ends_declared is not None and ends_declared != len(boundary):
        raise TangleError("E_SYNTAX",
                          f"ends {ends_declared} but boundary lists {len(boundary)}")
    return TangleDiagram(name, crossings, boundary, arcs, colour_seeds, outer_hint,
                         free_circles=free_circles)


def serialize(d: TangleDiagram) -> str:
    lines = [f"tangle {d.name}", f"ends {len(d.boundary)}"]
    if d.boundary:
        parts = []
        for a, e in zip(d.arcs, d.boundary):
            parts.extend((a, e))
        lines.append("boundary " + " ".join(parts))
    else:
        lines.append(f"outer {d.arcs[0]} {d.outer_hint[0]} {d.outer_hint[1]}")
    for i, c in enumerate(d.crossings, 1):
        sign = "+" if c.sign > 0 else "-"
        lines.append(f"crossing x{i} {sign} under {c.under[0]} {c.under[1]}"
                     f" over {c.over[0]} {c.over[1]}")
    for comp in d.components:
        if comp.edges:
            lines.append(f"colour {min(comp.edges)} {comp.colour}")
    for colour in d.free_circles:
        lines.append(f"circle {colour}")
    return "\n".join(lines) + "\n"


def canonicalize(d: TangleDiagram) -> TangleDiagram:
    """Relabel edges and reorder crossings by a breadth-first traversal.

    The traversal starts at boundary position 0 (or at the outer hint for a
    closed diagram) and explores crossing slots counterclockwise from the
    slot of first discovery, so the result depends only on the isomorphism
    class rel boundary.
    """
    if d.split:
        return d
    order: dict[int, int] = {}
    entry_slot: dict[int, int] = {}
    edge_new: dict[str, str] = {}
    queue: list[int] = []

    def visit_edge(e: str):
        if e not in edge_new:
            edge_new[e] = f"e{len(edge_new) + 1}"

    def discover(at: Attach):
        if at[0] != "x":
            return
        ci = at[1]
        if ci not in order:
            order[ci] = len(order)
            entry_slot[ci] = at[2]
            queue.append(ci)

    if d.boundary:
        starts = list(d.boundary)
    else:
        tail, head = d.flow_ends(d.outer_hint[0])
        starts = [d.outer_hint[0]]
    for e in starts:
        visit_edge(e)
        for end in d._occ[e]:
            discover(d.attach_of_end(end))
    qi = 0
    while qi < len(queue):
        ci = queue[qi]
        qi += 1
        slots = d.crossings[ci].slots()
        for off in range(4):
            s = (entry_slot[ci] + off) % 4
            e = slots[s]
            visit_edge(e)
            for end in d._occ[e]:
                discover(d.attach_of_end(end))

    ren = edge_new.__getitem__
    new_crossings = []
    for ci in sorted(range(len(d.crossings)), key=lambda i: order[i]):
        c = d.crossings[ci]
        new_crossings.append(Crossing(c.sign,
                                      (ren(c.under[0]), ren(c.under[1])),
                                      (ren(c.over[0]), ren(c.over[1]))))
    new_boundary = tuple(ren(e) for e in d.boundary)
    seeds = {}
    for comp in d.components:
        seeds[min(ren(e) for e in comp.edges)] = comp.colour
    hint = None
    if d.outer_hint:
        hint = (ren(d.outer_hint[0]), d.outer_hint[1])
    dirs = {}
    for comp in d.components:
        # preserve flow of crossingless strands under renaming
        for e in comp.edges:
            tail, head = d.flow_ends(e)
            if d.attach_of_end(tail)[0] == "b" and d.attach_of_end(head)[0] == "b":
                a, b = d._occ[e]
                dirs[ren(e)] = not d.incoming[a]
    return TangleDiagram(d.name, new_crossings, new_boundary, d.arcs, seeds, hint, dirs)


def canonical_form(d: TangleDiagram) -> str:
    text = serialize(canonicalize(d))
    lines = text.splitlines()
    return "\n".join(["tangle _"] + lines[1:]) + "\n"


def isomorphic(d1: TangleDiagram, d2: TangleDiagram) -> bool:
    """Equality up to relabelling of edges/crossings (arc labels fixed)."""
    return canonical_form(d1) == canonical_form(d2)
