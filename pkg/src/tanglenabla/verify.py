"""Property catalogue: every identity the invariants satisfy, runnable on
given diagrams or on seeded random ones, with machine-readable reports.

Random diagrams are grown by repeatedly glueing fresh one-crossing pieces
onto the boundary and capping adjacent ends, which keeps them connected and
planar by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import transform as tr
from .diagram import Crossing, Site, TangleDiagram, TangleError, linking_number, serialize
from .gradings import euler_characteristics
from .laurent import H, LaurentPoly, binomial
from .nabla import euler_factor, nabla_all, nabla_hat_all


@dataclass
class CheckReport:
    prop: str
    seed: int
    cases: int
    passed: bool
    failures: list = field(default_factory=list)
    note: str = ""

    def to_json(self) -> dict:
        return {"property": self.prop, "seed": self.seed, "cases": self.cases,
                "passed": self.passed, "failures": self.failures, "note": self.note}


# ----------------------------------------------------------------------
# random diagram generation

def _fresh_piece(rng: random.Random, idx: int) -> TangleDiagram:
    """A random one-crossing tangle with fresh edge ids."""
    e = [f"p{idx}_{k}" for k in range(4)]
    sign = rng.choice((1, -1))
    c = Crossing(sign, (e[0], e[1]), (e[2], e[3]))
    boundary = c.slots()
    d = TangleDiagram(f"piece{idx}", [c], boundary, ("a", "b", "c", "d"),
                      {e[0]: "u", e[2]: "o"})
    colours = rng.choice((set(), {"u"}, {"o"}, {"u", "o"}))
    if colours:
        d = tr.reverse_orientation(d, colours)
    return d


def random_diagram(rng: random.Random, n_ends: int = 4, n_crossings: int = 6,
                   max_tries: int = 200) -> TangleDiagram:
    """A random connected oriented tangle diagram with the requested number
    of boundary ends and crossings.  Components get colours t1, t2, ...
    """
    n_crossings = max(n_crossings, (n_ends - 2) // 2, 1)
    for _ in range(max_tries):
        d = _try_random_diagram(rng, n_ends, n_crossings)
        if d is not None:
            comps = d.colours()
            mapping = {c: f"t{i + 1}" for i, c in enumerate(comps)}
            return tr.recolour(d, mapping)
    raise TangleError("E_GENERATION", "could not generate a diagram with these parameters")


def _try_random_diagram(rng, n_ends, n_crossings) -> Optional[TangleDiagram]:
    d = _fresh_piece(rng, 0)
    idx = 1
    while len(d.crossings) < n_crossings:
        ends = len(d.boundary)
        piece = _fresh_piece(rng, idx)
        idx += 1
        js = [j for j in (1, 2, 3) if ends + 4 - 2 * j >= max(n_ends, 2) and j < ends]
        if not js:
            js = [1]
        rng.shuffle(js)
        glued = None
        for j in js:
            starts1 = list(range(ends))
            rng.shuffle(starts1)
            for s1 in starts1:
                starts2 = list(range(4))
                rng.shuffle(starts2)
                for s2 in starts2:
                    try:
                        glued = tr.glue_diagrams(d, piece, s1, s2, j).diagram
                        break
                    except TangleError:
                        continue
                if glued is not None:
                    break
            if glued is not None:
                break
        if glued is None:
            return None
        d = glued
    # reduce the number of ends by capping
    guard = 0
    while len(d.boundary) > n_ends and guard < 50:
        guard += 1
        arcs = list(d.arcs)
        rng.shuffle(arcs)
        for a in arcs:
            try:
                d = tr._cap(d, a)
                break
            except TangleError:
                continue
        else:
            return None
    if len(d.boundary) != n_ends or d.split:
        return None
    return d


def random_knot_tangle(rng: random.Random, n_crossings: int,
                       max_tries: int = 400) -> TangleDiagram:
    """A 2-ended diagram whose single component is open (a knot tangle)."""
    for _ in range(max_tries):
        try:
            d = random_diagram(rng, 2, n_crossings)
        except TangleError:
            continue
        if len(d.components) == 1:
            return d
    raise TangleError("E_GENERATION", "no knot tangle found")


def random_rm_sequence(rng: random.Random, d: TangleDiagram, moves: int):
    """Apply up to ``moves`` random legal Reidemeister moves; returns the
    final diagram and the list of (move, location) actually applied."""
    applied = []
    for _ in range(moves):
        options = []
        options.append(("RM1_insert",
                        (rng.choice(d.edges), rng.choice("LR"), rng.choice((1, -1)))))
        sides = [(e, s) for e in d.edges for s in "LR"
                 if d.region_beside(e, s) is not None]
        rng.shuffle(sides)
        for (e1, s1) in sides:
            mates = [(e2, s2) for (e2, s2) in sides
                     if e2 != e1 and d.region_beside(e2, s2) == d.region_beside(e1, s1)]
            if mates:
                e2, s2 = rng.choice(mates)
                options.append(("RM2_insert", (e1, s1, e2, s2, rng.random() < 0.5)))
                break
        for ci in tr.find_kinks(d):
            options.append(("RM1_remove", ci))
        for rid in tr.find_bigons(d):
            options.append(("RM2_remove", rid))
        for rid in tr.find_triangles(d):
            options.append(("RM3", rid))
            options.append(("RM3", rid))  # weight slides up; they are rare
        move, loc = rng.choice(options)
        try:
            d = tr.apply_rm_move(d, move, loc)
            applied.append((move, loc))
        except TangleError:
            continue
    return d, applied


# ----------------------------------------------------------------------
# helpers shared by the checks

def _sub_if(p: LaurentPoly, var: str, repl, sign=1) -> LaurentPoly:
    return p.substitute(var, repl, sign) if var in p.vars else p


def _invert_all(p: LaurentPoly, colours, invert_h=False) -> LaurentPoly:
    for v in colours:
        p = _sub_if(p, v, {v: -2})
    if invert_h:
        p = _sub_if(p, H, {H: -2})
    return p


def _single_variable(p: LaurentPoly, colours, t="t") -> LaurentPoly:
    return p.rename({c: t for c in colours})


def _payload(**kw):
    out = {}
    for k, v in kw.items():
        if isinstance(v, TangleDiagram):
            out[k] = serialize(v)
        elif isinstance(v, LaurentPoly):
            out[k] = v.pretty()
        else:
            out[k] = v
    return out


def orientation_type(d: TangleDiagram):
    """(type, rotation) for a 4-ended diagram: type 1 has the two inward
    ends opposite, type 2 adjacent; rotation r normalizes the labels so the
    inward ends sit at positions {0, 2} (type 1) or {0, 1} (type 2)."""
    if len(d.boundary) != 4:
        raise TangleError("E_NOT_FOURENDED", "orientation type needs 4 ends")
    m = len(d.crossings)
    ins = {k for k in range(4) if not d.incoming[4 * m + k]}
    if ins in ({0, 2}, {1, 3}):
        return 1, (0 if ins == {0, 2} else 1)
    r = next(r for r in range(4) if ins == {r, (r + 1) % 4})
    return 2, r


def normalized_nabla(d: TangleDiagram, rotation: int) -> dict[str, LaurentPoly]:
    """Site values keyed by normalized position labels a, b, c, d."""
    vals = nabla_all(d)
    labels = "abcd"
    out = {}
    for i in range(4):
        orig = d.arcs[(i + rotation) % 4]
        out[labels[i]] = vals[Site(frozenset({orig}))]
    return out


# ----------------------------------------------------------------------
# the catalogue

def _check_rm_invariance(rng, cases, fail):
    for k in range(cases):
        d = random_diagram(rng, rng.choice((2, 4, 4, 6)), rng.randint(1, 8))
        before = nabla_all(d)
        d2, moves = random_rm_sequence(rng, d, rng.randint(1, 6))
        after = nabla_all(d2)
        if before != after:
            fail(_payload(case=k, diagram=d, moved=d2, moves=repr(moves)))


def _check_mirror(rng, cases, fail):
    for k in range(cases):
        d = random_diagram(rng, rng.choice((2, 4, 6)), rng.randint(1, 7))
        m = tr.mirror_diagram(d)
        lhs = nabla_hat_all(m)
        rhs = {s: _invert_all(p, d.colours(), invert_h=True)
               for s, p in nabla_hat_all(d).items()}
        if lhs != rhs:
            fail(_payload(case=k, diagram=d))


def _check_reversal(rng, cases, fail):
    for k in range(cases):
        d = random_diagram(rng, rng.choice((2, 4, 6)), rng.randint(1, 7))
        hats = nabla_hat_all(d)
        # single strand
        colour = rng.choice(d.colours())
        lk2 = int(2 * linking_number(d, colour, "all")) if len(d.colours()) > 1 else 0
        r1 = tr.reverse_orientation(d, {colour})
        pref = LaurentPoly.monomial(1, {H: lk2} if lk2 else {})
        ok = True
        for s, p in nabla_hat_all(r1).items():
            rhs = pref * _sub_if(hats[s], colour, {colour: -2, H: -2})
            ok = ok and p == rhs
        # all strands
        rall = tr.reverse_orientation(d, set(d.colours()))
        for s, p in nabla_hat_all(rall).items():
            rhs = hats[s]
            for v in d.colours():
                rhs = _sub_if(rhs, v, {v: -2, H: -2})
            ok = ok and p == rhs
        if not ok:
            fail(_payload(case=k, diagram=d, colour=colour))


def _check_skein(rng, cases, fail):
    done = 0
    guard = 0
    while done < cases and guard < cases * 40:
        guard += 1
        d = random_diagram(rng, rng.choice((2, 4)), rng.randint(1, 6))
        ci = rng.randrange(len(d.crossings))
        c = d.crossings[ci]
        cu = d.colour_of_edge[c.under[0]]
        co = d.colour_of_edge[c.over[0]]
        if cu != co:
            d = tr.recolour(d, {co: cu})
        plus = d if d.crossings[ci].sign > 0 else tr.switch_crossing(d, ci)
        minus = tr.switch_crossing(plus, ci)
        try:
            zero = tr.smooth_crossing(plus, ci)
        except TangleError:
            # the smoothed tangle has no valid connected diagram here
            continue
        done += 1
        k = done
        cols = set(plus.colours()) | set(zero.colours())
        t = binomial("t")
        zeros = nabla_all(zero)
        ok = True
        for s in plus.sites():
            a = _single_variable(nabla_all(plus)[s], cols)
            b = _single_variable(nabla_all(minus)[s], cols)
            cc = _single_variable(zeros[s], cols)
            ok = ok and (a - b == t * cc)
        if not ok:
            fail(_payload(case=k, diagram=d, crossing=ci))


def _check_knot_pm_one(rng, cases, fail):
    one = LaurentPoly.integer(1)
    for k in range(cases):
        d = random_knot_tangle(rng, rng.randint(1, 8))
        p = nabla_all(d)[Site(frozenset())]
        colour = d.colours()[0]
        at_plus = _sub_if(p, colour, {})
        at_minus = _sub_if(p, colour, {}, sign=-1)
        if at_plus != one or at_minus != one:
            fail(_payload(case=k, diagram=d, value=p))


def _check_set_pm_one(rng, cases, fail):
    done = 0
    guard = 0
    while done < cases and guard < cases * 60:
        guard += 1
        d = random_diagram(rng, rng.choice((2, 4)), rng.randint(2, 7))
        closed = [c.colour for c in d.components if c.kind == "closed" and c.edges]
        if not closed:
            continue
        t1 = rng.choice(closed)
        if sum(1 for c in d.components if c.colour == t1) > 1:
            continue
        try:
            rest = tr.delete_component(d, t1)
        except TangleError:
            # deletion can leave the remaining open strands in separate
            # pieces; that diagram of the remainder is not connected
            continue
        done += 1
        nd = nabla_all(d)
        nrest = nabla_all(rest) if not rest.split else {s: LaurentPoly.zero()
                                                        for s in d.sites()}
        others = [c for c in d.colours() if c != t1]
        lks = {c: int(2 * linking_number(d, t1, c)) for c in others}
        lk_total = sum(lks.values()) // 2
        fwd = LaurentPoly.monomial(1, {c: lk for c, lk in lks.items() if lk})
        bwd = LaurentPoly.monomial(1, {c: -lk for c, lk in lks.items() if lk})
        for s in d.sites():
            for sign in (1, -1):
                lhs = _sub_if(nd[s], t1, {}, sign=sign)
                unit = 1 if sign == 1 or (lk_total + 1) % 2 == 0 else -1
                rhs = LaurentPoly.integer(unit) * (fwd - bwd) * nrest[s]
                if lhs != rhs:
                    fail(_payload(case=done, diagram=d, colour=t1, site=str(s),
                                  lhs=lhs, rhs=rhs))
                    return


def _check_glueing(rng, cases, fail):
    for k in range(cases):
        d1 = random_diagram(rng, rng.choice((4, 6)), rng.randint(1, 4))
        d2 = random_diagram(rng, rng.choice((4, 6)), rng.randint(1, 4))
        rec = None
        for _ in range(40):
            s1 = rng.randrange(len(d1.boundary))
            s2 = rng.randrange(len(d2.boundary))
            count = rng.randint(1, min(len(d1.boundary), len(d2.boundary)) - 1)
            try:
                rec = tr.glue_diagrams(d1, d2, s1, s2, count)
                break
            except TangleError:
                continue
        if rec is None or rec.diagram.split:
            continue
        T = rec.diagram
        hats_T = nabla_hat_all(T)
        hats_1 = {s: p.rename(rec.iota_1) for s, p in nabla_hat_all(d1).items()}
        hats_2 = {s: p.rename(rec.iota_2) for s, p in nabla_hat_all(d2).items()}
        kind = {r.rid: r.kind for r in T.regions}
        seam_closed = {rid for rid in list(rec.arc_map_1.values()) +
                       list(rec.arc_map_2.values()) if kind.get(rid) == "closed"}
        sites1 = d1.sites()
        sites2 = d2.sites()
        for s in T.sites():
            total = LaurentPoly.zero()
            for s1_ in sites1:
                img1 = [rec.arc_map_1[a] for a in s1_.arcs]
                for s2_ in sites2:
                    img2 = [rec.arc_map_2[a] for a in s2_.arcs]
                    occ = img1 + img2
                    if len(set(occ)) != len(occ):
                        continue
                    occ_set = set(occ)
                    if seam_closed - occ_set:
                        continue
                    open_occ = {r for r in occ_set if kind.get(r) == "open"}
                    if open_occ != set(s.arcs):
                        continue
                    if occ_set - seam_closed - open_occ:
                        continue
                    total = total + hats_1[s1_] * hats_2[s2_]
            if total != hats_T[s]:
                fail(_payload(case=k, glued=T, site=str(s),
                              got=total, expected=hats_T[s]))
                return


def _check_parity(rng, cases, fail):
    for k in range(cases):
        d = random_diagram(rng, rng.choice((2, 4, 6)), rng.randint(1, 8))
        for s, p in nabla_all(d).items():
            for v in d.colours():
                exps = p.exponents_of(v)
                if len({e % 4 for e in exps}) > 1:
                    fail(_payload(case=k, diagram=d, site=str(s), colour=v, value=p))
                    return


def _check_fourended(rng, cases, fail):
    seen = {1: 0, 2: 0}
    for k in range(cases):
        d = random_diagram(rng, 4, rng.randint(1, 7))
        open_cols = [c.colour for c in d.components if c.kind == "open"]
        d = tr.recolour(d, {open_cols[1]: open_cols[0]})
        if rng.random() < 0.5:
            # flip the orientation type by reversing one open strand; with
            # both open strands sharing a colour, reverse just one of them
            comp = next(c for c in d.components if c.kind == "open")
            seeds = {c.edges[0]: c.colour for c in d.components if c.edges}
            seeds[comp.edges[0]] = "flp"
            tmp = TangleDiagram(d.name, d.crossings, d.boundary, d.arcs, seeds)
            tmp = tr.reverse_orientation(tmp, {"flp"})
            d = tr.recolour(tmp, {"flp": open_cols[0]})
        typ, rot = orientation_type(d)
        seen[typ] += 1
        vals = normalized_nabla(d, rot)
        rall = tr.reverse_orientation(d, set(d.colours()))
        vals_r = normalized_nabla(rall, rot)
        cols = set(d.colours())
        f = lambda p: _single_variable(p, cols)
        ok = (f(vals["a"]) == f(vals_r["c"]) == f(vals["c"])
              and f(vals["d"]) == f(vals_r["b"]))
        if typ == 1:
            ok = ok and f(vals["d"]) == f(vals["b"])
        if not ok:
            fail(_payload(case=k, diagram=d, type=typ))
    return f"orientation types seen: 1 x{seen[1]}, 2 x{seen[2]}"


def _check_mutation_one(d: TangleDiagram, fail, case=0):
    open_cols = {c.colour for c in d.components if c.kind == "open"}
    if len(open_cols) != 1:
        raise TangleError("E_HYPOTHESIS",
                          "mutation invariance needs equal colours on the open strands")
    before = nabla_all(d)
    for axis in ("x", "y", "z"):
        md = tr.mutate_tangle(d, axis)
        after = nabla_all(md)
        same = all(before[Site(frozenset({a}))] == after[Site(frozenset({a}))]
                   for a in d.arcs)
        if not same:
            fail(_payload(case=case, diagram=d, axis=axis))


def _check_mutation(rng, cases, fail):
    for k in range(cases):
        d = random_diagram(rng, 4, rng.randint(1, 7))
        open_cols = [c.colour for c in d.components if c.kind == "open"]
        d = tr.recolour(d, {open_cols[1]: open_cols[0]})
        _check_mutation_one(d, fail, case=k)


def _check_euler_char(rng, cases, fail):
    for k in range(cases):
        d = random_diagram(rng, rng.choice((2, 4)), rng.randint(1, 6))
        chis = euler_characteristics(d)
        fac = euler_factor(d)
        nabs = nabla_all(d)
        for s in d.sites():
            ok, _ = chis[s].equal_up_to_unit(fac * nabs[s])
            if not ok:
                fail(_payload(case=k, diagram=d, site=str(s),
                              chi=chis[s], nabla=nabs[s]))
                return


def _mutorient_diagram() -> TangleDiagram:
    from .corpus import load
    return load("mutorient")


def _check_mutorient(rng, cases, fail, diagram: Optional[TangleDiagram] = None):
    d = diagram if diagram is not None else _mutorient_diagram()
    vals = nabla_all(d)
    site_b = Site(frozenset({"b"}))
    expected = (LaurentPoly.monomial(1, {"p": 4, "r": 2})
                - binomial("r")
                - LaurentPoly.monomial(1, {"p": -4, "r": -2}))
    if vals[site_b] != expected:
        fail(_payload(diagram=d, got=vals[site_b], expected=expected))
        return
    closed = [c.colour for c in d.components if c.kind == "closed"]
    rev = tr.reverse_orientation(d, {closed[0]})
    if nabla_all(rev)[site_b] == vals[site_b]:
        fail(_payload(diagram=d,
                      note="reversing the closed strand left the invariant unchanged"))


PROPERTIES: dict[str, Callable] = {
    "rm_invariance": _check_rm_invariance,
    "mirror": _check_mirror,
    "reversal": _check_reversal,
    "skein": _check_skein,
    "knot_pm_one": _check_knot_pm_one,
    "set_pm_one": _check_set_pm_one,
    "glueing": _check_glueing,
    "parity": _check_parity,
    "fourended_symmetry": _check_fourended,
    "mutation": _check_mutation,
    "euler_char": _check_euler_char,
    "mutorient_counterexample": _check_mutorient,
}


def run_check(prop: str, diagrams: Optional[list[TangleDiagram]] = None,
              seed: int = 0, cases: int = 25) -> CheckReport:
    """Run one catalogue property; deterministic for a given seed."""
    if prop not in PROPERTIES:
        raise TangleError("E_UNKNOWN_PROPERTY",
                          f"unknown property {prop!r}; known: {sorted(PROPERTIES)}")
    rng = random.Random(seed)
    failures: list = []
    note = ""
    fail = failures.append
    if prop == "mutation" and diagrams:
        for i, d in enumerate(diagrams):
            _check_mutation_one(d, fail, case=i)
        cases = len(diagrams)
    elif prop == "mutorient_counterexample":
        _check_mutorient(rng, cases, fail,
                         diagram=diagrams[0] if diagrams else None)
        cases = 1
    elif prop == "euler_char" and diagrams:
        for i, d in enumerate(diagrams):
            chis = euler_characteristics(d)
            fac = euler_factor(d)
            nabs = nabla_all(d)
            for s in d.sites():
                ok, _ = chis[s].equal_up_to_unit(fac * nabs[s])
                if not ok:
                    fail(_payload(case=i, diagram=d, site=str(s)))
        cases = len(diagrams)
    else:
        note = PROPERTIES[prop](rng, cases, fail) or ""
    return CheckReport(prop, seed, cases, not failures, failures, note)
