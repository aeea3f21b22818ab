import pytest

from tanglenabla import corpus
from tanglenabla.diagram import (TangleError, canonical_form, isomorphic,
                                 linking_number, parse_tangle, serialize)

from conftest import load


def test_parse_single_crossing_counts():
    d = load("crossing_pos")
    assert len(d.crossings) == 1
    assert d.n_open == 2 and d.m_closed == 0
    assert len(d.boundary) == 4


def test_parse_pretzel_matches_figure():
    d = load("pretzel_2m3")
    assert len(d.crossings) == 5
    assert d.n_open == 2 and d.m_closed == 0
    assert sorted(d.colours()) == ["p", "q"]
    signs = sorted(c.sign for c in d.crossings)
    assert signs == [-1, -1, -1, 1, 1]


def test_dangling_edge_rejected():
    src = """tangle bad
ends 2
boundary a e1 b e9
crossing x1 + under e1 e2 over e2 e3
colour e1 t
"""
    with pytest.raises(TangleError) as e:
        parse_tangle(src)
    assert e.value.code == "E_DANGLING"


def test_no_crossing_rejected():
    with pytest.raises(TangleError) as e:
        parse_tangle("tangle t\nends 2\nboundary a e1 b e1\ncolour e1 t\n")
    assert e.value.code == "E_NO_CROSSING"


def test_inconsistent_orientation_rejected():
    # e2 is declared incoming at both of its ends
    src = """tangle bad
ends 4
boundary a e1 b e2 c e3 d e4
crossing x1 + under e1 e2 over e2 e3
colour e1 t
"""
    with pytest.raises(TangleError):
        parse_tangle(src)


def test_boundary_disconnected_diagram_rejected():
    # two parallel crossingless strands next to a crossing piece cannot be
    # expressed; simplest violation: a region with two boundary arcs
    src = """tangle bad
ends 6
boundary a e1 b e2 c e4 d e3 e f1 f f1
crossing x1 + under e1 e3 over e2 e4
colour e1 u
colour e2 o
colour f1 s
"""
    with pytest.raises(TangleError) as e:
        parse_tangle(src)
    assert e.value.code == "E_DISCONNECTED"


def test_region_counts_across_corpus(corpus_names):
    for name in corpus_names:
        d = load(name)
        m = len(d.crossings)
        assert len(d.regions) == m + d.n_open + 1, name
        open_regions = [r for r in d.regions if r.kind == "open"]
        assert len(open_regions) == 2 * d.n_open, name
        # open regions carry exactly one arc each
        assert sorted(a for r in open_regions for a in r.arcs) == sorted(d.arcs)


def test_region_quadrant_map_single_crossing():
    d = load("crossing_pos")
    assert d.region_of_quadrant == {(0, 0): "c", (0, 1): "d", (0, 2): "a", (0, 3): "b"}


def test_clasp_regions():
    d = load("clasp")
    kinds = sorted((r.kind, r.rid) for r in d.regions)
    assert kinds == [("closed", "r0"), ("open", "b"), ("open", "l"),
                     ("open", "r"), ("open", "t")]


def test_linking_numbers():
    assert linking_number(load("crossing_pos"), "o", "u") == 0.5
    assert linking_number(load("crossing_neg"), "o", "u") == -0.5
    assert linking_number(load("clasp"), "t1", "ti") == 1
    assert linking_number(load("clasp"), "t1", "all") == 1
    d = load("mutorient")
    assert linking_number(d, "p", "r") == 2
    with pytest.raises(TangleError) as e:
        linking_number(d, "p", "zzz")
    assert e.value.code == "E_UNKNOWN_COLOUR"


def test_serialize_roundtrip_is_identity_on_canonical_form(corpus_names):
    for name in corpus_names:
        d = load(name)
        cf = canonical_form(d)
        again = canonical_form(parse_tangle(cf))
        assert cf == again, name
        assert serialize(parse_tangle(serialize(d))) == serialize(d), name


def test_sites_enumeration():
    d = load("clasp")
    assert sorted(str(s) for s in d.sites()) == ["b", "l", "r", "t"]
    t = load("trefoil")
    assert [str(s) for s in t.sites()] == ["-"]


def test_isomorphic_ignores_labelling():
    d = load("clasp")
    text = serialize(d).replace("e1", "w9").replace("e2", "w8")
    assert isomorphic(parse_tangle(text), d)


def test_nonplanar_rotation_rejected():
    # the boundary order crosses two strand ends of the positive crossing
    src = """tangle bad
ends 4
boundary a e2 b e1 c e3 d e4
crossing x1 + under e1 e3 over e2 e4
colour e1 u
colour e2 o
"""
    with pytest.raises(TangleError) as e:
        parse_tangle(src)
    assert e.value.code == "E_NONPLANAR"


def test_compute_regions_contract():
    from tanglenabla.diagram import compute_regions
    d = load("clasp")
    regions = compute_regions(d)
    assert regions is d.regions
    split = parse_tangle("""tangle split
ends 2
boundary a e1 b e3
crossing x1 + under e1 e2 over e2 e3
colour e1 t
circle s
""")
    with pytest.raises(TangleError) as e:
        compute_regions(split)
    assert e.value.code == "E_SPLIT"
