import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import read_data
from hellyepg import io
from hellyepg.graphs import cycle, k24, octahedron, triangle
from hellyepg.grid import GridEdge, GridPoint, edges_of, path_from_corners
from hellyepg.representation import (CLAW, EMPTY_CORE, SHAPE_BL, SHAPE_BR, SHAPE_TL, SHAPE_TR,
                                     EpgRepresentation, NotB1, RepresentationError, SizeMismatch,
                                     UnclassifiableC4, classify_c4, compact, core,
                                     find_claw_cliques, fits_shape_class, helly_by_cliques,
                                     helly_by_gilmore, intersection_graph, realizes, shape_of,
                                     shapes_used)
from hellyepg.sampling import random_rep


def load(name):
    return io.read_rep(read_data(name))


def brute_helly(rep):
    """Every pairwise-intersecting subfamily shares an edge (subset enumeration)."""
    sets = [edges_of(p) for p in rep.paths]
    for r in range(3, rep.n + 1):
        for sub in itertools.combinations(range(rep.n), r):
            if all(sets[a] & sets[b] for a, b in itertools.combinations(sub, 2)):
                if not set.intersection(*(set(sets[a]) for a in sub)):
                    return False
    return True


def test_paths_must_fit():
    p = path_from_corners([(0, 0), (3, 0)])
    with pytest.raises(RepresentationError):
        EpgRepresentation(3, 1, (p,))
    rep = EpgRepresentation.fitted([p])
    assert (rep.width, rep.height) == (4, 1)


def test_edge_clique_triangle_is_helly():
    rep = load("edge_clique_triangle.rep")
    assert intersection_graph(rep).same_edges(triangle())
    assert helly_by_cliques(rep) and helly_by_gilmore(rep)
    assert not find_claw_cliques(rep)
    assert core(rep, [0, 1, 2]) == {GridEdge(1, 0, "H")}


def test_claw_triangle_is_not_helly():
    rep = load("claw_triangle.rep")
    assert intersection_graph(rep).same_edges(triangle())
    v = helly_by_cliques(rep)
    assert not v and v.witness.members == (0, 1, 2) and v.witness.kind == EMPTY_CORE
    g = helly_by_gilmore(rep)
    assert not g and g.witness.members == (0, 1, 2)
    claws = find_claw_cliques(rep)
    assert len(claws) == 1
    assert claws[0].kind == CLAW and claws[0].center == GridPoint(1, 1)
    assert core(rep, [0, 1, 2]) == frozenset()


def test_realizes_reasons():
    rep = load("claw_triangle.rep")
    assert realizes(rep, triangle(), 1)
    v = realizes(rep, triangle(), 0)
    assert not v and v.reason.startswith("BendBudget")
    path3 = cycle(3).induced([0, 1])
    with pytest.raises(SizeMismatch):
        realizes(rep, path3, 1)
    assert realizes(load("true_pie.rep"), cycle(4), 1)
    bad = realizes(load("true_pie.rep"), octahedron().induced([0, 2, 1, 3]), 1)
    assert not bad


@pytest.mark.parametrize("name,tag,center,square", [
    ("true_pie.rep", "TruePie", GridPoint(1, 1), False),
    ("false_pie.rep", "FalsePie", GridPoint(1, 1), False),
    ("frame.rep", "Frame", None, False),
    ("square_frame.rep", "Frame", None, True),
])
def test_classify_goldens(name, tag, center, square):
    rep = load(name)
    assert realizes(rep, cycle(4), 1)
    shape = classify_c4(rep, [0, 1, 2, 3])
    assert shape.tag == tag
    assert shape.center == center
    assert shape.square == square
    # the cyclic order does not matter
    assert classify_c4(rep, [1, 2, 3, 0]).tag == tag
    assert classify_c4(rep, [3, 2, 1, 0]).tag == tag


def test_classify_rejects_non_cycles():
    rep = load("true_pie.rep")
    with pytest.raises(UnclassifiableC4):
        classify_c4(rep, [0, 2, 1, 3])
    with pytest.raises(UnclassifiableC4):
        classify_c4(rep, [0, 1, 2])
    with pytest.raises(NotB1):
        classify_c4(EpgRepresentation.fitted(
            [path_from_corners([(0, 0), (1, 0), (1, 1), (2, 1)])] * 4), [0, 1, 2, 3])


def test_square_frame_shapes():
    rep = load("square_frame.rep")
    assert [shape_of(p) for p in rep.paths] == [SHAPE_BL, SHAPE_BR, SHAPE_TR, SHAPE_TL]
    assert shapes_used(rep) == {SHAPE_BL, SHAPE_BR, SHAPE_TR, SHAPE_TL}


def test_shape_classes():
    ell = path_from_corners([(0, 0), (2, 0), (2, 2)])  # right then up: arms left and up
    assert shape_of(ell) == SHAPE_BR
    assert shape_of(path_from_corners([(0, 0), (3, 0)])) == SHAPE_BL
    rep = load("true_pie.rep")
    used = shapes_used(rep)
    assert len(used) == 4
    assert not fits_shape_class(rep, [SHAPE_BL])
    single = EpgRepresentation.fitted([ell])
    assert fits_shape_class(single, [SHAPE_BL])  # a rotation maps it onto the class
    assert fits_shape_class(single, [SHAPE_BR])


def test_k24_golden_uses_false_pies():
    rep = load("k24_false_pies.rep")
    assert realizes(rep, k24(), 1)
    assert helly_by_cliques(rep)
    tags = {classify_c4(rep, [0, a, 1, b]).tag for a, b in itertools.combinations(range(2, 6), 2)}
    assert "FalsePie" in tags


def test_octahedron_single_bend_has_claws():
    rep = load("o3_b1.rep")
    assert realizes(rep, octahedron(), 1)
    assert find_claw_cliques(rep)
    assert not helly_by_cliques(rep)
    assert not helly_by_gilmore(rep)
    assert not helly_by_gilmore(rep, reference=True)


def test_claw_scan_needs_b1():
    rep = EpgRepresentation.fitted([path_from_corners([(0, 0), (1, 0), (1, 1), (2, 1)])])
    with pytest.raises(NotB1):
        find_claw_cliques(rep)


def test_compact_examples():
    p = path_from_corners([(2, 3), (6, 3), (6, 7)])
    q = path_from_corners([(4, 3), (9, 3)])
    c = compact(EpgRepresentation(12, 12, (p, q)))
    assert (c.width, c.height) == (5, 3)
    assert c.paths[0].corners == ((0, 0), (3, 0), (3, 2))
    assert intersection_graph(c).m == 1
    assert c.bends() == [1, 0]


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_helly_checkers_match_brute_force(seed):
    rng = random.Random(seed)
    rep = random_rep(rng, rng.randint(2, 6), 5, 5, rng.randint(0, 2))
    want = brute_helly(rep)
    assert bool(helly_by_cliques(rep)) == want
    assert bool(helly_by_cliques(rep, debug_full=True)) == want
    assert bool(helly_by_gilmore(rep)) == want
    assert bool(helly_by_gilmore(rep, reference=True)) == want
    if rep.max_bends() <= 1:
        assert (not find_claw_cliques(rep)) == want


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_witness_is_minimal_and_pairwise(seed):
    rng = random.Random(seed)
    rep = random_rep(rng, rng.randint(3, 7), 4, 4, 1)
    for minimal, v in ((True, helly_by_cliques(rep)), (False, helly_by_gilmore(rep))):
        if v:
            continue
        mem = v.witness.members
        sets = [rep.paths[i].edges for i in mem]
        assert all(a & b for a, b in itertools.combinations(sets, 2))
        assert not frozenset.intersection(*sets)
        if minimal:
            # dropping any member leaves a family with a common edge
            for drop in range(len(sets)):
                rest = sets[:drop] + sets[drop + 1:]
                assert frozenset.intersection(*rest)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_compact_properties(seed):
    rng = random.Random(seed)
    rep = random_rep(rng, rng.randint(1, 6), 10, 10, rng.randint(0, 2), uniform=False)
    c = compact(rep)
    assert intersection_graph(c).same_edges(intersection_graph(rep))
    assert c.bends() == rep.bends()
    assert compact(c) == c
    assert bool(helly_by_cliques(c)) == bool(helly_by_cliques(rep))
    assert c.width <= rep.width and c.height <= rep.height
