import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hellyepg.grid import (AmbiguousSequence, GridEdge, GridPoint, H, InconsistentSequence,
                           NonAxisAligned, PathError, SelfOverlap, V, ZeroLengthSegment,
                           edges_of, intersect_via_relevant, path_from_corners, paths_intersect,
                           reconstruct_from_relevant, relevant_edges)


def E(x, y, d):
    return GridEdge(x, y, d)


def test_straight_path_has_no_bends():
    p = path_from_corners([(0, 0), (3, 0)])
    assert p.bends == 0 and p.segments == 1


def test_l_path_has_one_bend():
    p = path_from_corners([(0, 0), (2, 0), (2, 3)])
    assert p.bends == 1
    assert p.bend_points == (GridPoint(2, 0),)


def test_zero_length_segment_rejected():
    with pytest.raises(ZeroLengthSegment):
        path_from_corners([(0, 0), (1, 0), (1, 0)])


def test_diagonal_rejected():
    with pytest.raises(NonAxisAligned):
        path_from_corners([(0, 0), (1, 1)])


@pytest.mark.parametrize("corners", [
    [(0, 0), (3, 0), (1, 0)],                    # doubles back
    [(0, 0), (2, 0), (2, 2), (1, 2), (1, 0)],    # revisits (1, 0)
    [(0, 0), (0, 2), (2, 2), (2, 0), (0, 0)],    # closed loop
])
def test_self_overlap_rejected(corners):
    with pytest.raises(SelfOverlap):
        path_from_corners(corners)


def test_negative_and_short_input_rejected():
    with pytest.raises(PathError):
        path_from_corners([(0, 0)])
    with pytest.raises(PathError):
        path_from_corners([(-1, 0), (2, 0)])


def test_collinear_corners_merge():
    p = path_from_corners([(0, 0), (1, 0), (3, 0), (3, 2), (3, 4)])
    assert p.corners == ((0, 0), (3, 0), (3, 4))
    assert p.bends == 1


def test_orientation_normalized():
    a = path_from_corners([(2, 3), (2, 0), (0, 0)])
    b = path_from_corners([(0, 0), (2, 0), (2, 3)])
    assert a == b and a.corners[0] == (0, 0)


@pytest.mark.parametrize("corners,expected", [
    ([(0, 0), (2, 0)], {E(0, 0, H), E(1, 0, H)}),
    ([(0, 0), (1, 0), (1, 1)], {E(0, 0, H), E(1, 0, V)}),
    ([(0, 0), (0, 2), (2, 2)], {E(0, 0, V), E(0, 1, V), E(0, 2, H), E(1, 2, H)}),
])
def test_edges_of(corners, expected):
    p = path_from_corners(corners)
    assert edges_of(p) == expected
    assert len(edges_of(p)) == p.length


@pytest.mark.parametrize("corners,expected", [
    ([(0, 0), (3, 0)], [E(0, 0, H), E(2, 0, H)]),
    ([(0, 0), (2, 0), (2, 3)], [E(0, 0, H), E(1, 0, H), E(2, 0, V), E(2, 2, V)]),
    ([(0, 0), (1, 0), (1, 1)], [E(0, 0, H), E(1, 0, V)]),
])
def test_relevant_edges(corners, expected):
    assert list(relevant_edges(path_from_corners(corners)).edges) == expected


def test_shared_roles_are_flagged():
    seq = relevant_edges(path_from_corners([(0, 0), (1, 0), (1, 1)]))
    assert seq.entries[0].roles == {"start", "bend_in"}
    assert seq.entries[1].roles == {"bend_out", "end"}


def test_reconstruct_round_trip_example():
    p = path_from_corners([(0, 0), (2, 0), (2, 3)])
    assert reconstruct_from_relevant(relevant_edges(p)).corners == p.corners


def test_reconstruct_fills_straight_gap():
    p = reconstruct_from_relevant([E(0, 0, H), E(5, 0, H)])
    assert p.corners == ((0, 0), (6, 0))


def test_reconstruct_rejects_misplaced_bend_edge():
    # bend pair at (2, 0) but the continuation edge sits in column 3
    with pytest.raises(InconsistentSequence):
        reconstruct_from_relevant([E(0, 0, H), E(1, 0, H), E(2, 0, V), E(3, 2, V)])


def test_reconstruct_rejects_parallel_lines_and_duplicates():
    with pytest.raises(InconsistentSequence):
        reconstruct_from_relevant([E(0, 0, H), E(0, 1, H)])
    with pytest.raises(AmbiguousSequence):
        reconstruct_from_relevant([E(0, 0, H), E(0, 0, H)])
    with pytest.raises(InconsistentSequence):
        reconstruct_from_relevant([])


def test_reconstruct_rejects_non_relevant_interior():
    # (2,0) lies inside the segment, so it is not a relevant edge
    with pytest.raises(InconsistentSequence):
        reconstruct_from_relevant([E(0, 0, H), E(2, 0, H), E(4, 0, H)])


def test_point_contact_is_not_intersection():
    p = path_from_corners([(0, 1), (2, 1)])
    q = path_from_corners([(1, 0), (1, 2)])
    assert paths_intersect(p, q) == (False, frozenset())
    assert not intersect_via_relevant(p, q)


def test_overlap_window():
    p = path_from_corners([(0, 0), (3, 0)])
    q = path_from_corners([(2, 0), (5, 0)])
    assert paths_intersect(p, q) == (True, frozenset({E(2, 0, H)}))


def test_claw_pair_shares_one_edge():
    p = path_from_corners([(0, 1), (1, 1), (1, 0)])
    q = path_from_corners([(1, 0), (1, 1), (2, 1)])
    ok, common = paths_intersect(p, q)
    assert ok and common == {E(1, 0, V)}


def test_nested_paths_meet_on_relevant_edge():
    outer = path_from_corners([(0, 0), (5, 0)])
    inner = path_from_corners([(1, 0), (3, 0)])
    assert intersect_via_relevant(outer, inner)
    assert not intersect_via_relevant(outer, path_from_corners([(0, 1), (5, 1)]))


# ---------------------------------------------------------------- properties

@st.composite
def paths(draw, size=16, max_bends=3):
    x = draw(st.integers(0, size - 1))
    y = draw(st.integers(0, size - 1))
    corners = [(x, y)]
    horiz = draw(st.booleans())
    for _ in range(draw(st.integers(1, max_bends + 1))):
        if horiz:
            x = draw(st.integers(0, size - 1).filter(lambda v, x=x: v != x))
        else:
            y = draw(st.integers(0, size - 1).filter(lambda v, y=y: v != y))
        corners.append((x, y))
        horiz = not horiz
    try:
        return path_from_corners(corners)
    except SelfOverlap:
        from hypothesis import reject
        reject()


@settings(max_examples=300, deadline=None)
@given(paths())
def test_round_trip_property(p):
    seq = relevant_edges(p)
    assert reconstruct_from_relevant(seq) == p
    assert len(seq) <= 2 * (p.bends + 1)
    if all(len(s) >= 2 for s in p.segment_edges()):
        assert len(seq) == 2 * (p.bends + 1)


@settings(max_examples=300, deadline=None)
@given(paths(size=6, max_bends=2), paths(size=6, max_bends=2))
def test_relevant_intersection_agrees(p, q):
    assert intersect_via_relevant(p, q) == paths_intersect(p, q)[0]


@settings(max_examples=200, deadline=None)
@given(paths())
def test_bends_match_corners(p):
    assert p.bends == len(p.corners) - 2
    assert path_from_corners(p.corners) == p
