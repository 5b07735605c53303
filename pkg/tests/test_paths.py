import pytest

from slitmaps.core import build_map
from slitmaps.enumeration import gen_maps
from slitmaps.errors import ChainMismatch, NotALoop, NotOnLoop
from slitmaps.paths import (
    Side,
    Sign,
    concat,
    dart_sides,
    is_contractible,
    is_simple_loop,
    noncontractible_simple_loops,
    reverse,
    side_of_arrival,
    side_of_departure,
    simple_loops,
)
from slitmaps.rightmost import rightmost_path

from conftest import unicellular
from oracles import loop_is_contractible


@pytest.fixture
def path3():
    return build_map([0, 2, 1, 4, 3, 5], [1, 0, 3, 2, 5, 4], 0)


def test_concat_and_reverse(path3):
    m = path3
    p = (0,)
    q = (2,)
    assert m.head(0) == m.tail(2)
    assert concat(m, p, ()) == p
    assert concat(m, (), q) == q
    assert concat(m, p, q) == (0, 2)
    with pytest.raises(ChainMismatch):
        concat(m, q, p)
    assert reverse(m, ()) == ()
    assert reverse(m, (0,)) == (1,)
    assert reverse(m, (0, 2)) == (3, 1)
    assert reverse(m, reverse(m, (0, 2, 4))) == (0, 2, 4)


def test_simple_loops_on_torus_square(torus_square):
    m = torus_square
    assert is_simple_loop(m, (0,))
    # figure eight: two loops through the single vertex in a row
    assert not is_simple_loop(m, (0, 2))
    with pytest.raises(NotALoop):
        is_simple_loop(build_map([0, 2, 1, 3], [1, 0, 3, 2], 0), (0, 2))


def test_face_contour_is_contractible():
    m = build_map([1, 0], [1, 0], 0)
    assert is_contractible(m, (0,))
    for n in (2, 3):
        for m in gen_maps(n, 0):
            for f in m.faces:
                if is_simple_loop(m, f):
                    assert is_contractible(m, f)


def test_torus_square_loops_noncontractible(torus_square):
    assert [is_contractible(torus_square, (d,)) for d in range(4)] == [False] * 4


def test_contractibility_matches_oracle():
    checked = 0
    for n in (1, 2, 3, 4):
        for m in gen_maps(n):
            for loop in simple_loops(m):
                assert is_contractible(m, loop) == loop_is_contractible(m, loop), (m, loop)
                checked += 1
    assert checked > 1000


def test_rightmost_loop_is_noncontractible():
    for m in unicellular(4):
        lam = rightmost_path(m).loop
        assert not loop_is_contractible(m, lam)


def test_side_of_arrival_torus_square(torus_square):
    m = torus_square
    assert side_of_arrival(m, (0,), 3) is Side.LEFT
    assert side_of_arrival(m, (0,), 2) is Side.RIGHT
    with pytest.raises(NotOnLoop):
        side_of_arrival(m, (0,), 1)


def test_sides_partition_and_agree():
    for n in (2, 3):
        for m in unicellular(n):
            for loop in noncontractible_simple_loops(m):
                sides = dart_sides(m, loop)
                loop_darts = set(loop) | {m.iota[d] for d in loop}
                at_loop = {d for d in range(m.num_darts) if m.tail(d) in {m.tail(x) for x in loop}}
                assert set(sides) == at_loop - loop_darts
                for d in sides:
                    assert side_of_departure(m, loop, d) is sides[d][1]
                    assert side_of_arrival(m, loop, m.iota[d]) is sides[d][1]


def test_one_vertex_crossing_edges():
    # on a one-vertex torus the edges off a length-one loop must cross it
    for m in unicellular(2) + unicellular(3):
        if m.num_vertices != 1:
            continue
        for loop in noncontractible_simple_loops(m):
            if len(loop) != 1:
                continue
            sides = dart_sides(m, loop)
            crossing = [d for d in sides if m.iota[d] in sides and m.iota[d] != d]
            assert any(sides[d][1] is not sides[m.iota[d]][1] for d in crossing)


def test_sides_stable_under_relabeling():
    from slitmaps.core import relabel

    for m in unicellular(3):
        lab = list(reversed(range(m.num_darts)))
        m2 = relabel(m, lab)
        for loop in noncontractible_simple_loops(m):
            loop2 = tuple(lab[d] for d in loop)
            s1 = {lab[d]: s for d, (_, s) in dart_sides(m, loop).items()}
            s2 = {d: s for d, (_, s) in dart_sides(m2, loop2).items()}
            assert s1 == s2


def test_sign():
    assert Sign.PLUS.flip() is Sign.MINUS
    assert str(Sign.MINUS) == "-"
    assert Sign.parse("+") is Sign.PLUS
    with pytest.raises(ValueError):
        Sign.parse("0")
