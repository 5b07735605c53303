from slitmaps.paths import Sign, is_simple_path
from slitmaps.rightmost import psi, rightmost_path
from slitmaps.slide import rotate
from slitmaps.torus import classify

from conftest import even_maps, involution_population, unicellular
from oracles import loop_is_contractible, rightmost_bruteforce


def test_torus_square(torus_square):
    rp = rightmost_path(torus_square)
    assert rp.prefix == () and len(rp.loop) == 1


def test_matches_bruteforce():
    for m in unicellular(2) + unicellular(3) + even_maps(2) + even_maps(3):
        rp = rightmost_path(m)
        assert (rp.prefix, rp.loop) == rightmost_bruteforce(m, loop_is_contractible)


def test_deep_root_prefix_is_tree_path():
    hits = 0
    for m in unicellular(4):
        rp = rightmost_path(m)
        if len(rp.prefix) >= 2:
            assert (rp.prefix, rp.loop) == rightmost_bruteforce(m, loop_is_contractible)
            hits += 1
    assert hits


def test_decomposition_shape():
    for m in unicellular(4):
        rp = rightmost_path(m)
        assert is_simple_path(m, rp.prefix)
        if rp.prefix:
            assert m.tail(rp.prefix[0]) == m.root_vertex
            assert m.head(rp.prefix[-1]) == m.tail(rp.loop[0])
        else:
            assert m.tail(rp.loop[0]) == m.root_vertex
        prefix_verts = {m.tail(d) for d in rp.prefix}
        loop_verts = {m.tail(d) for d in rp.loop}
        assert not prefix_verts & loop_verts


def test_psi_inverse_and_loop_preserved():
    for m in involution_population() + unicellular(5):
        lam = rightmost_path(m).loop
        for s in Sign:
            r = rotate(m, lam, s)
            assert rightmost_path(r.map).loop == r.loop
            assert psi(r.map, s.flip()) == m
            assert sorted(r.map.face_degrees()) == sorted(m.face_degrees())


def test_psi_swaps_even_loop_cells():
    for n in (3, 4, 5):
        cells = {(0, 0): set(), (0, 1): set()}
        images = {(0, 0): set(), (0, 1): set()}
        for m in unicellular(n):
            cls = classify(m).parity_class
            if cls in cells:
                cells[cls].add(m.key())
                img = psi(m, Sign.PLUS)
                images[classify(img).parity_class].add(img.key())
        assert len(cells[(0, 0)]) == len(cells[(0, 1)])
        assert images[(0, 0)] == cells[(0, 0)]
        assert images[(0, 1)] == cells[(0, 1)]
