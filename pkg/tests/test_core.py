import random

import pytest
from hypothesis import given, settings, strategies as st

from slitmaps.core import (
    MapType,
    bipartite_coloring,
    build_map,
    canonical_form,
    face_labelings,
    from_cycles,
    graph_distance,
    is_bipartite,
    relabel,
    restrict,
    same_map,
)
from slitmaps.errors import (
    Disconnected,
    IotaHasFixedPoint,
    LabelCountMismatch,
    MapError,
    NotPermutation,
    ParseError,
)
from slitmaps.textio import format_map, parse_blocks, parse_map

from conftest import even_maps, unicellular
from oracles import faces_of, has_odd_cycle


def test_sphere_loop(sphere_loop):
    m = sphere_loop
    assert (m.num_vertices, m.num_edges, m.num_faces, m.genus) == (1, 1, 2, 0)
    assert m.face_degrees() == (1, 1)


def test_torus_square(torus_square):
    m = torus_square
    assert (m.num_vertices, m.num_edges, m.num_faces, m.genus) == (1, 2, 1, 1)
    assert m.face_degrees() == (4,)
    assert bipartite_coloring(m) is None


def test_from_cycles_matches_cycle_notation():
    m = from_cycles([(0, 2, 1, 3)], [1, 0, 3, 2])
    assert m.sigma == (2, 3, 1, 0)


def test_disconnected():
    # two separate one-loop maps on darts {0,1} and {2,3}
    with pytest.raises(Disconnected):
        build_map([1, 0, 3, 2], [1, 0, 3, 2], 0)
    # same rotation, edges joining the two vertices: connected
    assert build_map([1, 0, 3, 2], [2, 3, 0, 1], 0).num_vertices == 2


@pytest.mark.parametrize(
    "sigma, iota, exc",
    [
        ([0, 0], [1, 0], NotPermutation),
        ([1, 0], [0, 1], IotaHasFixedPoint),
        ([1, 2, 3, 0], [1, 2, 3, 0], NotPermutation),
        ([], [], MapError),
        ([0], [0], MapError),
    ],
)
def test_rejects(sigma, iota, exc):
    with pytest.raises(exc):
        build_map(sigma, iota, 0)


def test_label_count():
    with pytest.raises(LabelCountMismatch):
        build_map([1, 0], [1, 0], 0, face_labels=[1])


def test_handshake_and_euler():
    for n in (1, 2, 3):
        for m in even_maps(n, 0) + even_maps(n, 1):
            assert sum(m.face_degrees()) == 2 * m.num_edges
            assert m.num_vertices - m.num_edges + m.num_faces == 2 - 2 * m.genus


def test_faces_match_oracle():
    for m in unicellular(3) + even_maps(3):
        assert sorted(map(sorted, m.faces)) == sorted(map(sorted, faces_of(m)))


def test_plane_trees_are_genus_zero():
    for t in unicellular(4, 0):
        assert t.genus == 0 and t.num_faces == 1
        assert is_bipartite(t)


def test_hexagon_torus_gluing_bipartite():
    bip = [m for m in unicellular(3) if is_bipartite(m)]
    assert len(bip) == 1
    assert bip[0].num_vertices == 2


def test_bipartite_matches_odd_cycle_oracle():
    from slitmaps.enumeration import gen_maps

    for n in (1, 2, 3):
        for m in gen_maps(n):
            assert is_bipartite(m) == (not has_odd_cycle(m))
    for n in (4, 5):
        for m in unicellular(n):
            assert is_bipartite(m) == (not has_odd_cycle(m))


def test_coloring_root_white():
    for m in unicellular(4):
        col = bipartite_coloring(m)
        if col is not None:
            assert col[m.root_vertex] == 0


def test_distances():
    path3 = build_map([0, 2, 1, 4, 3, 5], [1, 0, 3, 2, 5, 4], 0)
    assert path3.genus == 0 and path3.num_vertices == 4
    ends = [v for v in range(4) if path3.degree(v) == 1]
    assert graph_distance(path3, *ends) == 3
    for d in range(path3.num_darts):
        assert graph_distance(path3, path3.tail(d), path3.head(d)) == 1
    assert graph_distance(path3, 2, 2) == 0


def test_canonical_form_examples(torus_square):
    c = canonical_form(torus_square)
    assert canonical_form(c) == c
    assert c.iota == (1, 0, 3, 2) and c.root == 0
    lab = [2, 3, 0, 1]
    assert same_map(torus_square, relabel(torus_square, lab))


def test_torus_square_rootings_coincide(torus_square):
    # sigma commutes with iota here, so it is an automorphism moving 0 to 2
    assert same_map(torus_square, torus_square.with_root(2))


def test_rerooting_distinguishes_asymmetric_maps():
    path3 = build_map([0, 2, 1, 4, 3, 5], [1, 0, 3, 2, 5, 4], 0)
    assert not same_map(path3, path3.with_root(2))
    all_keys = {m.key() for m in unicellular(3)}
    reached = set()
    for m in unicellular(3):
        keys = {m.with_root(r).key() for r in range(m.num_darts)}
        assert keys <= all_keys
        assert 6 % len(keys) == 0
        reached |= keys
    assert reached == all_keys


def _random_map(n, seed):
    rng = random.Random(seed)
    while True:
        sigma = list(range(2 * n))
        rng.shuffle(sigma)
        try:
            return build_map(sigma, [d ^ 1 for d in range(2 * n)], rng.randrange(2 * n))
        except Disconnected:
            continue


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_canonical_form_invariant_under_relabeling(n, seed, seed2):
    m = _random_map(n, seed)
    lab = list(range(2 * n))
    random.Random(seed2).shuffle(lab)
    assert relabel(m, lab).key() == m.key()
    assert canonical_form(canonical_form(m)) == canonical_form(m)
    assert m.genus >= 0


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5), st.integers(0, 10**6))
def test_text_roundtrip(n, seed):
    m = _random_map(n, seed)
    labels = list(range(1, m.num_faces + 1))
    random.Random(seed).shuffle(labels)
    labeled = build_map(m.sigma, m.iota, m.root, labels)
    assert parse_map(format_map(m)) == m
    assert parse_map(format_map(labeled)) == labeled


def test_parse_errors_have_positions():
    with pytest.raises(ParseError) as exc:
        parse_blocks("darts 2\nsigma 1 x\niota 1 0\nroot 0\n")
    assert exc.value.line == 2 and exc.value.column == 9
    with pytest.raises(ParseError) as exc:
        parse_blocks("darts 2\nsigma 1 0 \niota 1 0\nroot 0\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        parse_blocks("darts 2\nsigma 1 0\niota 1 0\nroot 0")
    with pytest.raises(ParseError):
        parse_blocks("darts 2\niota 1 0\nsigma 1 0\nroot 0\n")
    with pytest.raises(ParseError):
        parse_blocks("darts 2\nsigma 1 0\niota 0 1\nroot 0\n")


def test_parse_several_blocks(torus_square, sphere_loop):
    text = format_map(torus_square, loop=(0,)) + "\n" + format_map(sphere_loop)
    blocks = parse_blocks(text)
    assert [b.map for b in blocks] == [torus_square, sphere_loop]
    assert blocks[0].loop == (0,)


def test_map_type_and_labelings():
    assert MapType((4, 2)).num_edges == 3
    with pytest.raises(ValueError):
        MapType((3,))
    m = build_map([1, 0], [1, 0], 0)
    assert face_labelings(m, (2,)) == []
    assert face_labelings(m, (1, 1)) == [(1, 2), (2, 1)]


def test_restrict_root_corner(torus_square):
    sub, amb = restrict(torus_square, {0, 1})
    assert sub.num_edges == 1 and amb == (0, 1)
    sub, amb = restrict(torus_square, {2, 3})
    assert amb[sub.root] == 2
