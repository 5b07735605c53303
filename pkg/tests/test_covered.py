import functools

import pytest

from slitmaps.core import is_bipartite, vertex_distances
from slitmaps.covered import (
    bipartite_equivalence,
    covered_inverse,
    covered_suite,
    rotate_covered,
    spanning_unicellular_submaps,
)
from slitmaps.enumeration import even_types, gen_covered, gen_maps, verify_eq2, verify_eq3
from slitmaps.errors import LoopNotInCovering
from slitmaps.paths import Sign, noncontractible_simple_loops
from slitmaps.slide import rotate

from conftest import unicellular
from oracles import spanning_tree_count


@functools.lru_cache(maxsize=None)
def covered_population():
    out = []
    for a in even_types(4):
        out.extend(gen_covered(a, 1))
    return tuple(out)


def test_unicellular_has_itself_as_only_covering(torus_square):
    for m in (torus_square,) + unicellular(3):
        covs = spanning_unicellular_submaps(m)
        assert len(covs) == 1 and covs[0].cover == frozenset(range(m.num_darts))


def test_plane_coverings_are_spanning_trees():
    for n in (1, 2, 3, 4):
        for m in gen_maps(n, 0):
            assert len(spanning_unicellular_submaps(m)) == spanning_tree_count(m)


def test_covering_invariants():
    for cm in covered_population():
        u = cm.covering
        assert u.num_faces == 1 and u.genus == cm.ambient.genus
        assert u.num_vertices == cm.ambient.num_vertices
        a = cm.ambient.face_degrees()
        assert u.num_edges == sum(a) // 2 - len(a) + 1


def test_rotate_covered_commutes():
    count = 0
    for cm in covered_population():
        u, amb = cm.submap()
        for loop_u in noncontractible_simple_loops(u):
            loop = tuple(amb[d] for d in loop_u)
            for s in Sign:
                out, loop2, s2 = rotate_covered(cm, loop, s)
                assert out.ambient == rotate(cm.ambient, loop, s).map
                assert out.covering.key() == rotate(u, loop_u, s).map.key()
                assert out.ambient.map_type() == cm.ambient.map_type()
                assert out.ambient.genus == cm.ambient.genus
                assert len(out.cover) == len(cm.cover)
                back, loop3, s3 = rotate_covered(out, loop2, s2)
                assert back == cm and loop3 == loop and s3 is s
                count += 1
    assert count > 100


def test_loop_outside_covering():
    cm = next(c for c in covered_population() if len(c.cover) < c.ambient.num_darts)
    outside = next(d for d in range(cm.ambient.num_darts) if d not in cm.cover)
    with pytest.raises(LoopNotInCovering):
        rotate_covered(cm, (outside,), Sign.PLUS)


def test_bipartite_equivalence():
    seen_true = False
    for cm in covered_population():
        amb, cov = bipartite_equivalence(cm)
        assert amb == cov
        seen_true |= amb
        if amb:
            u, sub = cm.submap()
            du = vertex_distances(u, u.root_vertex)
            dm = vertex_distances(cm.ambient, cm.ambient.root_vertex)
            for i, d in enumerate(sub):
                assert du[u.tail(i)] % 2 == dm[cm.ambient.tail(d)] % 2
    assert seen_true


def test_covered_torus_square(torus_square):
    cm = spanning_unicellular_submaps(torus_square)[0]
    assert bipartite_equivalence(cm) == (False, False)


def test_plane_even_maps_are_bipartite():
    for a in even_types(3):
        for cm in gen_covered(a, 0):
            assert bipartite_equivalence(cm) == (True, True)
            assert is_bipartite(cm.ambient)


def test_covered_suite_roundtrip():
    for cm in covered_population():
        tag, img = covered_suite(cm)
        assert covered_inverse(tag, img).key() == cm.key()


def test_type_four():
    rep = verify_eq3((4,))
    assert (rep.values["covered"], rep.values["bip"], rep.values["marked_plane"]) == (1, 0, 1)
    assert rep.passed


@pytest.mark.parametrize("n", [2, 3])
def test_single_face_type_matches_unicellular(n):
    rep = verify_eq3((2 * n,))
    two = verify_eq2(n)
    assert rep.values["covered"] == two.values["u1"]
    assert rep.values["bip"] == two.values["bip"]
    assert rep.values["marked_plane"] == two.values["marked_trees"]
