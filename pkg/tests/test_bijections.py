from collections import Counter

import pytest

from slitmaps.bijections import (
    BLUE,
    RED,
    CaseTag,
    MarkedTree,
    apply_case,
    case_of,
    in_codomain,
    invert_case,
    theta,
    xi,
)
from slitmaps.core import vertex_distances
from slitmaps.enumeration import gen_marked_trees
from slitmaps.errors import MarksNotOdd, NotATree, NotInCodomain, NotInDomain, PreconditionViolated
from slitmaps.torus import SchemeKind, classify

from conftest import unicellular


def test_torus_square_is_case_g(torus_square):
    assert case_of(torus_square) is CaseTag.G


def test_xi_torus_square(torus_square):
    t = xi(torus_square)
    tree = t.tree
    assert tree.genus == 0 and tree.num_faces == 1 and tree.num_edges == 2
    # a 2-edge star rooted at its centre, both leaves marked
    assert tree.degree(tree.root_vertex) == 2
    assert all(tree.degree(v) == 1 for v in t.marks)
    assert theta(t) == torus_square


def test_theta_path_of_four():
    path = next(
        t for t in unicellular(4, 0)
        if max(t.degree(v) for v in range(t.num_vertices)) == 2 and t.degree(t.root_vertex) == 1
    )
    dist = vertex_distances(path, path.root_vertex)
    marks = frozenset(v for v in range(path.num_vertices) if dist[v] in (1, 3))
    u = theta(MarkedTree(path, marks))
    si = classify(u)
    assert si.kind is SchemeKind.DEGENERATE and si.parity_class == (1, 1) and si.e == 1
    # the chain joining the marks has length 3 - 1 = 2, split as 1 + 1
    assert (len(si.lam), len(si.mu)) == (1, 1)
    assert u.num_edges == 4
    assert xi(u).key() == MarkedTree(path, marks).key()


def test_domain_errors(torus_square):
    bip = next(m for m in unicellular(3) if classify(m).parity_class == (0, 0))
    with pytest.raises(NotInDomain):
        case_of(bip)
    with pytest.raises(PreconditionViolated):
        xi(bip)
    with pytest.raises(NotInCodomain):
        invert_case(torus_square, CaseTag.A)


def test_theta_rejects():
    star = xi(unicellular(2)[0]).tree
    with pytest.raises(MarksNotOdd):
        theta(MarkedTree(star, frozenset((star.root_vertex, 1 if star.root_vertex != 1 else 2))))
    with pytest.raises(NotATree):
        theta(MarkedTree(unicellular(2)[0], frozenset((0, 0))))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_suite(n):
    cases = Counter()
    images = {tag: Counter() for tag in CaseTag}
    bip = set()
    for u in unicellular(n):
        si = classify(u)
        if si.parity_class == (0, 0):
            bip.add(u.key())
            continue
        if si.parity_class == (0, 1):
            continue
        tag, img = apply_case(u)
        cases[tag] += 1
        assert in_codomain(tag, img)
        images[tag][img.key()] += 1
        back = invert_case(img, tag)
        assert back == u or back.key() == u.key()
        if tag is not CaseTag.G:
            assert img.num_edges == n
        else:
            assert img.tree.num_edges == n
    for part in (BLUE, RED):
        union = Counter()
        for tag in part:
            union.update(images[tag])
        assert set(union) == bip and all(v == 1 for v in union.values())
    trees = {t.key() for t in gen_marked_trees(n)}
    assert set(images[CaseTag.G]) == trees
    assert sum(cases.values()) == 2 * len(bip) + len(trees)


def test_inverse_from_codomain_side():
    # run every inverse on its whole codomain, not only on forward images
    for n in (3, 4, 5):
        for u in unicellular(n):
            if classify(u).parity_class != (0, 0):
                continue
            for tag in BLUE + RED:
                if in_codomain(tag, u):
                    pre = invert_case(u, tag)
                    assert case_of(pre) is tag
                    assert apply_case(pre)[1] == u or apply_case(pre)[1].key() == u.key()
        for t in gen_marked_trees(n):
            u = theta(t)
            assert case_of(u) is CaseTag.G
            assert xi(u).key() == t.key()
            assert all(vertex_distances(xi(u).tree, xi(u).tree.root_vertex)[v] % 2 for v in xi(u).marks)
