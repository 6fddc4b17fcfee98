
import pytest
from hypothesis import given, settings, strategies as st

from padic_discs import disc, geometry as G, tree
from padic_discs.classes import AlphaClass
from padic_discs.errors import OddValuationAlpha
from padic_discs.sampling import random_disc_pair, random_pgl2, rng_for

from oracles import elementary_divisor_distance

A5 = AlphaClass.of(2, 5)
BASE = tree.base_vertex()
integral = st.integers(-60, 60)


def test_distances():
    assert tree.tree_distance(BASE, BASE, 5) == 0
    assert tree.tree_distance(BASE, tree.TreeVertex.from_basis(((25, 0), (0, 1)), 5), 5) == 2
    assert tree.TreeVertex.from_basis(((5, 0), (0, 5)), 5) == BASE


@given(integral, integral, integral, integral, st.sampled_from((2, 3, 5)))
def test_distance_matches_elementary_divisors(a, b, c, d, p):
    if a * d - b * c == 0:
        return
    u = tree.TreeVertex.from_basis(((a, b), (c, d)), p)
    assert tree.tree_distance(BASE, u, p) == elementary_divisor_distance(((a, b), (c, d)), p)


@pytest.mark.parametrize("p", (2, 3, 5))
def test_ball_is_a_regular_tree(p):
    verts, edges = tree.ball(BASE, 2, p)
    assert len(verts) == 1 + (p + 1) + (p + 1) * p
    assert len(edges) == len(verts) - 1
    assert len(tree.neighbors(BASE, p)) == p + 1
    for u in verts:
        assert all(tree.tree_distance(u, w, p) == 1 for w in tree.neighbors(u, p))


def test_dot_export_is_deterministic():
    a = tree.export_dot(BASE, 2, 3)
    assert a == tree.export_dot(BASE, 2, 3)
    assert a.startswith("graph") or a.startswith("strict graph")
    assert a.count("--") == 16


def test_projection_examples():
    assert tree.project(disc.DiscPoint.of((2, 0, 1), A5), 5) == BASE
    u = tree.project(disc.DiscPoint.of((50, 0, 1), A5), 5)
    assert u == tree.TreeVertex.from_basis(((5, 0), (0, 1)), 5)
    assert tree.tree_distance(BASE, u, 5) == 1
    with pytest.raises(OddValuationAlpha):
        tree.project(disc.DiscPoint.of((5, 0, 1), AlphaClass.of(5, 5)), 5)


def test_boundary_and_geodesic():
    line = disc.classify_line(disc.DiscPoint.of((2, 0, 1), A5), disc.DiscPoint.of((50, 0, 1), A5), 5)
    ends = set(tree.boundary_of_long_line(line))
    assert ends == {tree.BoundaryPoint.of(1, 0), tree.BoundaryPoint.of(0, 1)}
    got = tree.geodesic_vertices(tree.BoundaryPoint.of(1, 0), tree.BoundaryPoint.of(0, 1), range(3), 5)
    assert got == [tree.TreeVertex.from_basis(((5 ** k, 0), (0, 1)), 5) for k in range(3)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from((3, 5)))
def test_projection_quasi_isometry(seed, p):
    a = AlphaClass.of(1 if p == 3 else 2, p)
    rng = rng_for(seed)
    v, w = random_disc_pair(rng, a, p)
    d = disc.hilbert_distance(v, w, p, a)
    pv, pw = (tree.project(disc.DiscPoint.of(x, a), p) for x in (v, w))
    assert tree.tree_distance(pv, pw, p) == d // 2
    g = random_pgl2(rng, p)
    assert tree.project(disc.DiscPoint.of(G.isom_action(g, v), a), p) == tree.act(g, pv, p)
