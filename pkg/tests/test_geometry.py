from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_discs import geometry as G
from padic_discs.errors import ChartFailure
from padic_discs.sampling import random_pgl2, random_so3, rng_for

nonzero = st.fractions(max_denominator=50).filter(bool)
vecs = st.tuples(st.fractions(max_denominator=50), st.fractions(max_denominator=50),
                 st.fractions(max_denominator=50))


def test_quadratic_form():
    assert G.Q((1, 0, 0)) == 0
    assert G.Q((2, 0, 1)) == 2
    assert G.Q((-18, 5, 11)) == -223
    assert G.Bpolar((2, 0, 1), (1, 0, 0)) == 1


def test_adjoint_of_diagonal():
    m = G.adjoint(G.PGL2Elt.diag(5))
    v = G.mat_vec(m.m, (2, 0, 1))
    assert G.proportional(v, (10, 0, Fraction(1, 5)))
    assert G.adjoint(G.PGL2Elt.identity()).m == G.identity3()
    assert G.isom_action(G.PGL2Elt.identity(), (1, 2, 3)) == (1, 2, 3)


def test_semicone():
    assert G.semicone_classify((4, 2, 1), 5).label == "1"
    assert G.semicone_classify((0, 0, 7), 5).label == "eps"
    assert G.semicone_classify((2, 0, 1), 5) is G.NOT_ISOTROPIC


def test_iwasawa_examples():
    nm, h, np_ = G.iwasawa_decompose(G.SO3Elt.identity())
    assert nm.m == h.m == np_.m == G.identity3()
    d = G.h_torus(Fraction(3, 7))
    nm, h, np_ = G.iwasawa_decompose(d)
    assert h.m == d.m and nm.m == np_.m == G.identity3()


def test_iwasawa_chart_failure():
    # the Weyl element swapping the isotropic axes is off the big cell
    w = G.adjoint(G.PGL2Elt(Fraction(0), Fraction(1), Fraction(1), Fraction(0)))
    with pytest.raises(ChartFailure):
        G.iwasawa_decompose(w)


@given(vecs, vecs, st.integers(0, 10 ** 6))
def test_isometry_preserves_form(v, w, seed):
    g = random_pgl2(rng_for(seed), 5)
    gv, gw = G.isom_action(g, v), G.isom_action(g, w)
    k = g.det ** 2
    assert G.Q(gv) == k * G.Q(v)
    assert G.Bpolar(gv, gw) == k * G.Bpolar(v, w)


@given(st.integers(0, 10 ** 6), st.sampled_from((3, 5)))
def test_adjoint_is_homomorphism(seed, p):
    rng = rng_for(seed)
    g, h = random_pgl2(rng, p), random_pgl2(rng, p)
    assert (G.adjoint(g) @ G.adjoint(h)).m == G.adjoint(g @ h).m


@given(st.integers(0, 10 ** 6))
def test_iwasawa_round_trip(seed):
    m = random_so3(rng_for(seed), 5)
    try:
        nm, h, np_ = G.iwasawa_decompose(m)
    except ChartFailure:
        return
    assert (nm @ h @ np_).m == m.m
    assert G.is_n_minus(nm) and G.is_h_torus(h) and G.is_n_plus(np_)


@given(vecs, vecs)
def test_pole_is_orthogonal(v, w):
    if G.is_zero(v) or G.is_zero(w) or G.proportional(v, w):
        return
    u = G.pole(v, w)
    assert G.Bpolar(u, v) == 0 and G.Bpolar(u, w) == 0
