from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from padic_discs import classes, disc, geometry as G, oracle
from padic_discs.classes import AlphaClass
from padic_discs.errors import DomainError, NotInDisc, NotInPerp, OddPOnly, SamePoint
from padic_discs.sampling import random_disc_pair, random_disc_point, random_pgl2, random_rational, rng_for

A5 = AlphaClass.of(2, 5)
V, FAR, NEAR = (2, 0, 1), (50, 0, 1), (-18, 5, 11)


def test_membership():
    assert disc.in_disc(V, A5, 5)
    assert disc.in_disc(NEAR, A5, 5)
    assert not disc.in_disc((1, 0, 1), A5, 5)
    with pytest.raises(NotInDisc):
        disc.DiscPoint.of((1, 0, 1), A5)


def test_sphere_points():
    assert disc.SpherePoint(V, A5) == disc.SpherePoint((-2, 0, -1), A5)  # -1 in K at p = 5
    assert disc.SpherePoint(V, A5) != disc.SpherePoint((10, 0, 5), A5)  # 5 not in K


def test_line_kinds():
    line = disc.classify_line(V, FAR, 5)
    assert line.is_long and line.exact
    ends = {tuple(G.scale(1 / max(abs(c) for c in e), e)) for e in line.boundary}
    assert {G.proportional(e, (1, 0, 0)) or G.proportional(e, (0, 0, 1)) for e in ends} == {True}
    assert disc.classify_line(V, NEAR, 5).tag == "short"
    with pytest.raises(SamePoint):
        disc.classify_line(V, V, 5)


def test_mult_distance():
    m = disc.mult_distance(V, FAR, 5)
    assert set(m.lam) == {25, Fraction(1, 25)}
    assert m.contains(25) and m.contains(Fraction(1, 25)) and not m.contains(5)


def test_distance_values():
    assert disc.hilbert_distance(V, FAR, 5, A5) == 3
    assert disc.hilbert_distance(V, V, 5, A5) == 0
    assert disc.hilbert_distance(V, NEAR, 5, A5) == Fraction(1, 4)
    assert not disc.same_ultrametric_locus(V, FAR, 5, A5)
    assert disc.same_ultrametric_locus(V, NEAR, 5, A5)
    with pytest.raises(OddPOnly):
        disc.hilbert_distance((3, 0, 1), (12, 0, 1), 2, AlphaClass.of(3, 2))


def test_normal_form():
    nf = disc.reduce_to_normal_form(disc.DiscPoint.of(V, A5), 5)
    assert nf.g.same_class(G.PGL2Elt.identity()) and nf.alpha_prime == 2
    b, c = Fraction(3), Fraction(7, 5)
    v = (2 / c ** 2 + b * b, -b * c, c * c)
    nf = disc.reduce_to_normal_form(disc.DiscPoint.of(v, A5), 5)
    assert disc.SpherePoint(G.isom_action(nf.g, (nf.alpha_prime, 0, 1)), A5) == disc.SpherePoint(v, A5)


def test_circles():
    c = disc.DiscPoint.of(V, A5)
    assert disc.circle_contains(c, 25, FAR, 5)
    assert not disc.circle_contains(c, 5, FAR, 5)
    assert not disc.circle_contains(c, 7, V, 5)


def test_orthogonality():
    base = disc.DiscPoint.of(V, A5)
    assert disc.orthogonal_lines(base, (0, 1, 0), (2, 0, -1), 5)
    assert not disc.orthogonal_lines(base, (0, 1, 0), (0, 1, 0), 5)
    with pytest.raises(NotInPerp):
        disc.orthogonal_lines(base, (1, 0, 0), (0, 1, 0), 5)


@pytest.mark.parametrize("p,label", [(3, "1"), (7, "1"), (5, "eps"), (5, "p")])
def test_orthogonal_disc_partner(p, label):
    a = AlphaClass.from_label(label, p)
    rng = rng_for(p)
    for _ in range(20):
        v = random_disc_point(rng, a, p)
        w = disc.dual_disc_witness(v, a, p)
        assert disc.in_disc(w, a, p) and G.Bpolar(v, w) == 0


def test_no_orthogonal_partner_without_minus_one():
    a = AlphaClass.from_label("p", 3)
    with pytest.raises(DomainError):
        disc.dual_disc_witness((3, 0, 1), a, 3)


def test_stabilizer_fixes_base():
    for t in (Fraction(1, 3), Fraction(5), Fraction(-2, 25)):
        for refl in (False, True):
            g = disc.stabilizer_element(A5, t, refl)
            assert G.isom_action(g, (2, 0, 1)) == (2, 0, 1)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from((3, 5, 7)), st.data())
def test_closed_form_equals_oracle(seed, p, data):
    a = data.draw(st.sampled_from(classes.admissible_classes(p)))
    v, w = random_disc_pair(rng_for(seed), a, p)
    assert disc.hilbert_distance(v, w, p, a) == oracle.oracle_distance_stable(v, w, a, p).value


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from((3, 5, 7)), st.data())
def test_distance_is_invariant(seed, p, data):
    a = data.draw(st.sampled_from(classes.admissible_classes(p)))
    rng = rng_for(seed)
    v, w = random_disc_pair(rng, a, p)
    g = random_pgl2(rng, p)
    d = disc.hilbert_distance(v, w, p, a)
    assert disc.hilbert_distance(G.isom_action(g, v), G.isom_action(g, w), p, a) == d
    assert disc.hilbert_distance(w, v, p, a) == d


def _unipotent_word(rng, p):
    g = G.PGL2Elt.identity()
    for _ in range(4):
        t = random_rational(rng, p, 2, 9)
        g = g @ G.PGL2Elt(Fraction(1), t, Fraction(0), Fraction(1))
        g = g @ G.PGL2Elt(Fraction(1), Fraction(0), random_rational(rng, p, 2, 9), Fraction(1))
    return g


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from((3, 5, 7)), st.data())
def test_orbit_label_is_SL2_invariant(seed, p, data):
    a = data.draw(st.sampled_from(classes.admissible_classes(p)))
    rng = rng_for(seed)
    v = random_disc_point(rng, a, p)
    gv = G.isom_action(_unipotent_word(rng, p), v)
    assert disc.orbit_label(disc.DiscPoint.of(v, a), p) == disc.orbit_label(disc.DiscPoint.of(gv, a), p)
