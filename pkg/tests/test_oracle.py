from fractions import Fraction

from hypothesis import given, settings, strategies as st

from padic_discs import classes, disc, geometry as G, oracle
from padic_discs.classes import AlphaClass

A5 = AlphaClass.of(2, 5)


def test_cross_ratio():
    assert oracle.cross_ratio((0, 0, 1), (1, 0, 0), (2, 0, 1), (50, 0, 1)) == 25
    assert oracle.cross_ratio((1, 0, 0), (0, 0, 1), (2, 0, 1), (50, 0, 1)) == Fraction(1, 25)
    assert oracle.cross_ratio((1, 2, 3), (1, 2, 3), (2, 0, 1), (50, 0, 1)) == 1


def test_projective_line_sizes():
    assert len(list(oracle._p1(3, 1))) == 4
    assert len(list(oracle._p1(3, 2))) == 12


def test_sampled_and_adaptive_values():
    v, far, near = (2, 0, 1), (50, 0, 1), (-18, 5, 11)
    assert oracle.oracle_distance(v, v, A5, 3, 5).value == 0
    assert oracle.oracle_distance(v, far, A5, 3, 5).value == 3
    assert oracle.oracle_distance(v, near, A5, 3, 5).value == Fraction(1, 4)
    assert oracle.oracle_distance_stable(v, far, A5, 5).value == 3
    assert oracle.oracle_distance_stable(v, near, A5, 5).value == Fraction(1, 4)


def test_dual_check_examples():
    for depth in (1, 2, 3):
        assert oracle.oracle_in_dual_check((2, 0, 1), A5, depth, 5)
    # scale the x coordinate by y = 5, not in K: the axis point (0, 0, 1) pairs to 2*5
    assert not oracle.oracle_in_dual_check((10, 0, 1), A5, 1, 5)
    assert not disc.in_disc((10, 0, 1), A5, 5)
    assert not oracle.oracle_in_dual_check((1, 0, 0), A5, 3, 5)


def test_sampled_oracle_never_overshoots():
    v, w = (Fraction(2), Fraction(0), Fraction(1)), (Fraction(2 * 5 ** 4), Fraction(0), Fraction(1))
    exact = disc.hilbert_distance(v, w, 5, A5)
    assert exact == 5
    s = oracle.oracle_distance(v, w, A5, 2, 5)
    assert s.value <= exact
    assert oracle.oracle_distance_stable(v, w, A5, 5).value == exact


@settings(max_examples=50, deadline=None)
@given(st.tuples(*[st.fractions(max_denominator=30, min_value=-30, max_value=30)] * 3),
       st.sampled_from((3, 5)), st.data())
def test_dual_check_matches_membership(v, p, data):
    if G.is_zero(v):
        return
    a = data.draw(st.sampled_from(classes.admissible_classes(p)))
    got = [oracle.oracle_in_dual_check(v, a, d, p) for d in (2, 3, 4)]
    if got[-1] == got[-2]:
        assert got[-1] == disc.in_disc(v, a, p)
