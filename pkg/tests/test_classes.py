from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_discs import classes, padic
from padic_discs.classes import AlphaClass

from oracles import padic_square


def _represented(z, alpha, p):
    """z = alpha x^2 + y^2 with x, y from a small rational grid."""
    grid = [Fraction(p) ** k * n / d for k in range(-2, 3) for n in range(0, 2 * p + 9) for d in (1, 3, 7)]
    return any(z - alpha * x * x != 0 and padic_square(z - alpha * x * x, p) or z == alpha * x * x
               for x in grid if x)


def test_admissible_lists():
    assert [a.label for a in classes.admissible_classes(5)] == ["eps", "p", "eps*p"]
    assert [a.label for a in classes.admissible_classes(7)] == ["1", "p", "eps*p"]
    assert len(classes.admissible_classes(2)) == 7


def test_in_K_examples():
    K = AlphaClass.of(2, 5)
    assert classes.in_K(-1, K, 5)
    assert not classes.in_K(5, K, 5)
    assert classes.in_K(Fraction(9, 49), K, 5)


def test_minus_one():
    assert classes.minus_one_in_K(AlphaClass.of(2, 5), 5)
    assert classes.minus_one_in_K(AlphaClass.of(1, 7), 7)
    assert not classes.minus_one_in_K(AlphaClass.of(3, 3), 3)
    assert classes.orbit_count(AlphaClass.of(3, 3), 3) == 1


def test_sheets():
    sq = padic.square_class
    assert classes.hyperboloid_sheets(sq(1, 5), 5) == 1
    assert classes.hyperboloid_sheets(sq(2, 5), 5) == 2
    assert classes.hyperboloid_sheets(sq(3, 7), 7) == 1


@pytest.mark.parametrize("p", (2, 3, 5, 7))
def test_in_K_matches_representation_search(p):
    for a in classes.admissible_classes(p):
        for c in padic.all_square_classes(p):
            assert classes.in_K(c.rep, a, p) == _represented(c.rep, a.alpha_rep, p), (a, c)


@pytest.mark.parametrize("p", (3, 5, 7))
def test_K_has_two_of_four_classes(p):
    for a in classes.admissible_classes(p):
        assert len(classes.k_classes(a, p)) == 2


def test_K_measure():
    # even valuation: 2*floor(t/2) + 1; odd valuation: t + 1/2
    assert classes.ball_measure_in_K(0, AlphaClass.of(2, 5), 5) == 1
    assert classes.ball_measure_in_K(3, AlphaClass.of(2, 5), 5) == 3
    assert classes.ball_measure_in_K(1, AlphaClass.of(5, 5), 5) == Fraction(3, 2)
    assert classes.ball_measure_in_K(-1, AlphaClass.of(2, 5), 5) == Fraction(1, 4)


@given(st.fractions().filter(bool), st.fractions().filter(bool), st.sampled_from((2, 3, 5, 7)), st.data())
def test_K_is_a_subgroup(x, y, p, data):
    a = data.draw(st.sampled_from(classes.admissible_classes(p)))
    assert classes.in_K(x * x, a, p)
    assert classes.in_K(a.alpha_rep, a, p)
    assert (classes.in_K(x, a, p) == classes.in_K(y, a, p)) == classes.in_K(x * y, a, p)
