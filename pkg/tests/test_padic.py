from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padic_discs import padic
from padic_discs.errors import ZeroInput

from oracles import hilbert_brute, padic_square

PRIMES = (2, 3, 5, 7)
rationals = st.fractions().filter(lambda x: x != 0)


def test_valuations():
    assert padic.valuation(Fraction(24, 25), 5) == -2
    assert padic.valuation(250, 5) == 3
    assert padic.valuation(0, 3) == padic.INF


def test_square_classes():
    assert padic.square_class(7, 5).label == "eps"
    assert padic.square_class(9, 5).label == "1"
    assert padic.square_class(-2, 2).label == "-2"
    with pytest.raises(ZeroInput):
        padic.square_class(0, 5)


@pytest.mark.parametrize("p", PRIMES)
def test_class_counts(p):
    assert len(padic.all_square_classes(p)) == (8 if p == 2 else 4)


@pytest.mark.parametrize("p", PRIMES)
def test_is_square_matches_brute_force(p):
    for n in range(-40, 41):
        for d in (1, 2, 3, 5, 7, 9):
            if n:
                x = Fraction(n, d)
                assert padic.is_square(x, p) == padic_square(x, p), x


def test_hensel():
    r = padic.hensel_sqrt(6, 5, 3)
    assert (r.valuation, r.unit) == (0, 16)
    r = padic.hensel_sqrt(9, 7)
    assert r.unit % 7 in (3, 4) and (r * r - 9).is_zero
    assert padic.hensel_sqrt(17, 2, 5).unit % 32 in (9, 23)


@pytest.mark.parametrize("a,b,p", [(2, 5, 5), (-2, -1, 5), (1, 7, 3), (3, 3, 3), (-1, -1, 2),
                                   (2, 3, 2), (5, 7, 7), (-3, -1, 3)])
def test_hilbert_symbol_brute(a, b, p):
    assert padic.hilbert_symbol(a, b, p) == hilbert_brute(a, b, p)


def test_hilbert_symbol_values():
    assert padic.hilbert_symbol(2, 5, 5) == -1
    assert padic.hilbert_symbol(-2, -1, 5) == 1


def test_haar_measure():
    assert padic.haar_ball_measure(0, 5) == 1
    assert padic.haar_ball_measure(2, 3) == 3
    assert padic.haar_ball_measure(-1, 5) == Fraction(1, 4)


def test_symmetric_ball():
    assert padic.smallest_symmetric_ball([1], 5) == padic.NEG_INF
    assert padic.smallest_symmetric_ball([25, Fraction(1, 25)], 5) == 2
    assert padic.smallest_symmetric_ball([126], 5) == -3


@given(rationals, rationals, st.sampled_from(PRIMES))
def test_symbol_bilinear_symmetric(a, b, p):
    h = padic.hilbert_symbol
    assert h(a, b, p) == h(b, a, p)
    assert h(a, b * b, p) == 1
    assert h(a, -a, p) == 1


@given(rationals, st.sampled_from((3, 5, 7)))
def test_hensel_round_trip(x, p):
    r = padic.hensel_sqrt(x * x, p, 12)
    diff = r * r - x * x
    assert diff.is_zero or diff.val() >= padic.valuation(x * x, p) + 12


@given(rationals, rationals, st.sampled_from(PRIMES))
def test_square_class_ignores_squares(x, y, p):
    c = padic.square_class(x, p)
    assert padic.square_class(x * y * y, p) == c
    assert c.contains(x)
