
import pytest
from hypothesis import given, settings, strategies as st

from padic_discs import triangle as T
from padic_discs.errors import ZeroCoordinate
from padic_discs.sampling import rng_for
from padic_discs.verify import random_triangle_point


def test_membership():
    P = T.in_triangle((1, 1, 1), 5)
    assert (P.n1, P.n2) == (0, 0)
    P = T.in_triangle((25, 1, 5), 5)
    assert (P.n1, P.n2) == (2, 1)
    assert T.in_triangle((2, 1, 1), 5) is None
    with pytest.raises(ZeroCoordinate):
        T.in_triangle((0, 1, 1), 5)


@pytest.mark.parametrize("p", (3, 5, 7))
def test_distances(p):
    one = T.in_triangle((1, 1, 1), p)
    far = T.in_triangle((p * p, 1, p), p)
    assert T.triangle_distance(one, far, p) == 3 == T.triangle_oracle(one, far, p)
    assert T.triangle_distance(one, one, p) == 0
    assert T.triangle_distance(one, T.in_triangle((p, 1, 1), p), p) == 2


def test_hex():
    assert T.hex_project(T.in_triangle((25, 1, 5), 5)) == T.HexPoint(2, 1)
    o = T.HexPoint(0, 0)
    assert T.hex_distance(o, o) == 0
    assert T.hex_distance(o, T.HexPoint(2, 1)) == 2
    assert T.hex_distance(o, T.HexPoint(1, -1)) == 2
    assert len(T.hex_ball(o, 1)) == 7
    assert len(T.hex_ball(o, 2)) == 19


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6), st.sampled_from((3, 5, 7)))
def test_formula_matches_oracle(seed, p):
    rng = rng_for(seed)
    P1, P2 = random_triangle_point(rng, p), random_triangle_point(rng, p)
    d = T.triangle_distance(P1, P2, p)
    assert d == T.triangle_oracle(P1, P2, p)
    if d > 1:
        assert T.hex_distance(T.hex_project(P1), T.hex_project(P2)) == d - 1
