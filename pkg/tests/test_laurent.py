from hypothesis import given, strategies as st
import pytest

from twistedbraids.laurent import ONE, ZERO, LaurentPoly

polys = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=5).map(LaurentPoly)


def test_rendering():
    assert str(LaurentPoly({2: 1, 1: -1, 0: 1})) == "t^2 - t + 1"
    assert str(LaurentPoly({0: 1})) == "1"
    assert str(LaurentPoly({1: -3, -1: 2})) == "-3t + 2t^-1"
    assert str(ZERO) == "0"


def test_no_stored_zeros():
    p = LaurentPoly({0: 0, 1: 2})
    assert p.terms == {1: 2}


def test_json_round_trip():
    p = LaurentPoly({2: 1, -1: -7})
    assert p.to_json() == {"-1": -7, "2": 1}
    assert LaurentPoly.from_json(p.to_json()) == p


def test_normalized():
    p = LaurentPoly({3: -1, 4: 1, 5: -1})
    assert p.normalized() == LaurentPoly({0: 1, 1: -1, 2: 1})


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        LaurentPoly({0: 1, 1: 1}).exact_div(LaurentPoly({0: 2}))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(polys, polys)
def test_exact_division_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).exact_div(b) == a


@given(polys, st.integers(-3, 3))
def test_evaluate_is_homomorphism(a, t):
    if t == 0:
        return
    from fractions import Fraction
    x = Fraction(t)
    assert (a * a).evaluate(x) == a.evaluate(x) ** 2
