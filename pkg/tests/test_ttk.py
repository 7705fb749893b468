import pytest

from twistedbraids.errors import InvalidParams, RTooLarge
from twistedbraids.ttk import (
    FamilyPair, TTKParams, canonical_word, h1_class, make_family, slope_general, surface_slope,
)


def test_params_validation():
    with pytest.raises(InvalidParams):
        TTKParams(4, 2, 1, -1)
    with pytest.raises(InvalidParams):
        TTKParams(5, 3, 2, 0)
    with pytest.raises(InvalidParams):
        TTKParams(5, 3, 0, 1)
    p = TTKParams(7, 3, 2, -2)
    assert (p.k, p.e) == (2, 1)
    assert str(p) == "K(7,3,2,-2)"
    assert TTKParams.from_json(p.to_json()) == p
    with pytest.raises(InvalidParams):
        TTKParams.from_json({"p": 7, "q": 3, "r": 2, "n": -2, "k": 1})


def test_canonical_word_examples():
    assert str(canonical_word(TTKParams(5, 3, 2, -1))) == "2 1 2 1 2 1 2 1 2 1 -1 -1"
    assert str(canonical_word(TTKParams(3, 2, 2, 1))) == "1 1 1 1 1"
    w = canonical_word(TTKParams(1, 2, 1, -1))
    assert str(w) == "1" and w.strands == 2


def test_canonical_word_r_too_large():
    with pytest.raises(RTooLarge) as exc:
        canonical_word(TTKParams(5, 3, 4, 1))
    assert "swap" in str(exc.value)


def test_h1_class():
    assert h1_class(TTKParams(4, 3, 1, -1)).as_tuple() == (3, -1, -4, -1)
    assert h1_class(TTKParams(5, 3, 2, -1)).as_tuple() == (3, -2, -5, -2)


def test_family():
    pair = make_family(1, 3, 1)
    assert pair.K1 == TTKParams(4, 3, 1, -1)
    assert pair.K2 == TTKParams(5, 3, 2, -1)
    pair = make_family(0, 3, 1)
    assert (pair.K1, pair.K2) == (TTKParams(1, 3, 1, -1), TTKParams(2, 3, 2, -1))
    for bad in ((0, 2, 1), (0, 4, 2), (0, 5, 5), (-1, 5, 2)):
        with pytest.raises(InvalidParams):
            make_family(*bad)


def test_surface_slope():
    assert surface_slope(FamilyPair(0, 3, 1)) == 2
    assert surface_slope(FamilyPair(1, 3, 1)) == 11
    assert surface_slope(FamilyPair(2, 5, 2)) == 56


def test_slope_general_matches_family():
    for k in range(3):
        for q in range(3, 9):
            for m in range(1, q):
                try:
                    pair = make_family(k, q, m)
                except InvalidParams:
                    continue
                s = surface_slope(pair)
                for K in (pair.K1, pair.K2):
                    assert slope_general(K.p, K.q, K.r, K.n) == s
