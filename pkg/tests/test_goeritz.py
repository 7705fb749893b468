import random

import pytest

from twistedbraids.errors import NotUnimodular
from twistedbraids.goeritz import (
    GAMMA_BLOCK, IDENTITY, BlockForm, GoeritzGen as G, GoeritzWord, NotBlockForm, Obstructed,
    Witness, apply, check_block_form, gen_matrix, matmul, normal_form, obstruction, realize_block,
    word_matrix,
)
from twistedbraids.ttk import FamilyPair, h1_class

A, B, C, D, DI, E = G.ALPHA, G.BETA, G.GAMMA, G.DELTA, G.DELTA_INV, G.EPSILON


def gw(*gens):
    return GoeritzWord(tuple(gens))


def test_generator_images():
    assert apply(gen_matrix(C), (1, 0, 0, 0)) == (0, -1, 0, 0)
    assert apply(gen_matrix(D), (0, 0, 0, 1)) == (0, 0, -1, 1)
    assert apply(gen_matrix(E), (1, 0, 0, 0)) == (0, 0, 0, 1)
    assert matmul(gen_matrix(D), gen_matrix(DI)) == IDENTITY


def test_orders():
    for g in (A, B, C, E):
        assert word_matrix(gw(g, g)) == IDENTITY
    assert word_matrix(gw()) == IDENTITY


def test_relations():
    M = lambda *g: word_matrix(gw(*g))
    assert M(C, B) == M(A, B, C)
    assert M(E, B) == M(A, B, E)
    assert M(D, B) == M(B, DI)
    assert M(C, E) == M(E, C)
    assert M(D, E) == M(E, DI)
    for g in (B, C, D, E):
        assert M(A, g) == M(g, A)


def test_witness_word_action():
    w = GoeritzWord.parse("αβεγδ⁻¹γδ²")
    assert apply(word_matrix(w), (3, -1, -4, -1)) == (3, -2, -5, -2)
    assert GoeritzWord.parse("alpha beta epsilon gamma delta^-1 gamma delta^2") == w
    assert w.render() == "αβεγδ⁻¹γδ²"


def test_normal_form_examples():
    assert normal_form(gw(D, B)) == gw(B, DI)
    assert normal_form(gw(D, E)) == gw(E, DI)
    assert normal_form(gw(C, B)) == gw(A, B, C)
    assert normal_form(gw(C, C, D, DI)) == gw()


def test_normal_form_preserves_matrix():
    rng = random.Random(5)
    gens = [A, B, C, D, DI, E]
    for _ in range(300):
        w = gw(*(rng.choice(gens) for _ in range(rng.randint(0, 20))))
        nf = normal_form(w)
        assert word_matrix(nf) == word_matrix(w)
        assert normal_form(nf) == nf
        nf.view()


def test_block_form():
    got = check_block_form(word_matrix(gw(C, D)))
    m = word_matrix(gw(C, D))
    assert isinstance(got, BlockForm)
    assert got.C == ((m[0][0], m[0][1]), (m[1][0], m[1][1]))
    assert isinstance(check_block_form(gen_matrix(E)), NotBlockForm)
    assert check_block_form(IDENTITY) == BlockForm(((1, 0), (0, 1)))


def test_realize_block_examples():
    assert realize_block(GAMMA_BLOCK) == gw(C)
    assert realize_block(((1, 0), (1, 1))) == gw(D)
    assert realize_block(((1, 1), (0, 1))) == gw(C, D, C)
    with pytest.raises(NotUnimodular):
        realize_block(((2, 0), (0, 1)))


def test_realize_block_random():
    rng = random.Random(9)
    for _ in range(200):
        w = gw(*(rng.choice([C, D, DI]) for _ in range(rng.randint(0, 15))))
        c = check_block_form(word_matrix(w)).C
        word = realize_block(c)
        assert check_block_form(word_matrix(word)).C == c
        assert set(word.gens) <= {C, D, DI}


def test_obstruction_examples():
    res = obstruction(FamilyPair(0, 3, 1))
    assert isinstance(res, Obstructed)
    rec = next(r for r in res.evidence if r.prefix == (0, 0, 0) and r.det == 1)
    assert str(rec.candidate["s"]) == "1/2"

    res = obstruction(FamilyPair(1, 3, 1))
    assert isinstance(res, Witness)
    assert res.word.render() == "αβεγδ⁻¹γδ²"
    assert res.conventions == {"rightmost_first": True, "leftmost_first": False}
    k1 = h1_class(FamilyPair(1, 3, 1).K1).as_tuple()
    assert apply(word_matrix(res.word), k1) == (3, -2, -5, -2)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_obstruction_m_divides_x3_branch(q):
    res = obstruction(FamilyPair(0, q, q - 1))
    assert isinstance(res, Obstructed)
    for rec in res.evidence:
        assert not rec.accepted
        conds = {t["condition"]: t["holds"] for t in rec.trace}
        if all(v for c, v in conds.items() if c.startswith("q-m")):
            assert conds.get("m | x3") is False or not rec.integral
