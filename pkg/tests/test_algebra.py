import random

import pytest

from sl2q.algebra import (
    AlgebraElement,
    Monomial,
    Word,
    casimir_c2p,
    casimir_c2p_words,
    centre_generators,
    centre_relation_sides,
    commutator,
    d_squared,
    dressed_chebyshev,
    generators,
    is_central,
    multiply,
    normal_form,
    recursion_identity,
    rewrite_words,
)
from sl2q.cyclotomic import RootOrder

from strategies import random_element, random_word

SMALL = [RootOrder(n) for n in (3, 4, 5, 6)]
CENTRE = [RootOrder(n) for n in range(3, 9)]
ids = lambda o: f"n={o.n}"  # noqa: E731


def test_monomial_basis_constraint():
    o = RootOrder(5)
    with pytest.raises(ValueError):
        AlgebraElement(o, {Monomial(1, 1, 0, 0, 0): 1})


@pytest.mark.parametrize("order", CENTRE, ids=ids)
def test_reordering_examples(order):
    g = generators(order)
    q = order.q
    assert normal_form(Word(("Xp", "Xm")), order) == g["C2p"] + (g["C"] * g["X0"]).scale(q) - (g["X0"] ** 2).scale(q ** 2)
    assert normal_form(Word(("X0", "Xp")), order) == (g["Xp"] * g["X0"]).scale(q ** -2) + (g["C"] * g["Xp"]).scale(q ** -1)
    assert normal_form(Word(("X0", "C")), order) == AlgebraElement(order, {Monomial(0, 0, 1, 1, 0): 1})
    assert multiply(g["Xm"], g["Xp"]) == g["C2p"] - (g["C"] * g["X0"]).scale(q ** -1) - (g["X0"] ** 2).scale(q ** -2)


def test_relation_two_consistent_reading():
    # q^-2 X0 Xm - Xm X0 = -q^-1 C Xm
    for order in CENTRE:
        g = generators(order)
        q = order.q
        lhs = (g["X0"] * g["Xm"]).scale(q ** -2) - g["Xm"] * g["X0"]
        assert lhs == (g["C"] * g["Xm"]).scale(-(q ** -1))


def test_empty_word_is_unit():
    o = RootOrder(5)
    assert normal_form(Word(()), o) == AlgebraElement.scalar(1, o)
    assert normal_form([], o).is_zero()


@pytest.mark.parametrize("order", CENTRE, ids=ids)
def test_commutator_examples(order):
    g = generators(order)
    q, lam = order.q, order.lam
    expected = (g["C"] * g["X0"]).scale(q + 1 / q) - (g["X0"] ** 2).scale((q + 1 / q) * lam)
    assert commutator(g["Xp"], g["Xm"]) == expected
    assert commutator(g["C"], g["Xp"]).is_zero()
    rng = random.Random(order.n)
    for _ in range(5):
        e = random_element(order, rng)
        assert commutator(e, e).is_zero()


@pytest.mark.parametrize("order", CENTRE, ids=ids)
def test_casimir(order):
    g = generators(order)
    assert casimir_c2p(order) == g["C2p"]
    assert rewrite_words(casimir_c2p_words(order), order) == g["C2p"]
    assert is_central(casimir_c2p(order))
    assert commutator(casimir_c2p(order), g["X0"]).is_zero()


def test_is_central_examples():
    o = RootOrder(4)
    g = generators(o)
    assert not is_central(g["X0"])
    assert is_central(g["Xp"] ** 2)
    assert not is_central(g["Xp"])


@pytest.mark.parametrize("order", SMALL, ids=ids)
def test_normal_form_idempotent_and_linear(order):
    rng = random.Random(10 + order.n)
    for _ in range(40):
        w1, w2 = random_word(rng), random_word(rng)
        nf1 = normal_form(w1, order)
        assert normal_form(nf1, order) == nf1
        assert normal_form([w1, w2], order) == nf1 + normal_form(w2, order)
        assert normal_form(Word(w1.symbols, 3), order) == nf1.scale(3)


@pytest.mark.parametrize("order", SMALL, ids=ids)
def test_confluence_of_rewriting(order):
    rng = random.Random(100 + order.n)
    for _ in range(50):
        w = random_word(rng)
        fast = normal_form(w, order)
        assert rewrite_words(w, order, "leftmost") == fast
        assert rewrite_words(w, order, "rightmost") == fast
        assert rewrite_words(w, order, "random", random.Random(rng.random())) == fast


@pytest.mark.parametrize("order", SMALL, ids=ids)
def test_associativity_and_unit(order):
    rng = random.Random(200 + order.n)
    one = AlgebraElement.scalar(1, order)
    for _ in range(15):
        a, b, c = (random_element(order, rng, max_terms=3, max_exp=2) for _ in range(3))
        assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
        assert multiply(one, a) == a and multiply(a, one) == a
        assert multiply(a, b + c) == multiply(a, b) + multiply(a, c)


@pytest.mark.parametrize("order", CENTRE, ids=ids)
def test_centre_generators_central(order):
    for name, e in centre_generators(order).items():
        assert is_central(e), name


@pytest.mark.parametrize("order", CENTRE, ids=ids)
def test_centre_relation(order):
    lhs, rhs = centre_relation_sides(order)
    assert lhs == rhs
    assert all(m.is_central_part() for m in lhs.terms)


@pytest.mark.parametrize("order", CENTRE, ids=ids)
def test_recursion_identity(order):
    for p in range(1, order.l + 1):
        lhs, rhs = recursion_identity(p, order)
        assert lhs == rhs, p


def test_recursion_p1_is_pair_elimination():
    o = RootOrder(7)
    g = generators(o)
    q, lam = o.q, o.lam
    u = g["C"] - g["X0"].scale(lam)
    closed = (-d_squared(o) + (g["C"] * u).scale(1 + q ** -2) - (u * u).scale(q ** -2)).scale(lam ** -2)
    assert recursion_identity(1, o)[1] == closed == g["Xm"] * g["Xp"]


def test_recursion_rejects_p0():
    with pytest.raises(ValueError):
        recursion_identity(0, RootOrder(5))


def test_dressed_chebyshev_n4():
    o = RootOrder(4)
    g = generators(o)
    q = o.q
    d2 = g["C"] ** 2 - g["C2p"].scale(o.lam ** 2)
    expected = ((g["C"] ** 2).scale((q + 1 / q) ** 2) - d2.scale(2)).scale(q ** -2)
    assert dressed_chebyshev(o) == expected


def test_dressed_chebyshev_l3_parity():
    o = RootOrder(3)
    g = generators(o)
    q = o.q
    y = q + 1 / q
    d2 = d_squared(o)
    expected = ((g["C"] ** 3).scale(y ** 3) - (g["C"] * d2).scale(3 * y)).scale(q ** -3)
    assert dressed_chebyshev(o) == expected


def test_dressed_chebyshev_l1():
    o = RootOrder(5)
    g = generators(o)
    q = o.q
    assert dressed_chebyshev(o, l=1) == g["C"].scale((q + 1 / q) / q)


def test_generic_centre_negative():
    o = RootOrder(12)  # l = 6, larger than the degrees used below
    rng = random.Random(5)
    x0 = AlgebraElement.generator("X0", o)
    for _ in range(10):
        poly = AlgebraElement.zero(o)
        for k in range(1, rng.randint(1, 5) + 1):
            poly = poly + (x0 ** k).scale(o.random(rng, nonzero=True))
        assert not is_central(poly)


def test_canonical_text():
    o = RootOrder(5)
    g = generators(o)
    assert str(g["Xp"] * g["Xm"]) == "C2p + q*C*X0 - q^2*X0^2"
    assert str(AlgebraElement.zero(o)) == "0"
    assert str(AlgebraElement.scalar(-1, o)) == "-1"
