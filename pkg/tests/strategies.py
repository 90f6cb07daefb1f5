"""Shared hypothesis strategies and random generators for the test-suite."""

import random
from fractions import Fraction

from hypothesis import strategies as st

from sl2q.algebra import GENERATORS, AlgebraElement, Monomial, Word
from sl2q.cyclotomic import RootOrder

ORDERS = [RootOrder(n) for n in range(3, 13)]

small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=5)


@st.composite
def field_elements(draw, order, nonzero=False):
    coeffs = draw(st.lists(small_fractions, min_size=order.degree, max_size=order.degree))
    x = order.element(coeffs)
    if nonzero and x.is_zero():
        x = order.one()
    return x


def random_word(rng: random.Random, max_len: int = 6) -> Word:
    return Word(tuple(rng.choice(GENERATORS) for _ in range(rng.randint(0, max_len))))


def random_element(order, rng: random.Random, max_terms=4, max_exp=3) -> AlgebraElement:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        if rng.random() < 0.5:
            am, ap = rng.randint(0, max_exp), 0
        else:
            am, ap = 0, rng.randint(0, max_exp)
        m = Monomial(am, ap, rng.randint(0, max_exp), rng.randint(0, 2), rng.randint(0, 2))
        terms[m] = order.element(
            [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(order.degree)]
        )
    return AlgebraElement(order, terms)
