"""The algebra B: basis elements, normal ordering and centre identities.

Elements are finite combinations of the ordered basis monomials

    Xm^a_minus * Xp^a_plus * X0^a_0 * C^b_1 * C2p^b_2,   a_minus * a_plus = 0,

with coefficients in Q(zeta_n).  ``C`` and ``C2p`` are central symbols.  The
defining relations used for reordering are

    X0 Xp = q^-2 Xp X0 + q^-1 C Xp
    X0 Xm = q^2 Xm X0 - q C Xm
    Xp Xm = C2p + q C X0 - q^2 X0^2
    Xm Xp = C2p - q^-1 C X0 - q^-2 X0^2

Two independent reduction routes are provided: :func:`multiply` works on
basis monomials directly (fast path, used everywhere), while
:func:`rewrite_words` applies the local rules above to raw words in an
arbitrary order and is kept as a cross-check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Mapping, NamedTuple, Sequence, Union

from .cyclotomic import CycNumber, RootOrder, chebyshev_like

GENERATORS = ("Xm", "Xp", "X0", "C", "C2p")


class Monomial(NamedTuple):
    a_minus: int = 0
    a_plus: int = 0
    a_0: int = 0
    b_1: int = 0
    b_2: int = 0

    def is_central_part(self) -> bool:
        return self.a_minus == 0 and self.a_plus == 0

    def text(self) -> str:
        # central symbols are written between Xp and X0, e.g. "C*X0"
        parts = []
        for sym, e in zip(_PRINT_ORDER, (self[0], self[1], self[3], self[4], self[2])):
            if e == 1:
                parts.append(sym)
            elif e > 1:
                parts.append(f"{sym}^{e}")
        return "*".join(parts)


_PRINT_ORDER = ("Xm", "Xp", "C", "C2p", "X0")
UNIT = Monomial()
_GEN_MONOMIAL = {
    "Xm": Monomial(1, 0, 0, 0, 0),
    "Xp": Monomial(0, 1, 0, 0, 0),
    "X0": Monomial(0, 0, 1, 0, 0),
    "C": Monomial(0, 0, 0, 1, 0),
    "C2p": Monomial(0, 0, 0, 0, 1),
}


class AlgebraElement:
    """A finite linear combination of basis monomials of B.

    Supports ``+``, ``-``, scalar and algebra multiplication (``*``) and
    non-negative integer powers.  Zero coefficients are never stored.
    """

    __slots__ = ("order", "terms")

    def __init__(self, order: RootOrder, terms: Mapping[Monomial, CycNumber] | None = None):
        self.order = order
        clean = {}
        for m, c in (terms or {}).items():
            m = Monomial(*m)
            if m.a_minus and m.a_plus:
                raise ValueError(f"{m} is not a basis monomial (a_minus * a_plus != 0)")
            c = order.scalar(c)
            if not c.is_zero():
                clean[m] = c
        self.terms: dict[Monomial, CycNumber] = clean

    @classmethod
    def _trusted(cls, order: RootOrder, terms: dict) -> AlgebraElement:
        self = object.__new__(cls)
        self.order = order
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        return self

    @classmethod
    def generator(cls, name: str, order: RootOrder) -> AlgebraElement:
        try:
            m = _GEN_MONOMIAL[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None
        return cls._trusted(order, {m: order.one()})

    @classmethod
    def scalar(cls, value, order: RootOrder) -> AlgebraElement:
        return cls._trusted(order, {UNIT: order.scalar(value)})

    @classmethod
    def zero(cls, order: RootOrder) -> AlgebraElement:
        return cls._trusted(order, {})

    # basic queries -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial | Sequence[int]) -> CycNumber:
        return self.terms.get(Monomial(*m), self.order.zero())

    def monomials(self) -> list[Monomial]:
        return sorted(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    # arithmetic ----------------------------------------------------------
    def _lift(self, other) -> AlgebraElement | None:
        if isinstance(other, AlgebraElement):
            if other.order != self.order:
                raise ValueError("elements live over different orders")
            return other
        if isinstance(other, (int, CycNumber)) or hasattr(other, "denominator"):
            return AlgebraElement.scalar(other, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out[m] + c if m in out else c
        return AlgebraElement._trusted(self.order, out)

    __radd__ = __add__

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._trusted(self.order, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def scale(self, s) -> AlgebraElement:
        s = self.order.scalar(s)
        return AlgebraElement._trusted(self.order, {m: c * s for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        if isinstance(other, (int, CycNumber)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, CycNumber)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> AlgebraElement:
        if not isinstance(k, int) or k < 0:
            raise ValueError("algebra elements only take non-negative integer powers")
        result = AlgebraElement.scalar(1, self.order)
        base = self
        while k:
            if k & 1:
                result = multiply(result, base)
            k >>= 1
            if k:
                base = multiply(base, base)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, AlgebraElement):
            return self.order == other.order and self.terms == other.terms
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.order.n}: {format_element(self)})"


def generators(order: RootOrder) -> dict[str, AlgebraElement]:
    return {g: AlgebraElement.generator(g, order) for g in GENERATORS}


# ---------------------------------------------------------------------------
# fast multiplication on basis monomials


def _binomial_shift(order: RootOrder, a0: int, x0_coeff: CycNumber, c_coeff: CycNumber):
    """(x0_coeff*X0 + c_coeff*C)^a0 as a list of (i, j, coeff) meaning X0^i C^j."""
    return [
        (i, a0 - i, x0_coeff ** i * c_coeff ** (a0 - i) * comb(a0, i))
        for i in range(a0 + 1)
    ]


@lru_cache(maxsize=None)
def _times_generator(order: RootOrder, m: Monomial, g: str) -> tuple[tuple[Monomial, CycNumber], ...]:
    am, ap, a0, b1, b2 = m
    one = order.one()
    if g == "X0":
        return ((Monomial(am, ap, a0 + 1, b1, b2), one),)
    if g == "C":
        return ((Monomial(am, ap, a0, b1 + 1, b2), one),)
    if g == "C2p":
        return ((Monomial(am, ap, a0, b1, b2 + 1), one),)
    q = order.q_pow
    if g == "Xp":
        # X0^a0 Xp = Xp (q^-2 X0 + q^-1 C)^a0
        shift = _binomial_shift(order, a0, q(-2), q(-1))
        if am == 0:
            return tuple((Monomial(0, ap + 1, i, b1 + j, b2), c) for i, j, c in shift)
        # Xm Xp = C2p - q^-1 C X0 - q^-2 X0^2
        pair = ((0, 0, 1, one), (1, 1, 0, -q(-1)), (2, 0, 0, -q(-2)))
        prefix = (am - 1, 0)
    elif g == "Xm":
        # X0^a0 Xm = Xm (q^2 X0 - q C)^a0
        shift = _binomial_shift(order, a0, q(2), -q(1))
        if ap == 0:
            return tuple((Monomial(am + 1, 0, i, b1 + j, b2), c) for i, j, c in shift)
        # Xp Xm = C2p + q C X0 - q^2 X0^2
        pair = ((0, 0, 1, one), (1, 1, 0, q(1)), (2, 0, 0, -q(2)))
        prefix = (0, ap - 1)
    else:
        raise ValueError(f"unknown generator {g!r}")
    out: dict[Monomial, CycNumber] = {}
    for i, j, c in shift:
        for pi, pj, pk, pc in pair:
            key = Monomial(prefix[0], prefix[1], i + pi, b1 + j + pj, b2 + pk)
            v = c * pc
            out[key] = out[key] + v if key in out else v
    return tuple((k, v) for k, v in out.items() if not v.is_zero())


@lru_cache(maxsize=200_000)
def _monomial_product(order: RootOrder, m1: Monomial, m2: Monomial) -> tuple[tuple[Monomial, CycNumber], ...]:
    cur: dict[Monomial, CycNumber] = {m1: order.one()}
    for g, e in (("Xm", m2.a_minus), ("Xp", m2.a_plus)):
        for _ in range(e):
            nxt: dict[Monomial, CycNumber] = {}
            for m, c in cur.items():
                for k, v in _times_generator(order, m, g):
                    w = c * v
                    nxt[k] = nxt[k] + w if k in nxt else w
            cur = {k: v for k, v in nxt.items() if not v.is_zero()}
    # X0, C, C2p on the right of a basis monomial stay in order
    return tuple(
        (Monomial(m.a_minus, m.a_plus, m.a_0 + m2.a_0, m.b_1 + m2.b_1, m.b_2 + m2.b_2), c)
        for m, c in cur.items()
    )


def multiply(e1: AlgebraElement, e2: AlgebraElement, order: RootOrder | None = None) -> AlgebraElement:
    """Product e1 * e2 expanded in the basis."""
    order = order or e1.order
    if e1.order != order or e2.order != order:
        raise ValueError("elements live over different orders")
    out: dict[Monomial, CycNumber] = {}
    for m1, c1 in e1.terms.items():
        for m2, c2 in e2.terms.items():
            c12 = c1 * c2
            for m, c in _monomial_product(order, m1, m2):
                v = c12 * c
                out[m] = out[m] + v if m in out else v
    return AlgebraElement._trusted(order, out)


def commutator(e1: AlgebraElement, e2: AlgebraElement, order: RootOrder | None = None) -> AlgebraElement:
    return multiply(e1, e2, order) - multiply(e2, e1, order)


def is_central(e: AlgebraElement, order: RootOrder | None = None) -> bool:
    """True iff ``e`` commutes with X0, Xp and Xm."""
    order = order or e.order
    return all(
        commutator(e, AlgebraElement.generator(g, order), order).is_zero()
        for g in ("X0", "Xp", "Xm")
    )


# ---------------------------------------------------------------------------
# raw words


@dataclass(frozen=True)
class Word:
    """A scalar times an ordered product of generator symbols."""

    symbols: tuple[str, ...]
    coeff: object = 1

    def __post_init__(self):
        object.__setattr__(self, "symbols", tuple(self.symbols))
        for s in self.symbols:
            if s not in GENERATORS:
                raise ValueError(f"unknown generator {s!r}")


ExprLike = Union[AlgebraElement, Word, Iterable[Word]]


def normal_form(expr: ExprLike, order: RootOrder) -> AlgebraElement:
    """Expand a word, a sum of words, or an element into the basis."""
    if isinstance(expr, AlgebraElement):
        if expr.order != order:
            raise ValueError("element lives over a different order")
        return expr
    words = [expr] if isinstance(expr, Word) else list(expr)
    total = AlgebraElement.zero(order)
    for w in words:
        acc = AlgebraElement.scalar(w.coeff, order)
        for s in w.symbols:
            acc = multiply(acc, AlgebraElement.generator(s, order), order)
        total = total + acc
    return total


def _rewrite_rules(order: RootOrder):
    q = order.q_pow
    one = order.one()
    rules = {
        ("X0", "Xp"): ((q(-2), ("Xp", "X0")), (q(-1), ("C", "Xp"))),
        ("X0", "Xm"): ((q(2), ("Xm", "X0")), (-q(1), ("C", "Xm"))),
        ("Xp", "Xm"): ((one, ("C2p",)), (q(1), ("C", "X0")), (-q(2), ("X0", "X0"))),
        ("Xm", "Xp"): ((one, ("C2p",)), (-q(-1), ("C", "X0")), (-q(-2), ("X0", "X0"))),
    }
    for g in ("Xm", "Xp", "X0"):
        rules[("C", g)] = ((one, (g, "C")),)
    for g in ("Xm", "Xp", "X0", "C"):
        rules[("C2p", g)] = ((one, (g, "C2p")),)
    return rules


def rewrite_words(
    expr: ExprLike,
    order: RootOrder,
    strategy: str = "leftmost",
    rng: random.Random | None = None,
    max_steps: int = 1_000_000,
) -> AlgebraElement:
    """Reduce raw words by local rewriting until every word is a basis monomial.

    ``strategy`` picks which redex to contract next: ``"leftmost"``,
    ``"rightmost"`` or ``"random"`` (uses ``rng``).  Independent of
    :func:`multiply`; used to test confluence and the fast path.
    """
    if strategy not in ("leftmost", "rightmost", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    rng = rng or random.Random(0)
    rules = _rewrite_rules(order)
    words = [expr] if isinstance(expr, Word) else list(expr)
    pending: dict[tuple[str, ...], CycNumber] = {}
    for w in words:
        c = order.scalar(w.coeff)
        pending[w.symbols] = pending.get(w.symbols, order.zero()) + c
    done: dict[Monomial, CycNumber] = {}
    steps = 0
    while pending:
        word, c = pending.popitem()
        if c.is_zero():
            continue
        redexes = [i for i in range(len(word) - 1) if (word[i], word[i + 1]) in rules]
        if not redexes:
            m = _word_to_monomial(word)
            done[m] = done[m] + c if m in done else c
            continue
        steps += 1
        if steps > max_steps:
            raise RuntimeError("rewriting did not terminate within max_steps")
        if strategy == "leftmost":
            i = redexes[0]
        elif strategy == "rightmost":
            i = redexes[-1]
        else:
            i = rng.choice(redexes)
        for rc, rhs in rules[(word[i], word[i + 1])]:
            new = word[:i] + rhs + word[i + 2:]
            pending[new] = pending[new] + c * rc if new in pending else c * rc
    return AlgebraElement._trusted(order, done)


def _word_to_monomial(word: Sequence[str]) -> Monomial:
    idx = [GENERATORS.index(s) for s in word]
    if idx != sorted(idx):
        raise AssertionError(f"irreducible word {word} is not ordered")
    return Monomial(*(idx.count(k) for k in range(5)))


# ---------------------------------------------------------------------------
# Casimir and centre at q^(2l) = 1


def casimir_c2p_words(order: RootOrder) -> list[Word]:
    """Xm Xp + q^-1 C X0 + q^-2 X0^2 as raw words."""
    return [
        Word(("Xm", "Xp")),
        Word(("C", "X0"), order.q_pow(-1)),
        Word(("X0", "X0"), order.q_pow(-2)),
    ]


def casimir_c2p(order: RootOrder) -> AlgebraElement:
    """The quadratic Casimir in basis form (reduces to the single symbol C2p)."""
    return normal_form(casimir_c2p_words(order), order)


def d_squared(order: RootOrder) -> AlgebraElement:
    """D^2 = C^2 - lambda^2 C2p."""
    g = generators(order)
    return g["C"] * g["C"] - g["C2p"].scale(order.lam ** 2)


def shifted_casimir(order: RootOrder) -> AlgebraElement:
    """U = C - lambda X0, whose l-th power is central at q^(2l) = 1."""
    g = generators(order)
    return g["C"] - g["X0"].scale(order.lam)


def dressed_chebyshev(order: RootOrder, l: int | None = None) -> AlgebraElement:
    """q^-l D^l Q_l((q + q^-1) C / D) expanded as a polynomial in C and D^2.

    Q_l has the parity of l, so only even powers of D appear.  ``l`` defaults
    to the order's l; other values are accepted for testing the expansion.
    """
    l = order.l if l is None else l
    coeffs = chebyshev_like(l)
    c_gen = AlgebraElement.generator("C", order)
    d2 = d_squared(order)
    two = order.q_pow(1) + order.q_pow(-1)
    total = AlgebraElement.zero(order)
    for k, a in enumerate(coeffs):
        if a == 0:
            continue
        assert (l - k) % 2 == 0, "Q_l lost its parity"
        total = total + (c_gen ** k * d2 ** ((l - k) // 2)).scale(two ** k * a)
    return total.scale(order.q_pow(-l))


def centre_relation_rhs(order: RootOrder) -> AlgebraElement:
    l = order.l
    u_l = shifted_casimir(order) ** l
    bracket = -(d_squared(order) ** l) + dressed_chebyshev(order) * u_l - u_l * u_l
    return bracket.scale(order.q_pow(l * (l - 1)) * order.lam ** (-2 * l))


def centre_relation_sides(order: RootOrder) -> tuple[AlgebraElement, AlgebraElement]:
    """(Xm^l Xp^l, the closed form in C, C2p and (C - lambda X0)^l)."""
    g = generators(order)
    l = order.l
    lhs = g["Xm"] ** l * g["Xp"] ** l
    return lhs, centre_relation_rhs(order)


def recursion_product(p: int, order: RootOrder) -> AlgebraElement:
    """lambda^-2p prod_{r<p} q^(-2r-1) {-q D^2 q^2r + (q+q^-1) C U - q^-1 U^2 q^-2r}."""
    if p < 1:
        raise ValueError("p must be at least 1")
    q = order.q_pow
    c_gen = AlgebraElement.generator("C", order)
    u = shifted_casimir(order)
    d2 = d_squared(order)
    cu = c_gen * u
    uu = u * u
    acc = AlgebraElement.scalar(order.lam ** (-2 * p), order)
    for r in range(p):
        factor = d2.scale(-q(1 + 2 * r)) + cu.scale(q(1) + q(-1)) - uu.scale(q(-1 - 2 * r))
        acc = acc * factor.scale(q(-2 * r - 1))
    return acc


def recursion_identity(p: int, order: RootOrder) -> tuple[AlgebraElement, AlgebraElement]:
    """(Xm^p Xp^p, the product formula) for 1 <= p."""
    if p < 1:
        raise ValueError("p must be at least 1")
    g = generators(order)
    return g["Xm"] ** p * g["Xp"] ** p, recursion_product(p, order)


def centre_generators(order: RootOrder) -> dict[str, AlgebraElement]:
    g = generators(order)
    l = order.l
    return {
        "C": g["C"],
        "C2p": g["C2p"],
        "Xp^l": g["Xp"] ** l,
        "Xm^l": g["Xm"] ** l,
        "(C-lambda*X0)^l": shifted_casimir(order) ** l,
    }


# ---------------------------------------------------------------------------
# canonical text


def format_element(e: AlgebraElement) -> str:
    """Canonical text: terms in ascending (a_minus, a_plus, a_0, b_1, b_2) order."""
    if e.is_zero():
        return "0"
    pieces: list[tuple[str, str]] = []
    for m in sorted(e.terms):
        c = e.terms[m]
        sign, coeff = _format_coeff(c)
        mono = m.text()
        if not mono:
            body = coeff or "1"
        elif not coeff:
            body = mono
        else:
            body = f"{coeff}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _format_coeff(c: CycNumber) -> tuple[str, str]:
    """Split a coefficient into a sign and a factor string ('' means unit)."""
    nonzero = [(k, v) for k, v in enumerate(c.coeffs) if v != 0]
    if len(nonzero) != 1:
        return "+", f"({c.poly_str()})"
    k, v = nonzero[0]
    sign = "-" if v < 0 else "+"
    a = abs(v)
    qk = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
    if not qk:
        return sign, "" if a == 1 else str(a)
    return sign, qk if a == 1 else f"{a}*{qk}"
