"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored in the power basis 1, zeta, ..., zeta^(phi(n)-1) modulo
the n-th cyclotomic polynomial, as an integer numerator vector over a single
positive denominator.  ``zeta`` plays the role of the deformation parameter
``q``; :class:`RootOrder` fixes its exact multiplicative order ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from numbers import Rational
from typing import Iterable, Sequence


class InvalidOrderError(ValueError):
    """Raised for orders n < 3, where q^2 = 1 and lambda = q - 1/q vanishes."""


# ---------------------------------------------------------------------------
# integer polynomials (ascending coefficient lists)


def _poly_divmod_monic(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    num = list(num)
    dq = len(den) - 1
    if len(num) - 1 < dq:
        return [0], num
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j, d in enumerate(den):
                num[i - dq + j] -= c * d
    rem = num[:dq] or [0]
    return quot, rem


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients (constant term first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod_monic(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    return tuple(poly)


def minimal_l(n: int) -> int:
    """Smallest l > 0 with zeta_n^(2l) = 1."""
    if n < 3:
        raise InvalidOrderError(f"order n={n} is excluded: need n >= 3 so that q^2 != 1")
    return n // gcd(n, 2)


def chebyshev_like(l: int) -> list[int]:
    """Integer coefficients (ascending) of Q_l with Q_l(x + 1/x) = x^l + x^-l.

    Built from Q_0 = 2, Q_1 = y and Q_{k+1} = y Q_k - Q_{k-1}.
    """
    if l < 0:
        raise ValueError("l must be non-negative")
    prev, cur = [2], [0, 1]
    if l == 0:
        return prev
    for _ in range(l - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootOrder:
    """Context for q = zeta_n with exact multiplicative order ``n``."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise InvalidOrderError(f"order must be an integer, got {self.n!r}")
        minimal_l(self.n)

    @property
    def l(self) -> int:
        return minimal_l(self.n)

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        return cyclotomic_polynomial(self.n)

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @cached_property
    def _reduction_rows(self) -> tuple[tuple[int, ...], ...]:
        # rows[k] = x^(degree + k) reduced mod Phi_n, for k = 0 .. degree - 2
        d = self.degree
        rows = []
        cur = [-c for c in self.modulus[:d]]
        for _ in range(max(d - 1, 1)):
            rows.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            for j in range(d):
                cur[j] -= top * self.modulus[j]
        return tuple(rows)

    @cached_property
    def _powers(self) -> tuple[CycNumber, ...]:
        d = self.degree
        out = []
        vec = [1] + [0] * (d - 1)
        for _ in range(self.n):
            out.append(CycNumber._raw(self, tuple(vec), 1))
            top = vec[-1]
            vec = [0] + vec[:-1]
            for j in range(d):
                vec[j] -= top * self.modulus[j]
        return tuple(out)

    # convenient constants ------------------------------------------------
    def scalar(self, value) -> CycNumber:
        """Coerce an int, Fraction or CycNumber into this field."""
        if isinstance(value, CycNumber):
            if value.order != self:
                raise ValueError(f"cannot mix Q(zeta_{value.order.n}) with Q(zeta_{self.n})")
            return value
        if isinstance(value, (int, Rational)) and not isinstance(value, bool):
            f = Fraction(value)
            return CycNumber._raw(self, (f.numerator,) + (0,) * (self.degree - 1), f.denominator)
        raise TypeError(f"cannot coerce {value!r} into Q(zeta_{self.n})")

    def zero(self) -> CycNumber:
        return self.scalar(0)

    def one(self) -> CycNumber:
        return self.scalar(1)

    def q_pow(self, k: int) -> CycNumber:
        return self._powers[k % self.n]

    @property
    def q(self) -> CycNumber:
        return self.q_pow(1)

    @cached_property
    def lam(self) -> CycNumber:
        """lambda = q - q^-1."""
        return self.q_pow(1) - self.q_pow(-1)

    def q_number(self, p: int) -> CycNumber:
        """[p] = (q^p - q^-p) / (q - q^-1)."""
        return (self.q_pow(p) - self.q_pow(-p)) / self.lam

    def element(self, coeffs: Sequence) -> CycNumber:
        """Element with the given power-basis coordinates (length <= phi(n))."""
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) > self.degree:
            raise ValueError(f"at most {self.degree} coordinates for n={self.n}")
        coeffs += [Fraction(0)] * (self.degree - len(coeffs))
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        return CycNumber._raw(self, tuple(int(c * den) for c in coeffs), den)

    def from_json(self, data: Sequence[str]) -> CycNumber:
        if not isinstance(data, (list, tuple)) or len(data) != self.degree:
            raise ValueError(f"expected a list of {self.degree} rational strings, got {data!r}")
        return self.element(Fraction(str(s)) for s in data)

    def random(self, rng, bound: int = 3, nonzero: bool = False) -> CycNumber:
        """Random element with small integer coordinates in [-bound, bound]."""
        while True:
            x = self.element([rng.randint(-bound, bound) for _ in range(self.degree)])
            if not (nonzero and x.is_zero()):
                return x


def q_pow(k: int, order: RootOrder) -> CycNumber:
    return order.q_pow(k)


def q_number(p: int, order: RootOrder) -> CycNumber:
    return order.q_number(p)


def evaluate_poly(coeffs: Iterable[int], x):
    """Horner evaluation of an ascending coefficient list at ``x``."""
    coeffs = list(coeffs)
    acc = 0 * x
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


class CycNumber:
    """An exact element of Q(zeta_n).  Immutable."""

    __slots__ = ("order", "_num", "_den", "_hash")

    order: RootOrder
    _num: tuple[int, ...]
    _den: int

    @classmethod
    def _raw(cls, order: RootOrder, num: tuple[int, ...], den: int) -> CycNumber:
        g = den
        for c in num:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if not any(num):
            den, g = 1, 1
        if den < 0:
            g = -g
        self = object.__new__(cls)
        if g != 1:
            num = tuple(c // g for c in num)
            den //= g
        self.order = order
        self._num = num
        self._den = den
        self._hash = None
        return self

    # coordinates ---------------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def rational_value(self) -> Fraction | None:
        """The rational this element equals, or None if it is irrational."""
        if any(self._num[1:]):
            return None
        return Fraction(self._num[0], self._den)

    # arithmetic ----------------------------------------------------------
    def _coerce(self, other) -> CycNumber | None:
        if isinstance(other, CycNumber):
            if other.order.n != self.order.n:
                raise ValueError(f"cannot mix Q(zeta_{self.order.n}) with Q(zeta_{other.order.n})")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.order.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d1, d2 = self._den, o._den
        if d1 == d2:
            return CycNumber._raw(self.order, tuple(a + b for a, b in zip(self._num, o._num)), d1)
        return CycNumber._raw(
            self.order, tuple(a * d2 + b * d1 for a, b in zip(self._num, o._num)), d1 * d2
        )

    __radd__ = __add__

    def __neg__(self) -> CycNumber:
        return CycNumber._raw(self.order, tuple(-a for a in self._num), self._den)

    def __pos__(self) -> CycNumber:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return CycNumber._raw(self.order, tuple(a * other for a in self._num), self._den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._num, o._num
        d = len(a)
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:d]
        rows = self.order._reduction_rows
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = rows[k - d]
                for j in range(d):
                    out[j] += c * row[j]
        return CycNumber._raw(self.order, tuple(out), self._den * o._den)

    __rmul__ = __mul__

    def inverse(self) -> CycNumber:
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        order = self.order
        d = order.degree
        # column j of the multiplication-by-self matrix is self * q^j
        cols = []
        for j in range(d):
            cols.append((self * order.q_pow(j)).coeffs)
        aug = [[cols[j][i] for j in range(d)] + [Fraction(int(i == 0))] for i in range(d)]
        for col in range(d):
            piv = next(r for r in range(col, d) if aug[r][col] != 0)
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [v / p for v in aug[col]]
            for r in range(d):
                if r != col and aug[r][col] != 0:
                    f = aug[r][col]
                    aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
        return order.element([aug[i][d] for i in range(d)])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = o.rational_value()
        if r is not None:
            if r == 0:
                raise ZeroDivisionError("division by zero in a cyclotomic field")
            return CycNumber._raw(
                self.order, tuple(a * r.denominator for a in self._num), self._den * r.numerator
            )
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int) -> CycNumber:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.order.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison / display ------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, CycNumber):
            return (
                self.order.n == other.order.n
                and self._den == other._den
                and self._num == other._num
            )
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self.rational_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            r = self.rational_value()
            self._hash = hash(r) if r is not None else hash((self.order.n, self._num, self._den))
        return self._hash

    def poly_str(self) -> str:
        """Render as a polynomial in q, lowest power first, e.g. ``1/2 - q + 2*q^3``."""
        parts: list[tuple[str, str]] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = str(a)
            else:
                qk = "q" if k == 1 else f"q^{k}"
                body = qk if a == 1 else f"{a}*{qk}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"CycNumber(n={self.order.n}: {self.poly_str()})"

    __str__ = poly_str
