"""Finite-dimensional simple modules of B, F and A at q^(2l) = 1.

Builders return :class:`Representation` objects holding exact matrices for
X0, Xp, Xm and the scalar ``c`` by which C acts.  The families are

* ``periodic``        -- Xm injective, z != 0 (dimension l)
* ``semiperiodic``    -- Xm nilpotent, Xp injective, z != 0 (dimension l)
* ``highest_weight``  -- both nilpotent (dimension N <= l)
* ``one_dim``         -- z = 0, the one-dimensional modules
* ``cyclic``          -- the reducible l-dimensional module with z = 0, kept
  around so that it can be decomposed into ``one_dim`` pieces
* ``one_dim_generic`` -- the one-dimensional modules that exist for any q

Checks: :func:`verify_relations`, :func:`central_character`,
:func:`check_scalar_relation`, :func:`commutant_dimension`.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields
from itertools import product
from typing import Any, Union

from . import linalg
from .algebra import AlgebraElement, Word
from .cyclotomic import CycNumber, RootOrder, chebyshev_like
from .linalg import Matrix

ALGEBRAS = ("B", "F", "A")


class ConstraintError(ValueError):
    """Parameters violate a defining constraint of the requested family."""


class NotScalarError(ValueError):
    """A central element did not act as a scalar (module is not simple)."""


# ---------------------------------------------------------------------------
# parameter records


@dataclass(frozen=True)
class PeriodicParams:
    c: CycNumber
    c2p: CycNumber
    x0: CycNumber
    x_minus: CycNumber


@dataclass(frozen=True)
class SemiPeriodicParams:
    c: CycNumber
    x0: CycNumber
    x_plus: CycNumber


@dataclass(frozen=True)
class HighestWeightParams:
    n_dim: int
    nu: CycNumber
    c: CycNumber | None = None  # derived from the constraint when n_dim < l


@dataclass(frozen=True)
class OneDimParams:
    x0: CycNumber
    xp: CycNumber
    xm: CycNumber


@dataclass(frozen=True)
class CyclicParams:
    """The reducible z = 0 module; x_plus * x_minus = -d^2 / lambda^2."""

    x0: CycNumber
    x_plus: CycNumber
    x_minus: CycNumber


# F-specific parameterisations (d^2 = 1 built in)


@dataclass(frozen=True)
class FPeriodicParams:
    c: CycNumber
    x0: CycNumber
    x_minus: CycNumber


@dataclass(frozen=True)
class FSemiPeriodicParams:
    nu: CycNumber
    x_plus: CycNumber
    c: CycNumber | None = None  # only needed when [2] = 0


@dataclass(frozen=True)
class FHighestWeightParams:
    n_dim: int
    eps: int = 1  # sign labelling nu = eps q^(1-n) when n_dim < l
    nu: CycNumber | None = None  # the free parameter when n_dim = l
    c: CycNumber | None = None  # only needed when [2] = 0


@dataclass(frozen=True)
class FOneDimParams:
    x0: CycNumber
    x_plus: CycNumber


Params = Union[
    PeriodicParams,
    SemiPeriodicParams,
    HighestWeightParams,
    OneDimParams,
    CyclicParams,
    FPeriodicParams,
    FSemiPeriodicParams,
    FHighestWeightParams,
    FOneDimParams,
]


def params_to_dict(p: Params) -> dict[str, Any]:
    out = {}
    for f in fields(p):
        v = getattr(p, f.name)
        out[f.name] = v.to_json() if isinstance(v, CycNumber) else v
    return out


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    order: RootOrder
    dim: int
    X0: Matrix
    Xp: Matrix
    Xm: Matrix
    c: CycNumber
    algebra: str = "B"
    family: str = ""
    params: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.algebra not in ALGEBRAS:
            raise ValueError(f"algebra must be one of {ALGEBRAS}, got {self.algebra!r}")
        for name in ("X0", "Xp", "Xm"):
            m = getattr(self, name)
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise ValueError(f"{name} is not {self.dim}x{self.dim}")

    @property
    def C(self) -> Matrix:
        return linalg.scalar_matrix(self.c, self.dim)

    @property
    def C2p(self) -> Matrix:
        """Xm Xp + q^-1 C X0 + q^-2 X0^2 as a matrix."""
        q = self.order.q_pow
        x0 = self.X0
        return linalg.add(
            linalg.add(linalg.matmul(self.Xm, self.Xp), linalg.scale(q(-1) * self.c, x0)),
            linalg.scale(q(-2), linalg.matmul(x0, x0)),
        )

    def generator_matrix(self, name: str) -> Matrix:
        return {"X0": self.X0, "Xp": self.Xp, "Xm": self.Xm, "C": self.C, "C2p": self.C2p}[name]

    def evaluate_word(self, word: Word) -> Matrix:
        """Image of a raw word: the plain product of generator matrices."""
        acc = linalg.scalar_matrix(self.order.scalar(word.coeff), self.dim)
        for s in word.symbols:
            acc = linalg.matmul(acc, self.generator_matrix(s))
        return acc

    def evaluate(self, e: AlgebraElement) -> Matrix:
        """Image of a basis-expanded element."""
        acc = linalg.zeros(self.order, self.dim)
        mats = [self.Xm, self.Xp, self.X0, self.C, self.C2p]
        for m, coeff in e.terms.items():
            term = linalg.scalar_matrix(coeff, self.dim)
            for mat, k in zip(mats, m):
                if k:
                    term = linalg.matmul(term, linalg.mat_pow(mat, k))
            acc = linalg.add(acc, term)
        return acc

    def direct_sum(self, other: Representation) -> Representation:
        if other.c != self.c:
            raise ValueError("direct sum needs equal C eigenvalues")
        n1, n2 = self.dim, other.dim
        z = self.order.zero()

        def block(a, b):
            rows = [tuple(r) + (z,) * n2 for r in a]
            rows += [(z,) * n1 + tuple(r) for r in b]
            return tuple(rows)

        return Representation(
            self.order, n1 + n2, block(self.X0, other.X0), block(self.Xp, other.Xp),
            block(self.Xm, other.Xm), self.c, self.algebra, "direct_sum",
        )


def _diag(order: RootOrder, entries) -> Matrix:
    z = order.zero()
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else z for j in range(n)) for i in range(n))


def _shift(order: RootOrder, entries, step: int, cyclic: bool) -> Matrix:
    """Matrix sending basis vector p to entries[p] * v_{p+step}."""
    n = len(entries)
    rows = [[order.zero()] * n for _ in range(n)]
    for p, e in enumerate(entries):
        t = p + step
        if not cyclic and not 0 <= t < n:
            continue
        rows[t % n][p] = e
    return linalg.as_matrix(rows)


def _nonzero(x: CycNumber, what: str) -> None:
    if x.is_zero():
        raise ConstraintError(f"{what} must be nonzero")


# ---------------------------------------------------------------------------
# builders for B


def _periodic_matrices(order, c, c2p, x0, x_minus):
    l = order.l
    q = order.q_pow
    lam = order.lam
    u = c - lam * x0
    d2 = c * c - lam * lam * c2p
    diag = [q(2 * p) * x0 - q(p) * order.q_number(p) * c for p in range(l)]
    xm = [x_minus] * l
    inv = (x_minus * lam * lam).inverse()
    xp = [
        inv * (-d2 + (1 + q(-2)) * c * u * q(2 * p) - q(-2) * u * u * q(4 * p))
        for p in range(l)
    ]
    return _diag(order, diag), _shift(order, xp, -1, True), _shift(order, xm, 1, True)


def build_periodic(p: PeriodicParams, order: RootOrder) -> Representation:
    """The l-dimensional module on which Xm acts injectively and z != 0."""
    c, c2p, x0, xm = (order.scalar(v) for v in (p.c, p.c2p, p.x0, p.x_minus))
    _nonzero(xm, "x_minus (Xm must act injectively)")
    if c == order.lam * x0:
        raise ConstraintError("z = (c - lambda*x0)^l must be nonzero; z = 0 is the one-dimensional case")
    X0, Xp, Xm = _periodic_matrices(order, c, c2p, x0, xm)
    return Representation(order, order.l, X0, Xp, Xm, c, "B", "periodic", params_to_dict(p))


def build_cyclic(p: CyclicParams, order: RootOrder) -> Representation:
    """The reducible z = 0 module spanned by v_p = x_minus^-p Xm^p v_0."""
    x0, xp, xm = (order.scalar(v) for v in (p.x0, p.x_plus, p.x_minus))
    _nonzero(xm, "x_minus")
    lam = order.lam
    c = lam * x0
    c2p = xp * xm + c * c / (lam * lam)
    X0, Xp, Xm = _periodic_matrices(order, c, c2p, x0, xm)
    return Representation(order, order.l, X0, Xp, Xm, c, "B", "cyclic", params_to_dict(p))


def build_semiperiodic(p: SemiPeriodicParams, order: RootOrder) -> Representation:
    """The l-dimensional module with Xm w_0 = 0 and Xp injective, z != 0."""
    c, x0, x_plus = (order.scalar(v) for v in (p.c, p.x0, p.x_plus))
    _nonzero(x_plus, "x_plus (Xp must act injectively)")
    l = order.l
    q = order.q_pow
    lam = order.lam
    u = c - lam * x0
    if u.is_zero():
        raise ConstraintError("z = (c - lambda*x0)^l must be nonzero; z = 0 is the one-dimensional case")
    c2p = q(2) * x0 * x0 - q(1) * c * x0
    d2 = c * c - lam * lam * c2p
    diag = [q(-2 * k) * x0 + q(-k) * order.q_number(k) * c for k in range(l)]
    inv = (x_plus * lam * lam).inverse()
    xm = [
        inv * (-d2 + (1 + q(2)) * c * u * q(-2 * k) - q(2) * u * u * q(-4 * k))
        for k in range(l)
    ]
    assert xm[0].is_zero()
    X0 = _diag(order, diag)
    Xp = _shift(order, [x_plus] * l, 1, True)
    Xm = _shift(order, xm, -1, True)
    return Representation(order, l, X0, Xp, Xm, c, "B", "semiperiodic", params_to_dict(p))


def highest_weight_c(n_dim: int, nu: CycNumber, order: RootOrder) -> CycNumber | None:
    """c solving (q^2+1) c = (q^(2n)+1) nu, or None when q^2 + 1 = 0."""
    q = order.q_pow
    lhs = q(2) + 1
    if lhs.is_zero():
        return None
    return (q(2 * n_dim) + 1) * nu / lhs


def build_highest_weight(p: HighestWeightParams, order: RootOrder) -> Representation:
    """Highest/lowest weight module of dimension n_dim <= l, both X+- nilpotent."""
    l = order.l
    q = order.q_pow
    lam = order.lam
    N = p.n_dim
    if not isinstance(N, int) or not 1 <= N <= l:
        raise ConstraintError(f"dimension n_dim must satisfy 1 <= n_dim <= l = {l}, got {N}")
    nu = order.scalar(p.nu)
    _nonzero(nu, "nu")
    if N < l:
        c = highest_weight_c(N, nu, order)
        if c is None:
            # q^2 = -1: the constraint is vacuous and c is a second parameter
            if p.c is None:
                raise ConstraintError("at q^2 = -1 the n_dim = 1 family needs c as a parameter")
            c = order.scalar(p.c)
        elif p.c is not None and order.scalar(p.c) != c:
            raise ConstraintError("constraint (q^2+1)c = (q^(2n)+1)nu violated")
    else:
        if p.c is None:
            raise ConstraintError("the l-dimensional family needs c as a parameter")
        c = order.scalar(p.c)
        if l == 2:
            raise ConstraintError("the l-dimensional highest weight family does not exist when l = 2")
        for k in range(1, l):
            if ((q(2) + 1) * c - (q(2 * k) + 1) * nu).is_zero():
                raise ConstraintError(f"non-vanishing condition (q^2+1)c - (q^(2p)+1)nu != 0 fails at p={k}")
    diag = [(c - q(2 * k) * nu) / lam for k in range(N)]
    xp = [
        order.q_number(k) * q(k - 2) * nu * ((q(2) + 1) * c - (q(2 * k) + 1) * nu) / lam
        for k in range(N)
    ]
    X0 = _diag(order, diag)
    Xp = _shift(order, xp, -1, False)
    Xm = _shift(order, [order.one()] * N, 1, False)
    params = {"n_dim": N, "nu": nu.to_json(), "c": c.to_json()}
    return Representation(order, N, X0, Xp, Xm, c, "B", "highest_weight", params)


def build_one_dim(p: OneDimParams, order: RootOrder, generic: bool = False) -> Representation:
    """One-dimensional module with c = lambda * x0.

    ``generic=True`` tags the family that exists for any q (no root-of-unity
    index attached); the matrices are the same.
    """
    x0, xp, xm = (order.scalar(v) for v in (p.x0, p.xp, p.xm))
    c = order.lam * x0
    one = lambda v: ((v,),)  # noqa: E731
    family = "one_dim_generic" if generic else "one_dim"
    return Representation(order, 1, one(x0), one(xp), one(xm), c, "B", family, params_to_dict(p))


def decompose_case4(c, x0, x_pm, order: RootOrder) -> list[OneDimParams]:
    """Split the cyclic z = 0 module into its l one-dimensional summands.

    The summand spanned by sum_p q^(2kp) v_p has Xp -> q^(2k) x_plus and
    Xm -> q^(-2k) x_minus.
    """
    c, x0 = order.scalar(c), order.scalar(x0)
    x_plus, x_minus = (order.scalar(v) for v in x_pm)
    if c != order.lam * x0:
        raise ConstraintError("decomposition needs z = 0, i.e. c = lambda*x0")
    q = order.q_pow
    return [OneDimParams(x0, q(2 * k) * x_plus, q(-2 * k) * x_minus) for k in range(order.l)]


# ---------------------------------------------------------------------------
# F and A


def _f_two_c(nu: CycNumber, given: CycNumber | None, order: RootOrder, rhs: CycNumber) -> CycNumber:
    """Solve [2] c = rhs; when [2] = 0 the rhs must vanish and c is free."""
    two = order.q_number(2)
    if two.is_zero():
        if not rhs.is_zero():
            raise ConstraintError("[2] = 0 forces q^-1 nu + q nu^-1 = 0 (here nu^2 = q^2)")
        if given is None:
            raise ConstraintError("[2] = 0: c is a free parameter and must be given")
        return order.scalar(given)
    c = rhs / two
    if given is not None and order.scalar(given) != c:
        raise ConstraintError("[2] c = q^-1 nu + q nu^-1 violated")
    return c


def _require_d2_one(rep: Representation) -> None:
    lam = rep.order.lam
    c2p = linalg.scalar_value(rep.C2p)
    if c2p is None or rep.c * rep.c - lam * lam * c2p != 1:
        raise ConstraintError("F requires d^2 = c^2 - lambda^2 c2p = 1")


def build_F(family: str, params, order: RootOrder) -> Representation:
    """Simple F-modules: the B families with d^2 = 1 imposed.

    ``params`` may be the F parameter record of the family or the matching
    B record; either way d^2 = 1 is checked on the result.
    """
    q = order.q_pow
    lam = order.lam
    if family == "periodic":
        if isinstance(params, FPeriodicParams):
            c = order.scalar(params.c)
            params = PeriodicParams(c, (c * c - 1) / (lam * lam), params.x0, params.x_minus)
        rep = build_periodic(params, order)
    elif family == "semiperiodic":
        if isinstance(params, FSemiPeriodicParams):
            nu = order.scalar(params.nu)
            _nonzero(nu, "nu")
            c = _f_two_c(nu, params.c, order, q(1) * nu + q(-1) / nu)
            params = SemiPeriodicParams(c, (c - nu) / lam, params.x_plus)
        rep = build_semiperiodic(params, order)
    elif family == "highest_weight":
        if isinstance(params, FHighestWeightParams):
            N, l = params.n_dim, order.l
            if N < l:
                if params.eps not in (1, -1):
                    raise ConstraintError("eps must be +1 or -1")
                nu = q(1 - N) * params.eps
            else:
                if params.nu is None:
                    raise ConstraintError("the l-dimensional F family is labelled by nu")
                nu = order.scalar(params.nu)
                _nonzero(nu, "nu")
                for k in range(1, l):
                    if nu * nu == q(2 - 2 * k):
                        raise ConstraintError(f"nu^2 != q^(-2p+2) fails at p={k}")
            c = _f_two_c(nu, params.c, order, q(-1) * nu + q(1) / nu)
            params = HighestWeightParams(N, nu, c)
        rep = build_highest_weight(params, order)
    elif family == "one_dim":
        if isinstance(params, FOneDimParams):
            xp = order.scalar(params.x_plus)
            _nonzero(xp, "x_plus (x_plus x_minus = -lambda^-2)")
            params = OneDimParams(params.x0, xp, -1 / (lam * lam * xp))
        rep = build_one_dim(params, order)
    else:
        raise ValueError(f"unknown F family {family!r}")
    _require_d2_one(rep)
    return _retag(rep, "F")


def build_A(family: str, params, order: RootOrder) -> Representation:
    """Simple A-modules: the B families with c = 1."""
    l = order.l
    if family == "highest_weight" and l % 2 == 0 and params.n_dim == l // 2:
        raise ConstraintError(
            f"dimension l/2 = {l // 2} is excluded for A: its constraint forces c = 0, not c = 1"
        )
    if family == "one_dim" and order.scalar(params.x0) * order.lam != 1:
        raise ConstraintError("A requires c = lambda*x0 = 1")
    rep = build(family, params, order, "B")
    if rep.c != 1:
        raise ConstraintError("A requires c = 1")
    return _retag(rep, "A")


def _retag(rep: Representation, algebra: str) -> Representation:
    return Representation(
        rep.order, rep.dim, rep.X0, rep.Xp, rep.Xm, rep.c, algebra, rep.family, rep.params
    )


_B_BUILDERS = {
    "periodic": build_periodic,
    "semiperiodic": build_semiperiodic,
    "highest_weight": build_highest_weight,
    "one_dim": build_one_dim,
    "one_dim_generic": lambda p, o: build_one_dim(p, o, generic=True),
    "cyclic": build_cyclic,
}

FAMILIES = tuple(_B_BUILDERS)


def build(family: str, params, order: RootOrder, algebra: str = "B") -> Representation:
    if algebra == "F":
        return build_F(family, params, order)
    if algebra == "A":
        return build_A(family, params, order)
    if algebra != "B":
        raise ValueError(f"unknown algebra {algebra!r}")
    try:
        builder = _B_BUILDERS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}") from None
    return builder(params, order)


# ---------------------------------------------------------------------------
# verification


@dataclass
class RelationResult:
    name: str
    passed: bool
    difference: Matrix | None = None


@dataclass
class RelationReport:
    results: list[RelationResult]

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[RelationResult]:
        return [r for r in self.results if not r.passed]


def relation_differences(rep: Representation) -> dict[str, Matrix]:
    """Left minus right side of every defining relation, as matrices."""
    q = rep.order.q_pow
    lam = rep.order.lam
    mm = linalg.matmul
    X0, Xp, Xm, C = rep.X0, rep.Xp, rep.Xm, rep.C
    c = rep.c
    out = {
        "(1) q^2 X0 Xp - Xp X0 = q C Xp": linalg.sub(
            linalg.sub(linalg.scale(q(2), mm(X0, Xp)), mm(Xp, X0)), linalg.scale(q(1) * c, Xp)
        ),
        "(2) q^-2 X0 Xm - Xm X0 = -q^-1 C Xm": linalg.add(
            linalg.sub(linalg.scale(q(-2), mm(X0, Xm)), mm(Xm, X0)), linalg.scale(q(-1) * c, Xm)
        ),
        "(3) Xp Xm - Xm Xp = (q+q^-1)(C - lambda X0) X0": linalg.sub(
            linalg.sub(mm(Xp, Xm), mm(Xm, Xp)),
            linalg.scale(q(1) + q(-1), mm(linalg.sub(C, linalg.scale(lam, X0)), X0)),
        ),
        "(4) C central": linalg.add(
            linalg.add(
                linalg.sub(mm(C, Xp), mm(Xp, C)), linalg.sub(mm(C, Xm), mm(Xm, C))
            ),
            linalg.sub(mm(C, X0), mm(X0, C)),
        ),
    }
    n = rep.dim
    if rep.algebra == "F":
        d2 = linalg.sub(linalg.matmul(C, C), linalg.scale(lam * lam, rep.C2p))
        out["F: C^2 - lambda^2 C2p = 1"] = linalg.sub(d2, linalg.identity(rep.order, n))
    elif rep.algebra == "A":
        out["A: C = 1"] = linalg.sub(C, linalg.identity(rep.order, n))
    return out


def verify_relations(rep: Representation) -> RelationReport:
    results = []
    for name, diff in relation_differences(rep).items():
        ok = linalg.is_zero(diff)
        results.append(RelationResult(name, ok, None if ok else diff))
    return RelationReport(results)


@dataclass(frozen=True)
class CentralCharacter:
    c: CycNumber
    c2p: CycNumber
    xp_l: CycNumber
    xm_l: CycNumber
    z: CycNumber
    d2: CycNumber

    def to_json(self) -> dict:
        return {k.name: getattr(self, k.name).to_json() for k in fields(self)}


def central_character(rep: Representation) -> CentralCharacter:
    """Scalars by which C, C2p, Xp^l, Xm^l and (C - lambda X0)^l act."""
    order = rep.order
    l = order.l
    u = linalg.sub(rep.C, linalg.scale(order.lam, rep.X0))
    values = {}
    for name, mat in (
        ("c2p", rep.C2p),
        ("xp_l", linalg.mat_pow(rep.Xp, l)),
        ("xm_l", linalg.mat_pow(rep.Xm, l)),
        ("z", linalg.mat_pow(u, l)),
    ):
        s = linalg.scalar_value(mat)
        if s is None:
            raise NotScalarError(f"{name} does not act as a scalar")
        values[name] = s
    c = rep.c
    d2 = c * c - order.lam ** 2 * values["c2p"]
    return CentralCharacter(c=c, d2=d2, **values)


def dressed_chebyshev_scalar(c: CycNumber, d2: CycNumber, order: RootOrder) -> CycNumber:
    """q^-l d^l Q_l((q+q^-1) c / d), expanded in d^2 (no square root taken)."""
    l = order.l
    two = order.q_pow(1) + order.q_pow(-1)
    acc = order.zero()
    for k, a in enumerate(chebyshev_like(l)):
        if a:
            acc = acc + (two * c) ** k * d2 ** ((l - k) // 2) * a
    return acc * order.q_pow(-l)


def scalar_relation_rhs(cc: CentralCharacter, order: RootOrder) -> CycNumber:
    l = order.l
    bracket = -(cc.d2 ** l) + dressed_chebyshev_scalar(cc.c, cc.d2, order) * cc.z - cc.z * cc.z
    return order.q_pow(l * (l - 1)) * order.lam ** (-2 * l) * bracket


def check_scalar_relation(cc: CentralCharacter, order: RootOrder) -> bool:
    """x_-^l x_+^l equals the closed form in c, d^2 and z."""
    return cc.xm_l * cc.xp_l == scalar_relation_rhs(cc, order)


def commutant_dimension(rep: Representation) -> int:
    """Dimension of the commutant; 1 certifies absolute irreducibility."""
    return linalg.commutant_dimension([rep.X0, rep.Xp, rep.Xm])


def word_traces(rep: Representation, max_len: int = 3) -> dict[tuple[str, ...], CycNumber]:
    """Traces of all words in X0, Xp, Xm of length <= max_len."""
    out = {}
    for k in range(max_len + 1):
        for w in product(("X0", "Xp", "Xm"), repeat=k):
            out[w] = linalg.trace(rep.evaluate_word(Word(w)))
    return out
