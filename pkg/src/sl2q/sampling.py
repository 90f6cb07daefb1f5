"""Random admissible parameter draws for every (algebra, family) pair."""

from __future__ import annotations

import random

from .cyclotomic import RootOrder
from .representations import (
    CyclicParams,
    ConstraintError,
    FHighestWeightParams,
    FOneDimParams,
    FPeriodicParams,
    FSemiPeriodicParams,
    HighestWeightParams,
    OneDimParams,
    PeriodicParams,
    SemiPeriodicParams,
    build,
    highest_weight_c,
)

FAMILIES_BY_ALGEBRA = {
    "B": ("periodic", "semiperiodic", "highest_weight", "one_dim", "one_dim_generic", "cyclic"),
    "F": ("periodic", "semiperiodic", "highest_weight", "one_dim"),
    "A": ("periodic", "semiperiodic", "highest_weight", "one_dim"),
}


class NoAdmissibleParams(LookupError):
    """The family is empty for this (order, algebra)."""


def available_dims(order: RootOrder, algebra: str) -> list[int]:
    """Dimensions realised by the highest weight family."""
    l = order.l
    dims = list(range(1, l))
    if l > 2:
        dims.append(l)
    if algebra == "A" and l % 2 == 0:
        dims.remove(l // 2)
    return dims


def random_params(family: str, order: RootOrder, rng: random.Random, algebra: str = "B", bound: int = 3):
    """Draw parameters that the builder for ``family`` accepts."""
    if family not in FAMILIES_BY_ALGEBRA[algebra]:
        raise ValueError(f"family {family!r} is not available for algebra {algebra}")
    R = lambda nonzero=False: order.random(rng, bound, nonzero)  # noqa: E731
    lam, q, l = order.lam, order.q_pow, order.l
    one = order.one()

    for _ in range(200):
        if family == "periodic":
            if algebra == "F":
                p = FPeriodicParams(R(), R(), R(True))
            else:
                c = one if algebra == "A" else R()
                p = PeriodicParams(c, R(), R(), R(True))
        elif family == "semiperiodic":
            if algebra == "F":
                nu = R(True)
                if order.q_number(2).is_zero():
                    nu = rng.choice((1, -1)) * one
                p = FSemiPeriodicParams(nu, R(True), R() if order.q_number(2).is_zero() else None)
            else:
                c = one if algebra == "A" else R()
                p = SemiPeriodicParams(c, R(), R(True))
        elif family == "highest_weight":
            dims = available_dims(order, algebra)
            if not dims:
                raise NoAdmissibleParams(f"no highest weight modules for {algebra} at n={order.n}")
            N = rng.choice(dims)
            if algebra == "F":
                two_zero = order.q_number(2).is_zero()
                if N < l:
                    p = FHighestWeightParams(N, rng.choice((1, -1)), None, R() if two_zero else None)
                else:
                    p = FHighestWeightParams(N, 1, R(True), None)
            elif algebra == "A":
                if N < l:
                    # (q^2+1) = (q^(2N)+1) nu
                    nu = (q(2) + 1) / (q(2 * N) + 1)
                    p = HighestWeightParams(N, nu, None)
                else:
                    p = HighestWeightParams(N, R(True), one)
            else:
                nu = R(True)
                if N < l:
                    c = R() if highest_weight_c(N, nu, order) is None else None
                    p = HighestWeightParams(N, nu, c)
                else:
                    p = HighestWeightParams(N, nu, R())
        elif family in ("one_dim", "one_dim_generic"):
            if algebra == "F":
                p = FOneDimParams(R(), R(True))
            elif algebra == "A":
                p = OneDimParams(one / lam, R(), R())
            else:
                p = OneDimParams(R(), R(), R())
        elif family == "cyclic":
            p = CyclicParams(R(), R(), R(True))
        else:
            raise ValueError(f"unknown family {family!r}")
        try:
            build(family, p, order, algebra)
        except ConstraintError:
            continue
        return p
    raise NoAdmissibleParams(f"could not draw admissible {family} parameters for {algebra} at n={order.n}")
