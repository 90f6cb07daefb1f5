"""JSON encoding of field elements, parameter files and representations.

Field elements are lists of phi(n) rational strings "p/q" (power basis in q);
the order n travels in the enclosing document.
"""

from __future__ import annotations

import json
from dataclasses import MISSING, fields
from fractions import Fraction
from typing import Any

from . import representations as reps
from .cyclotomic import CycNumber, InvalidOrderError, RootOrder
from .representations import Representation


class FormatError(ValueError):
    """Malformed JSON document."""


_B_RECORDS = {
    "periodic": reps.PeriodicParams,
    "semiperiodic": reps.SemiPeriodicParams,
    "highest_weight": reps.HighestWeightParams,
    "one_dim": reps.OneDimParams,
    "one_dim_generic": reps.OneDimParams,
    "cyclic": reps.CyclicParams,
}
_F_RECORDS = {
    "periodic": reps.FPeriodicParams,
    "semiperiodic": reps.FSemiPeriodicParams,
    "highest_weight": reps.FHighestWeightParams,
    "one_dim": reps.FOneDimParams,
}
_INT_FIELDS = {"n_dim", "eps"}


def dumps(obj: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def scalar_from_json(value: Any, order: RootOrder) -> CycNumber:
    """Accept a full coordinate list, or a bare rational ("1/2", 3) for convenience."""
    try:
        if isinstance(value, list):
            return order.from_json(value)
        if isinstance(value, (int, str)) and not isinstance(value, bool):
            return order.scalar(Fraction(value))
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad field element {value!r}: {exc}") from None
    raise FormatError(f"bad field element {value!r}")


def params_from_json(family: str, algebra: str, data: Any, order: RootOrder):
    if not isinstance(data, dict):
        raise FormatError("parameter file must hold a JSON object")
    candidates = []
    if algebra == "F" and family in _F_RECORDS:
        candidates.append(_F_RECORDS[family])
    if family in _B_RECORDS:
        candidates.append(_B_RECORDS[family])
    if not candidates:
        raise FormatError(f"unknown family {family!r}")
    for cls in candidates:
        names = {f.name for f in fields(cls)}
        required = {f.name for f in fields(cls) if f.default is MISSING}
        if set(data) <= names and required <= set(data):
            kwargs = {}
            for k, v in data.items():
                if v is None:
                    kwargs[k] = None
                elif k in _INT_FIELDS:
                    if not isinstance(v, int) or isinstance(v, bool):
                        raise FormatError(f"{k} must be an integer")
                    kwargs[k] = v
                else:
                    kwargs[k] = scalar_from_json(v, order)
            return cls(**kwargs)
    expected = " or ".join(str(sorted(f.name for f in fields(c))) for c in candidates)
    raise FormatError(f"parameters {sorted(data)} do not match family {family!r}: expected {expected}")


def _matrix_json(m) -> list:
    return [[x.to_json() for x in row] for row in m]


def representation_to_json(rep: Representation) -> dict:
    return {
        "n": rep.order.n,
        "algebra": rep.algebra,
        "dim": rep.dim,
        "c": rep.c.to_json(),
        "X0": _matrix_json(rep.X0),
        "Xp": _matrix_json(rep.Xp),
        "Xm": _matrix_json(rep.Xm),
        "family": rep.family,
        "params": rep.params,
    }


def representation_from_json(data: Any) -> Representation:
    if not isinstance(data, dict):
        raise FormatError("representation must be a JSON object")
    try:
        order = RootOrder(int(data["n"]))
        dim = int(data["dim"])
        c = scalar_from_json(data["c"], order)
        mats = {}
        for key in ("X0", "Xp", "Xm"):
            rows = data[key]
            if not isinstance(rows, list) or len(rows) != dim:
                raise FormatError(f"{key} must have {dim} rows")
            mats[key] = tuple(
                tuple(scalar_from_json(x, order) for x in row) for row in rows
            )
        return Representation(
            order, dim, mats["X0"], mats["Xp"], mats["Xm"], c,
            data.get("algebra", "B"), data.get("family", ""), data.get("params", {}),
        )
    except (FormatError, InvalidOrderError):
        raise
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed representation: missing or bad field {exc}") from None
    except ValueError as exc:
        raise FormatError(f"malformed representation: {exc}") from None
