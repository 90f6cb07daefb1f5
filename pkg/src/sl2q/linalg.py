"""Small exact matrix toolkit over Q(zeta_n).

Matrices are tuples of row tuples of :class:`CycNumber`.  Sizes here never
exceed a dozen or so, so everything is plain Python loops.
"""

from __future__ import annotations

from typing import Sequence

from .cyclotomic import CycNumber, RootOrder

Matrix = tuple[tuple[CycNumber, ...], ...]


def as_matrix(rows: Sequence[Sequence[CycNumber]]) -> Matrix:
    return tuple(tuple(r) for r in rows)


def zeros(order: RootOrder, n: int) -> Matrix:
    z = order.zero()
    return tuple((z,) * n for _ in range(n))


def identity(order: RootOrder, n: int) -> Matrix:
    z, one = order.zero(), order.one()
    return tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))


def scalar_matrix(value: CycNumber, n: int) -> Matrix:
    z = value.order.zero()
    return tuple(tuple(value if i == j else z for j in range(n)) for i in range(n))


def add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(s, a: Matrix) -> Matrix:
    return tuple(tuple(x * s for x in row) for row in a)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0]) if b else 0
    bt = list(zip(*b))
    out = []
    for i in range(n):
        row = a[i]
        nz = [(k, x) for k, x in enumerate(row) if not x.is_zero()]
        out_row = []
        for j in range(m):
            col = bt[j]
            acc = None
            for k, x in nz:
                y = col[k]
                if not y.is_zero():
                    acc = x * y if acc is None else acc + x * y
            out_row.append(acc if acc is not None else row[0] * 0)
        out.append(tuple(out_row))
    return tuple(out)


def mat_pow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative matrix power")
    order = a[0][0].order
    result = identity(order, len(a))
    base = a
    while k:
        if k & 1:
            result = matmul(result, base)
        k >>= 1
        if k:
            base = matmul(base, base)
    return result


def is_zero(a: Matrix) -> bool:
    return all(x.is_zero() for row in a for x in row)


def scalar_value(a: Matrix) -> CycNumber | None:
    """The scalar s with a == s * I, or None if a is not scalar."""
    s = a[0][0]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if i == j:
                if x != s:
                    return None
            elif not x.is_zero():
                return None
    return s


def trace(a: Matrix) -> CycNumber:
    acc = a[0][0] * 0
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def rank(rows: list[dict[int, CycNumber]]) -> int:
    """Rank of a sparse row list (each row maps column -> nonzero entry)."""
    pivots: dict[int, dict[int, CycNumber]] = {}
    r = 0
    for row in rows:
        row = {k: v for k, v in row.items() if not v.is_zero()}
        # reduce against existing pivots until the leading column is new
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = row[lead].inverse()
                pivots[lead] = {k: v * inv for k, v in row.items()}
                r += 1
                break
            f = row[lead]
            for k, v in piv.items():
                nv = row[k] - f * v if k in row else -(f * v)
                if nv.is_zero():
                    row.pop(k, None)
                else:
                    row[k] = nv
    return r


def commutant_dimension(mats: Sequence[Matrix]) -> int:
    """dim { M : M X = X M for every X in mats }."""
    n = len(mats[0])

    def var(i, j):
        return i * n + j

    rows = []
    for x in mats:
        for i in range(n):
            for j in range(n):
                # (M X - X M)[i, j] = sum_k M[i,k] X[k,j] - X[i,k] M[k,j]
                row: dict[int, CycNumber] = {}
                for k in range(n):
                    a = x[k][j]
                    if not a.is_zero():
                        v = var(i, k)
                        row[v] = row[v] + a if v in row else a
                    b = x[i][k]
                    if not b.is_zero():
                        v = var(k, j)
                        row[v] = row[v] - b if v in row else -b
                if any(not v.is_zero() for v in row.values()):
                    rows.append(row)
    return n * n - rank(rows)
