"""Structured listing of the simple finite-dimensional modules at q^(2l) = 1."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .cyclotomic import RootOrder

SCALAR_RELATION = (
    "x_-^l x_+^l = q^(l(l-1)) lambda^(-2l) { -(d^2)^l + q^-l d^l Q_l((q+q^-1) c/d) z - z^2 },"
    " d^2 = c^2 - lambda^2 c'_2"
)
SCALAR_RELATION_F = (
    "x_-^l x_+^l = q^(l(l-1)) lambda^(-2l) { -1 + q^-l d^l Q_l((q+q^-1) c/d) z - z^2 }, d^2 = 1"
)


@dataclass
class CaseRecord:
    case: int
    family: str
    dims: list[int]
    free_params: list[str]
    constraints: list[str] = field(default_factory=list)
    exclusions: list[str] = field(default_factory=list)
    labels: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def n_relations(self) -> int:
        """Polynomial relations among the free parameters."""
        return sum(1 for c in self.constraints if c.startswith("x_-^l x_+^l ="))

    @property
    def effective_params(self) -> int:
        return len(self.free_params) - self.n_relations


@dataclass
class ClassificationReport:
    n: int
    l: int
    algebra: str
    cases: list[CaseRecord]

    def by_case(self, k: int) -> list[CaseRecord]:
        return [c for c in self.cases if c.case == k]

    def to_json(self) -> list[dict]:
        out = []
        for rec in self.cases:
            d = asdict(rec)
            d["n_params"] = len(rec.free_params)
            d["n_relations"] = rec.n_relations
            out.append(d)
        return out


def classify(order: RootOrder, algebra: str = "B") -> ClassificationReport:
    if algebra not in ("B", "F", "A"):
        raise ValueError(f"unknown algebra {algebra!r}")
    l = order.l
    builders = {"B": _classify_b, "F": _classify_f, "A": _classify_a}
    return ClassificationReport(order.n, l, algebra, builders[algebra](l))


def _no_l_dim_at_2(l: int) -> list[str]:
    if l == 2:
        return ["dimension l = 2: no such module, the non-vanishing condition fails at p = 1 since q^2 = -1"]
    return []


def _b_small_notes(l: int) -> list[str]:
    if l == 2:
        return ["l = 2, n = 1: the constraint is vacuous, two parameters c and nu"]
    if l % 2 == 0:
        return [f"n = l/2 = {l // 2}: the constraint forces c = 0"]
    return []


def _classify_b(l: int) -> list[CaseRecord]:
    small = list(range(1, l))
    cases = [
        CaseRecord(
            1, "periodic", [l], ["c", "c'_2", "x_+^l", "x_-^l", "z"],
            [SCALAR_RELATION, "z != 0", "x_- != 0"],
            notes=["semi-periodic when x_+ = 0"],
        ),
        CaseRecord(
            2, "semiperiodic", [l], ["c", "x_0", "x_+^l"],
            ["c'_2 = q^2 x_0^2 - q c x_0", "z = (c - lambda x_0)^l != 0", "x_- = 0", "x_+ != 0"],
        ),
        CaseRecord(
            3, "highest_weight", small, ["nu"],
            ["(q^2+1) c = (q^(2n)+1) nu", "nu != 0", "x_+ = x_- = 0"],
            notes=_b_small_notes(l),
        ),
        CaseRecord(
            3, "highest_weight", [l] if l > 2 else [], ["c", "nu"],
            ["(q^2+1) c - (q^(2p)+1) nu != 0 for p = 1..l-1", "nu != 0", "x_+ = x_- = 0"],
            exclusions=_no_l_dim_at_2(l),
        ),
        CaseRecord(
            4, "one_dim", [1], ["x_0", "x'_+", "x'_-"],
            ["z = 0, i.e. c = lambda x_0", "x_+ x_- = c'_2 - lambda^-2 c^2 = -lambda^-2 d^2"],
            labels=["k = 0..l-1 (x'_+- = q^(+-2k) x_+-)"],
            notes=[
                "the l-dimensional module with z = 0 is reducible and splits into l of these",
                "for generic q the same one-dimensional modules exist with c - lambda x_0 = 0",
            ],
        ),
    ]
    return cases


def _classify_f(l: int) -> list[CaseRecord]:
    small = list(range(1, l))
    notes_f = []
    if l % 2 == 1:
        notes_f.append(
            "odd l: the printed factor d^l is read through the expansion of d^l Q_l(y/d) in d^2,"
            " which at d^2 = 1 is Q_l(y); no sign of d is chosen"
        )
    cases = [
        CaseRecord(
            1, "periodic", [l], ["c", "x_+^l", "x_-^l", "z"],
            [SCALAR_RELATION_F, "d^2 = 1", "z != 0", "x_- != 0"], notes=notes_f,
        ),
        CaseRecord(
            2, "semiperiodic", [l], ["nu", "x_+^l"],
            ["c = (q nu + q^-1 nu^-1)/[2]", "x_0 = lambda^-1 (c - nu)", "z = nu^l", "x_- = 0"],
            notes=["l = 2: [2] = 0, so nu = +-1 and c is free"] if l == 2 else [],
        ),
        CaseRecord(
            3, "highest_weight", small, [],
            ["[2] c = q^-1 nu + q nu^-1", "nu^2 = q^(-2n+2)"],
            labels=["n (dimension)", "eps (sign, nu = eps q^(-n+1))"],
            notes=["l = 2: [2] = 0, c is free"] if l == 2 else [],
        ),
        CaseRecord(
            3, "highest_weight", [l] if l > 2 else [], ["nu"],
            ["[2] c = q^-1 nu + q nu^-1", "nu^2 != q^(-2p+2) for p = 1..l-1"],
            exclusions=_no_l_dim_at_2(l),
        ),
        CaseRecord(
            4, "one_dim", [1], ["x_0", "x_+"],
            ["c = lambda x_0", "x_+ x_- = -lambda^-2"],
            notes=["always periodic: x_+ x_- = -lambda^-2 is nonzero"],
        ),
    ]
    return cases


def _classify_a(l: int) -> list[CaseRecord]:
    small = list(range(1, l))
    excl_small = []
    if l % 2 == 0:
        small.remove(l // 2)
        excl_small.append(
            f"dimension l/2 = {l // 2}: its constraint forces c = 0, incompatible with c = 1"
        )
    return [
        CaseRecord(
            1, "periodic", [l], ["c'_2", "x_+^l", "x_-^l", "z"],
            [SCALAR_RELATION + " with c = 1", "z != 0", "x_- != 0"],
        ),
        CaseRecord(
            2, "semiperiodic", [l], ["x_0", "x_+^l"],
            ["c = 1", "c'_2 = q^2 x_0^2 - q x_0", "z = (1 - lambda x_0)^l != 0"],
        ),
        CaseRecord(
            3, "highest_weight", small, [],
            ["q^2 + 1 = (q^(2n)+1) nu"], exclusions=excl_small, labels=["n (dimension)"],
        ),
        CaseRecord(
            3, "highest_weight", [l] if l > 2 else [], ["nu"],
            ["(q^2+1) - (q^(2p)+1) nu != 0 for p = 1..l-1"], exclusions=_no_l_dim_at_2(l),
        ),
        CaseRecord(
            4, "one_dim", [1], ["x'_+", "x'_-"],
            ["x_0 = lambda^-1", "x_+ x_- = c'_2 - lambda^-2"],
        ),
    ]
