"""Command line interface: ``sl2q {nf,centre-check,rep-build,rep-verify,classify}``.

Exit codes: 0 success, 1 verification failure, 2 parse/format error,
3 invalid order, 4 constraint violation.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import algebra as alg
from .classification import classify
from .cyclotomic import InvalidOrderError, RootOrder
from .expr import ParseError, parse_element, print_canonical
from .representations import (
    ConstraintError,
    NotScalarError,
    build,
    central_character,
    check_scalar_relation,
    commutant_dimension,
    params_to_dict,
    verify_relations,
)
from .sampling import FAMILIES_BY_ALGEBRA, NoAdmissibleParams, random_params
from .serialization import (
    FormatError,
    dumps,
    params_from_json,
    representation_from_json,
    representation_to_json,
)

EXIT_OK, EXIT_FAIL, EXIT_FORMAT, EXIT_ORDER, EXIT_CONSTRAINT = 0, 1, 2, 3, 4
DEFAULT_SEED = 20240601


@dataclass(frozen=True)
class CliConfig:
    """Parsed common flags; ``n`` is validated lazily by each command."""

    command: str
    n: int | None
    algebra: str = "B"
    format: str = "text"
    seed: int = DEFAULT_SEED

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        return cls(args.command, args.n, args.algebra, args.format, args.seed)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _order(n: int | None) -> RootOrder:
    if n is None:
        raise CliError("--n is required", EXIT_ORDER)
    try:
        return RootOrder(n)
    except InvalidOrderError as exc:
        raise CliError(str(exc), EXIT_ORDER) from None


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EXIT_FORMAT) from None
    except json.JSONDecodeError as exc:
        raise CliError(f"malformed JSON in {path}: {exc}", EXIT_FORMAT) from None


# commands -----------------------------------------------------------------


def cmd_nf(args, out) -> int:
    order = _order(args.n)
    try:
        e = parse_element(args.expr, order)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_FORMAT) from None
    except ZeroDivisionError as exc:
        raise CliError(f"parse error: {exc}", EXIT_FORMAT) from None
    text = print_canonical(e)
    if args.format == "json":
        terms = [
            {"monomial": list(m), "coeff": e.terms[m].to_json()} for m in sorted(e.terms)
        ]
        out.write(dumps({"n": order.n, "normal_form": text, "terms": terms}))
    else:
        out.write(text + "\n")
    return EXIT_OK


def centre_checks(order: RootOrder) -> list[tuple[str, bool]]:
    results = []
    results.append(("C2p equals Xm*Xp + q^-1*C*X0 + q^-2*X0^2",
                    alg.casimir_c2p(order) == alg.AlgebraElement.generator("C2p", order)))
    for name, e in alg.centre_generators(order).items():
        results.append((f"{name} is central", alg.is_central(e)))
    for p in range(1, order.l + 1):
        lhs, rhs = alg.recursion_identity(p, order)
        results.append((f"Xm^{p}*Xp^{p} product formula", lhs == rhs))
    lhs, rhs = alg.centre_relation_sides(order)
    results.append(("Xm^l*Xp^l centre relation", lhs == rhs))
    return results


def cmd_centre_check(args, out) -> int:
    order = _order(args.n)
    results = centre_checks(order)
    if args.format == "json":
        out.write(dumps({"n": order.n, "l": order.l,
                         "checks": [{"check": k, "passed": ok} for k, ok in results]}))
    else:
        out.write(f"n = {order.n}, l = {order.l}\n")
        for name, ok in results:
            out.write(f"{'PASS' if ok else 'FAIL'}  {name}\n")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL


def cmd_rep_build(args, out) -> int:
    order = _order(args.n)
    family, algebra = args.family, args.algebra
    if family not in FAMILIES_BY_ALGEBRA[algebra]:
        raise CliError(
            f"family {family!r} not available for {algebra}; choose from {FAMILIES_BY_ALGEBRA[algebra]}",
            EXIT_FORMAT,
        )
    try:
        if args.params:
            params = params_from_json(family, algebra, _read_json(args.params), order)
        else:
            params = random_params(family, order, random.Random(args.seed), algebra)
        rep = build(family, params, order, algebra)
    except FormatError as exc:
        raise CliError(str(exc), EXIT_FORMAT) from None
    except (ConstraintError, NoAdmissibleParams) as exc:
        raise CliError(f"constraint violated: {exc}", EXIT_CONSTRAINT) from None
    doc = representation_to_json(rep)
    if args.params is None and not doc["params"]:
        doc["params"] = params_to_dict(params)
    out.write(dumps(doc))
    return EXIT_OK


def verification_report(rep) -> dict:
    report = verify_relations(rep)
    doc = {
        "n": rep.order.n,
        "algebra": rep.algebra,
        "family": rep.family,
        "dim": rep.dim,
        "relations": [
            {
                "relation": r.name,
                "passed": r.passed,
                "nonzero_entries": [] if r.passed else [
                    {"row": i, "col": j, "value": x.to_json()}
                    for i, row in enumerate(r.difference) for j, x in enumerate(row)
                    if not x.is_zero()
                ],
            }
            for r in report.results
        ],
    }
    try:
        cc = central_character(rep)
        doc["central_character"] = cc.to_json()
        doc["scalar_relation"] = check_scalar_relation(cc, rep.order)
    except NotScalarError as exc:
        doc["central_character"] = None
        doc["central_character_error"] = str(exc)
        doc["scalar_relation"] = None
    doc["commutant_dimension"] = commutant_dimension(rep)
    doc["ok"] = report.ok
    return doc


def cmd_rep_verify(args, out) -> int:
    data = _read_json(args.rep_file)
    try:
        rep = representation_from_json(data)
    except FormatError as exc:
        raise CliError(str(exc), EXIT_FORMAT) from None
    except InvalidOrderError as exc:
        raise CliError(str(exc), EXIT_ORDER) from None
    doc = verification_report(rep)
    if args.format == "json":
        out.write(dumps(doc))
    else:
        out.write(f"{rep.algebra} {rep.family or 'representation'}: n = {rep.order.n}, dim = {rep.dim}\n")
        for r in doc["relations"]:
            out.write(f"{'PASS' if r['passed'] else 'FAIL'}  {r['relation']}\n")
            for e in r["nonzero_entries"]:
                value = rep.order.from_json(e["value"])
                out.write(f"      [{e['row']}, {e['col']}] = {value.poly_str()}\n")
        if doc["central_character"] is None:
            out.write(f"FAIL  central character: {doc['central_character_error']}\n")
        else:
            for k in ("c", "c2p", "xp_l", "xm_l", "z", "d2"):
                v = rep.order.from_json(doc["central_character"][k])
                out.write(f"      {k} = {v.poly_str()}\n")
            out.write(f"{'PASS' if doc['scalar_relation'] else 'FAIL'}  scalar centre relation\n")
        out.write(f"      commutant dimension = {doc['commutant_dimension']}\n")
    return EXIT_OK if doc["ok"] else EXIT_FAIL


def cmd_classify(args, out) -> int:
    order = _order(args.n)
    report = classify(order, args.algebra)
    if args.format == "json":
        out.write(dumps(report.to_json()))
        return EXIT_OK
    out.write(f"algebra {report.algebra}, n = {report.n}, l = {report.l}\n")
    for rec in report.cases:
        dims = ", ".join(map(str, rec.dims)) or "none"
        out.write(f"case {rec.case} ({rec.family}): dims [{dims}], "
                  f"{len(rec.free_params)} parameters {rec.free_params}, "
                  f"{rec.n_relations} relation(s)\n")
        for c in rec.constraints:
            out.write(f"    constraint: {c}\n")
        for lab in rec.labels:
            out.write(f"    label: {lab}\n")
        for x in rec.exclusions:
            out.write(f"    excluded: {x}\n")
        for note in rec.notes:
            out.write(f"    note: {note}\n")
    return EXIT_OK


# entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="exact multiplicative order of q (n >= 3)")
    common.add_argument("--algebra", choices=("B", "F", "A"), default="B")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)

    parser = argparse.ArgumentParser(prog="sl2q", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nf", parents=[common], help="normal form of an expression")
    p.add_argument("expr")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("centre-check", parents=[common], help="verify the centre identities")
    p.set_defaults(func=cmd_centre_check)

    p = sub.add_parser("rep-build", parents=[common], help="build a representation as JSON")
    p.add_argument("family", help="periodic, semiperiodic, highest_weight, one_dim, one_dim_generic, cyclic")
    p.add_argument("--params", help="JSON parameter file ('-' for stdin); random draw if omitted")
    p.set_defaults(func=cmd_rep_build)

    p = sub.add_parser("rep-verify", parents=[common], help="check a representation JSON file")
    p.add_argument("rep_file", help="representation JSON ('-' for stdin)")
    p.set_defaults(func=cmd_rep_verify)

    p = sub.add_parser("classify", parents=[common], help="classification report")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_FORMAT if exc.code else EXIT_OK
    config = CliConfig.from_args(args)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"sl2q {config.command}: {exc}", file=sys.stderr)
        return exc.code


def main_entry() -> None:
    sys.exit(main())
