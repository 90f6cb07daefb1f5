"""Random parameter sweep over every representation family.

For each (algebra, family, n) draw parameters, build, and run the exact
checks: relations, central character, scalar relation, commutant.

    python3 scripts/rep_sweep.py --draws 20 --orders 3 4 5 6 7
"""

import argparse
import random
from collections import Counter
from dataclasses import dataclass, field

from sl2q.cyclotomic import RootOrder
from sl2q.representations import (
    build,
    central_character,
    check_scalar_relation,
    commutant_dimension,
    verify_relations,
)
from sl2q.sampling import FAMILIES_BY_ALGEBRA, NoAdmissibleParams, random_params


@dataclass(frozen=True)
class SweepConfig:
    orders: tuple[int, ...] = (3, 4, 5, 6)
    draws: int = 10
    seed: int = 0
    algebras: tuple[str, ...] = ("B", "F", "A")


@dataclass
class Tally:
    built: int = 0
    failed: int = 0
    commutants: Counter = field(default_factory=Counter)


def run(cfg: SweepConfig) -> bool:
    rng = random.Random(cfg.seed)
    ok = True
    for algebra in cfg.algebras:
        for family in FAMILIES_BY_ALGEBRA[algebra]:
            for n in cfg.orders:
                order = RootOrder(n)
                tally = Tally()
                for _ in range(cfg.draws):
                    try:
                        params = random_params(family, order, rng, algebra)
                    except NoAdmissibleParams:
                        break
                    rep = build(family, params, order, algebra)
                    tally.built += 1
                    good = verify_relations(rep).ok and check_scalar_relation(
                        central_character(rep), order
                    )
                    tally.failed += not good
                    tally.commutants[commutant_dimension(rep)] += 1
                ok &= tally.failed == 0
                dims = ",".join(f"{k}x{v}" for k, v in sorted(tally.commutants.items())) or "-"
                print(f"{algebra} {family:<16} n={n:<3} built {tally.built:>3}  "
                      f"failed {tally.failed}  commutant {dims}")
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--orders", type=int, nargs="+", default=list(SweepConfig.orders))
    ap.add_argument("--draws", type=int, default=SweepConfig.draws)
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--algebras", nargs="+", default=list(SweepConfig.algebras))
    args = ap.parse_args()
    cfg = SweepConfig(tuple(args.orders), args.draws, args.seed, tuple(args.algebras))
    raise SystemExit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
