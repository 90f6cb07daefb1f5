"""Time the centre identities over a range of orders.

    python3 scripts/centre_sweep.py --n-min 3 --n-max 10
"""

import argparse
import time
from dataclasses import dataclass

from sl2q.cli import centre_checks
from sl2q.cyclotomic import RootOrder


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 3
    n_max: int = 8


def run(cfg: SweepConfig) -> bool:
    all_ok = True
    print(f"{'n':>3} {'l':>3} {'checks':>7} {'failed':>7} {'seconds':>8}")
    for n in range(cfg.n_min, cfg.n_max + 1):
        order = RootOrder(n)
        t0 = time.perf_counter()
        results = centre_checks(order)
        dt = time.perf_counter() - t0
        failed = [name for name, ok in results if not ok]
        all_ok &= not failed
        print(f"{n:>3} {order.l:>3} {len(results):>7} {len(failed):>7} {dt:>8.2f}")
        for name in failed:
            print(f"    FAIL {name}")
    return all_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=SweepConfig.n_min)
    ap.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    args = ap.parse_args()
    raise SystemExit(0 if run(SweepConfig(args.n_min, args.n_max)) else 1)


if __name__ == "__main__":
    main()
