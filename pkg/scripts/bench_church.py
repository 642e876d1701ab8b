"""Beta steps and wall time per strategy on Church arithmetic.

    python scripts/bench_church.py --max 10
    python scripts/bench_church.py --case mul 40 40 --repeats 5
"""

import argparse
import statistics

from lambdanbe.bench import BENCH_STRATEGIES, run_bench, run_strategy
from lambdanbe.church import church_case, church_decode


def one_case(op, a, b, repeats, fuel):
    term = church_case(op, a, b)
    print(f"{op} {a} {b}  (median of {repeats})")
    for strategy in BENCH_STRATEGIES:
        runs = [run_strategy(term, strategy, fuel) for _ in range(repeats)]
        outcome = runs[0][0]
        ms = statistics.median(seconds for _, seconds in runs) * 1000
        print(f"  {strategy:<7} steps {outcome.steps:>7}  {ms:>9.2f} ms  "
              f"value {church_decode(outcome.result)}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max", type=int, default=8)
    ap.add_argument("--fuel", type=int, default=10**6)
    ap.add_argument("--case", nargs=3, metavar=("OP", "A", "B"))
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    if args.case:
        op, a, b = args.case
        one_case(op, int(a), int(b), args.repeats, args.fuel)
        return
    totals = {s: [0, 0.0] for s in BENCH_STRATEGIES}
    for record, _ in run_bench("church", args.max, args.fuel):
        totals[record.strategy][0] += record.beta_steps
        totals[record.strategy][1] += record.wall_time
    print(f"church suite, n = 1..{args.max}")
    for strategy, (steps, ms) in totals.items():
        print(f"  {strategy:<7} total steps {steps:>8}  total {ms:>9.1f} ms")


if __name__ == "__main__":
    main()
