"""Cross-check every strategy against the oracle on a seeded random corpus.

    python scripts/agreement_sweep.py --count 2000 --seed 1 --min-size 10 --max-size 30
"""

import argparse
import collections
import time

from lambdanbe.gen import GenConfig, corpus
from lambdanbe.normalizers import normalize
from lambdanbe.oracle import Normalized, oracle_normalize
from lambdanbe.syntax import alpha_eq, is_strict_cps


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--kind", choices=["term", "cps"], default="term")
    ap.add_argument("--min-size", type=int, default=1)
    ap.add_argument("--max-size", type=int, default=30)
    ap.add_argument("--fuel", type=int, default=100_000)
    args = ap.parse_args()

    cfg = GenConfig(min_size=args.min_size, max_size=args.max_size)
    terms = corpus(args.kind, args.count, seed=args.seed, cfg=cfg)
    tally = collections.defaultdict(collections.Counter)
    start = time.perf_counter()
    for t in terms:
        expected = oracle_normalize(t, args.fuel)
        tally["oracle"]["normalized" if isinstance(expected, Normalized) else "diverged"] += 1
        strategies = ["cbn", "cbv", "nbe"] + (["cps"] if is_strict_cps(t) else [])
        for s in strategies:
            out = normalize(t, s, args.fuel)
            if not isinstance(out, Normalized):
                tally[s]["diverged"] += 1
            elif not isinstance(expected, Normalized):
                tally[s]["normalized, oracle out of fuel"] += 1
            elif alpha_eq(out.result, expected.result):
                tally[s]["agree"] += 1
            else:
                tally[s]["DISAGREE"] += 1
    elapsed = time.perf_counter() - start
    print(f"{args.count} {args.kind} terms, sizes {args.min_size}..{args.max_size}, "
          f"fuel {args.fuel}, {elapsed:.1f}s")
    for name, counts in tally.items():
        print(f"  {name:<7} " + ", ".join(f"{k}: {v}" for k, v in sorted(counts.items())))


if __name__ == "__main__":
    main()
