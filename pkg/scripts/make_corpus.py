"""Write the seeded check corpus: a few hand-picked terms plus random ones.

    python scripts/make_corpus.py [--count 100] [--seed 7] [--out corpus/check100.lc]
"""

import argparse
from pathlib import Path

from lambdanbe.gen import GenConfig, corpus
from lambdanbe.syntax import pretty

HAND_PICKED = [
    (r"(\x.x) y", "identity redex"),
    (r"(\a.\b.a) (\z.z) ((\w.w w)(\w.w w))", "K I Ω: cbn normalizes, cbv/nbe diverge"),
    (r"(\f.\x.f (f x)) (\f.\x.f (f x))", "Church 2 2 = 4"),
    (r"(\k. k (\x.x)) (\m.m)", "strict CPS"),
    (r"x ((\y.y) z)", "redex in argument of a neutral term"),
    (r"\x. x (\u. (\y.y) u) w", "nested neutral spine"),
]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-size", type=int, default=30)
    ap.add_argument("--out", default=str(Path(__file__).parent.parent / "corpus" / "check100.lc"))
    args = ap.parse_args()

    lines = [f"# {args.count} terms: {len(HAND_PICKED)} hand-picked, the rest from "
             f"gen_term(seed={args.seed}, max_size={args.max_size})"]
    lines += [f"{text}  # {note}" for text, note in HAND_PICKED]
    random_terms = corpus("term", args.count - len(HAND_PICKED), seed=args.seed,
                          cfg=GenConfig(max_size=args.max_size))
    lines += [pretty(t) for t in random_terms]
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {args.count} terms to {args.out}")


if __name__ == "__main__":
    main()
