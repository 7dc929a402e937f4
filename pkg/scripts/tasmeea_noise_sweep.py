"""Matcher recovery under character noise, across seeds and edit models.

Splits a sura into windows of 20-40 words, corrupts each window and reports
how often every segment is matched on its exact span (low noise) or every
segment is rejected (high noise).

Usage: python scripts/tasmeea_noise_sweep.py [--sura 36] [--seeds 20] [--rates 0.05 0.6]
"""

import argparse
import random
import statistics

from quran_phonetics.corpus import bundled_uthmani
from quran_phonetics.synth import inject_char_edits, plain_window, split_windows
from quran_phonetics.tasmeea import TasmeeaParams, match_segments

MODELS = {
    "substitute": ("substitute",),
    "mixed": ("substitute", "delete", "insert"),
}


def sweep(corpus, sura, rate, kinds, seed, params):
    rng = random.Random(seed)
    wins = split_windows(len(corpus.sura_words(sura)), params.min_win, params.max_win, rng)
    segs = [inject_char_edits(plain_window(corpus, sura, s, w), rate, rng, kinds) for s, w in wins]
    res = match_segments(segs, sura, params, corpus)
    exact = sum(1 for r, w in zip(res, wins) if r.matched and (r.matched.start_word, r.matched.word_count) == w)
    accepted = sum(1 for r in res if r.matched)
    return len(res), exact, accepted, [r.ratio for r in res]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sura", type=int, default=36)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--rates", type=float, nargs="+", default=[0.05, 0.6])
    args = ap.parse_args()

    corpus = bundled_uthmani()
    params = TasmeeaParams()
    print(f"sura {args.sura}, {args.seeds} seeds, acceptance {params.acceptance_ratio}")
    print(f"{'model':<11}{'rate':>6}{'segments':>10}{'exact':>8}{'accepted':>10}{'mean':>8}{'min':>7}{'max':>7}  seeds all-exact / all-rejected")
    for name, kinds in MODELS.items():
        for rate in args.rates:
            tot = exact = acc = all_exact = all_rej = 0
            ratios = []
            for seed in range(args.seeds):
                n, e, a, rs = sweep(corpus, args.sura, rate, kinds, seed, params)
                tot += n
                exact += e
                acc += a
                all_exact += e == n
                all_rej += a == 0
                ratios += rs
            print(
                f"{name:<11}{rate:>6.2f}{tot:>10}{exact:>8}{acc:>10}"
                f"{statistics.mean(ratios):>8.3f}{min(ratios):>7.3f}{max(ratios):>7.3f}  {all_exact:>5} / {all_rej}"
            )


if __name__ == "__main__":
    main()
