"""Phonetize every aya under every pause context and report failures.

Usage: python scripts/closure_sweep.py [--sura N] [--show K]
"""

import argparse
import collections
import time

from quran_phonetics.corpus import bundled_uthmani
from quran_phonetics.moshaf import reference_attributes
from quran_phonetics.phonetizer import UtteranceContext, phonetize


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sura", type=int)
    ap.add_argument("--show", type=int, default=10)
    args = ap.parse_args()

    corpus = bundled_uthmani()
    attrs = reference_attributes()
    contexts = [UtteranceContext(s, p) for s in (True, False) for p in (True, False)]
    errors = collections.Counter()
    examples = {}
    n = 0
    t0 = time.perf_counter()
    for v in corpus.verses:
        if args.sura and v.sura_index != args.sura:
            continue
        for ctx in contexts:
            n += 1
            try:
                phonetize(v.text, attrs, ctx)
            except Exception as e:  # noqa: BLE001 - the sweep reports everything
                key = f"{type(e).__name__}: {str(e).split(' at offset')[0]}"
                errors[key] += 1
                examples.setdefault(key, (v.sura_index, v.aya_index, ctx.label, str(e)))
    dt = time.perf_counter() - t0
    print(f"{n} runs in {dt:.1f}s, {sum(errors.values())} failures")
    for key, count in errors.most_common(args.show):
        print(f"{count:6d}  {key}  e.g. {examples[key]}")


if __name__ == "__main__":
    main()
