"""Compare the CTC forward loss with brute-force path enumeration.

Enumerates every length-T path over V tokens, sums the probability of the
paths collapsing to each target, and reports the largest disagreement.

Usage: python scripts/ctc_oracle_check.py [--max-t 6] [--max-v 4] [--max-len 3] [--draws 100]
"""

import argparse
import itertools
import math
import time

import numpy as np

from quran_phonetics.ctc import LogProbMatrix, collapse, ctc_forward_loss


def enumerate_losses(lp):
    T, V = lp.shape
    mass = {}
    for path in itertools.product(range(V), repeat=T):
        key = tuple(collapse(path))
        mass.setdefault(key, []).append(lp[np.arange(T), path].sum())
    return {k: -math.log(math.fsum(math.exp(x) for x in v)) for k, v in mass.items()}


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-t", type=int, default=6)
    ap.add_argument("--max-v", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=3)
    ap.add_argument("--draws", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    t0 = time.perf_counter()
    for T in range(1, args.max_t + 1):
        for V in range(2, args.max_v + 1):
            worst, infeasible = 0.0, 0
            for _ in range(args.draws):
                x = rng.normal(size=(T, V)) * 2.0
                lp = x - np.log(np.exp(x).sum(axis=1, keepdims=True))
                m = LogProbMatrix(lp)
                oracle = enumerate_losses(lp)
                for n in range(args.max_len + 1):
                    for target in itertools.product(range(1, V), repeat=n):
                        got = ctc_forward_loss(m, target)
                        want = oracle.get(target, math.inf)
                        if math.isinf(want):
                            infeasible += 1
                            assert math.isinf(got), (T, V, target, got)
                        else:
                            worst = max(worst, abs(got - want))
            print(f"T={T} V={V}  max |diff| {worst:.2e}  infeasible targets {infeasible}")
    print(f"done in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
