"""Slow, obviously-correct reference implementations used by the tests."""

import itertools
import math

import numpy as np


def collapse_path(path, blank=0):
    out, prev = [], None
    for t in path:
        if t != prev and t != blank:
            out.append(t)
        prev = t
    return out


def brute_force_ctc(log_probs, target):
    """-log of the summed probability of every length-T path that collapses to target."""
    T, V = log_probs.shape
    probs = np.exp(log_probs)
    total = 0.0
    for path in itertools.product(range(V), repeat=T):
        if collapse_path(path) == list(target):
            total += math.prod(probs[t, k] for t, k in enumerate(path))
    return math.inf if total == 0.0 else -math.log(total)


def random_log_probs(rng, T, V):
    x = rng.normal(size=(T, V)) * 2.0
    return x - np.log(np.exp(x).sum(axis=1, keepdims=True))


def all_targets(V, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(range(1, V), repeat=n)


_PATHS = {}


def _path_table(T, V):
    """Every length-T path over V tokens, grouped by the target it collapses to."""
    if (T, V) not in _PATHS:
        paths = np.array(list(itertools.product(range(V), repeat=T)), dtype=np.int64).reshape(-1, T)
        groups = {}
        for i, p in enumerate(paths):
            groups.setdefault(tuple(collapse_path(p)), []).append(i)
        _PATHS[(T, V)] = (paths, {k: np.array(v) for k, v in groups.items()})
    return _PATHS[(T, V)]


def brute_force_all(log_probs):
    """-log P(target) for every reachable target, by summing path probabilities."""
    T, V = log_probs.shape
    paths, groups = _path_table(T, V)
    path_prob = np.exp(log_probs[np.arange(T), paths].sum(axis=1))
    return {k: -math.log(math.fsum(path_prob[idx])) for k, idx in groups.items()}
