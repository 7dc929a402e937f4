"""CTC forward loss, greedy decoding and the 11-level weighted loss."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

BLANK = 0

LEVELS = (
    "phonemes",
    "hams_or_jahr",
    "shidda_or_rakhawa",
    "tafkheem_or_taqeeq",
    "itbaq",
    "safeer",
    "qalqla",
    "tikraar",
    "tafashie",
    "istitala",
    "ghonna",
)

PHONEME_WEIGHT = 0.4


class CTCInputError(ValueError):
    pass


def _logsumexp(x: np.ndarray, axis=-1) -> np.ndarray:
    m = np.max(x, axis=axis, keepdims=True)
    safe = np.where(np.isfinite(m), m, 0.0)
    with np.errstate(divide="ignore"):  # an all -inf slice is log(0) = -inf, as intended
        out = safe + np.log(np.sum(np.exp(x - safe), axis=axis, keepdims=True))
    return np.squeeze(out, axis=axis)


@dataclass(frozen=True)
class LogProbMatrix:
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.ndim != 2:
            raise CTCInputError(f"expected a T x V matrix, got shape {v.shape}")
        if v.shape[0] < 1 or v.shape[1] < 2:
            raise CTCInputError(f"need T >= 1 and V >= 2, got {v.shape}")
        if np.isnan(v).any() or (v == np.inf).any():
            raise CTCInputError("log-probabilities must be finite or -inf")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def from_array(cls, values, renormalize: bool = False, atol: float = 1e-6) -> "LogProbMatrix":
        v = np.asarray(values, dtype=np.float64)
        if v.ndim != 2:
            raise CTCInputError(f"expected a T x V matrix, got shape {v.shape}")
        norms = _logsumexp(v, axis=1)
        if renormalize:
            v = v - norms[:, None]
        else:
            bad = np.flatnonzero(np.abs(np.exp(norms) - 1.0) > atol)
            if bad.size:
                raise CTCInputError(f"row {int(bad[0])} does not sum to 1 (sum={math.exp(norms[bad[0]]):.9f})")
        return cls(v)

    @classmethod
    def from_probs(cls, probs) -> "LogProbMatrix":
        with np.errstate(divide="ignore"):
            return cls.from_array(np.log(np.asarray(probs, dtype=np.float64)))

    @property
    def steps(self) -> int:
        return self.values.shape[0]

    @property
    def vocab(self) -> int:
        return self.values.shape[1]


def _check_target(target: Sequence[int], vocab: int) -> list[int]:
    target = [int(t) for t in target]
    for t in target:
        if t == BLANK or not 0 < t < vocab:
            raise CTCInputError(f"target token {t} outside 1..{vocab - 1}")
    return target


def ctc_forward_loss(logits: LogProbMatrix, target: Sequence[int]) -> float:
    """Negative log-likelihood of target under CTC; inf when no alignment exists."""
    target = _check_target(target, logits.vocab)
    lp = logits.values
    T = lp.shape[0]
    ext = [BLANK]
    for t in target:
        ext += [t, BLANK]
    S = len(ext)
    # A repeated label needs a blank in between, so the minimum path length grows.
    needed = len(target) + sum(1 for a, b in zip(target, target[1:]) if a == b)
    if needed > T:
        return math.inf
    ext_arr = np.array(ext)
    # skip transitions s-2 -> s allowed when ext[s] is a label differing from ext[s-2]
    skip = np.zeros(S, dtype=bool)
    skip[2:] = (ext_arr[2:] != BLANK) & (ext_arr[2:] != ext_arr[:-2])

    alpha = np.full(S, -np.inf)
    alpha[0] = lp[0, ext[0]]
    if S > 1:
        alpha[1] = lp[0, ext[1]]
    for t in range(1, T):
        prev = alpha
        stay = prev
        step = np.full(S, -np.inf)
        step[1:] = prev[:-1]
        jump = np.full(S, -np.inf)
        jump[2:] = prev[:-2]
        jump = np.where(skip, jump, -np.inf)
        alpha = _logsumexp(np.stack([stay, step, jump]), axis=0) + lp[t, ext_arr]
    tail = alpha[-2:] if S > 1 else alpha[-1:]
    total = float(_logsumexp(tail, axis=0))
    if total == -math.inf:
        return math.inf
    return -total


def best_path(logits: LogProbMatrix) -> list[int]:
    return [int(i) for i in np.argmax(logits.values, axis=1)]


def collapse(path: Sequence[int]) -> list[int]:
    out = []
    prev = None
    for tok in path:
        if tok != prev and tok != BLANK:
            out.append(int(tok))
        prev = tok
    return out


def greedy_decode(logits: LogProbMatrix) -> list[int]:
    return collapse(best_path(logits))


@dataclass(frozen=True)
class MultiLevelLogits:
    levels: Mapping[str, LogProbMatrix]

    def __post_init__(self):
        if set(self.levels) != set(LEVELS):
            missing = sorted(set(LEVELS) - set(self.levels))
            extra = sorted(set(self.levels) - set(LEVELS))
            raise CTCInputError(f"level set mismatch (missing={missing}, extra={extra})")
        steps = {m.steps for m in self.levels.values()}
        if len(steps) != 1:
            raise CTCInputError(f"levels disagree on T: {sorted(steps)}")
        top = self.levels["phonemes"].vocab
        for name, m in self.levels.items():
            if name != "phonemes" and m.vocab >= top:
                raise CTCInputError(f"level {name} has V={m.vocab}, not smaller than phonemes V={top}")

    def __getitem__(self, name: str) -> LogProbMatrix:
        return self.levels[name]


def _default_weights() -> dict[str, float]:
    rest = (1.0 - PHONEME_WEIGHT) / (len(LEVELS) - 1)
    return {name: (PHONEME_WEIGHT if name == "phonemes" else rest) for name in LEVELS}


@dataclass(frozen=True)
class LevelWeights:
    weights: Mapping[str, float] = field(default_factory=_default_weights)

    def __post_init__(self):
        w = dict(self.weights)
        if set(w) != set(LEVELS):
            raise CTCInputError("weights must name exactly the 11 levels")
        if any(v < 0 for v in w.values()):
            raise CTCInputError("weights must be non-negative")
        total = math.fsum(w.values())
        if abs(total - 1.0) > 1e-12:
            raise CTCInputError(f"weights sum to {total!r}, expected 1")
        object.__setattr__(self, "weights", w)

    def __getitem__(self, name: str) -> float:
        return self.weights[name]


def multi_level_loss(
    logits: MultiLevelLogits,
    targets: Mapping[str, Sequence[int]],
    weights: LevelWeights | None = None,
) -> float:
    weights = weights or LevelWeights()
    if set(targets) != set(LEVELS):
        raise CTCInputError("targets must name exactly the 11 levels")
    losses = {name: ctc_forward_loss(logits[name], targets[name]) for name in LEVELS}
    return weighted_sum(losses, weights)


def weighted_sum(losses: Mapping[str, float], weights: LevelWeights | None = None) -> float:
    weights = weights or LevelWeights()
    if set(losses) != set(LEVELS):
        raise CTCInputError("losses must name exactly the 11 levels")
    return math.fsum(weights[name] * losses[name] for name in LEVELS)
