"""Phoneme error rate and the per-level report."""

from __future__ import annotations

from typing import Hashable, Mapping, Sequence

from rapidfuzz.distance import Levenshtein

from .ctc import LEVELS


class MetricInputError(ValueError):
    pass


def sequence_distance(a: Sequence[Hashable], b: Sequence[Hashable]) -> int:
    """Unit-cost Levenshtein distance between two token sequences."""
    return Levenshtein.distance(list(a), list(b))


def phoneme_error_rate(reference: Sequence[Hashable], hypothesis: Sequence[Hashable]) -> float:
    if len(reference) == 0:
        raise MetricInputError("empty reference")
    return sequence_distance(reference, hypothesis) / len(reference)


def corpus_per(pairs: Sequence[tuple[Sequence[Hashable], Sequence[Hashable]]]) -> float:
    """Total distance over total reference length."""
    if not pairs:
        raise MetricInputError("empty level")
    dist = sum(sequence_distance(r, h) for r, h in pairs)
    length = sum(len(r) for r, _ in pairs)
    if length == 0:
        raise MetricInputError("references have zero total length")
    return dist / length


def per_report(per_level_pairs: Mapping[str, Sequence[tuple[Sequence, Sequence]]]) -> dict[str, float]:
    """Per-level PER plus their unweighted mean, keyed like ``per_phonemes`` / ``average_per``."""
    if not per_level_pairs:
        raise MetricInputError("no levels")
    unknown = set(per_level_pairs) - set(LEVELS)
    if unknown:
        raise MetricInputError(f"unknown level {sorted(unknown)[0]}")
    report = {}
    for name in LEVELS:
        if name in per_level_pairs:
            try:
                report[f"per_{name}"] = corpus_per(per_level_pairs[name])
            except MetricInputError as e:
                raise MetricInputError(f"{name}: {e}") from None
    report["average_per"] = sum(report.values()) / len(report)
    return report
