"""Windowed fuzzy matching of transcript segments against a sura's text."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from rapidfuzz.distance import Levenshtein

from .corpus import NormalizedText, QuranCorpus, matching_key

ISTIAATHA = "أعوذ بالله من الشيطان الرجيم"
SADAKA = "صدق الله العظيم"


class TasmeeaError(ValueError):
    pass


@dataclass(frozen=True)
class TasmeeaParams:
    overlap_words: int = 6
    window_words: int = 30
    acceptance_ratio: float = 0.5
    include_istiaatha: bool = False
    include_sadaka: bool = False

    def __post_init__(self):
        if self.window_words <= 10:
            raise TasmeeaError("window_words must exceed 10")
        if not 0.0 <= self.acceptance_ratio <= 1.0:
            raise TasmeeaError("acceptance_ratio must lie in [0, 1]")
        if self.overlap_words < 0:
            raise TasmeeaError("overlap_words must be non-negative")

    @property
    def min_win(self) -> int:
        return self.window_words - 10

    @property
    def max_win(self) -> int:
        return self.window_words + 10

    def start_range(self, penalty: int) -> range:
        lo = -(self.overlap_words + penalty)
        hi = self.overlap_words + max(self.window_words, self.max_win) + penalty
        return range(lo, hi + 1)


@dataclass(frozen=True)
class Match:
    sura: int
    start_word: int
    word_count: int
    text: str
    special: str | None = None


@dataclass(frozen=True)
class MatchResult:
    matched: Match | None
    ratio: float


@dataclass
class MatcherState:
    aya_word_cursor: int = 0
    penalty: int = 0


def _key(x: str | NormalizedText) -> str:
    return matching_key(x)


def edit_distance(a: str | NormalizedText, b: str | NormalizedText) -> int:
    """Levenshtein distance over code points."""
    a = a.value if isinstance(a, NormalizedText) else a
    b = b.value if isinstance(b, NormalizedText) else b
    return Levenshtein.distance(a, b)


def similarity_ratio(segment: str | NormalizedText, candidate: str | NormalizedText) -> float:
    seg = segment.value if isinstance(segment, NormalizedText) else segment
    if not seg:
        raise TasmeeaError("empty segment")
    cand = candidate.value if isinstance(candidate, NormalizedText) else candidate
    dist = Levenshtein.distance(seg, cand, score_cutoff=len(seg))
    return 1.0 - min(dist, len(seg)) / len(seg)


class _SuraText:
    """Word keys of one sura with fast window extraction."""

    def __init__(self, corpus: QuranCorpus, sura: int):
        self.refs = corpus.sura_words(sura)
        self.keys = [_key(r.word) for r in self.refs]
        self.words = [r.word for r in self.refs]
        self.offsets = [0]
        for k in self.keys:
            self.offsets.append(self.offsets[-1] + len(k))
        self.joined = "".join(self.keys)

    def __len__(self) -> int:
        return len(self.keys)

    def span(self, start: int, width: int) -> tuple[int, int]:
        s = min(max(start, 0), len(self.keys))
        e = min(max(start + width, 0), len(self.keys))
        return s, max(e, s)

    def key(self, s: int, e: int) -> str:
        return self.joined[self.offsets[s] : self.offsets[e]]

    def aya_words(self, pos: int) -> int:
        if not self.refs:
            return 0
        pos = min(max(pos, 0), len(self.refs) - 1)
        aya = self.refs[pos].aya_index
        lo = pos
        while lo > 0 and self.refs[lo - 1].aya_index == aya:
            lo -= 1
        hi = pos
        while hi + 1 < len(self.refs) and self.refs[hi + 1].aya_index == aya:
            hi += 1
        return hi - lo + 1


def match_segments(
    segments: Sequence[str],
    sura_idx: int,
    params: TasmeeaParams,
    corpus: QuranCorpus,
    state: MatcherState | None = None,
) -> list[MatchResult]:
    if not 1 <= sura_idx <= 114:
        raise TasmeeaError(f"sura out of range: {sura_idx}")
    sura = _SuraText(corpus, sura_idx)
    state = state or MatcherState()
    results: list[MatchResult] = []
    special_keys = {"istiaatha": _key(ISTIAATHA), "sadaka": _key(SADAKA)}

    for i, segment in enumerate(segments):
        seg = _key(segment)
        if not seg:
            results.append(MatchResult(None, 0.0))
            continue

        special = None
        if i == 0 and params.include_istiaatha:
            special = "istiaatha"
        elif i == len(segments) - 1 and params.include_sadaka:
            special = "sadaka"
        if special is not None:
            ratio = similarity_ratio(seg, special_keys[special])
            if ratio >= params.acceptance_ratio:
                text = ISTIAATHA if special == "istiaatha" else SADAKA
                results.append(
                    MatchResult(Match(sura_idx, state.aya_word_cursor, 0, text, special), ratio)
                )
                state.penalty = 0
                continue

        best_ratio, best = -1.0, None
        cache: dict[tuple[int, int], float] = {}
        for p in params.start_range(state.penalty):
            for w in range(params.min_win, params.max_win + 1):
                s, e = sura.span(state.aya_word_cursor + p, w)
                ratio = cache.get((s, e))
                if ratio is None:
                    ratio = cache[(s, e)] = similarity_ratio(seg, sura.key(s, e))
                if ratio > best_ratio or (ratio == best_ratio and best is not None and abs(p) < abs(best[0])):
                    best_ratio, best = ratio, (p, s, e)

        if best is None or best_ratio < params.acceptance_ratio:
            results.append(MatchResult(None, max(best_ratio, 0.0)))
            state.penalty = params.max_win
            state.aya_word_cursor += sura.aya_words(state.aya_word_cursor)
        else:
            _, s, e = best
            text = " ".join(sura.words[s:e])
            results.append(MatchResult(Match(sura_idx, s, e - s, text), best_ratio))
            state.aya_word_cursor = e
            state.penalty = 0
    return results


def candidate_count(params: TasmeeaParams, penalty: int) -> int:
    return len(params.start_range(penalty)) * (params.max_win - params.min_win + 1)


def missing_portions(results: Sequence[MatchResult], corpus: QuranCorpus, sura_idx: int) -> list[dict]:
    total = len(corpus.sura_words(sura_idx))
    covered = [False] * total
    for r in results:
        if r.matched is not None and r.matched.sura == sura_idx:
            for k in range(max(r.matched.start_word, 0), min(r.matched.start_word + r.matched.word_count, total)):
                covered[k] = True
    gaps = []
    k = 0
    while k < total:
        if covered[k]:
            k += 1
            continue
        start = k
        while k < total and not covered[k]:
            k += 1
        gaps.append({"start_word": start, "word_count": k - start})
    return gaps
