"""Synthetic transcripts for exercising the matcher: word windows plus character noise."""

from __future__ import annotations

import random
from collections.abc import Sequence

from .corpus import QuranCorpus, matching_key

# the 28 base letters plus the hamza and taa marbuta forms an ASR system would emit
ASR_LETTERS = "ءابتثجحخدذرزسشصضطظعغفقكلمنهويةىأإؤئ"


def split_windows(n_words: int, lo: int, hi: int, rng: random.Random) -> list[tuple[int, int]]:
    """Cover [0, n_words) with consecutive (start, width) windows, widths in [lo, hi]."""
    out, pos = [], 0
    while pos < n_words:
        left = n_words - pos
        if left <= hi:
            w = left
        else:
            # never leave a tail shorter than lo
            w = rng.randint(lo, min(hi, left - lo))
        out.append((pos, w))
        pos += w
    return out


def inject_char_edits(
    text: str,
    rate: float,
    rng: random.Random,
    kinds: Sequence[str] = ("substitute",),
    letters: str = ASR_LETTERS,
) -> str:
    """Edits round(rate * n) distinct letters of ``text``, spaces excluded.

    Each edit is drawn uniformly from ``kinds`` (substitute, delete, insert).
    """
    pos = [i for i, ch in enumerate(text) if ch != " "]
    chosen = set(rng.sample(pos, round(rate * len(pos))))
    out = []
    for i, ch in enumerate(text):
        if i not in chosen:
            out.append(ch)
            continue
        kind = rng.choice(kinds)
        if kind == "substitute":
            out.append(rng.choice(letters.replace(ch, "")))
        elif kind == "insert":
            out.append(ch + rng.choice(letters))
        elif kind != "delete":
            raise ValueError(f"unknown edit kind {kind!r}")
    return "".join(out)


def plain_window(corpus: QuranCorpus, sura: int, start: int, width: int) -> str:
    """Window text as a plain-letter transcript (no diacritics, alif wasla folded)."""
    words = corpus.sura_words(sura)[start : start + width]
    return " ".join(matching_key(w.word) for w in words)
