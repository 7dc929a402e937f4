"""Loading, indexing and normalizing Tanzil-format Quran text."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from typing import Iterable, Sequence

ALIF_WASLA = "ٱ"
ALIF = "ا"

# Exact strip set used for matching; kept as explicit ranges for reproducibility.
STRIP_RANGES: tuple[tuple[int, int], ...] = (
    (0x064B, 0x0652),  # tanween, harakat, shadda, sukoon
    (0x0653, 0x065F),  # madda and Quranic harakat
    (0x0670, 0x0670),  # dagger alif
    (0x06D6, 0x06ED),  # Quranic annotation signs
    (0x0640, 0x0640),  # kasheeda
)

_STRIP_CLASS = "".join(
    f"\\u{lo:04x}-\\u{hi:04x}" if lo != hi else f"\\u{lo:04x}" for lo, hi in STRIP_RANGES
)
_STRIP_RE = re.compile(f"[{_STRIP_CLASS}]|\\s")


class CorpusError(ValueError):
    """Malformed corpus input."""


class AlignmentError(ValueError):
    """Imlaey and Uthmani word lists cannot be aligned."""


class ScriptKind(str, Enum):
    UTHMANI = "uthmani"
    IMLAEY = "imlaey"


@dataclass(frozen=True)
class Verse:
    sura_index: int
    aya_index: int
    text: str

    def __post_init__(self):
        if not 1 <= self.sura_index <= 114:
            raise CorpusError(f"sura out of range: {self.sura_index}")
        if self.aya_index < 1:
            raise CorpusError(f"aya out of range: {self.aya_index}")
        if not self.text or "\n" in self.text or "\r" in self.text:
            raise CorpusError(f"bad verse text at {self.sura_index}:{self.aya_index}")

    @property
    def words(self) -> list[str]:
        return self.text.split()


@dataclass(frozen=True)
class WordRef:
    aya_index: int
    word_in_aya: int
    word: str


@dataclass(frozen=True)
class NormalizedText:
    value: str
    source_len_words: int

    def __len__(self) -> int:
        return len(self.value)


@dataclass(frozen=True)
class QuranCorpus:
    script_kind: ScriptKind
    verses: tuple[Verse, ...]
    word_index: dict[int, tuple[WordRef, ...]] = field(repr=False, compare=False)

    @classmethod
    def from_verses(cls, verses: Iterable[Verse], script_kind=ScriptKind.UTHMANI) -> "QuranCorpus":
        verses = tuple(verses)
        seen: set[tuple[int, int]] = set()
        last = (0, 0)
        for v in verses:
            key = (v.sura_index, v.aya_index)
            if key in seen:
                raise CorpusError(f"duplicate verse {key[0]}:{key[1]}")
            if key < last:
                raise CorpusError(f"verse {key[0]}:{key[1]} out of canonical order")
            seen.add(key)
            last = key
        index: dict[int, list[WordRef]] = {}
        for v in verses:
            refs = index.setdefault(v.sura_index, [])
            refs.extend(WordRef(v.aya_index, i, w) for i, w in enumerate(v.words))
        return cls(
            ScriptKind(script_kind),
            verses,
            {s: tuple(refs) for s, refs in index.items()},
        )

    @property
    def suras(self) -> list[int]:
        return sorted(self.word_index)

    def sura_verses(self, sura: int) -> list[Verse]:
        return [v for v in self.verses if v.sura_index == sura]

    def verse(self, sura: int, aya: int) -> Verse:
        for v in self.verses:
            if v.sura_index == sura and v.aya_index == aya:
                return v
        raise KeyError(f"{sura}:{aya}")

    def sura_words(self, sura: int) -> tuple[WordRef, ...]:
        return self.word_index.get(sura, ())

    def aya_word_count(self, sura: int, word_pos: int) -> int:
        """Word count of the aya containing the given sura word position."""
        words = self.sura_words(sura)
        if not words:
            return 0
        pos = min(max(word_pos, 0), len(words) - 1)
        aya = words[pos].aya_index
        return sum(1 for w in words if w.aya_index == aya)


def load_tanzil(stream: Iterable[str], script_kind=ScriptKind.UTHMANI) -> QuranCorpus:
    verses = []
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("|")
        if len(parts) != 3:
            raise CorpusError(f"line {lineno}: expected 3 fields, got {len(parts)}")
        try:
            sura, aya = int(parts[0]), int(parts[1])
        except ValueError:
            raise CorpusError(f"line {lineno}: non-integer index") from None
        if not 1 <= sura <= 114:
            raise CorpusError(f"line {lineno}: sura out of range")
        if aya < 1:
            raise CorpusError(f"line {lineno}: aya out of range")
        if not parts[2].strip():
            raise CorpusError(f"line {lineno}: empty text")
        verses.append(Verse(sura, aya, parts[2].strip()))
    return QuranCorpus.from_verses(verses, script_kind)


def load_tanzil_file(path, script_kind=ScriptKind.UTHMANI) -> QuranCorpus:
    with open(path, encoding="utf-8") as f:
        return load_tanzil(f, script_kind)


def bundled_uthmani() -> QuranCorpus:
    """The bundled Tanzil Uthmani text (CC-BY 3.0, tanzil.net)."""
    ref = resources.files("quran_phonetics") / "data" / "quran-uthmani.txt"
    with ref.open(encoding="utf-8") as f:
        return load_tanzil(f, ScriptKind.UTHMANI)


def normalize_for_matching(text: str) -> NormalizedText:
    return NormalizedText(_STRIP_RE.sub("", text), len(text.split()))


def matching_key(text: str | NormalizedText) -> str:
    """Normalized letters with alif wasla folded to bare alif."""
    value = text.value if isinstance(text, NormalizedText) else normalize_for_matching(text).value
    return value.replace(ALIF_WASLA, ALIF)


def word_window(corpus: QuranCorpus, sura: int, start_word: int, width: int) -> str:
    if not 1 <= sura <= 114:
        raise CorpusError(f"sura out of range: {sura}")
    words = corpus.sura_words(sura)
    # a negative start is clamped to 0 and the width kept
    start = max(start_word, 0)
    end = start + max(width, 0)
    return " ".join(w.word for w in words[start:end])


Span = tuple[int, int]


def align_scripts(
    imlaey_words: Sequence[str],
    uthmani_words: Sequence[str],
    overrides: Sequence[tuple[Span, Span]] = (),
) -> list[tuple[Span, Span]]:
    """Map Imlaey words to Uthmani words, 1:1 except where overrides merge spans.

    Spans are half-open (start, end) word ranges.
    """
    n, m = len(imlaey_words), len(uthmani_words)
    ordered = sorted(overrides, key=lambda o: o[0][0])
    for (a0, a1), (b0, b1) in ordered:
        if not (0 <= a0 < a1 <= n and 0 <= b0 < b1 <= m):
            raise AlignmentError(f"override out of bounds: {(a0, a1)}, {(b0, b1)}")
    for prev, cur in zip(ordered, ordered[1:]):
        if cur[0][0] < prev[0][1] or cur[1][0] < prev[1][1]:
            raise AlignmentError(f"overlapping overrides: {prev} and {cur}")

    pairs: list[tuple[Span, Span]] = []
    i = j = 0
    for (a0, a1), (b0, b1) in ordered + [((n, n), (m, m))]:
        if a0 - i != b0 - j:
            raise AlignmentError(
                f"length mismatch before imlaey word {a0}: {a0 - i} vs {b0 - j} words"
            )
        pairs.extend(((i + k, i + k + 1), (j + k, j + k + 1)) for k in range(a0 - i))
        if a1 > a0:
            pairs.append(((a0, a1), (b0, b1)))
        i, j = a1, b1
    return pairs
