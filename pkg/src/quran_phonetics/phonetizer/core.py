"""Staged driver for the rewrite pipeline and the final phoneme encoding."""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .. import alphabet as A
from ..alphabet import Phoneme
from ..moshaf import MoshafAttributes
from . import special as S
from .operations import OPERATIONS, Env, PipelineError, UtteranceContext

N_OPERATIONS = len(OPERATIONS)
assert N_OPERATIONS == 26


class PhonetizerInputError(ValueError):
    """Input contains a code point outside the Uthmani script."""


class SequencingError(RuntimeError):
    pass


class EncodingError(ValueError):
    """Final text still holds a character with no phoneme."""


@dataclass(frozen=True)
class IntermediateText:
    value: str
    stage: int = 0
    # only set at the last stage: one frozenset of hint names per character
    hints: tuple[frozenset[str], ...] | None = None

    def __post_init__(self):
        if not 0 <= self.stage <= N_OPERATIONS:
            raise SequencingError(f"stage out of range: {self.stage}")


@dataclass(frozen=True)
class PhonemeSequence:
    phonemes: tuple[Phoneme, ...]
    source_text: str = ""
    attrs_fingerprint: str = ""
    hints: tuple[frozenset[str], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if not self.hints:
            object.__setattr__(self, "hints", tuple(frozenset() for _ in self.phonemes))
        if len(self.hints) != len(self.phonemes):
            raise ValueError("hints must be parallel to phonemes")

    def __len__(self) -> int:
        return len(self.phonemes)

    def __iter__(self):
        return iter(self.phonemes)

    def names(self) -> list[str]:
        return [p.value for p in self.phonemes]

    def symbols(self) -> str:
        return "".join(A.SYMBOLS[p] for p in self.phonemes)


def _split_hints(text: str) -> tuple[str, tuple[frozenset[str], ...]]:
    chars: list[str] = []
    hints: list[set[str]] = []
    for ch in text:
        if ch in A.HINTS:
            if not chars:
                raise EncodingError("hint with no preceding letter at offset 0")
            name = A.HINT_NAMES.get(ch)
            if name:
                hints[-1].add(name)
        else:
            chars.append(ch)
            hints.append(set())
    return "".join(chars), tuple(frozenset(h) for h in hints)


def apply_operation(op_id: int, text: IntermediateText, attrs: MoshafAttributes, ctx: UtteranceContext) -> IntermediateText:
    if not 1 <= op_id <= N_OPERATIONS:
        raise SequencingError(f"no operation {op_id}")
    if text.stage != op_id - 1:
        raise SequencingError(f"operation {op_id} expects stage {op_id - 1}, got {text.stage}")
    op = OPERATIONS[op_id - 1]
    value = op.apply(text.value, Env(attrs, ctx))
    if op_id == N_OPERATIONS:
        value, hints = _split_hints(value)
        return IntermediateText(value, op_id, hints)
    return IntermediateText(value, op_id)


def canonical_order(text: str) -> str:
    """Restores the Tanzil mark order, so NFC-normalized input phonetizes identically.

    Alif + maddah is kept decomposed, and inside every run of marks the hamza
    and seen signs come first, then shadda, then the rest in their given order.
    """
    text = text.replace("\u0622", "\u0627\u0653")
    # a sakin hamza written on a dagger-alif seat (2:72): fold it to a plain hamza
    text = _SEATED_SAKIN_HAMZA.sub("\u0621\u0652", text)
    return _MARK_RUN.sub(lambda m: "".join(sorted(m.group(0), key=_mark_rank)), text)


_MARK_RUN = re.compile("[\u064b-\u065f\u0670\u06d6-\u06e4\u06e7-\u06ed]+")
_SEATED_SAKIN_HAMZA = re.compile("(?<=\u064e)[\u0652\u0670\u0654]{3}")
_MARK_RANK = {"\u0654": 0, "\u0655": 0, "\u06dc": 0, "\u06e3": 0, "\u0651": 1}


def _mark_rank(ch: str) -> int:
    return _MARK_RANK.get(ch, 2)


def run_pipeline(text: str, attrs: MoshafAttributes, ctx: UtteranceContext, upto: int = N_OPERATIONS) -> IntermediateText:
    cur = IntermediateText(canonical_order(" ".join(text.split())), 0)
    for op_id in range(1, upto + 1):
        cur = apply_operation(op_id, cur, attrs, ctx)
    return cur


def encode_phonemes(final: IntermediateText, source_text: str = "", attrs_fingerprint: str = "") -> PhonemeSequence:
    if final.stage != N_OPERATIONS:
        raise SequencingError(f"encoding needs stage {N_OPERATIONS}, got {final.stage}")
    out = []
    for i, ch in enumerate(final.value):
        p = A.CHAR_TO_PHONEME.get(ch)
        if p is None:
            raise EncodingError(f"unmapped character U+{ord(ch):04X} at offset {i}")
        out.append(p)
    hints = final.hints or tuple(frozenset() for _ in out)
    return PhonemeSequence(tuple(out), source_text, attrs_fingerprint, hints)


def check_input(text: str) -> None:
    for i, ch in enumerate(text):
        if ch not in A.ALLOWED_INPUT and not ch.isspace():
            raise PhonetizerInputError(f"unsupported code point U+{ord(ch):04X} at offset {i}")


def split_forced_pauses(words: list[str], attrs: MoshafAttributes) -> list[list[str]]:
    """Cuts the word list after every word whose ruling is set to a full pause."""
    pieces: list[list[str]] = [[]]
    for i, w in enumerate(words):
        pieces[-1].append(w)
        nxt = words[i + 1] if i + 1 < len(words) else None
        if nxt is None:
            continue
        for word, follow, name, value in S.FORCED_PAUSES:
            if w == word and (follow is None or nxt == follow) and getattr(attrs, name) == value:
                pieces.append([])
                break
    return pieces


def phonetize(uthmani: str, attrs: MoshafAttributes, ctx: UtteranceContext | None = None) -> PhonemeSequence:
    """Uthmani text to phonemes under a Moshaf configuration and pause context."""
    ctx = ctx or UtteranceContext()
    check_input(uthmani)
    words = uthmani.split()
    fp = attrs.fingerprint()
    if not words:
        return PhonemeSequence((), uthmani, fp)
    pieces = split_forced_pauses(words, attrs)
    phonemes: list[Phoneme] = []
    hints: list[frozenset[str]] = []
    for k, piece in enumerate(pieces):
        piece_ctx = UtteranceContext(
            starts_utterance=ctx.starts_utterance if k == 0 else True,
            ends_with_pause=ctx.ends_with_pause if k == len(pieces) - 1 else True,
        )
        final = run_pipeline(" ".join(piece), attrs, piece_ctx)
        seq = encode_phonemes(final)
        phonemes.extend(seq.phonemes)
        hints.extend(seq.hints)
    return PhonemeSequence(tuple(phonemes), uthmani, fp, tuple(hints))


__all__ = [
    "EncodingError",
    "IntermediateText",
    "PhonemeSequence",
    "PhonetizerInputError",
    "PipelineError",
    "SequencingError",
    "UtteranceContext",
    "apply_operation",
    "encode_phonemes",
    "phonetize",
    "run_pipeline",
]
