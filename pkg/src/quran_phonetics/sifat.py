"""Articulation attributes (sifat) for every phoneme of a phonetized text."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, fields
from functools import lru_cache
from importlib import resources

from .alphabet import MADD_PHONEMES, SHORT_VOWELS, Phoneme
from .moshaf import MoshafAttributes
from .phonetizer import PhonemeSequence

CONTEXT = "context"

VALUES: dict[str, tuple[str, ...]] = {
    "hams_or_jahr": ("hams", "jahr"),
    "shidda_or_rakhawa": ("shadeed", "between", "rikhw"),
    "tafkheem_or_taqeeq": ("mofakham", "moraqaq"),
    "itbaq": ("monfateh", "motbaq"),
    "safeer": ("safeer", "no_safeer"),
    "qalqla": ("moqalqal", "not_moqalqal"),
    "tikraar": ("mokarar", "not_mokarar"),
    "tafashie": ("motafashie", "not_motafashie"),
    "istitala": ("mostateel", "not_mostateel"),
    "ghonna": ("maghnoon", "not_maghnoon"),
}

# one character per attribute, in field order
CODES: dict[str, dict[str, str]] = {
    "hams_or_jahr": {"hams": "h", "jahr": "j"},
    "shidda_or_rakhawa": {"shadeed": "s", "between": "b", "rikhw": "r"},
    "tafkheem_or_taqeeq": {"mofakham": "f", "moraqaq": "r"},
    "itbaq": {"motbaq": "m", "monfateh": "n"},
    "safeer": {"safeer": "s", "no_safeer": "n"},
    "qalqla": {"moqalqal": "q", "not_moqalqal": "n"},
    "tikraar": {"mokarar": "k", "not_mokarar": "n"},
    "tafashie": {"motafashie": "t", "not_motafashie": "n"},
    "istitala": {"mostateel": "i", "not_mostateel": "n"},
    "ghonna": {"maghnoon": "g", "not_maghnoon": "n"},
}

QALQALA_SITES = frozenset(
    {Phoneme.qaf, Phoneme.taa_mofakhama, Phoneme.baa, Phoneme.jeem, Phoneme.daal}
)
HEAVY_LETTERS = frozenset(
    {
        Phoneme.khaa,
        Phoneme.saad,
        Phoneme.daad,
        Phoneme.ghyn,
        Phoneme.taa_mofakhama,
        Phoneme.qaf,
        Phoneme.zaa_mofakhama,
    }
)
_VOWELS = MADD_PHONEMES | SHORT_VOWELS


class SifatError(RuntimeError):
    """A phoneme has no sifat definition (the alphabet and table drifted apart)."""


@dataclass(frozen=True)
class SifatVector:
    hams_or_jahr: str
    shidda_or_rakhawa: str
    tafkheem_or_taqeeq: str
    itbaq: str
    safeer: str
    qalqla: str
    tikraar: str
    tafashie: str
    istitala: str
    ghonna: str

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v not in VALUES[f.name]:
                raise ValueError(f"{f.name}: illegal value {v!r}")

    def code(self) -> str:
        return "".join(CODES[f.name][getattr(self, f.name)] for f in fields(self))

    @classmethod
    def from_code(cls, code: str) -> "SifatVector":
        names = [f.name for f in fields(cls)]
        if len(code) != len(names):
            raise ValueError(f"sifat code must have {len(names)} characters")
        out = {}
        for name, c in zip(names, code):
            inverse = {v: k for k, v in CODES[name].items()}
            if c not in inverse:
                raise ValueError(f"{name}: bad code {c!r}")
            out[name] = inverse[c]
        return cls(**out)

    def as_dict(self) -> dict[str, str]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


SIFAT_FIELDS = tuple(f.name for f in fields(SifatVector))


@dataclass(frozen=True)
class SifatSequence:
    vectors: tuple[SifatVector, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def codes(self) -> list[str]:
        return [v.code() for v in self.vectors]


def parse_sifat_table(text: str) -> dict[Phoneme, dict[str, str]]:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    reader = csv.DictReader(io.StringIO("\n".join(lines)), delimiter="\t")
    if tuple(reader.fieldnames or ()) != ("phoneme",) + SIFAT_FIELDS:
        raise SifatError(f"unexpected sifat table header: {reader.fieldnames}")
    table: dict[Phoneme, dict[str, str]] = {}
    for row in reader:
        try:
            p = Phoneme(row.pop("phoneme"))
        except ValueError as e:
            raise SifatError(str(e)) from None
        for name, v in row.items():
            if v != CONTEXT and v not in VALUES[name]:
                raise SifatError(f"{p.value}.{name}: illegal value {v!r}")
        table[p] = row
    missing = set(Phoneme) - set(table)
    if missing:
        raise SifatError(f"no sifat row for {sorted(m.value for m in missing)}")
    return table


@lru_cache(maxsize=1)
def sifat_table() -> dict[Phoneme, dict[str, str]]:
    text = resources.files("quran_phonetics").joinpath("data/sifat_table.tsv").read_text("utf-8")
    return parse_sifat_table(text)


def base_sifat(p: Phoneme) -> dict[str, str | None]:
    """Context-free attributes; context-dependent ones come back as None."""
    row = sifat_table().get(p)
    if row is None:
        raise SifatError(f"no sifat definition for {p!r}")
    return {k: (None if v == CONTEXT else v) for k, v in row.items()}


def _consonant_weight(p: Phoneme, hints: frozenset[str]) -> str:
    if p in HEAVY_LETTERS or "heavy" in hints:
        return "mofakham"
    return "moraqaq"


def extract_sifat(seq: PhonemeSequence, attrs: MoshafAttributes | None = None) -> SifatSequence:
    """One SifatVector per phoneme.

    Raa and lam weights, and nasalisation, were already decided by the
    phonetizer from the Moshaf attributes and travel here as per-phoneme hints.
    """
    phonemes, hints = seq.phonemes, seq.hints
    n = len(phonemes)
    out: list[SifatVector] = []
    governing = "moraqaq"  # weight of the last consonant, inherited by vowels
    for i, p in enumerate(phonemes):
        row = base_sifat(p)
        h = hints[i]

        if p in _VOWELS:
            row["tafkheem_or_taqeeq"] = governing
        elif p is Phoneme.qlqla:
            row["tafkheem_or_taqeeq"] = governing
        elif p is Phoneme.noon_mokhfah:
            j = i
            while j < n and phonemes[j] is Phoneme.noon_mokhfah:
                j += 1
            nxt = phonemes[j] if j < n else None
            row["tafkheem_or_taqeeq"] = "mofakham" if nxt in HEAVY_LETTERS else "moraqaq"
        elif row["tafkheem_or_taqeeq"] is None:
            row["tafkheem_or_taqeeq"] = _consonant_weight(p, h)
        if p not in _VOWELS and p not in (Phoneme.qlqla, Phoneme.sakt):
            governing = row["tafkheem_or_taqeeq"]

        if row["qalqla"] is None:
            echoed = p is Phoneme.qlqla or (i + 1 < n and phonemes[i + 1] is Phoneme.qlqla)
            row["qalqla"] = "moqalqal" if echoed else "not_moqalqal"

        if row["ghonna"] is None:
            row["ghonna"] = "maghnoon" if "nasal" in h else "not_maghnoon"

        out.append(SifatVector(**row))
    return SifatSequence(tuple(out))


LEGEND = "\n".join(
    f"{i + 1:2d}. {name}: " + ", ".join(f"{c}={v}" for v, c in CODES[name].items())
    for i, name in enumerate(SIFAT_FIELDS)
)
