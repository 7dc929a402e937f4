import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quran_phonetics.alphabet import PHONEMES, SHORT_VOWELS, Phoneme
from quran_phonetics.phonetizer import PhonemeSequence, UtteranceContext, phonetize
from quran_phonetics.sifat import (
    SIFAT_FIELDS,
    VALUES,
    SifatError,
    SifatVector,
    base_sifat,
    extract_sifat,
    parse_sifat_table,
    sifat_table,
)

P = Phoneme
GOLDEN_WORD = "\u0623\u064e\u062a\u064f\u062d\u064e\u0670\u0653\u062c\u0651\u064f\u0648\u0653\u0646\u0651\u0650\u0649"

ABBREV = {
    "jahr": "jahr", "hams": "hams", "shd": "shadeed", "rkh": "rikhw", "btw": "between",
    "mrq": "moraqaq", "mo": "mofakham", "mnf": "monfateh", "mtb": "motbaq",
    "no": "no_safeer", "nql": "not_moqalqal", "nkr": "not_mokarar", "ntf": "not_motafashie",
    "nst": "not_mostateel", "nmg": "not_maghnoon", "mg": "maghnoon",
}

# one row per distinct output symbol of the word, short vowels left out
GOLDEN_ROWS = [
    (P.hamza, "jahr shd mrq mnf no nql nkr ntf nst nmg"),
    (P.taa, "hams shd mrq mnf no nql nkr ntf nst nmg"),
    (P.haa_mohmala, "hams rkh mrq mnf no nql nkr ntf nst nmg"),
    (P.alif, "hams rkh mrq mnf no nql nkr ntf nst nmg"),
    (P.jeem, "jahr shd mrq mnf no nql nkr ntf nst nmg"),
    (P.waw_madd, "jahr rkh mrq mnf no nql nkr ntf nst nmg"),
    (P.noon, "jahr btw mrq mnf no nql nkr ntf nst mg"),
    (P.yaa_madd, "jahr rkh mrq mnf no nql nkr ntf nst nmg"),
]


def collapsed(seq, sifat):
    rows = []
    for p, v in zip(seq, sifat):
        if p in SHORT_VOWELS:
            continue
        if rows and rows[-1][0] is p:
            assert rows[-1][1] == v, f"run of {p} has mixed sifat"
            continue
        rows.append((p, v))
    return rows


def test_golden_word_sifat(attrs):
    seq = phonetize(GOLDEN_WORD, attrs, UtteranceContext())
    sifat = extract_sifat(seq, attrs)
    expected = [(p, SifatVector(*(ABBREV[x] for x in row.split()))) for p, row in GOLDEN_ROWS]
    assert collapsed(seq, sifat) == expected


def test_table_is_total():
    table = sifat_table()
    assert set(table) == set(PHONEMES)
    for p in PHONEMES:
        assert set(base_sifat(p)) == set(SIFAT_FIELDS)


def test_base_examples():
    d = base_sifat(P.daad)
    assert d["istitala"] == "mostateel" and d["itbaq"] == "motbaq"
    assert base_sifat(P.seen)["safeer"] == "safeer"
    for p in PHONEMES:
        if p is not P.raa:
            assert base_sifat(p)["tikraar"] == "not_mokarar"


def test_empty_sequence(attrs):
    assert len(extract_sifat(PhonemeSequence(()), attrs)) == 0


def test_shadda_noon_all_nasal(attrs):
    seq = phonetize("إِنَّ", attrs, UtteranceContext(True, False))
    sifat = extract_sifat(seq, attrs)
    rows = [v for p, v in zip(seq, sifat) if p is P.noon]
    assert len(rows) == 3
    assert all(v.ghonna == "maghnoon" for v in rows)


def test_code_round_trip():
    for p in PHONEMES:
        row = {k: (v if v is not None else VALUES[k][0]) for k, v in base_sifat(p).items()}
        vec = SifatVector(**row)
        assert len(vec.code()) == 10
        assert SifatVector.from_code(vec.code()) == vec
    with pytest.raises(ValueError):
        SifatVector.from_code("xxxxxxxxxx")
    with pytest.raises(ValueError):
        SifatVector(**{**row, "ghonna": "loud"})


def test_table_parser_rejects_drift():
    text = "phoneme\t" + "\t".join(SIFAT_FIELDS) + "\n"
    with pytest.raises(SifatError, match="no sifat row"):
        parse_sifat_table(text)
    with pytest.raises(SifatError, match="header"):
        parse_sifat_table("phoneme\tfoo\n")


EXCLUSIVE = {
    ("safeer", "safeer"): {P.saad, P.zay, P.seen},
    ("tikraar", "mokarar"): {P.raa},
    ("tafashie", "motafashie"): {P.sheen},
    ("istitala", "mostateel"): {P.daad},
    ("itbaq", "motbaq"): {P.saad, P.daad, P.taa_mofakhama, P.zaa_mofakhama},
    ("qalqla", "moqalqal"): {P.qaf, P.taa_mofakhama, P.baa, P.jeem, P.daal, P.qlqla},
}


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_parallel_and_letter_exclusive(corpus, attrs, data):
    v = data.draw(st.sampled_from(corpus.verses))
    seq = phonetize(v.text, attrs)
    sifat = extract_sifat(seq, attrs)
    assert len(sifat) == len(seq)
    for p, vec in zip(seq, sifat):
        for (name, value), allowed in EXCLUSIVE.items():
            if getattr(vec, name) == value:
                assert p in allowed, (v.sura_index, v.aya_index, p, name)


def test_qalqala_echo_follows_letter(corpus, attrs):
    seq = phonetize(corpus.verse(112, 1).text, attrs)
    sifat = extract_sifat(seq, attrs)
    i = list(seq).index(P.qlqla)
    assert seq.phonemes[i - 1] is P.daal
    assert sifat[i].qalqla == sifat[i - 1].qalqla == "moqalqal"


def test_heavy_letters_colour_vowels(attrs):
    seq = phonetize("قَالَ", attrs, UtteranceContext(True, False))
    sifat = extract_sifat(seq, attrs)
    weights = [v.tafkheem_or_taqeeq for v in sifat]
    assert weights[:3] == ["mofakham"] * 3
    assert weights[-2:] == ["moraqaq"] * 2
