import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quran_phonetics.alphabet import NASALS, PHONEMES, Phoneme
from quran_phonetics.phonetizer import (
    OPERATIONS,
    EncodingError,
    PhonetizerInputError,
    SequencingError,
    UtteranceContext,
    phonetize,
)
from quran_phonetics.phonetizer.core import IntermediateText, apply_operation, encode_phonemes, run_pipeline

P = Phoneme
PAUSE = UtteranceContext(starts_utterance=True, ends_with_pause=True)
WASL = UtteranceContext(starts_utterance=True, ends_with_pause=False)

# written with escapes so editors cannot recompose the marks
GOLDEN_WORD = "\u0623\u064e\u062a\u064f\u062d\u064e\u0670\u0653\u062c\u0651\u064f\u0648\u0653\u0646\u0651\u0650\u0649"
BIMA_UNZILA = "\u0628\u0650\u0645\u064e\u0627\u0653 \u0623\u064f\u0646\u0632\u0650\u0644\u064e"


def names(text, attrs, ctx=PAUSE):
    return phonetize(text, attrs, ctx).names()


def runs(seq, member):
    """Lengths of maximal runs of phonemes satisfying member()."""
    out, n = [], 0
    for p in list(seq) + [None]:
        if p is not None and member(p):
            n += 1
        elif n:
            out.append(n)
            n = 0
    return out


def test_operation_order():
    assert [op.op_id for op in OPERATIONS] == list(range(1, 27))
    assert OPERATIONS[0].name == "DisassembleHrofMoqatta"
    assert OPERATIONS[23].name == "Madd"
    assert OPERATIONS[25].name == "RemoveRasHaaAndShadda"


def test_empty_input(attrs):
    seq = phonetize("", attrs)
    assert len(seq) == 0
    assert len(phonetize("   ", attrs)) == 0


def test_golden_word(corpus, attrs):
    assert GOLDEN_WORD in corpus.verse(6, 80).words
    expected = [P.hamza, P.fatha, P.taa, P.dama, P.haa_mohmala] + [P.alif] * 6
    expected += [P.jeem, P.jeem] + [P.waw_madd] * 6 + [P.noon] * 3 + [P.yaa_madd] * 2
    seq = phonetize(GOLDEN_WORD, attrs, PAUSE)
    assert list(seq) == expected
    assert all("nasal" in seq.hints[i] for i in range(19, 22))


def test_op1_splits_initials(attrs):
    out = apply_operation(1, IntermediateText("الٓمٓ", 0), attrs, PAUSE).value
    assert len(out.split()) == 3


def test_op6_unifies_hamza_seats(attrs):
    text = "أَ إِ ؤُ ئِ سَأَلَ"
    out = apply_operation(6, IntermediateText(text, 5), attrs, PAUSE).value
    assert not set(out) & set("أإؤئ")
    assert out == "ءَ ءِ ءُ ءِ سَءَلَ"


def test_op8_removes_kasheeda(attrs):
    text = "يَٰـٓأَ"
    out = apply_operation(8, IntermediateText(text, 7), attrs, PAUSE).value
    assert out == text.replace("ـ", "")
    plain = "كَتَبَ"
    assert apply_operation(8, IntermediateText(plain, 7), attrs, PAUSE).value == plain


def test_stage_mismatch(attrs):
    with pytest.raises(SequencingError):
        apply_operation(3, IntermediateText("x", 0), attrs, PAUSE)
    with pytest.raises(SequencingError):
        apply_operation(27, IntermediateText("x", 26), attrs, PAUSE)
    with pytest.raises(SequencingError):
        encode_phonemes(IntermediateText("x", 25))


def test_encoding_errors():
    with pytest.raises(EncodingError, match="offset 1"):
        encode_phonemes(IntermediateText("بّ", 26))
    assert len(encode_phonemes(IntermediateText("", 26))) == 0


def test_madd_run_encoding():
    seq = encode_phonemes(IntermediateText("باا", 26))
    assert list(seq) == [P.baa, P.alif, P.alif]


def test_unknown_code_point(attrs):
    with pytest.raises(PhonetizerInputError, match="offset 2"):
        phonetize("بَx", attrs)


@pytest.mark.parametrize("n", [2, 4, 5, 6])
def test_monfasel_length(attrs, n):
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        a = attrs.with_(madd_monfasel_len=n)
    seq = phonetize(BIMA_UNZILA, a, WASL)
    assert runs(seq, lambda p: p is P.alif) == [n]


@pytest.mark.parametrize(
    "field, word, ctx, phoneme",
    [
        ("madd_mottasel_len", "جَآءَ", WASL, P.alif),
        ("madd_aared_len", "ٱلْعَٰلَمِينَ", PAUSE, P.yaa_madd),
    ],
)
def test_madd_monotonic(attrs, field, word, ctx, phoneme):
    lengths = {}
    seqs = {}
    for n in (4, 6):
        a = attrs.with_(**{field: n, "madd_alleen_len": 4})
        seqs[n] = list(phonetize(word, a, ctx))
        lengths[n] = max(runs(seqs[n], lambda p: p is phoneme))
    assert lengths[6] - lengths[4] == 2
    strip = lambda s: [p for p in s if p is not phoneme]
    assert strip(seqs[4]) == strip(seqs[6])


@pytest.mark.parametrize(
    "word, nasal",
    [
        ("إِنَّ", P.noon),
        ("ثُمَّ", P.meem),
        ("جَهَنَّمَ", P.noon),
        ("ٱلْجِنَّةِ", P.noon),
    ],
)
def test_shadda_nasal_is_tripled(attrs, word, nasal):
    seq = phonetize(word, attrs, WASL)
    assert runs(seq, lambda p: p is nasal) == [3]


def test_tanween_fath_at_pause(attrs):
    word = "عَلِيمًا"
    pause = names(word, attrs, PAUSE)
    wasl = names(word, attrs, WASL)
    assert pause[-3:] == ["meem", "alif", "alif"]
    assert wasl[-3:] == ["meem", "fatha", "noon"]


def test_nfc_input_is_equivalent(corpus, attrs):
    for s in (1, 2):
        for v in corpus.sura_verses(s)[:40]:
            nfc = unicodedata.normalize("NFC", v.text)
            assert phonetize(nfc, attrs).names() == phonetize(v.text, attrs).names()


def test_run_pipeline_upto(attrs):
    mid = run_pipeline(GOLDEN_WORD, attrs, PAUSE, upto=8)
    assert mid.stage == 8 and mid.hints is None
    end = run_pipeline(GOLDEN_WORD, attrs, PAUSE)
    assert end.stage == 26 and len(end.hints) == len(end.value)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_deterministic_and_closed(corpus, attrs, data):
    v = data.draw(st.sampled_from(corpus.verses))
    ctx = UtteranceContext(data.draw(st.booleans()), data.draw(st.booleans()))
    first = phonetize(v.text, attrs, ctx)
    again = phonetize(v.text, attrs, ctx)
    assert first == again and first.symbols() == again.symbols()
    assert set(first.phonemes) <= set(PHONEMES)


def test_ghonna_sites_are_nasal_phonemes(corpus, attrs):
    for v in corpus.sura_verses(2)[:30]:
        seq = phonetize(v.text, attrs)
        for p, h in zip(seq.phonemes, seq.hints):
            if "nasal" in h:
                assert p in NASALS or p in (P.waw, P.yaa, P.lam, P.raa)
