"""Phoneme inventory, output symbols and the working-alphabet marker characters."""

from __future__ import annotations

from enum import Enum


class Phoneme(str, Enum):
    hamza = "hamza"
    baa = "baa"
    taa = "taa"
    thaa = "thaa"
    jeem = "jeem"
    haa_mohmala = "haa_mohmala"
    khaa = "khaa"
    daal = "daal"
    thaal = "thaal"
    raa = "raa"
    zay = "zay"
    seen = "seen"
    sheen = "sheen"
    saad = "saad"
    daad = "daad"
    taa_mofakhama = "taa_mofakhama"
    zaa_mofakhama = "zaa_mofakhama"
    ayn = "ayn"
    ghyn = "ghyn"
    faa = "faa"
    qaf = "qaf"
    kaf = "kaf"
    lam = "lam"
    meem = "meem"
    noon = "noon"
    haa = "haa"
    waw = "waw"
    yaa = "yaa"
    alif = "alif"
    yaa_madd = "yaa_madd"
    waw_madd = "waw_madd"
    fatha = "fatha"
    dama = "dama"
    kasra = "kasra"
    fatha_momala = "fatha_momala"
    alif_momala = "alif_momala"
    hamza_mosahala = "hamza_mosahala"
    qlqla = "qlqla"
    noon_mokhfah = "noon_mokhfah"
    meem_mokhfah = "meem_mokhfah"
    sakt = "sakt"
    dama_mokhtalasa = "dama_mokhtalasa"

    def __str__(self) -> str:
        return self.value


PHONEMES: tuple[Phoneme, ...] = tuple(Phoneme)

# Token ids for CTC: 0 is the blank, phonemes follow in table order.
PHONEME_TO_ID = {p: i + 1 for i, p in enumerate(PHONEMES)}
ID_TO_PHONEME = {i: p for p, i in PHONEME_TO_ID.items()}

# Private-use code points for phonemes with no Uthmani letter of their own.
FATHA_MOMALA = "\ue000"
ALIF_MOMALA = "\ue001"
HAMZA_MOSAHALA = "\ue002"
QLQLA = "\ue003"
NOON_MOKHFAH = "\ue004"
MEEM_MOKHFAH = "\ue005"
SAKT = "\ue006"
DAMA_MOKHTALASA = "\ue007"

# Working markers, consumed before the final stage.
WASL = "\ue010"  # position of a dropped hamzat wasl
FORCE_LAZIM = "\ue011"  # letter-name madd that keeps 6 beats regardless of context
AYN_LEEN = "\ue012"  # leen of the letter name ayn in the Quranic initials

# Hints ride right after the letter they qualify and end up as per-phoneme tags.
NASAL = "\ue0f0"
HEAVY = "\ue0f1"
LIGHT = "\ue0f2"
LAM_ALLAH = "\ue0f3"
NO_QALQALA = "\ue0f4"
START_HAMZA = "\ue0f5"  # hamza added to begin an utterance; its kasra is not original

HINTS = NASAL + HEAVY + LIGHT + LAM_ALLAH + NO_QALQALA + START_HAMZA
HINT_NAMES = {NASAL: "nasal", HEAVY: "heavy", LIGHT: "light"}

SYMBOLS: dict[Phoneme, str] = {
    Phoneme.hamza: "ء",
    Phoneme.baa: "ب",
    Phoneme.taa: "ت",
    Phoneme.thaa: "ث",
    Phoneme.jeem: "ج",
    Phoneme.haa_mohmala: "ح",
    Phoneme.khaa: "خ",
    Phoneme.daal: "د",
    Phoneme.thaal: "ذ",
    Phoneme.raa: "ر",
    Phoneme.zay: "ز",
    Phoneme.seen: "س",
    Phoneme.sheen: "ش",
    Phoneme.saad: "ص",
    Phoneme.daad: "ض",
    Phoneme.taa_mofakhama: "ط",
    Phoneme.zaa_mofakhama: "ظ",
    Phoneme.ayn: "ع",
    Phoneme.ghyn: "غ",
    Phoneme.faa: "ف",
    Phoneme.qaf: "ق",
    Phoneme.kaf: "ك",
    Phoneme.lam: "ل",
    Phoneme.meem: "م",
    Phoneme.noon: "ن",
    Phoneme.haa: "ه",
    Phoneme.waw: "و",
    Phoneme.yaa: "ي",
    Phoneme.alif: "ا",
    Phoneme.yaa_madd: "ۦ",
    Phoneme.waw_madd: "ۥ",
    Phoneme.fatha: "َ",
    Phoneme.dama: "ُ",
    Phoneme.kasra: "ِ",
    Phoneme.fatha_momala: FATHA_MOMALA,
    Phoneme.alif_momala: ALIF_MOMALA,
    Phoneme.hamza_mosahala: HAMZA_MOSAHALA,
    Phoneme.qlqla: QLQLA,
    Phoneme.noon_mokhfah: NOON_MOKHFAH,
    Phoneme.meem_mokhfah: MEEM_MOKHFAH,
    Phoneme.sakt: SAKT,
    Phoneme.dama_mokhtalasa: DAMA_MOKHTALASA,
}
CHAR_TO_PHONEME: dict[str, Phoneme] = {c: p for p, c in SYMBOLS.items()}

assert len(CHAR_TO_PHONEME) == len(PHONEMES)

MADD_PHONEMES = frozenset({Phoneme.alif, Phoneme.waw_madd, Phoneme.yaa_madd, Phoneme.alif_momala})
SHORT_VOWELS = frozenset(
    {Phoneme.fatha, Phoneme.dama, Phoneme.kasra, Phoneme.fatha_momala, Phoneme.dama_mokhtalasa}
)
VOWELS = MADD_PHONEMES | SHORT_VOWELS
NASALS = frozenset({Phoneme.noon, Phoneme.meem, Phoneme.noon_mokhfah, Phoneme.meem_mokhfah})

# Uthmani input characters.
LETTERS = "ءأإؤئآابتثجحخدذرزسشصضطظعغفقكلمنهويىةٱ"
HARAKAT = "َُِ"
TANWEEN = "ًٌٍ"
SHADDA = "ّ"
SUKOON = "ْ"
MADDAH = "ٓ"
HAMZA_ABOVE = "ٔ"
HAMZA_BELOW = "ٕ"
DAGGER_ALIF = "ٰ"
TATWEEL = "ـ"
SMALL_WAW = "ۥ"
SMALL_YAA = "ۦ"
SMALL_HIGH_NOON = "ۨ"
SMALL_HIGH_MEEM = "ۢ"
SMALL_LOW_MEEM = "ۭ"
SILENT_ZERO = "۟"  # rounded zero: letter not pronounced
OBLONG_ZERO = "۠"  # upright rectangular zero: alif kept only at pause
IMALA_SIGN = "۪"
ISHMAM_SIGN = "۫"
TASHEEL_SIGN = "۬"
SMALL_HIGH_SEEN = "ۜ"
SMALL_LOW_SEEN = "ۣ"
PAUSE_MARKS = "ۖۗۘۙۚۛ"

ALLOWED_INPUT = frozenset(
    LETTERS
    + HARAKAT
    + TANWEEN
    + SHADDA
    + SUKOON
    + MADDAH
    + HAMZA_ABOVE
    + HAMZA_BELOW
    + DAGGER_ALIF
    + TATWEEL
    + SMALL_WAW
    + SMALL_YAA
    + SMALL_HIGH_NOON
    + SMALL_HIGH_MEEM
    + SMALL_LOW_MEEM
    + SILENT_ZERO
    + OBLONG_ZERO
    + IMALA_SIGN
    + ISHMAM_SIGN
    + TASHEEL_SIGN
    + SMALL_HIGH_SEEN
    + SMALL_LOW_SEEN
    + PAUSE_MARKS
    + "\u06de\u06e9"  # rub el hizb, sajda sign
)
