"""The 26 rewrite operations, in application order.

Each operation is an ordered list of rules. A rule pairs a regex with a
replacement (a string or a callable receiving the match and the run context).
Rules are applied in order and the list is repeated until the text stops
changing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Union

from .. import alphabet as A
from ..moshaf import MoshafAttributes
from . import special as S


class PipelineError(RuntimeError):
    """Rules inside one operation failed to reach a fixpoint."""


@dataclass(frozen=True)
class UtteranceContext:
    starts_utterance: bool = True
    ends_with_pause: bool = True

    @property
    def label(self) -> str:
        return f"{'start' if self.starts_utterance else 'cont'}+{'pause' if self.ends_with_pause else 'wasl'}"


@dataclass(frozen=True)
class Env:
    attrs: MoshafAttributes
    ctx: UtteranceContext


Repl = Union[str, Callable[[re.Match, Env], str]]


@dataclass(frozen=True)
class Rule:
    pattern: re.Pattern
    repl: Repl
    note: str = ""


def rule(pattern: str, repl: Repl, note: str = "") -> Rule:
    return Rule(re.compile(pattern), repl, note)


# character classes, built from the alphabet module so markers stay in sync
H = f"[{A.HINTS}]*"
HINT = f"[{A.HINTS}]"
CONS = "ءبتثجحخدذرزسشصضطظعغفقكلمنهوي"
C = f"[{CONS}]"
HARAKA = "[َُِ]"
TANWEEN = "[ًٌٍ]"
VOWEL_LIKE = f"َُِ{A.FATHA_MOMALA}{A.DAMA_MOKHTALASA}"
# anything that stops a letter from being bare (unvowelled, no sukoon)
NOT_BARE = f"[ًٌٍَُِّْٰ۪ٓ۬{A.FATHA_MOMALA}{A.DAMA_MOKHTALASA}{A.HINTS}]"
IKHFA_LETTERS = "تثجدذزسشصضطظفقك"
THROAT = "ءهعحغخ"
ISTILA = "خصضغطقظ"
QALQALA_LETTERS = "قطبجد"
END = "(?= |$)"
START = "(?:^|(?<= ))"


def run_rules(text: str, rules: list[Rule], env: Env, op_name: str, max_rounds: int = 12) -> str:
    for _ in range(max_rounds):
        before = text
        for r in rules:
            if callable(r.repl):
                text = r.pattern.sub(lambda m, f=r.repl: f(m, env), text)
            else:
                text = r.pattern.sub(r.repl, text)
        if text == before:
            return text
    raise PipelineError(f"{op_name}: rules did not reach a fixpoint")


def _words(text: str) -> list[str]:
    return text.split(" ") if text else []


# 1 ---------------------------------------------------------------------------
def disassemble_hrof_moqatta(text: str, env: Env) -> str:
    """Separates Quranic initials into spelled-out letter names."""
    return " ".join(S.MOQATTA.get(w, w) for w in _words(text))


# 2 ---------------------------------------------------------------------------
def _add_after_letter(word: str, letter: str, hint: str) -> str:
    i = word.rfind(letter)
    return word if i < 0 else word[: i + 1] + hint + word[i + 1 :]


def special_cases(text: str, env: Env) -> str:
    """Word-specific rulings chosen by the Moshaf attributes."""
    a, ctx = env.attrs, env.ctx
    words = _words(text)
    out: list[str] = []
    n = len(words)
    for i, w in enumerate(words):
        nxt = words[i + 1] if i + 1 < n else None
        last = i == n - 1
        pause_here = last and ctx.ends_with_pause
        extra: list[str] = []

        if w in S.SEEN_SAAD_WORDS:
            choice = getattr(a, S.SEEN_SAAD_WORDS[w])
            if choice == "seen":
                w = w.replace("ص", "س")
        w = w.replace(A.SMALL_HIGH_SEEN, "").replace(A.SMALL_LOW_SEEN, "")

        if w in S.TASHEEL_WORDS and a.tasheel_or_madd == "tasheel":
            w = w.replace("ءَآ", "ءَا" + A.TASHEEL_SIGN, 1)

        if w == "يَلْهَث" and nxt == "ذَّٰلِكَ" and a.yalhath_dhalik == "izhar":
            w, words[i + 1] = "يَلْهَثْ", "ذَٰلِكَ"
        if w == "ٱرْكَب" and nxt == "مَّعَنَا" and a.irkab_maana == "izhar":
            w, words[i + 1] = "ٱرْكَبْ", "مَعَنَا"

        if w == "تَأْمَ۫نَّا":
            w = "تَأْمَنَّا" if a.noon_tamna == "ishmam" else f"تَأْمَن{A.DAMA_MOKHTALASA}نَا"

        if w == "ضَعْفٍ" or (w == "ضَعْفًا" and nxt == "وَشَيْبَةً"):
            if a.harakat_daaf == "dam":
                w = "ضُ" + w[2:]

        if w == "سَلَٰسِلَا۟" and pause_here:
            w = "سَلَٰسِلْ" if a.alif_salasila == "hadhf" else "سَلَٰسِلَا"

        if w == "نَخْلُقكُّم" and a.idgham_nakhluqkum == "idgham_naqis":
            w = f"نَخْلُق{A.NO_QALQALA}ْكُم"

        if w in S.RAA_WORDS:
            name = S.RAA_WORDS[w]
            choice = getattr(a, name)
            if name in S.RAA_ALWAYS or pause_here:
                if choice in ("tafkheem", "waqf"):
                    w = _add_after_letter(w, "ر", A.HEAVY)
                elif choice == "tarqeeq":
                    w = _add_after_letter(w, "ر", A.LIGHT)

        if w == "ءَاتَىٰنِۦَ" and pause_here:
            w = "ءَاتَىٰنْ" if a.yaa_ataan == "hadhf" else "ءَاتَىٰنِى"

        if w == "ٱلِٱسْمُ" and i == 0 and ctx.starts_utterance:
            w = "لِسْمُ" if a.start_with_ism == "lism" else "أَلِسْمُ"

        if nxt is not None:
            if w in (S.YASEEN_NOON, S.NOON_NAME) and nxt.startswith("وَ") and a.noon_and_yaseen == "idgham":
                w = w[:-1]
            if w == S.AAL_IMRAN_MEEM and nxt == "ٱللَّهُ":
                if a.meem_aal_imran == "wasl_2":
                    w = "مِّيمَ"
                elif a.meem_aal_imran == "wasl_6":
                    w = f"مِّيٓ{A.FORCE_LAZIM}مَ"
            if w == "عِوَجَا":
                if a.sakt_iwaja == "sakt":
                    extra.append(A.SAKT)
                elif a.sakt_iwaja == "idraj":
                    w = "عِوَجًا"
            if w == "مَّرْقَدِنَا" and nxt == "هَٰذَا" and a.sakt_marqdena == "sakt":
                extra.append(A.SAKT)
            if w == "مَنْ" and nxt == "رَاقٍ":
                if a.sakt_man_raq == "sakt":
                    extra.append(A.SAKT)
                elif a.sakt_man_raq == "idraj":
                    w, words[i + 1] = "مَن", "رَّاقٍ"
            if w == "بَلْ" and nxt == "رَانَ":
                if a.sakt_bal_ran == "sakt":
                    extra.append(A.SAKT)
                elif a.sakt_bal_ran == "idraj":
                    w, words[i + 1] = "بَل", "رَّانَ"
            if w == "مَالِيَهْ" and nxt == "هَلَكَ":
                if a.sakt_maleeyah == "sakt":
                    extra.append(A.SAKT)
                elif a.sakt_maleeyah == "idgham":
                    w, words[i + 1] = "مَالِيَه", "هَّلَكَ"
            if w == "عَلِيمٌۢ" and nxt == "بَرَآءَةٌ" and a.between_anfal_and_tawba == "sakt":
                w = "عَلِيمْ"
                extra.append(A.SAKT)

        if a.saken_before_hamz != "tahqeeq":
            w = re.sub("(ٱلْ)(?=[أإءؤئـ])", "\\1" + A.SAKT, w)
            w = re.sub("^(\\w*شَىْ)(?=ء)", "\\1" + A.SAKT, w)
            if (
                a.saken_before_hamz == "general_sakt"
                and nxt is not None
                and not extra
                and re.match("[أإءؤئ]", nxt)
                and re.search("(ْ|[ًٌٍ][ۭۢ]?ا?)$", w)
            ):
                extra.append(A.SAKT)

        out.append(w)
        out.extend(extra)
    return " ".join(out)


# 3 ---------------------------------------------------------------------------
def _start_hamza(vowel: str) -> str:
    carrier = "أ" if vowel in "َُ" else "إ"
    return carrier + A.START_HAMZA + vowel


def begin_with_hamzat_wasl(text: str, env: Env) -> str:
    """Turns a leading hamzat wasl into a voiced hamza with the proper vowel."""
    if not env.ctx.starts_utterance or not text.startswith("ٱ"):
        return text
    rest = text[1:]
    if rest.startswith("ئْ"):
        return _start_hamza("ِ") + "ي" + rest[2:]
    if rest.startswith("ؤْ"):
        return _start_hamza("ُ") + "و" + rest[2:]
    if rest.startswith("ل") and not rest.startswith("لْتَق"):
        return _start_hamza("َ") + rest
    if re.match("(سْم|بْن|مْر|ثْن)", rest) or re.match("(مْشُو|قْضُو|بْنُو|مْضُو)", rest):
        return _start_hamza("ِ") + rest
    if re.match(f"{C}[ْ]?{C}ّ?ُ", rest):
        return _start_hamza("ُ") + rest
    return _start_hamza("ِ") + rest


# 4 ---------------------------------------------------------------------------
def begin_with_saken(text: str, env: Env) -> str:
    """An utterance cannot open on a sakin letter: prefix a hamza with kasra."""
    if env.ctx.starts_utterance and re.match(f"[{A.LETTERS}]{H}ْ", text):
        return _start_hamza("ِ") + text
    return text


# 5 ---------------------------------------------------------------------------
CONVERT_ALIF_MAKSORA = [
    rule("ىٰ", "ا", "maksura with dagger alif is a madd alif"),
    rule("ى(?=[ًٌٍَُِّْ])", "ي", "maksura carrying a vowel or sukoon is a consonant yaa"),
    rule("(?<=ً)ى", "ا", "tanween fatha before maksura: the 'iwad alif"),
    rule("(?<=ِ)ى|(?<=ِا۟)ى", "ي", "maksura after kasra is a madd yaa"),
    rule("ى", "ا", "remaining maksura after fatha is a madd alif"),
]


# 6 ---------------------------------------------------------------------------
NORMALIZE_HMAZAT = [
    rule(
        f"{START}((?:[وفأ]َ)?[يه]َٰٓ)(?=[أإءؤئ]|ـٔ)",
        "\\1 ",
        "vocative/attention particle before hamza is its own word",
    ),
    rule("ـٔ", "ء", "hamza seated on a kasheeda"),
    rule("[أإؤئ]", "ء", "all hamza carriers become a bare hamza"),
    rule("[ٕٔ]", "", "stray hamza marks"),
]


# 7 ---------------------------------------------------------------------------
ITHBAT_YAA_YOHIE = [
    rule("ي(ّ?)ِۦ", "ي\\1ِي", "small yaa after a kasra'd yaa is written out in full"),
]


# 8 ---------------------------------------------------------------------------
REMOVE_KASHEEDA = [
    rule(f"[{A.TATWEEL}{A.PAUSE_MARKS}۞۩]", "", "kasheeda and pause signs"),
    rule(" {2,}", " ", ""),
]


# 9 ---------------------------------------------------------------------------
REMOVE_HMZAT_WASL_MIDDLE = [
    rule("ٱ", A.WASL, "hamzat wasl is silent mid-utterance; its position is remembered"),
]


# 10 --------------------------------------------------------------------------
REMOVE_SKOON_MOSTADEER = [
    rule(f"[{CONS}ا]{H}[ًٌٍَُِّْٰٓ]*۟", "", "letters under the rounded zero are not pronounced"),
]


# 11 --------------------------------------------------------------------------
def skoon_mostateel(text: str, env: Env) -> str:
    """Alif under the oblong zero: kept only when pausing on its word."""
    if env.ctx.ends_with_pause:
        text = re.sub("ا۠$", "ا", text)
    return text.replace("ا۠", "")


# 12 --------------------------------------------------------------------------
def madd_alewad(text: str, env: Env) -> str:
    """Tanween fatha: alif at a pause, plain tanween otherwise."""
    if env.ctx.ends_with_pause:
        text = re.sub(f"(?<!ة)({H})ً[ۭۢ]?ا?$", "\\1َا", text)
    return re.sub("ً([ۭۢ]?)ا", "ً\\1", text)


# 13 --------------------------------------------------------------------------
WAW_ALSALLAH = [
    rule("وٰ", "ا", "waw carrying a dagger alif is read as alif"),
]


# 14 --------------------------------------------------------------------------
ENLARGE_SMALL_LETTERS = [
    rule("ٰ", "ا", "dagger alif"),
    rule(f"ۥ(?!ٓ?{END})|(?<!هُ)ۥ", "و", "small waw that is not a silah"),
    rule(f"ۦ(?!ٓ?{END})|(?<!هِ)ۦ", "ي", "small yaa that is not a silah"),
    rule("ۨ", "ن", "small high noon"),
]


# 15 --------------------------------------------------------------------------
def clean_end(text: str, env: Env) -> str:
    """Drops the final vowel, tanween and silah when pausing."""
    text = re.sub(" {2,}", " ", text).strip()
    if env.ctx.ends_with_pause and text:
        prev = None
        while prev != text:
            prev = text
            text = re.sub("(?<=[هة])([َُِ])[ۥۦ]ٓ?$", "\\1", text)
            text = re.sub("[ٌٍَُِۭۢٓ]$", "", text)
            text = re.sub("(?<=ة)ً$", "", text)
    return text


# 16 --------------------------------------------------------------------------
NORMALIZE_TAA = [
    rule(f"ة(?={H}[ًٌٍَُِ])", "ت", "voweled taa marbuta is a taa"),
    rule("ة", "ه", "taa marbuta at a pause is a haa"),
]


# 17 --------------------------------------------------------------------------
ADD_ALIF_ISM_ALLAH = [
    rule(
        "(ل[ِ]?)لَّه(?![ْ])",
        f"\\1ل{A.LAM_ALLAH}َّاه".replace("َّ", "َّ"),
        "the divine name carries an unwritten alif after its lam",
    ),
]


# 18 --------------------------------------------------------------------------
def _tanween(m: re.Match, env: Env) -> str:
    vowel = {"ً": "َ", "ٌ": "ُ", "ٍ": "ِ"}[m.group(1)]
    return vowel + "ن"


def _noon_into_waw_yaa(m: re.Match, env: Env) -> str:
    return f"{m.group(1)}{m.group(2)}{A.NASAL}{m.group(3)}ّ"


def _noon_into_lam_raa(m: re.Match, env: Env) -> str:
    if env.attrs.ghonna_lam_and_raa == "ghonna":
        return f"{m.group(1)}{m.group(2)}{A.NASAL}{m.group(3)}"
    return m.group(1) + m.group(2) + m.group(3)


PREPARE_GHONNA_IDGHAM_IQLAB = [
    rule("[ۭۢ]", "", "iqlab marks; iqlab is recognised from context"),
    rule("([ًٌٍ])", _tanween, "tanween is a vowel followed by a bare noon"),
    rule(f"ن{H}( ?)(?<!ُ)(?<!ِ)([يو])({H})(?![ّْ])", _noon_into_waw_yaa, "idgham with ghunnah into yaa/waw"),
    rule(f"ن{H}( ?)([لر])({H}ّ)", _noon_into_lam_raa, "idgham without ghunnah into lam/raa"),
    rule(f"ط({H})(?=( ?)ت(?!{H}ّ))", f"ط{A.NO_QALQALA}\\1ْ", "incomplete idgham of taa into taa"),
    rule(
        f"([{CONS}]){H}(?!{NOT_BARE})( ?)(?=[{CONS}]{H}ّ)",
        lambda m, env: "" if _assimilates(m) else m.group(0),
        "a bare consonant before a doubled letter is absorbed",
    ),
]


def _assimilates(m: re.Match) -> bool:
    nxt = m.string[m.end()]
    first = m.group(1)
    if first in "وي":
        # a madd letter is never absorbed; a leen or sakin waw/yaa only into its twin
        madd = m.start() > 0 and m.string[m.start() - 1] in ("ُ" if first == "و" else "ِ")
        return not madd and first == nxt
    return True


# 19 --------------------------------------------------------------------------
ITIQAA_ALSAKNAN = [
    rule(f"(?:(?<=َ)آ?|(?<=ُ)[وۥ]ٓ?|(?<=ِ)[يۦ]ٓ?)(?= {A.WASL})", "", "a final madd letter drops before a silent hamza"),
    rule(f"([{CONS}]{H})ْ?(?= {A.WASL})", "\\1ِ", "two sakins meet: the first takes a kasra"),
    rule(A.WASL, "", ""),
]


# 20 --------------------------------------------------------------------------
def delete_shadda_at_beginning(text: str, env: Env) -> str:
    if env.ctx.starts_utterance:
        return re.sub(f"^([{CONS}]{H})ّ", "\\1", text)
    return text


# 21 --------------------------------------------------------------------------
def _nasal_triple(m: re.Match, env: Env) -> str:
    letter, hints = m.group(1), m.group(2)
    hints = hints if A.NASAL in hints else hints + A.NASAL
    unit = letter + hints
    return f"{unit}ْ{unit}ْ{unit}"


def _ikhfa_noon(m: re.Match, env: Env) -> str:
    return A.NOON_MOKHFAH * 3


def _iqlab(m: re.Match, env: Env) -> str:
    if env.attrs.meem_mokhfah == "meem":
        unit = "م" + A.NASAL + "ْ"
        return unit * 3
    return A.MEEM_MOKHFAH * 3


GHONNA = [
    rule(f"([نم])({H})ّ", _nasal_triple, "doubled noon/meem: three nasal units"),
    rule(f"ن{H}(?= ?[{IKHFA_LETTERS}])", _ikhfa_noon, "ikhfa of sakin noon"),
    rule(f"[نم]{H}(?= ?ب)", _iqlab, "iqlab and ikhfa shafawi before baa"),
    rule(f"([نم]{H})(?!{NOT_BARE})", "\\1ْ", "remaining bare noon/meem is pronounced clearly"),
]


# 22 --------------------------------------------------------------------------
TASHEEL = [
    rule("ا۬", A.HAMZA_MOSAHALA, "eased second hamza"),
    rule("۬", "", ""),
]


# 23 --------------------------------------------------------------------------
IMALA = [
    rule("[َ]?۪ا", A.FATHA_MOMALA + A.ALIF_MOMALA, "inclined fatha and alif"),
    rule("۪", A.FATHA_MOMALA, ""),
]


# 24 --------------------------------------------------------------------------
MADD_SITE = re.compile(
    "(?:(?P<v>َ)(?P<l>ا)"
    "|(?P<v2>ُ)(?P<l2>[وۥ])"
    "|(?P<v3>ِ)(?P<l3>[يۦ])"
    f"|(?P<v4>{A.FATHA_MOMALA})(?P<l4>{A.ALIF_MOMALA}))"
    f"(?=ٓ?[{A.FORCE_LAZIM}]?(?![ًٌٍَُِّْ۬{A.FATHA_MOMALA}{A.DAMA_MOKHTALASA}]))"
)
MADD_OUT = {"ا": "ا", "و": "ۥ", "ۥ": "ۥ", "ي": "ۦ", "ۦ": "ۦ", A.ALIF_MOMALA: A.ALIF_MOMALA}
LEEN_SITE = re.compile(f"َ([وي])ْ(?P<ayn>{A.AYN_LEEN})?")


def madd_length(text: str, end: int, env: Env) -> int:
    """Beats for the madd letter ending at ``end`` given what follows it."""
    a, ctx = env.attrs, env.ctx
    rest = text[end:]
    if rest.startswith("ٓ"):
        rest = rest[1:]
    if rest.startswith(A.FORCE_LAZIM):
        return 6
    if not rest:
        return 2
    if rest[0] == " ":
        nxt = rest[1:]
        if nxt.startswith("ء"):
            return a.madd_monfasel_len
        return 2
    if rest[0] == "ء":
        tail = rest[1:].lstrip(A.HINTS)
        if ctx.ends_with_pause and (tail == "" or tail == "ْ"):
            return a.madd_mottasel_waqf
        return a.madd_mottasel_len
    m = re.match(f"([{CONS}]|{A.NOON_MOKHFAH}|{A.MEEM_MOKHFAH})({H})(.?)", rest)
    if m:
        final = m.end() == len(rest) or (m.group(3) == "ْ" and m.end() == len(rest))
        if m.group(3) == "ّ" or m.group(1) in (A.NOON_MOKHFAH, A.MEEM_MOKHFAH):
            return 6
        if ctx.ends_with_pause and final and m.group(3) in ("", "ْ"):
            return a.madd_aared_len
        if m.group(3) == "ْ":
            return 6
    return 2


def madd(text: str, env: Env) -> str:
    """Writes every madd as n consecutive madd symbols."""

    def site(m: re.Match) -> str:
        letter = m.group("l") or m.group("l2") or m.group("l3") or m.group("l4")
        n = madd_length(m.string, m.end(), env)
        prefix = A.FATHA_MOMALA if m.group("v4") else ""
        return prefix + MADD_OUT[letter] * n

    text = MADD_SITE.sub(site, text)

    def leen(m: re.Match) -> str:
        letter = m.group(1)
        if m.group("ayn"):
            return "َ" + letter * env.attrs.madd_yaa_alayn_alharfy
        rest = m.string[m.end() :]
        final = re.fullmatch(f"[{CONS}]{H}ْ?", rest)
        if env.ctx.ends_with_pause and final:
            return "َ" + letter * env.attrs.madd_alleen_len
        return m.group(0)

    text = LEEN_SITE.sub(leen, text)
    return text.replace("ٓ", "").replace(A.FORCE_LAZIM, "").replace(A.AYN_LEEN, "")


# 25 --------------------------------------------------------------------------
def qalqla(text: str, env: Env) -> str:
    """Echo after a sakin qalqala letter, or a final one at a pause."""

    def sakin(m: re.Match) -> str:
        if A.NO_QALQALA in m.group(2):
            return m.group(0)
        return m.group(0) + A.QLQLA

    text = re.sub(f"([{QALQALA_LETTERS}])({H})ْ(?!{A.QLQLA})", sakin, text)
    if env.ctx.ends_with_pause:
        m = re.search(f"([{QALQALA_LETTERS}])({H})(ّ?)$", text)
        if m and A.NO_QALQALA not in m.group(2):
            text += A.QLQLA
    return text


# 26 --------------------------------------------------------------------------
_RAA_HEAVY_NEXT = "َُا" + "ۥ" + A.DAMA_MOKHTALASA
_RAA_LIGHT_NEXT = "ِۦ" + A.FATHA_MOMALA + A.ALIF_MOMALA


def _word_before(text: str, pos: int) -> str:
    start = text.rfind(" ", 0, pos) + 1
    return text[start:pos]


def _strip_hints(s: str) -> str:
    return "".join(ch for ch in s if ch not in A.HINTS)


def raa_weight(text: str, pos: int) -> str:
    """HEAVY or LIGHT for the raa at ``pos`` (a heavy/light hint wins if present)."""
    j = pos + 1
    while j < len(text) and text[j] in A.HINTS:
        j += 1
    if j < len(text) and text[j] == "ّ":
        j += 1
    nxt = text[j] if j < len(text) else ""
    if nxt in _RAA_HEAVY_NEXT:
        return A.HEAVY
    if nxt in _RAA_LIGHT_NEXT:
        return A.LIGHT
    # sakin raa: decided by what precedes it in the same word
    before = _word_before(text, pos)
    clean = _strip_hints(before)
    start_hamza = A.START_HAMZA in before[:3]
    if not clean:
        return A.HEAVY
    last = clean[-1]
    if last == "ۦ" or last == "ي" or (last == "ْ" and len(clean) >= 2 and clean[-2] == "ي"):
        return A.LIGHT
    if last == "ِ":
        if start_hamza and len(clean) <= 2:
            return A.HEAVY
        after = _strip_hints(text[j:])
        if after.startswith("ْ"):
            after = after[1:]
        if after[:1] and after[0] in ISTILA and after[1:2] != "ِ":
            return A.HEAVY
        return A.LIGHT
    if last == "ْ" and len(clean) >= 3:
        sakin_letter, vowel = clean[-2], clean[-3]
        if vowel == "ِ" and sakin_letter not in ISTILA:
            if start_hamza and len(clean) <= 4:
                return A.HEAVY
            return A.LIGHT
    return A.HEAVY


def _lam_allah_weight(text: str, pos: int) -> str:
    i = pos - 1
    while i >= 0 and (text[i] in A.HINTS or text[i] == " "):
        i -= 1
    if i < 0:
        return A.HEAVY
    return A.LIGHT if text[i] in "ِۦ" else A.HEAVY


def remove_ras_haa_and_shadda(text: str, env: Env) -> str:
    """Resolves emphasis hints, expands shadda, drops sukoon and spaces."""
    chars = list(text)
    inserts: dict[int, str] = {}
    for i, ch in enumerate(chars):
        if ch == "ر":
            j = i + 1
            hints = ""
            while j < len(chars) and chars[j] in A.HINTS:
                hints += chars[j]
                j += 1
            if A.HEAVY not in hints and A.LIGHT not in hints:
                inserts[i] = raa_weight(text, i)
    for i, ch in enumerate(chars):
        if ch == A.LAM_ALLAH:
            inserts[i] = _lam_allah_weight(text, i - 1)
            chars[i] = ""
    text = "".join(ch + inserts.get(i, "") for i, ch in enumerate(chars))
    text = re.sub(f"([{CONS}])({H})ّ", "\\1\\2\\1\\2", text)
    text = re.sub(f"[ْ ٓ{A.NO_QALQALA}{A.START_HAMZA}]", "", text)
    return text


@dataclass(frozen=True)
class Operation:
    op_id: int
    name: str
    apply: Callable[[str, Env], str]
    doc: str


def _rules_op(name: str, rules: list[Rule]) -> Callable[[str, Env], str]:
    def apply(text: str, env: Env) -> str:
        return run_rules(text, rules, env, name)

    apply.rules = rules  # type: ignore[attr-defined]
    return apply


OPERATIONS: tuple[Operation, ...] = (
    Operation(1, "DisassembleHrofMoqatta", disassemble_hrof_moqatta, "spell out Quranic initials"),
    Operation(2, "SpecialCases", special_cases, "word-specific Moshaf rulings"),
    Operation(3, "BeginWithHamzatWasl", begin_with_hamzat_wasl, "voice a leading hamzat wasl"),
    Operation(4, "BeginWithSaken", begin_with_saken, "no utterance opens on a sakin letter"),
    Operation(5, "ConvertAlifMaksora", _rules_op("ConvertAlifMaksora", CONVERT_ALIF_MAKSORA), "ى to alif or yaa"),
    Operation(6, "NormalizeHmazat", _rules_op("NormalizeHmazat", NORMALIZE_HMAZAT), "one hamza letter"),
    Operation(7, "IthbatYaaYohie", _rules_op("IthbatYaaYohie", ITHBAT_YAA_YOHIE), "second yaa written out"),
    Operation(8, "RemoveKasheeda", _rules_op("RemoveKasheeda", REMOVE_KASHEEDA), "drop kasheeda and pause signs"),
    Operation(
        9, "RemoveHmzatWaslMiddle", _rules_op("RemoveHmzatWaslMiddle", REMOVE_HMZAT_WASL_MIDDLE), "silent hamzat wasl"
    ),
    Operation(
        10, "RemoveSkoonMostadeer", _rules_op("RemoveSkoonMostadeer", REMOVE_SKOON_MOSTADEER), "unpronounced letters"
    ),
    Operation(11, "SkoonMostateel", skoon_mostateel, "alif kept only at a pause"),
    Operation(12, "MaddAlewad", madd_alewad, "tanween fatha at a pause"),
    Operation(13, "WawAlsallah", _rules_op("WawAlsallah", WAW_ALSALLAH), "waw read as alif"),
    Operation(14, "EnlargeSmallLetters", _rules_op("EnlargeSmallLetters", ENLARGE_SMALL_LETTERS), "small letters"),
    Operation(15, "CleanEnd", clean_end, "final vowel at a pause"),
    Operation(16, "NormalizeTaa", _rules_op("NormalizeTaa", NORMALIZE_TAA), "taa marbuta"),
    Operation(17, "AddAlifIsmAllah", _rules_op("AddAlifIsmAllah", ADD_ALIF_ISM_ALLAH), "alif of the divine name"),
    Operation(
        18,
        "PrepareGhonnaIdghamIqlab",
        _rules_op("PrepareGhonnaIdghamIqlab", PREPARE_GHONNA_IDGHAM_IQLAB),
        "tanween split and idgham",
    ),
    Operation(19, "ItiqaaAlsaknan", _rules_op("ItiqaaAlsaknan", ITIQAA_ALSAKNAN), "meeting of two sakins"),
    Operation(20, "DeleteShaddaAtBeginning", delete_shadda_at_beginning, "no doubled opening letter"),
    Operation(21, "Ghonna", _rules_op("Ghonna", GHONNA), "ghunnah, ikhfa and iqlab"),
    Operation(22, "Tasheel", _rules_op("Tasheel", TASHEEL), "eased hamza"),
    Operation(23, "Imala", _rules_op("Imala", IMALA), "inclined vowels"),
    Operation(24, "Madd", madd, "madd lengths"),
    Operation(25, "Qalqla", qalqla, "qalqala echo"),
    Operation(26, "RemoveRasHaaAndShadda", remove_ras_haa_and_shadda, "final clean-up"),
)
