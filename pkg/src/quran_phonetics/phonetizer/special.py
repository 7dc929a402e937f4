"""Word-specific data: Quranic initials and the words with per-Moshaf rulings.

Spellings follow the Tanzil Uthmani text exactly.
"""

from __future__ import annotations

from ..alphabet import AYN_LEEN, FORCE_LAZIM as F

# Letter-name spellings of the Quranic initials (Hafs). F marks a six-beat
# letter-name madd, which keeps its length even when idgham moves the sukoon.
MOQATTA: dict[str, str] = {
    "الٓمٓ": f"أَلِفْ لَآ{F}م مِّيٓ{F}مْ",
    "الٓمٓصٓ": f"أَلِفْ لَآ{F}م مِّيٓ{F}مْ صَآ{F}دْ",
    "الٓر": f"أَلِفْ لَآ{F}مْ رَا",
    "الٓمٓر": f"أَلِفْ لَآ{F}م مِّيٓ{F}مْ رَا",
    "كٓهيعٓصٓ": f"كَآ{F}فْ هَا يَا عَيْ{AYN_LEEN}ن صَآ{F}دْ",
    "طه": "طَا هَا",
    "طسٓمٓ": f"طَا سِيٓ{F}م مِّيٓ{F}مْ",
    "طسٓ": f"طَا سِيٓ{F}نْ",
    "يسٓ": f"يَا سِيٓ{F}نْ",
    "صٓ": f"صَآ{F}دْ",
    "حمٓ": f"حَا مِيٓ{F}مْ",
    "عٓسٓقٓ": f"عَيْ{AYN_LEEN}ن سِيٓ{F}ن قَآ{F}فْ",
    "قٓ": f"قَآ{F}فْ",
    "نٓ": f"نُوٓ{F}نْ",
}

# Letter names that can be followed by a waw under noon_and_yaseen.
YASEEN_NOON = f"سِيٓ{F}نْ"
NOON_NAME = f"نُوٓ{F}نْ"
AAL_IMRAN_MEEM = f"مِّيٓ{F}مْ"

# (word, required next word or None) -> attribute holding the choice.
# When the attribute is set to a waqf value the text is split after the word.
FORCED_PAUSES: tuple[tuple[str, str | None, str, str], ...] = (
    ("عِوَجَا", None, "sakt_iwaja", "waqf"),
    ("مَّرْقَدِنَا", "هَٰذَا", "sakt_marqdena", "waqf"),
    ("مَنْ", "رَاقٍ", "sakt_man_raq", "waqf"),
    ("بَلْ", "رَانَ", "sakt_bal_ran", "waqf"),
    ("مَالِيَهْ", "هَلَكَ", "sakt_maleeyah", "waqf"),
    ("يَلْهَث", "ذَّٰلِكَ", "yalhath_dhalik", "waqf"),
    ("ٱرْكَب", "مَّعَنَا", "irkab_maana", "waqf"),
    ("عَلِيمٌۢ", "بَرَآءَةٌ", "between_anfal_and_tawba", "waqf"),
    ("الٓمٓ", "ٱللَّهُ", "meem_aal_imran", "waqf"),
)

SEEN_SAAD_WORDS: dict[str, str] = {
    "وَيَبْصُۜطُ": "yabsut",
    "بَصْۜطَةً": "bastah",
    "ٱلْمُصَۣيْطِرُونَ": "almusaytirun",
    "بِمُصَيْطِرٍ": "bimusaytir",
}

# Interrogative hamza before the article: tasheel or six-beat madd.
TASHEEL_WORDS = ("ءَآلذَّكَرَيْنِ", "ءَآللَّهُ", "ءَآلْـَٰٔنَ")

# Raa words whose ruling at a pause is a Moshaf choice.
RAA_WORDS: dict[str, str] = {
    "فِرْقٍ": "raa_firq",
    "ٱلْقِطْرِ": "raa_alqitr",
    "مِصْرَ": "raa_misr",
    "بِمِصْرَ": "raa_misr",
    "مِّصْرَ": "raa_misr",
    "وَنُذُرِ": "raa_nudhur",
    "يَسْرِ": "raa_yasr",
    "أَسْرِ": "raa_yasr",
    "فَأَسْرِ": "raa_yasr",
}
# raa_firq applies in both wasl and waqf; the others only when pausing on the word.
RAA_ALWAYS = frozenset({"raa_firq"})
