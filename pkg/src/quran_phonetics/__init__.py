"""Quran phonetic script: phonetizer, sifat, recitation matching and CTC/PER tooling."""

from .corpus import bundled_uthmani, load_tanzil, load_tanzil_file
from .moshaf import MoshafAttributes, default_attributes, parse_attributes, reference_attributes
from .phonetizer import PhonemeSequence, UtteranceContext, phonetize
from .sifat import SifatVector, extract_sifat
from .tasmeea import TasmeeaParams, match_segments, missing_portions

__version__ = "0.1.0"
