from .core import (
    EncodingError,
    IntermediateText,
    PhonemeSequence,
    PhonetizerInputError,
    PipelineError,
    SequencingError,
    UtteranceContext,
    apply_operation,
    encode_phonemes,
    phonetize,
    run_pipeline,
)
from .operations import OPERATIONS

__all__ = [
    "OPERATIONS",
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
