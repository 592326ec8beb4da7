"""Adapters that encode soundshape stimuli (images, audio, text
pseudowords) with pretrained or built-in models and write the
embedding-set interchange files consumed by the main toolkit.
"""

from .errors import (
    CheckpointUnavailableError,
    ExtractorError,
    ManifestError,
    MissingMediaError,
    UnknownModelError,
    UnsupportedModalityError,
)
from .extract import ExtractorConfig, extract
from .registry import ModelInfo, get_info, list_models, load_encoder

__version__ = "0.1.0"
