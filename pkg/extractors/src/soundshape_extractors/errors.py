"""Extractor error types."""

from __future__ import annotations


class ExtractorError(Exception):
    """Base class for extractor failures."""


class UnknownModelError(ExtractorError):
    """Requested model id is not in the registry."""


class UnsupportedModalityError(ExtractorError):
    """The model does not encode the requested modality."""


class MissingMediaError(ExtractorError):
    """A stimulus id has no media file under the input directory."""


class CheckpointUnavailableError(ExtractorError):
    """Model weights could not be loaded (offline, missing, or external repo)."""


class ManifestError(ExtractorError):
    """The dataset manifest file does not match the documented schema."""
