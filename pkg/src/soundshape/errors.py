"""Exception types shared across the toolkit."""

from __future__ import annotations


class SoundShapeError(Exception):
    """Base class for all toolkit errors."""


class PhonologyError(SoundShapeError):
    """A string could not be interpreted as a valid pseudoword."""


class UnknownPhoneError(PhonologyError):
    """Input contains a symbol outside the phone inventory."""


class NotThreeSyllablesError(PhonologyError):
    """Input does not parse as exactly three consonant-vowel syllables."""


class Rule1Violation(PhonologyError):
    """First and last syllable differ."""


class Rule2Violation(PhonologyError):
    """Round-group and sharp-group phones are mixed."""


class Rule3Violation(PhonologyError):
    """Initial consonant is neutral."""


class DuplicateSpeakerError(SoundShapeError):
    """Speaker list contains repeats."""


class SchemaViolation(SoundShapeError):
    """A manifest file does not conform to the documented schema."""


class FormatViolation(SoundShapeError):
    """A data file is malformed (magic, version, length, or table layout)."""


class EmptyResultError(SoundShapeError):
    """A filter or query produced no rows."""


class EmptyClassError(SoundShapeError):
    """A required shape class has no members."""


class ZeroDirectionError(SoundShapeError):
    """Class means coincide; the semantic direction is undefined."""


class ZeroNormError(SoundShapeError):
    """A vector with zero Euclidean norm cannot be cosine-scored."""


class DimMismatchError(SoundShapeError):
    """Operands have different embedding dimensionality."""


class OneClassOnlyError(SoundShapeError):
    """Metric requires both shape classes to be present."""


class AllScoresTiedError(SoundShapeError):
    """Every score is identical; rank correlation is undefined."""


class UnresolvedIdError(SoundShapeError):
    """A score row references an id missing from the manifest."""
