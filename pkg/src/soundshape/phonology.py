"""Phone inventory and the constrained three-syllable pseudoword space.

Twenty phones (15 consonants, 5 vowels) are partitioned into round,
sharp, and neutral groups. Pseudowords are (CV)(CV)(CV) sequences
subject to three well-formedness rules:

1. the first and last syllable are identical;
2. round-group and sharp-group phones never co-occur;
3. the initial consonant is round or sharp, never neutral.

Rules 2 and 3 make the shape class of a valid word unambiguous: it is
the class of its non-neutral phones. Everything in this module is pure
and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .errors import (
    NotThreeSyllablesError,
    Rule1Violation,
    Rule2Violation,
    Rule3Violation,
    UnknownPhoneError,
)


class PhoneKind(str, Enum):
    CONSONANT = "consonant"
    VOWEL = "vowel"


class ShapeClass(str, Enum):
    ROUND = "round"
    SHARP = "sharp"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class Phone:
    """One IPA phone with its kind and shape-group membership."""

    ipa: str
    kind: PhoneKind
    shape_class: ShapeClass


_CONSONANT_GROUPS: dict[ShapeClass, tuple[str, ...]] = {
    ShapeClass.ROUND: ("m", "n", "l", "b", "d", "g"),
    ShapeClass.SHARP: ("k", "t", "p", "tʃ", "dʒ", "z"),
    ShapeClass.NEUTRAL: ("f", "s", "v"),
}

_VOWEL_GROUPS: dict[ShapeClass, tuple[str, ...]] = {
    ShapeClass.ROUND: ("oː", "uː"),
    ShapeClass.SHARP: ("ɛ", "iː"),
    ShapeClass.NEUTRAL: ("aː",),
}

#: Orthographic rendering, one grapheme per phone. "tʃ" and "dʒ" use the
#: familiar English digraph/letter; long vowels drop the length mark.
GRAPHEME_MAP: dict[str, str] = {
    "m": "m", "n": "n", "l": "l", "b": "b", "d": "d", "g": "g",
    "k": "k", "t": "t", "p": "p", "tʃ": "ch", "dʒ": "j", "z": "z",
    "f": "f", "s": "s", "v": "v",
    "oː": "o", "uː": "u", "ɛ": "e", "iː": "i", "aː": "a",
}

_CLASS_ORDER = (ShapeClass.ROUND, ShapeClass.SHARP, ShapeClass.NEUTRAL)

_INVENTORY: tuple[Phone, ...] = tuple(
    Phone(ipa, kind, cls)
    for cls in _CLASS_ORDER
    for kind, group in (
        (PhoneKind.CONSONANT, _CONSONANT_GROUPS[cls]),
        (PhoneKind.VOWEL, _VOWEL_GROUPS[cls]),
    )
    for ipa in group
)

_BY_IPA: dict[str, Phone] = {p.ipa: p for p in _INVENTORY}

# Longest symbols first so that e.g. "tʃ" is never read as "t".
_SYMBOLS_LONGEST_FIRST: tuple[str, ...] = tuple(
    sorted(_BY_IPA, key=len, reverse=True)
)


def inventory() -> list[Phone]:
    """All 20 phones in fixed order: round, sharp, neutral; consonants
    before vowels within each group."""
    return list(_INVENTORY)


def phone(ipa: str) -> Phone:
    """Look up a single phone by its IPA symbol."""
    try:
        return _BY_IPA[ipa]
    except KeyError:
        raise UnknownPhoneError(f"{ipa!r} is not in the phone inventory") from None


@dataclass(frozen=True)
class Syllable:
    """A consonant-vowel unit."""

    consonant: Phone
    vowel: Phone

    def __post_init__(self) -> None:
        if self.consonant.kind is not PhoneKind.CONSONANT:
            raise ValueError(f"syllable onset must be a consonant, got {self.consonant.ipa!r}")
        if self.vowel.kind is not PhoneKind.VOWEL:
            raise ValueError(f"syllable nucleus must be a vowel, got {self.vowel.ipa!r}")

    @property
    def ipa(self) -> str:
        return self.consonant.ipa + self.vowel.ipa

    @property
    def phones(self) -> tuple[Phone, Phone]:
        return (self.consonant, self.vowel)


@dataclass(frozen=True)
class Pseudoword:
    """A validated three-syllable sequence with its shape class.

    ``ipa`` is the plain concatenation of the six phones; ``grapheme``
    the orthographic form from :data:`GRAPHEME_MAP`.
    """

    syllables: tuple[Syllable, Syllable, Syllable]
    shape_class: ShapeClass
    ipa: str
    grapheme: str

    @classmethod
    def from_syllables(cls, first: Syllable, middle: Syllable) -> Pseudoword:
        """Assemble first-middle-first; caller guarantees the three rules."""
        sylls = (first, middle, first)
        return cls(
            syllables=sylls,
            shape_class=first.consonant.shape_class,
            ipa="".join(s.ipa for s in sylls),
            grapheme="".join(GRAPHEME_MAP[p.ipa] for s in sylls for p in s.phones),
        )

    @property
    def phones(self) -> tuple[Phone, ...]:
        return tuple(p for s in self.syllables for p in s.phones)


@lru_cache(maxsize=1)
def _enumerated() -> tuple[Pseudoword, ...]:
    words: list[Pseudoword] = []
    for cls in (ShapeClass.ROUND, ShapeClass.SHARP):
        onsets = [_BY_IPA[i] for i in _CONSONANT_GROUPS[cls]]
        middles = onsets + [_BY_IPA[i] for i in _CONSONANT_GROUPS[ShapeClass.NEUTRAL]]
        vowels = [
            _BY_IPA[i]
            for i in _VOWEL_GROUPS[cls] + _VOWEL_GROUPS[ShapeClass.NEUTRAL]
        ]
        for c1 in onsets:
            for v1 in vowels:
                first = Syllable(c1, v1)
                for c2 in middles:
                    for v2 in vowels:
                        words.append(Pseudoword.from_syllables(first, Syllable(c2, v2)))
    words.sort(key=lambda w: (w.shape_class.value, w.ipa))
    return tuple(words)


def enumerate_pseudowords() -> list[Pseudoword]:
    """Every valid pseudoword, 486 per class, sorted by (class, ipa)."""
    return list(_enumerated())


def _tokenize(ipa: str) -> list[Phone]:
    phones: list[Phone] = []
    i = 0
    while i < len(ipa):
        for symbol in _SYMBOLS_LONGEST_FIRST:
            if ipa.startswith(symbol, i):
                phones.append(_BY_IPA[symbol])
                i += len(symbol)
                break
        else:
            raise UnknownPhoneError(
                f"no inventory phone at position {i} of {ipa!r}"
            )
    return phones


def validate_pseudoword(ipa: str) -> Pseudoword:
    """Parse and rule-check an IPA string, returning the labeled word.

    Raises:
        UnknownPhoneError: a symbol is outside the inventory.
        NotThreeSyllablesError: the phones do not form exactly CV CV CV.
        Rule1Violation: first and last syllable differ.
        Rule2Violation: round and sharp phones are mixed.
        Rule3Violation: the initial consonant is neutral.
    """
    phones = _tokenize(ipa)
    expected = (
        PhoneKind.CONSONANT, PhoneKind.VOWEL,
        PhoneKind.CONSONANT, PhoneKind.VOWEL,
        PhoneKind.CONSONANT, PhoneKind.VOWEL,
    )
    if len(phones) != 6 or tuple(p.kind for p in phones) != expected:
        raise NotThreeSyllablesError(
            f"{ipa!r} does not parse as three consonant-vowel syllables"
        )
    sylls = [Syllable(phones[i], phones[i + 1]) for i in (0, 2, 4)]
    if sylls[0] != sylls[2]:
        raise Rule1Violation(
            f"first syllable {sylls[0].ipa!r} differs from last {sylls[2].ipa!r}"
        )
    present = {p.shape_class for p in phones}
    if ShapeClass.ROUND in present and ShapeClass.SHARP in present:
        raise Rule2Violation(f"{ipa!r} mixes round and sharp phones")
    if phones[0].shape_class is ShapeClass.NEUTRAL:
        raise Rule3Violation(
            f"{ipa!r} starts with neutral consonant {phones[0].ipa!r}"
        )
    return Pseudoword.from_syllables(sylls[0], sylls[1])


def grapheme_form(word: Pseudoword) -> str:
    """Orthographic form of a word, one grapheme per phone."""
    return "".join(GRAPHEME_MAP[p.ipa] for p in word.phones)
