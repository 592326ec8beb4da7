from __future__ import annotations

import itertools

import pytest

from soundshape.errors import (
    NotThreeSyllablesError,
    Rule1Violation,
    Rule2Violation,
    Rule3Violation,
    UnknownPhoneError,
)
from soundshape.phonology import (
    GRAPHEME_MAP,
    Phone,
    PhoneKind,
    ShapeClass,
    enumerate_pseudowords,
    grapheme_form,
    inventory,
    validate_pseudoword,
)

# Independent restatement of the phone groups, used as the oracle below.
ROUND_C = ("m", "n", "l", "b", "d", "g")
SHARP_C = ("k", "t", "p", "tʃ", "dʒ", "z")
NEUTRAL_C = ("f", "s", "v")
ROUND_V = ("oː", "uː")
SHARP_V = ("ɛ", "iː")
NEUTRAL_V = ("aː",)


def brute_force_ipa(own_c, own_v):
    """Nested-loop oracle: all rule-respecting sequences for one class."""
    vowels = own_v + NEUTRAL_V
    middles = own_c + NEUTRAL_C
    out = []
    for c1, v1, c2, v2 in itertools.product(own_c, vowels, middles, vowels):
        out.append(c1 + v1 + c2 + v2 + c1 + v1)
    return out


def test_inventory_counts():
    inv = inventory()
    assert len(inv) == 20
    assert sum(p.kind is PhoneKind.CONSONANT for p in inv) == 15
    assert sum(p.kind is PhoneKind.VOWEL for p in inv) == 5


def test_inventory_membership():
    inv = inventory()
    assert Phone("m", PhoneKind.CONSONANT, ShapeClass.ROUND) in inv
    assert Phone("aː", PhoneKind.VOWEL, ShapeClass.NEUTRAL) in inv
    by_class = {
        cls: {p.ipa for p in inv if p.shape_class is cls} for cls in ShapeClass
    }
    assert by_class[ShapeClass.ROUND] == set(ROUND_C) | set(ROUND_V)
    assert by_class[ShapeClass.SHARP] == set(SHARP_C) | set(SHARP_V)
    assert by_class[ShapeClass.NEUTRAL] == set(NEUTRAL_C) | set(NEUTRAL_V)


def test_inventory_order_is_fixed():
    ipas = [p.ipa for p in inventory()]
    assert ipas[:8] == ["m", "n", "l", "b", "d", "g", "oː", "uː"]
    assert ipas[8:16] == ["k", "t", "p", "tʃ", "dʒ", "z", "ɛ", "iː"]
    assert ipas[16:] == ["f", "s", "v", "aː"]


def test_enumeration_counts_match_oracle():
    words = enumerate_pseudowords()
    assert len(words) == 972
    by_class = {
        cls: [w for w in words if w.shape_class is cls]
        for cls in (ShapeClass.ROUND, ShapeClass.SHARP)
    }
    assert len(by_class[ShapeClass.ROUND]) == 486
    assert len(by_class[ShapeClass.SHARP]) == 486

    oracle_round = brute_force_ipa(ROUND_C, ROUND_V)
    oracle_sharp = brute_force_ipa(SHARP_C, SHARP_V)
    assert len(oracle_round) == 486
    assert {w.ipa for w in by_class[ShapeClass.ROUND]} == set(oracle_round)
    assert {w.ipa for w in by_class[ShapeClass.SHARP]} == set(oracle_sharp)


def test_enumeration_no_duplicates_and_sorted():
    words = enumerate_pseudowords()
    assert len({w.ipa for w in words}) == len(words)
    keys = [(w.shape_class.value, w.ipa) for w in words]
    assert keys == sorted(keys)


def test_enumeration_word_invariants():
    for w in enumerate_pseudowords():
        assert w.syllables[0] == w.syllables[2]
        classes = {p.shape_class for p in w.phones}
        assert classes <= {w.shape_class, ShapeClass.NEUTRAL}
        assert w.syllables[0].consonant.shape_class is not ShapeClass.NEUTRAL
        assert w.shape_class in (ShapeClass.ROUND, ShapeClass.SHARP)


def test_known_members_and_rejects():
    ipas = {w.ipa: w.shape_class for w in enumerate_pseudowords()}
    for ipa in ("muːluːmuː", "boːdaːboː", "laːnoːlaː"):
        assert ipas[ipa] is ShapeClass.ROUND
    for ipa in ("kiːtɛkiː", "zɛpaːzɛ", "tʃaːtiːtʃaː"):
        assert ipas[ipa] is ShapeClass.SHARP
    assert "kiːmuːkiː" not in ipas


def test_per_initial_consonant_counts():
    # Oracle: 3 vowels x 9 middle consonants x 3 vowels = 81 per onset.
    words = enumerate_pseudowords()
    for cls, onsets in ((ShapeClass.ROUND, ROUND_C), (ShapeClass.SHARP, SHARP_C)):
        for onset in onsets:
            n = sum(
                1
                for w in words
                if w.shape_class is cls and w.syllables[0].consonant.ipa == onset
            )
            assert n == 81


def test_validate_round_trips_enumeration():
    for w in enumerate_pseudowords():
        assert validate_pseudoword(w.ipa) == w


@pytest.mark.parametrize(
    "ipa,err",
    [
        ("xaːmuːxaː", UnknownPhoneError),
        ("muːluː", NotThreeSyllablesError),
        ("muːluːmuːluː", NotThreeSyllablesError),
        ("aːmuːlaː", NotThreeSyllablesError),
        ("muːluːnuː", Rule1Violation),
        ("kiːmuːkiː", Rule2Violation),
        ("faːmuːfaː", Rule3Violation),
    ],
)
def test_validate_errors(ipa, err):
    with pytest.raises(err):
        validate_pseudoword(ipa)


def test_validate_accepts_and_labels():
    assert validate_pseudoword("boːdaːboː").shape_class is ShapeClass.ROUND
    assert validate_pseudoword("zɛpaːzɛ").shape_class is ShapeClass.SHARP


@pytest.mark.parametrize(
    "ipa,expected",
    [
        ("muːluːmuː", "mulumu"),
        ("kiːtɛkiː", "kiteki"),
        ("tʃaːtiːtʃaː", "chaticha"),
    ],
)
def test_grapheme_examples(ipa, expected):
    assert grapheme_form(validate_pseudoword(ipa)) == expected


def test_grapheme_mapping_is_total_and_single_valued():
    assert set(GRAPHEME_MAP) == {p.ipa for p in inventory()}


def test_grapheme_injective_over_enumeration():
    words = enumerate_pseudowords()
    graphemes = {w.grapheme for w in words}
    assert len(graphemes) == len(words)
    assert all(grapheme_form(w) == w.grapheme for w in words)
