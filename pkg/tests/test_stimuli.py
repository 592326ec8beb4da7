from __future__ import annotations

import json

import pytest

from soundshape.errors import DuplicateSpeakerError, SchemaViolation
from soundshape.phonology import ShapeClass, validate_pseudoword
from soundshape.stimuli import (
    ROUND_ADJECTIVES,
    SHARP_ADJECTIVES,
    audio_stimuli,
    build_manifest,
    default_speakers,
    image_prompts,
    prompt_for,
    read_manifest,
    write_manifest,
)


def test_image_prompt_counts():
    specs = image_prompts(25)
    assert len(specs) == 500
    assert sum(s.shape_class is ShapeClass.ROUND for s in specs) == 250
    assert sum(s.shape_class is ShapeClass.SHARP for s in specs) == 250
    assert len(image_prompts(1)) == 20


def test_image_prompt_content_and_order():
    specs = image_prompts(2)
    assert specs[0].id == "img-round-round-0"
    assert specs[0].prompt == "A 3D-rendering of a round object"
    # class block, then adjective list order, then seed
    adjectives = [s.adjective for s in specs]
    expected = [a for a in ROUND_ADJECTIVES for _ in range(2)] + [
        a for a in SHARP_ADJECTIVES for _ in range(2)
    ]
    assert adjectives == expected
    seeds = [s.seed for s in specs[:4]]
    assert seeds == [0, 1, 0, 1]

    spiky = [s for s in image_prompts(25) if s.adjective == "spiky"]
    assert len(spiky) == 25
    assert spiky[0].prompt == "A 3D-rendering of a spiky object"
    assert spiky[0].shape_class is ShapeClass.SHARP


def test_image_prompts_rejects_bad_seed_count():
    with pytest.raises(ValueError):
        image_prompts(0)


def test_audio_counts():
    four = audio_stimuli(default_speakers(4))
    assert len(four) == 3888
    assert sum(s.shape_class is ShapeClass.ROUND for s in four) == 1944
    assert sum(s.shape_class is ShapeClass.SHARP for s in four) == 1944
    assert len(audio_stimuli(["solo"])) == 972


def test_audio_order_and_ids():
    specs = audio_stimuli(["a", "b"])
    # word-major, speaker-minor
    assert specs[0].ipa == specs[1].ipa
    assert specs[0].speaker == "a"
    assert specs[1].speaker == "b"
    assert len({s.id for s in specs}) == len(specs)
    assert specs[0].id.startswith("aud-")


def test_audio_specs_validate_with_matching_class():
    for spec in audio_stimuli(["x"]):
        word = validate_pseudoword(spec.ipa)
        assert word.shape_class is spec.shape_class
        assert word.grapheme == spec.grapheme


def test_duplicate_speaker_rejected():
    with pytest.raises(DuplicateSpeakerError):
        audio_stimuli(["a", "b", "a"])
    with pytest.raises(ValueError):
        audio_stimuli([])


def test_default_speakers():
    assert default_speakers(4) == ["voice-a", "voice-b", "voice-c", "voice-d"]
    assert len(default_speakers(30)) == 30


def test_manifest_round_trip_identity(tmp_path):
    manifest = build_manifest(seeds_per_adjective=2, speakers=["a", "b"])
    path = tmp_path / "manifest.json"
    write_manifest(manifest, path)
    loaded = read_manifest(path)
    assert loaded == manifest


def test_manifest_byte_stable(tmp_path):
    manifest = build_manifest(seeds_per_adjective=1, speakers=["a"])
    p1 = tmp_path / "m1.json"
    p2 = tmp_path / "m2.json"
    write_manifest(manifest, p1)
    write_manifest(read_manifest(p1), p2)
    assert p1.read_bytes() == p2.read_bytes()


def _write_payload(tmp_path, mutate):
    manifest = build_manifest(seeds_per_adjective=1, speakers=["a"])
    path = tmp_path / "m.json"
    write_manifest(manifest, path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    mutate(payload)
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


def test_manifest_duplicate_id_rejected(tmp_path):
    def mutate(payload):
        payload["images"][1]["id"] = payload["images"][0]["id"]

    with pytest.raises(SchemaViolation, match="duplicate"):
        read_manifest(_write_payload(tmp_path, mutate))


def test_manifest_unknown_class_rejected(tmp_path):
    def mutate(payload):
        payload["images"][0]["shapeClass"] = "fuzzy"

    with pytest.raises(SchemaViolation, match="fuzzy"):
        read_manifest(_write_payload(tmp_path, mutate))


def test_manifest_missing_field_rejected(tmp_path):
    def mutate(payload):
        del payload["audio"][0]["speaker"]

    with pytest.raises(SchemaViolation, match="missing"):
        read_manifest(_write_payload(tmp_path, mutate))


def test_manifest_bad_prompt_rejected(tmp_path):
    def mutate(payload):
        payload["images"][0]["prompt"] = "a photo of a round object"

    with pytest.raises(SchemaViolation, match="template"):
        read_manifest(_write_payload(tmp_path, mutate))


def test_manifest_bad_ipa_rejected(tmp_path):
    def mutate(payload):
        payload["audio"][0]["ipa"] = "kiːmuːkiː"

    with pytest.raises(SchemaViolation, match="invalid ipa"):
        read_manifest(_write_payload(tmp_path, mutate))


def test_manifest_not_json(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(SchemaViolation, match="JSON"):
        read_manifest(path)


def test_prompt_template_exact():
    assert prompt_for("plush") == "A 3D-rendering of a plush object"
