"""Stimulus generation manifests.

Materializes the stimulus space into concrete request records: image
prompts with per-adjective seeds, audio synthesis requests with speaker
fan-out, and a JSON dataset manifest binding everything to stable item
ids. The manifest file doubles as the request list handed to external
image-generation / TTS services; this module never calls any service.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from string import ascii_lowercase

from .errors import DuplicateSpeakerError, PhonologyError, SchemaViolation
from .phonology import (
    Pseudoword,
    ShapeClass,
    enumerate_pseudowords,
    grapheme_form,
    validate_pseudoword,
)

ROUND_ADJECTIVES: tuple[str, ...] = (
    "round", "circular", "soft", "fat", "chubby",
    "curved", "smooth", "plush", "plump", "rotund",
)

SHARP_ADJECTIVES: tuple[str, ...] = (
    "sharp", "spiky", "angular", "jagged", "hard",
    "edgy", "pointed", "prickly", "rugged", "uneven",
)

_ADJECTIVE_CLASS: dict[str, ShapeClass] = {
    **{a: ShapeClass.ROUND for a in ROUND_ADJECTIVES},
    **{a: ShapeClass.SHARP for a in SHARP_ADJECTIVES},
}

MANIFEST_VERSION = "1"


def prompt_for(adjective: str) -> str:
    """Image-generation prompt for one adjective."""
    return "A 3D-rendering of a " + adjective + " object"


@dataclass(frozen=True)
class ImagePromptSpec:
    id: str
    adjective: str
    shape_class: ShapeClass
    seed: int
    prompt: str


@dataclass(frozen=True)
class AudioStimulusSpec:
    id: str
    word: Pseudoword
    speaker: str
    ipa: str
    grapheme: str

    @property
    def shape_class(self) -> ShapeClass:
        return self.word.shape_class


@dataclass
class DatasetManifest:
    images: list[ImagePromptSpec]
    audio: list[AudioStimulusSpec]
    version: str = MANIFEST_VERSION


def image_prompts(seeds_per_adjective: int = 25) -> list[ImagePromptSpec]:
    """One spec per (class, adjective, seed); seeds run 0..n-1."""
    if seeds_per_adjective < 1:
        raise ValueError("seeds_per_adjective must be >= 1")
    specs: list[ImagePromptSpec] = []
    for shape, adjectives in (
        (ShapeClass.ROUND, ROUND_ADJECTIVES),
        (ShapeClass.SHARP, SHARP_ADJECTIVES),
    ):
        for adjective in adjectives:
            for seed in range(seeds_per_adjective):
                specs.append(
                    ImagePromptSpec(
                        id=f"img-{shape.value}-{adjective}-{seed}",
                        adjective=adjective,
                        shape_class=shape,
                        seed=seed,
                        prompt=prompt_for(adjective),
                    )
                )
    return specs


def default_speakers(count: int = 4) -> list[str]:
    """Placeholder voice tags; real TTS voice names are deployment config."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return [
        "voice-" + (ascii_lowercase[i] if i < 26 else str(i + 1))
        for i in range(count)
    ]


def audio_stimuli(speakers: list[str]) -> list[AudioStimulusSpec]:
    """One spec per (pseudoword, speaker), in enumeration-then-speaker order."""
    if not speakers:
        raise ValueError("speakers must be non-empty")
    seen: set[str] = set()
    for s in speakers:
        if s in seen:
            raise DuplicateSpeakerError(f"speaker {s!r} listed twice")
        seen.add(s)
    specs: list[AudioStimulusSpec] = []
    for word in enumerate_pseudowords():
        dashed = "-".join(s.ipa for s in word.syllables)
        for speaker in speakers:
            specs.append(
                AudioStimulusSpec(
                    id=f"aud-{dashed}-{speaker}",
                    word=word,
                    speaker=speaker,
                    ipa=word.ipa,
                    grapheme=word.grapheme,
                )
            )
    return specs


def build_manifest(
    seeds_per_adjective: int = 25,
    speakers: list[str] | None = None,
) -> DatasetManifest:
    if speakers is None:
        speakers = default_speakers(4)
    return DatasetManifest(
        images=image_prompts(seeds_per_adjective),
        audio=audio_stimuli(speakers),
    )


# --- JSON (de)serialization -------------------------------------------------
#
# Schema: UTF-8 JSON, top-level keys {"version", "images", "audio"}.
# Field order and item order are canonical so identical manifests are
# byte-identical on disk.

def _check_unique_ids(ids: list[str], label: str) -> None:
    seen: set[str] = set()
    for item_id in ids:
        if item_id in seen:
            raise SchemaViolation(f"duplicate {label} id {item_id!r}")
        seen.add(item_id)


def _manifest_payload(manifest: DatasetManifest) -> dict:
    return {
        "version": manifest.version,
        "images": [
            {
                "id": s.id,
                "adjective": s.adjective,
                "shapeClass": s.shape_class.value,
                "seed": s.seed,
                "prompt": s.prompt,
            }
            for s in manifest.images
        ],
        "audio": [
            {
                "id": s.id,
                "ipa": s.ipa,
                "grapheme": s.grapheme,
                "shapeClass": s.shape_class.value,
                "speaker": s.speaker,
            }
            for s in manifest.audio
        ],
    }


def write_manifest(manifest: DatasetManifest, path: str | Path) -> None:
    """Write a validated manifest as canonical JSON."""
    _check_unique_ids([s.id for s in manifest.images], "image")
    _check_unique_ids([s.id for s in manifest.audio], "audio")
    text = json.dumps(_manifest_payload(manifest), ensure_ascii=False, indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


def _require_keys(obj: dict, keys: tuple[str, ...], label: str) -> None:
    if not isinstance(obj, dict):
        raise SchemaViolation(f"{label} must be an object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise SchemaViolation(f"{label} missing field(s): {', '.join(missing)}")
    extra = [k for k in obj if k not in keys]
    if extra:
        raise SchemaViolation(f"{label} has unknown field(s): {', '.join(extra)}")


def _word_class(value: str, label: str) -> ShapeClass:
    if value == ShapeClass.ROUND.value:
        return ShapeClass.ROUND
    if value == ShapeClass.SHARP.value:
        return ShapeClass.SHARP
    raise SchemaViolation(f"{label}: unknown shapeClass {value!r}")


def _parse_image(obj: dict, index: int) -> ImagePromptSpec:
    label = f"images[{index}]"
    _require_keys(obj, ("id", "adjective", "shapeClass", "seed", "prompt"), label)
    shape = _word_class(obj["shapeClass"], label)
    adjective = obj["adjective"]
    if _ADJECTIVE_CLASS.get(adjective) is not shape:
        raise SchemaViolation(
            f"{label}: adjective {adjective!r} is not a {shape.value} adjective"
        )
    seed = obj["seed"]
    if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
        raise SchemaViolation(f"{label}: seed must be a non-negative integer")
    if obj["prompt"] != prompt_for(adjective):
        raise SchemaViolation(f"{label}: prompt does not match the template")
    if not isinstance(obj["id"], str) or not obj["id"]:
        raise SchemaViolation(f"{label}: id must be a non-empty string")
    return ImagePromptSpec(
        id=obj["id"],
        adjective=adjective,
        shape_class=shape,
        seed=seed,
        prompt=obj["prompt"],
    )


def _parse_audio(obj: dict, index: int) -> AudioStimulusSpec:
    label = f"audio[{index}]"
    _require_keys(obj, ("id", "ipa", "grapheme", "shapeClass", "speaker"), label)
    shape = _word_class(obj["shapeClass"], label)
    try:
        word = validate_pseudoword(obj["ipa"])
    except PhonologyError as exc:
        raise SchemaViolation(f"{label}: invalid ipa: {exc}") from exc
    if word.shape_class is not shape:
        raise SchemaViolation(
            f"{label}: ipa {obj['ipa']!r} is {word.shape_class.value}, "
            f"manifest says {shape.value}"
        )
    if obj["grapheme"] != grapheme_form(word):
        raise SchemaViolation(f"{label}: grapheme does not match the phoneme mapping")
    if not isinstance(obj["speaker"], str) or not obj["speaker"]:
        raise SchemaViolation(f"{label}: speaker must be a non-empty string")
    if not isinstance(obj["id"], str) or not obj["id"]:
        raise SchemaViolation(f"{label}: id must be a non-empty string")
    return AudioStimulusSpec(
        id=obj["id"],
        word=word,
        speaker=obj["speaker"],
        ipa=obj["ipa"],
        grapheme=obj["grapheme"],
    )


def read_manifest(path: str | Path) -> DatasetManifest:
    """Read and fully validate a manifest file."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaViolation(f"manifest is not valid JSON: {exc}") from exc
    _require_keys(payload, ("version", "images", "audio"), "manifest")
    if not isinstance(payload["version"], str):
        raise SchemaViolation("manifest version must be a string")
    if not isinstance(payload["images"], list) or not isinstance(payload["audio"], list):
        raise SchemaViolation("images and audio must be arrays")
    images = [_parse_image(obj, i) for i, obj in enumerate(payload["images"])]
    audio = [_parse_audio(obj, i) for i, obj in enumerate(payload["audio"])]
    _check_unique_ids([s.id for s in images], "image")
    _check_unique_ids([s.id for s in audio], "audio")
    return DatasetManifest(images=images, audio=audio, version=payload["version"])
