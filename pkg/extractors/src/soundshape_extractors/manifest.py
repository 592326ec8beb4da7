"""Reader for the toolkit's dataset manifest files.

This package talks to the main toolkit only through its file formats,
so the manifest schema is parsed here independently: UTF-8 JSON with
top-level keys ``{version, images, audio}`` (see the toolkit README).
Only the fields extraction needs are modeled.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ManifestError


@dataclass(frozen=True)
class ImageStimulus:
    id: str
    adjective: str
    shape_class: str
    seed: int
    prompt: str


@dataclass(frozen=True)
class AudioStimulus:
    id: str
    ipa: str
    grapheme: str
    shape_class: str
    speaker: str


@dataclass(frozen=True)
class Manifest:
    version: str
    images: list[ImageStimulus]
    audio: list[AudioStimulus]


def _field(obj: dict, key: str, where: str):
    try:
        return obj[key]
    except KeyError:
        raise ManifestError(f"{where}: missing field {key!r}") from None


def read_manifest(path: str | Path) -> Manifest:
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ManifestError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise ManifestError("manifest must be a JSON object")
    for key in ("version", "images", "audio"):
        if key not in payload:
            raise ManifestError(f"missing top-level key {key!r}")

    images = []
    for i, obj in enumerate(payload["images"]):
        where = f"images[{i}]"
        images.append(
            ImageStimulus(
                id=_field(obj, "id", where),
                adjective=_field(obj, "adjective", where),
                shape_class=_field(obj, "shapeClass", where),
                seed=_field(obj, "seed", where),
                prompt=_field(obj, "prompt", where),
            )
        )
    audio = []
    for i, obj in enumerate(payload["audio"]):
        where = f"audio[{i}]"
        audio.append(
            AudioStimulus(
                id=_field(obj, "id", where),
                ipa=_field(obj, "ipa", where),
                grapheme=_field(obj, "grapheme", where),
                shape_class=_field(obj, "shapeClass", where),
                speaker=_field(obj, "speaker", where),
            )
        )
    for label, entries in (("images", images), ("audio", audio)):
        ids = [e.id for e in entries]
        if len(set(ids)) != len(ids):
            raise ManifestError(f"duplicate ids in {label}")
        if any(e.shape_class not in ("round", "sharp") for e in entries):
            raise ManifestError(f"{label}: shapeClass must be round or sharp")
    return Manifest(version=payload["version"], images=images, audio=audio)
