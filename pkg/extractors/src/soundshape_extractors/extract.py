"""Batch extraction driver: manifest in, embedding-set files out."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .embfiles import Item, write_embedding_set
from .errors import MissingMediaError
from .manifest import Manifest, read_manifest
from .media import resolve_audio, resolve_image
from .registry import get_info, load_encoder


@dataclass(frozen=True)
class ExtractorConfig:
    model_id: str
    modality: str                 # image | audio | text
    manifest_path: Path
    out_path: Path
    media_dir: Path | None = None
    batch_size: int = 32
    device: str = "cpu"

    def __post_init__(self) -> None:
        if self.modality not in ("image", "audio", "text"):
            raise ValueError(f"modality must be image/audio/text, got {self.modality!r}")
        if self.batch_size < 1:
            raise ValueError("batch_size must be >= 1")


def _image_jobs(manifest: Manifest, media_dir: Path, pooling: str):
    for spec in manifest.images:
        meta = {"adjective": spec.adjective, "seed": str(spec.seed), "pooling": pooling}
        yield Item(spec.id, spec.shape_class, meta), resolve_image(media_dir, spec.id)


def _audio_jobs(manifest: Manifest, media_dir: Path, pooling: str):
    for spec in manifest.audio:
        meta = {"speaker": spec.speaker, "grapheme": spec.grapheme, "pooling": pooling}
        yield Item(spec.id, spec.shape_class, meta), resolve_audio(media_dir, spec.id)


def _text_jobs(manifest: Manifest, pooling: str):
    # One text form per distinct pseudoword; speakers are a TTS notion.
    seen: set[str] = set()
    for spec in manifest.audio:
        if spec.ipa in seen:
            continue
        seen.add(spec.ipa)
        meta = {"ipa": spec.ipa, "pooling": pooling}
        yield Item(f"txt-{spec.grapheme}", spec.shape_class, meta), spec.grapheme


def extract(config: ExtractorConfig) -> Path:
    """Encode every stimulus of one modality and write the set files.

    Returns the sidecar path. Media are resolved before any encoding so
    a missing file fails fast.
    """
    info = get_info(config.model_id)
    encoder = load_encoder(config.model_id, config.modality, config.device)
    manifest = read_manifest(config.manifest_path)

    if config.modality == "text":
        jobs = list(_text_jobs(manifest, encoder.pooling))
    else:
        if config.media_dir is None:
            raise MissingMediaError(
                f"--media-dir is required for {config.modality} extraction"
            )
        if config.modality == "image":
            jobs = list(_image_jobs(manifest, config.media_dir, encoder.pooling))
        else:
            jobs = list(_audio_jobs(manifest, config.media_dir, encoder.pooling))

    items = [item for item, _ in jobs]
    inputs = [source for _, source in jobs]
    blocks: list[np.ndarray] = []
    for start in range(0, len(inputs), config.batch_size):
        batch = inputs[start : start + config.batch_size]
        blocks.append(encoder.encode_batch(config.modality, batch))
    matrix = (
        np.concatenate(blocks, axis=0)
        if blocks
        else np.zeros((0, encoder.dim), dtype=np.float32)
    )

    write_embedding_set(
        config.out_path,
        model_id=info.model_id,
        modality=config.modality,
        items=items,
        matrix=matrix,
    )
    return Path(config.out_path)
