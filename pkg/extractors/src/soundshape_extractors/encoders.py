"""Built-in encoders that need no downloaded weights.

``SeededProjectionEncoder`` is a deterministic stand-in for a real
checkpoint: fixed per-modality featurizers followed by a seeded
Gaussian projection and tanh. It exists so the extraction pipeline,
file formats, and downstream probing can be exercised end-to-end on any
machine. ``SeededJointEncoder`` routes every modality through one
network over concatenated per-modality feature blocks, zero-filling the
block of the modality that is absent, mirroring how joint-representation
models are probed one modality at a time.
"""

from __future__ import annotations

import zlib
from pathlib import Path

import numpy as np

from .errors import UnsupportedModalityError
from .media import load_image_rgb, load_waveform

IMAGE_FEATURE_DIM = 32 * 32 * 3
AUDIO_FEATURE_DIM = 2048
TEXT_FEATURE_DIM = 512


def image_features(path: Path) -> np.ndarray:
    return load_image_rgb(path, size=32).reshape(-1)


def audio_features(path: Path) -> np.ndarray:
    wave = load_waveform(path)
    out = np.zeros(AUDIO_FEATURE_DIM, dtype=np.float32)
    head = wave[:AUDIO_FEATURE_DIM]
    out[: len(head)] = head
    return out


def text_features(text: str) -> np.ndarray:
    """Hashed character-trigram counts (stable across processes)."""
    out = np.zeros(TEXT_FEATURE_DIM, dtype=np.float32)
    padded = f"^{text}$"
    for i in range(len(padded) - 2):
        gram = padded[i : i + 3].encode("utf-8")
        out[zlib.crc32(gram) % TEXT_FEATURE_DIM] += 1.0
    return out


_FEATURIZERS = {
    "image": (image_features, IMAGE_FEATURE_DIM),
    "audio": (audio_features, AUDIO_FEATURE_DIM),
    "text": (text_features, TEXT_FEATURE_DIM),
}


def _projection(in_dim: int, out_dim: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.normal(scale=1.0 / np.sqrt(in_dim), size=(in_dim, out_dim)).astype(
        np.float32
    )


class SeededProjectionEncoder:
    """Coordinated-style test encoder: one projection head per modality."""

    pooling = "tanh of seeded Gaussian projection"

    def __init__(self, dim: int = 64, seed: int = 0,
                 modalities: tuple[str, ...] = ("image", "audio", "text")) -> None:
        self.dim = dim
        self.modalities = modalities
        self._heads = {
            modality: _projection(_FEATURIZERS[modality][1], dim, seed + offset)
            for offset, modality in enumerate(modalities, start=1)
        }

    def encode_batch(self, modality: str, inputs: list) -> np.ndarray:
        if modality not in self._heads:
            raise UnsupportedModalityError(f"modality {modality!r} not supported")
        featurize = _FEATURIZERS[modality][0]
        feats = np.stack([featurize(x) for x in inputs]).astype(np.float32)
        return np.tanh(feats @ self._heads[modality])


class SeededJointEncoder:
    """Joint-style test encoder over [audio | image] feature blocks.

    Probing a single modality zero-fills the other block before the
    shared projection.
    """

    pooling = (
        "tanh of seeded Gaussian projection over concatenated modality "
        "features, absent modality zero-filled"
    )

    def __init__(self, dim: int = 64, seed: int = 0) -> None:
        self.dim = dim
        self.modalities = ("image", "audio")
        self._weights = _projection(AUDIO_FEATURE_DIM + IMAGE_FEATURE_DIM, dim, seed + 17)

    def encode_batch(self, modality: str, inputs: list) -> np.ndarray:
        if modality not in self.modalities:
            raise UnsupportedModalityError(f"modality {modality!r} not supported")
        featurize = _FEATURIZERS[modality][0]
        feats = np.stack([featurize(x) for x in inputs]).astype(np.float32)
        joint = np.zeros(
            (len(inputs), AUDIO_FEATURE_DIM + IMAGE_FEATURE_DIM), dtype=np.float32
        )
        if modality == "audio":
            joint[:, :AUDIO_FEATURE_DIM] = feats
        else:
            joint[:, AUDIO_FEATURE_DIM:] = feats
        return np.tanh(joint @ self._weights)
