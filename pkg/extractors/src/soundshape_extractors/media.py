"""Media loading: images via Pillow, audio via the stdlib wave module.

Media files are resolved from stimulus ids: ``{media_dir}/{id}.png``
(or ``.jpg``) for images, ``{media_dir}/{id}.wav`` for audio. Text
stimuli need no media; their written forms come from the manifest.
"""

from __future__ import annotations

import wave
from pathlib import Path

import numpy as np
from PIL import Image

from .errors import MissingMediaError

IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg")


def resolve_image(media_dir: Path, stimulus_id: str) -> Path:
    for ext in IMAGE_EXTENSIONS:
        candidate = media_dir / f"{stimulus_id}{ext}"
        if candidate.exists():
            return candidate
    raise MissingMediaError(
        f"no image for {stimulus_id!r} under {media_dir} (tried {', '.join(IMAGE_EXTENSIONS)})"
    )


def resolve_audio(media_dir: Path, stimulus_id: str) -> Path:
    candidate = media_dir / f"{stimulus_id}.wav"
    if not candidate.exists():
        raise MissingMediaError(f"no audio for {stimulus_id!r} under {media_dir}")
    return candidate


def load_image_rgb(path: Path, size: int = 32) -> np.ndarray:
    """Image as float32 RGB array in [0, 1], resampled to size x size."""
    with Image.open(path) as img:
        rgb = img.convert("RGB").resize((size, size), Image.BILINEAR)
    return np.asarray(rgb, dtype=np.float32) / 255.0


def load_waveform(path: Path) -> np.ndarray:
    """Mono float32 waveform in [-1, 1] from a PCM16/PCM8 WAV file."""
    with wave.open(str(path), "rb") as wav:
        n_channels = wav.getnchannels()
        width = wav.getsampwidth()
        frames = wav.readframes(wav.getnframes())
    if width == 2:
        data = np.frombuffer(frames, dtype="<i2").astype(np.float32) / 32768.0
    elif width == 1:
        data = (np.frombuffer(frames, dtype=np.uint8).astype(np.float32) - 128.0) / 128.0
    else:
        raise MissingMediaError(f"{path.name}: unsupported sample width {width}")
    if n_channels > 1:
        data = data.reshape(-1, n_channels).mean(axis=1)
    return data
