from __future__ import annotations

import subprocess
import sys
import wave
from pathlib import Path

import numpy as np
import pytest
from PIL import Image

PRIMARY_CLI = [sys.executable, "-m", "soundshape.cli"]


def run_primary(*args: str) -> subprocess.CompletedProcess:
    return subprocess.run(
        [*PRIMARY_CLI, *args], capture_output=True, text=True, check=False
    )


@pytest.fixture(scope="session")
def dataset_dir(tmp_path_factory) -> Path:
    """Full 500-image manifest (one speaker keeps the audio list small)."""
    out = tmp_path_factory.mktemp("dataset")
    result = run_primary("gen-stimuli", "--out", str(out), "--speakers", "1", "--seeds", "25")
    assert result.returncode == 0, result.stderr
    return out


@pytest.fixture(scope="session")
def media_dir(tmp_path_factory, dataset_dir) -> Path:
    """Seeded noise media for every manifest stimulus: PNGs and WAVs."""
    import json

    media = tmp_path_factory.mktemp("media")
    manifest = json.loads((dataset_dir / "manifest.json").read_text(encoding="utf-8"))
    rng = np.random.default_rng(0)

    for spec in manifest["images"]:
        pixels = rng.integers(0, 256, size=(16, 16, 3), dtype=np.uint8)
        Image.fromarray(pixels, "RGB").save(media / f"{spec['id']}.png")

    for spec in manifest["audio"]:
        samples = (rng.normal(scale=0.2, size=400).clip(-1, 1) * 32767).astype("<i2")
        with wave.open(str(media / f"{spec['id']}.wav"), "wb") as fh:
            fh.setnchannels(1)
            fh.setsampwidth(2)
            fh.setframerate(8000)
            fh.writeframes(samples.tobytes())
    return media
