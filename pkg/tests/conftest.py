from __future__ import annotations

import numpy as np
import pytest

from soundshape.probe import ScoreRow, ScoreTable, ScoreType
from soundshape.stimuli import DatasetManifest, build_manifest, default_speakers


@pytest.fixture(scope="session")
def full_manifest() -> DatasetManifest:
    """The complete stimulus space: 500 image prompts, 3888 audio specs."""
    return build_manifest(seeds_per_adjective=25, speakers=default_speakers(4))


@pytest.fixture(scope="session")
def full_audio_table(full_manifest: DatasetManifest) -> ScoreTable:
    """Deterministic pseudo-random scores over every audio stimulus."""
    rng = np.random.default_rng(0)
    scores = rng.uniform(-1.0, 1.0, size=len(full_manifest.audio))
    rows = [
        ScoreRow(spec.id, spec.shape_class, float(score))
        for spec, score in zip(full_manifest.audio, scores)
    ]
    return ScoreTable(score_type=ScoreType.GEOMETRIC, rows=rows)
