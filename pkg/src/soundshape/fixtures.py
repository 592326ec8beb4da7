"""Synthetic embedding fixtures with a planted class direction.

The generator makes the whole pipeline testable without any external
encoder: both modalities share one unit axis u, class means sit at
+delta*u (round) and -delta*u (sharp), and isotropic Gaussian noise of
scale sigma is added per item. Sampling uses numpy's PCG64 generator
(ziggurat Gaussians) seeded from the spec, with a fixed draw order:
axis, image round rows, image sharp rows, audio round rows, audio sharp
rows. Identical specs therefore produce bit-identical sets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .embedstore import EmbeddingItem, EmbeddingSet, Modality
from .phonology import ShapeClass


@dataclass(frozen=True)
class FixtureSpec:
    dim: int = 64
    items_per_class: int = 100
    delta: float = 1.0
    sigma: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError("dim must be >= 2")
        if self.items_per_class < 1:
            raise ValueError("items_per_class must be >= 1")
        if self.delta < 0 or self.sigma < 0:
            raise ValueError("delta and sigma must be >= 0")


def synth_fixture(spec: FixtureSpec) -> tuple[EmbeddingSet, EmbeddingSet]:
    """Return (image_set, audio_set) with the planted separation."""
    rng = np.random.default_rng(spec.seed)
    axis = rng.standard_normal(spec.dim)
    axis /= np.linalg.norm(axis)

    def modality_set(modality: Modality, prefix: str) -> EmbeddingSet:
        items: list[EmbeddingItem] = []
        rows: list[np.ndarray] = []
        for shape, sign in ((ShapeClass.ROUND, 1.0), (ShapeClass.SHARP, -1.0)):
            center = sign * spec.delta * axis
            for i in range(spec.items_per_class):
                rows.append(center + spec.sigma * rng.standard_normal(spec.dim))
                items.append(EmbeddingItem(id=f"{prefix}-{shape.value}-{i:04d}",
                                           shape_class=shape))
        return EmbeddingSet(
            model_id="synthetic-fixture",
            modality=modality,
            dim=spec.dim,
            items=items,
            matrix=np.array(rows, dtype=np.float32),
        )

    image_set = modality_set(Modality.IMAGE, "img")
    audio_set = modality_set(Modality.AUDIO, "aud")
    return image_set, audio_set
