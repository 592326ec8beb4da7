"""Adapters for checkpoints hosted on the Hugging Face hub.

Imports are lazy so the package works without torch/transformers
installed. Any load failure (offline machine, missing weights) raises
CheckpointUnavailableError; callers treat that as "skip this model",
not as a pipeline bug.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import CheckpointUnavailableError, UnsupportedModalityError


def _load_torch():
    try:
        import torch
    except ImportError as exc:
        raise CheckpointUnavailableError(f"torch not installed: {exc}") from exc
    return torch


class ClipEncoder:
    """CLIP image/text embeddings from the projection heads."""

    pooling = "projection-head embedding (get_image_features / get_text_features)"
    modalities = ("image", "text")

    def __init__(self, checkpoint: str, device: str = "cpu") -> None:
        torch = _load_torch()
        try:
            from transformers import CLIPModel, CLIPProcessor
        except ImportError as exc:
            raise CheckpointUnavailableError(f"transformers not installed: {exc}") from exc
        try:
            self._model = CLIPModel.from_pretrained(checkpoint).to(device).eval()
            self._processor = CLIPProcessor.from_pretrained(checkpoint)
        except Exception as exc:
            raise CheckpointUnavailableError(
                f"cannot load {checkpoint!r}: {exc}"
            ) from exc
        self._torch = torch
        self._device = device
        self.dim = int(self._model.config.projection_dim)

    def encode_batch(self, modality: str, inputs: list) -> np.ndarray:
        from PIL import Image

        torch = self._torch
        with torch.no_grad():
            if modality == "image":
                images = [Image.open(Path(p)).convert("RGB") for p in inputs]
                batch = self._processor(images=images, return_tensors="pt").to(self._device)
                features = self._model.get_image_features(**batch)
            elif modality == "text":
                batch = self._processor(
                    text=list(inputs), return_tensors="pt", padding=True
                ).to(self._device)
                features = self._model.get_text_features(**batch)
            else:
                raise UnsupportedModalityError(f"CLIP does not encode {modality!r}")
        return features.cpu().numpy().astype(np.float32)


class BlipItmEncoder:
    """BLIP image-text-matching checkpoint; ITC projection embeddings."""

    pooling = "ITC projection embeddings (vision_proj / text_proj of the CLS state)"
    modalities = ("image", "text")

    def __init__(self, checkpoint: str, device: str = "cpu") -> None:
        torch = _load_torch()
        try:
            from transformers import BlipForImageTextRetrieval, BlipProcessor
        except ImportError as exc:
            raise CheckpointUnavailableError(f"transformers not installed: {exc}") from exc
        try:
            self._model = BlipForImageTextRetrieval.from_pretrained(checkpoint).to(device).eval()
            self._processor = BlipProcessor.from_pretrained(checkpoint)
        except Exception as exc:
            raise CheckpointUnavailableError(
                f"cannot load {checkpoint!r}: {exc}"
            ) from exc
        self._torch = torch
        self._device = device
        self.dim = int(self._model.vision_proj.out_features)

    def encode_batch(self, modality: str, inputs: list) -> np.ndarray:
        from PIL import Image

        torch = self._torch
        with torch.no_grad():
            if modality == "image":
                images = [Image.open(Path(p)).convert("RGB") for p in inputs]
                batch = self._processor(images=images, return_tensors="pt").to(self._device)
                vision_out = self._model.vision_model(**batch)[0]
                features = self._model.vision_proj(vision_out[:, 0, :])
            elif modality == "text":
                batch = self._processor(
                    text=list(inputs), return_tensors="pt", padding=True
                ).to(self._device)
                text_out = self._model.text_encoder(
                    input_ids=batch["input_ids"],
                    attention_mask=batch["attention_mask"],
                )[0]
                features = self._model.text_proj(text_out[:, 0, :])
            else:
                raise UnsupportedModalityError(f"BLIP does not encode {modality!r}")
        return features.cpu().numpy().astype(np.float32)
