"""Writer for the embedding-set interchange format.

Sidecar JSON ``{modelId, modality, dim, count, matrixFile, items}``
plus a raw matrix file: 5-byte magic ``EMBS\\x01`` then count x dim
little-endian float32, row-major. Written here independently of the
main toolkit so any encoder environment can produce conforming files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

MAGIC = b"EMBS\x01"


@dataclass(frozen=True)
class Item:
    id: str
    shape_class: str
    meta: dict[str, str] = field(default_factory=dict)


def write_embedding_set(
    path: str | Path,
    model_id: str,
    modality: str,
    items: list[Item],
    matrix: np.ndarray,
) -> None:
    matrix = np.asarray(matrix, dtype=np.float32)
    if matrix.ndim != 2 or matrix.shape[0] != len(items):
        raise ValueError(f"matrix shape {matrix.shape} does not match {len(items)} items")
    if not np.isfinite(matrix).all():
        raise ValueError("matrix contains NaN or Inf")
    sidecar = Path(path)
    matrix_file = sidecar.name + ".bin"
    payload = {
        "modelId": model_id,
        "modality": modality,
        "dim": int(matrix.shape[1]),
        "count": len(items),
        "matrixFile": matrix_file,
        "items": [
            {
                "id": item.id,
                "shapeClass": item.shape_class,
                "meta": dict(sorted(item.meta.items())),
            }
            for item in items
        ],
    }
    text = json.dumps(payload, ensure_ascii=False, indent=2)
    sidecar.write_text(text + "\n", encoding="utf-8")
    (sidecar.parent / matrix_file).write_bytes(
        MAGIC + matrix.astype("<f4", copy=False).tobytes(order="C")
    )
