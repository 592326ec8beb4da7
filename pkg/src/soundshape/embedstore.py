"""Bit-exact interchange format for embedding matrices.

Any external encoder delivers embeddings as two files:

* sidecar manifest, UTF-8 JSON:
  ``{modelId, modality, dim, count, matrixFile, items: [{id, shapeClass,
  meta}]}`` where ``matrixFile`` is resolved relative to the sidecar;
* matrix file: the 5-byte magic ``EMBS\\x01`` followed by count x dim
  little-endian 32-bit floats, row-major, no padding. Row i corresponds
  to items[i].

The layout is trivially writable from any ML ecosystem and round-trips
bit-exactly. A CSV fixture mode (``id,class,v0..v{D-1}``) is accepted
for hand-written tests; canonical storage is the binary pair.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable

import numpy as np

from .errors import EmptyResultError, FormatViolation
from .phonology import ShapeClass

MAGIC = b"EMBS\x01"


class Modality(str, Enum):
    IMAGE = "image"
    AUDIO = "audio"
    TEXT = "text"


@dataclass(frozen=True)
class EmbeddingItem:
    id: str
    shape_class: ShapeClass
    meta: dict[str, str] = field(default_factory=dict)


@dataclass(eq=False)
class EmbeddingSet:
    """N x D matrix of encoder outputs plus per-row metadata."""

    model_id: str
    modality: Modality
    dim: int
    items: list[EmbeddingItem]
    matrix: np.ndarray

    def __post_init__(self) -> None:
        self.matrix = np.atleast_2d(np.asarray(self.matrix, dtype=np.float32))

    def __len__(self) -> int:
        return len(self.items)


class FindingCode(str, Enum):
    NON_FINITE = "non_finite"
    ZERO_NORM = "zero_norm"
    DUPLICATE_ID = "duplicate_id"
    DIM_MISMATCH = "dim_mismatch"


@dataclass(frozen=True)
class Finding:
    code: FindingCode
    message: str
    row: int | None = None


def validate_set(embedding_set: EmbeddingSet) -> list[Finding]:
    """Check every invariant; returns an empty list iff the set is valid.

    Findings carry row indices where applicable (non-finite entries,
    zero-norm rows, duplicate ids). Shape problems are reported once.
    """
    findings: list[Finding] = []
    es = embedding_set
    n_rows, n_cols = es.matrix.shape

    if es.dim < 1:
        findings.append(Finding(FindingCode.DIM_MISMATCH, f"dim must be >= 1, got {es.dim}"))
    if n_cols != es.dim:
        findings.append(
            Finding(FindingCode.DIM_MISMATCH, f"matrix has {n_cols} columns, dim says {es.dim}")
        )
    if n_rows != len(es.items):
        findings.append(
            Finding(
                FindingCode.DIM_MISMATCH,
                f"matrix has {n_rows} rows, items list has {len(es.items)}",
            )
        )

    finite = np.isfinite(es.matrix)
    for row in np.nonzero(~finite.all(axis=1))[0]:
        findings.append(
            Finding(FindingCode.NON_FINITE, f"row {row} contains NaN or Inf", row=int(row))
        )
    # Norms in float64 so tiny float32 rows do not underflow to zero.
    norms = np.linalg.norm(es.matrix.astype(np.float64), axis=1)
    for row in np.nonzero(finite.all(axis=1) & (norms == 0.0))[0]:
        findings.append(
            Finding(FindingCode.ZERO_NORM, f"row {row} has zero Euclidean norm", row=int(row))
        )

    seen: dict[str, int] = {}
    for i, item in enumerate(es.items):
        if item.id in seen:
            findings.append(
                Finding(
                    FindingCode.DUPLICATE_ID,
                    f"id {item.id!r} at row {i} duplicates row {seen[item.id]}",
                    row=i,
                )
            )
        else:
            seen[item.id] = i
    return findings


def filter_set(
    embedding_set: EmbeddingSet,
    shape_class: ShapeClass | None = None,
    id_predicate: Callable[[str], bool] | None = None,
) -> EmbeddingSet:
    """Row subset by class and/or id predicate; order and dim preserved."""
    keep = [
        i
        for i, item in enumerate(embedding_set.items)
        if (shape_class is None or item.shape_class is shape_class)
        and (id_predicate is None or id_predicate(item.id))
    ]
    if not keep:
        raise EmptyResultError(
            f"filter on {embedding_set.model_id!r} matched no rows"
            + (f" (class {shape_class.value})" if shape_class else "")
        )
    return EmbeddingSet(
        model_id=embedding_set.model_id,
        modality=embedding_set.modality,
        dim=embedding_set.dim,
        items=[embedding_set.items[i] for i in keep],
        matrix=embedding_set.matrix[keep].copy(),
    )


# --- binary pair ------------------------------------------------------------

def _matrix_filename(sidecar: Path) -> str:
    return sidecar.name + ".bin"


def write_set(embedding_set: EmbeddingSet, path: str | Path) -> None:
    """Write sidecar + matrix files; refuses sets that fail validation."""
    findings = validate_set(embedding_set)
    if findings:
        raise FormatViolation(
            "refusing to write invalid set: " + "; ".join(f.message for f in findings)
        )
    for item in embedding_set.items:
        for k, v in item.meta.items():
            if not isinstance(k, str) or not isinstance(v, str):
                raise FormatViolation(f"item {item.id!r}: meta must map str to str")
    sidecar = Path(path)
    payload = {
        "modelId": embedding_set.model_id,
        "modality": embedding_set.modality.value,
        "dim": embedding_set.dim,
        "count": len(embedding_set.items),
        "matrixFile": _matrix_filename(sidecar),
        "items": [
            {
                "id": item.id,
                "shapeClass": item.shape_class.value,
                "meta": dict(sorted(item.meta.items())),
            }
            for item in embedding_set.items
        ],
    }
    text = json.dumps(payload, ensure_ascii=False, indent=2)
    sidecar.write_text(text + "\n", encoding="utf-8")
    matrix_bytes = embedding_set.matrix.astype("<f4", copy=False).tobytes(order="C")
    (sidecar.parent / _matrix_filename(sidecar)).write_bytes(MAGIC + matrix_bytes)


def read_set(path: str | Path) -> EmbeddingSet:
    """Read a sidecar + matrix pair, checking structure but not content.

    Structural problems (bad magic, truncated matrix, count mismatches)
    raise :class:`FormatViolation`. Content quality (NaN rows, duplicate
    ids) is the business of :func:`validate_set`.
    """
    sidecar = Path(path)
    try:
        payload = json.loads(sidecar.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatViolation(f"sidecar is not valid JSON: {exc}") from exc

    required = ("modelId", "modality", "dim", "count", "matrixFile", "items")
    if not isinstance(payload, dict) or any(k not in payload for k in required):
        raise FormatViolation("sidecar missing required field(s)")
    try:
        modality = Modality(payload["modality"])
    except ValueError:
        raise FormatViolation(f"unknown modality {payload['modality']!r}") from None
    dim, count = payload["dim"], payload["count"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatViolation("dim must be a positive integer")
    if not isinstance(count, int) or isinstance(count, bool) or count < 0:
        raise FormatViolation("count must be a non-negative integer")
    raw_items = payload["items"]
    if not isinstance(raw_items, list) or len(raw_items) != count:
        raise FormatViolation(f"items length {len(raw_items)} != count {count}")

    items: list[EmbeddingItem] = []
    for i, obj in enumerate(raw_items):
        if not isinstance(obj, dict) or set(obj) != {"id", "shapeClass", "meta"}:
            raise FormatViolation(f"items[{i}] must have exactly id, shapeClass, meta")
        if obj["shapeClass"] not in (ShapeClass.ROUND.value, ShapeClass.SHARP.value):
            raise FormatViolation(f"items[{i}]: unknown shapeClass {obj['shapeClass']!r}")
        meta = obj["meta"]
        if not isinstance(meta, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in meta.items()
        ):
            raise FormatViolation(f"items[{i}]: meta must map str to str")
        items.append(
            EmbeddingItem(
                id=obj["id"],
                shape_class=ShapeClass(obj["shapeClass"]),
                meta=dict(meta),
            )
        )

    matrix_path = sidecar.parent / payload["matrixFile"]
    blob = matrix_path.read_bytes()
    if blob[: len(MAGIC)] != MAGIC:
        raise FormatViolation(f"{matrix_path.name}: bad magic or version")
    expected = len(MAGIC) + count * dim * 4
    if len(blob) != expected:
        raise FormatViolation(
            f"{matrix_path.name}: expected {expected} bytes, found {len(blob)}"
        )
    matrix = (
        np.frombuffer(blob, dtype="<f4", offset=len(MAGIC))
        .reshape(count, dim)
        .copy()
    )
    return EmbeddingSet(
        model_id=payload["modelId"],
        modality=modality,
        dim=dim,
        items=items,
        matrix=matrix,
    )


# --- CSV fixture mode -------------------------------------------------------

def read_csv_set(
    path: str | Path,
    model_id: str = "csv-fixture",
    modality: Modality = Modality.IMAGE,
) -> EmbeddingSet:
    """Read the hand-writable fixture format ``id,class,v0..v{D-1}``."""
    text = Path(path).read_text(encoding="utf-8")
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatViolation("empty CSV") from None
    if len(header) < 3 or header[:2] != ["id", "class"]:
        raise FormatViolation("CSV header must be id,class,v0..")
    dim = len(header) - 2
    if header[2:] != [f"v{i}" for i in range(dim)]:
        raise FormatViolation("CSV value columns must be v0..v{D-1}")

    items: list[EmbeddingItem] = []
    rows: list[list[float]] = []
    for line_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != dim + 2:
            raise FormatViolation(f"line {line_no}: expected {dim + 2} fields")
        if row[1] not in (ShapeClass.ROUND.value, ShapeClass.SHARP.value):
            raise FormatViolation(f"line {line_no}: unknown class {row[1]!r}")
        try:
            values = [float(v) for v in row[2:]]
        except ValueError as exc:
            raise FormatViolation(f"line {line_no}: {exc}") from exc
        items.append(EmbeddingItem(id=row[0], shape_class=ShapeClass(row[1])))
        rows.append(values)
    return EmbeddingSet(
        model_id=model_id,
        modality=modality,
        dim=dim,
        items=items,
        matrix=np.array(rows, dtype=np.float32).reshape(len(rows), dim),
    )
