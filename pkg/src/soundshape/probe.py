"""Semantic-direction probing.

The round-vs-sharp axis of an embedding space is the difference of
class-mean embeddings; items are scored by cosine similarity to that
axis. Scores are oriented so that positive always means round-leaning:
the direction points from the sharp mean toward the round mean.

All arithmetic accumulates in 64-bit floats over the 32-bit stored
matrices. Class means are summed row by row in input order, so results
are reproducible for identical inputs.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .embedstore import EmbeddingSet, Modality
from .errors import (
    DimMismatchError,
    EmptyClassError,
    EmptyResultError,
    FormatViolation,
    ZeroDirectionError,
    ZeroNormError,
)
from .phonology import ShapeClass

_ZERO_DIRECTION_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class SemanticDirection:
    """Mean-difference axis; positive projection means round-leaning."""

    vector: np.ndarray
    source_modality: Modality
    n_round: int
    n_sharp: int


class ScoreType(str, Enum):
    GEOMETRIC = "geometric"
    PHONETIC = "phonetic"


@dataclass(frozen=True)
class ScoreRow:
    id: str
    shape_class: ShapeClass
    score: float
    meta: dict[str, str] = field(default_factory=dict)


@dataclass
class ScoreTable:
    score_type: ScoreType
    rows: list[ScoreRow]

    def to_csv(self) -> str:
        """Render as ``id,class,score,scoreType,<meta columns>``.

        Scores are written as shortest round-trip decimals; meta columns
        are the sorted union of row meta keys.
        """
        meta_keys = sorted(
            {k for row in self.rows for k in row.meta} - {"scoreType"}
        )
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "class", "score", "scoreType", *meta_keys])
        for row in self.rows:
            writer.writerow(
                [
                    row.id,
                    row.shape_class.value,
                    repr(row.score),
                    self.score_type.value,
                    *(row.meta.get(k, "") for k in meta_keys),
                ]
            )
        return buf.getvalue()

    @classmethod
    def from_csv(
        cls,
        text: str,
        default_score_type: ScoreType | None = None,
    ) -> ScoreTable:
        reader = csv.reader(io.StringIO(text))
        try:
            header = next(reader)
        except StopIteration:
            raise FormatViolation("empty score CSV") from None
        if header[:3] != ["id", "class", "score"]:
            raise FormatViolation("score CSV header must start id,class,score")
        extra = header[3:]
        type_col = extra.index("scoreType") + 3 if "scoreType" in extra else None
        meta_cols = [(i + 3, name) for i, name in enumerate(extra) if name != "scoreType"]

        rows: list[ScoreRow] = []
        seen_types: set[str] = set()
        for line_no, record in enumerate(reader, start=2):
            if not record:
                continue
            if len(record) != len(header):
                raise FormatViolation(f"line {line_no}: expected {len(header)} fields")
            if record[1] not in (ShapeClass.ROUND.value, ShapeClass.SHARP.value):
                raise FormatViolation(f"line {line_no}: unknown class {record[1]!r}")
            try:
                score = float(record[2])
            except ValueError as exc:
                raise FormatViolation(f"line {line_no}: bad score: {exc}") from exc
            if type_col is not None:
                seen_types.add(record[type_col])
            meta = {name: record[i] for i, name in meta_cols if record[i] != ""}
            rows.append(ScoreRow(record[0], ShapeClass(record[1]), score, meta))

        if type_col is not None and seen_types:
            if len(seen_types) > 1:
                raise FormatViolation(f"mixed scoreType values: {sorted(seen_types)}")
            try:
                score_type = ScoreType(seen_types.pop())
            except ValueError as exc:
                raise FormatViolation(str(exc)) from None
        elif default_score_type is not None:
            score_type = default_score_type
        else:
            raise FormatViolation("score CSV has no scoreType column and no default given")
        return cls(score_type=score_type, rows=rows)


def _sequential_mean(rows: np.ndarray) -> np.ndarray:
    acc = np.zeros(rows.shape[1], dtype=np.float64)
    for row in rows:
        acc += row
    return acc / len(rows)


def _normalized_rows(matrix: np.ndarray, labels: list[str]) -> np.ndarray:
    norms = np.linalg.norm(matrix, axis=1)
    zero = np.nonzero(norms == 0.0)[0]
    if zero.size:
        raise ZeroNormError(f"row {labels[zero[0]]!r} has zero norm")
    return matrix / norms[:, None]


def class_mean_direction(
    embedding_set: EmbeddingSet,
    normalize_rows: bool = False,
) -> SemanticDirection:
    """Round-mean minus sharp-mean of the set's rows.

    With ``normalize_rows`` each row is L2-normalized before averaging,
    which makes the axis insensitive to per-row embedding scale.
    """
    matrix = embedding_set.matrix.astype(np.float64)
    if normalize_rows:
        matrix = _normalized_rows(matrix, [item.id for item in embedding_set.items])
    round_idx = [
        i for i, item in enumerate(embedding_set.items)
        if item.shape_class is ShapeClass.ROUND
    ]
    sharp_idx = [
        i for i, item in enumerate(embedding_set.items)
        if item.shape_class is ShapeClass.SHARP
    ]
    if not round_idx:
        raise EmptyClassError(f"{embedding_set.model_id!r} has no round rows")
    if not sharp_idx:
        raise EmptyClassError(f"{embedding_set.model_id!r} has no sharp rows")
    vector = _sequential_mean(matrix[round_idx]) - _sequential_mean(matrix[sharp_idx])
    if np.linalg.norm(vector) <= _ZERO_DIRECTION_TOL:
        raise ZeroDirectionError("class means coincide; direction undefined")
    return SemanticDirection(
        vector=vector,
        source_modality=embedding_set.modality,
        n_round=len(round_idx),
        n_sharp=len(sharp_idx),
    )


def cosine_score(embedding: np.ndarray, direction: SemanticDirection) -> float:
    """Cosine similarity of one embedding with the class axis, in [-1, 1]."""
    e = np.asarray(embedding, dtype=np.float64)
    w = direction.vector
    if e.shape != w.shape:
        raise DimMismatchError(f"embedding has shape {e.shape}, direction {w.shape}")
    e_norm = float(np.linalg.norm(e))
    w_norm = float(np.linalg.norm(w))
    if e_norm == 0.0 or w_norm == 0.0:
        raise ZeroNormError("cosine undefined for zero-norm vector")
    value = float(e @ w) / (e_norm * w_norm)
    return min(1.0, max(-1.0, value))


def _score_set(
    query_set: EmbeddingSet,
    direction: SemanticDirection,
    score_type: ScoreType,
) -> ScoreTable:
    if not query_set.items:
        raise EmptyResultError(f"{query_set.model_id!r} has no rows to score")
    rows: list[ScoreRow] = []
    for item, vec in zip(query_set.items, query_set.matrix):
        try:
            score = cosine_score(vec, direction)
        except ZeroNormError:
            raise ZeroNormError(f"query row {item.id!r} has zero norm") from None
        rows.append(ScoreRow(item.id, item.shape_class, score, dict(item.meta)))
    return ScoreTable(score_type=score_type, rows=rows)


def geometric_scores(
    image_set: EmbeddingSet,
    audio_set: EmbeddingSet,
    normalize_rows: bool = False,
) -> ScoreTable:
    """Project sound embeddings onto the image-derived round/sharp axis.

    ``audio_set`` may hold audio or text-pseudoword embeddings; one row
    is emitted per item, in the query set's order. ``normalize_rows``
    applies to the direction-source rows (queries are scale-invariant
    under cosine).
    """
    if image_set.dim != audio_set.dim:
        raise DimMismatchError(
            f"image dim {image_set.dim} != query dim {audio_set.dim}"
        )
    direction = class_mean_direction(image_set, normalize_rows=normalize_rows)
    return _score_set(audio_set, direction, ScoreType.GEOMETRIC)


def phonetic_scores(
    audio_set: EmbeddingSet,
    image_set: EmbeddingSet,
    normalize_rows: bool = False,
) -> ScoreTable:
    """Project image embeddings onto the sound-derived round/sharp axis."""
    if image_set.dim != audio_set.dim:
        raise DimMismatchError(
            f"audio dim {audio_set.dim} != query dim {image_set.dim}"
        )
    direction = class_mean_direction(audio_set, normalize_rows=normalize_rows)
    return _score_set(image_set, direction, ScoreType.PHONETIC)
