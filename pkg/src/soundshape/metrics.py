"""Threshold-agnostic discrimination metrics over a score table.

ROC-AUC uses the Mann-Whitney pair formulation with half credit for
ties; Kendall's tau uses the tau-b tie correction with labels coded
round=1, sharp=0. Because the scores carry no calibrated scale, both
metrics depend only on rank order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import AllScoresTiedError, OneClassOnlyError
from .phonology import ShapeClass
from .probe import ScoreTable, ScoreType


@dataclass(frozen=True)
class EvalResult:
    score_type: ScoreType
    auc: float
    tau: float
    n: int
    n_round: int
    n_sharp: int
    p_value: float | None = None
    model_id: str = ""


def _round_mask(labels: Iterable[ShapeClass | str]) -> np.ndarray:
    mask: list[bool] = []
    for label in labels:
        value = label.value if isinstance(label, ShapeClass) else label
        if value == ShapeClass.ROUND.value:
            mask.append(True)
        elif value == ShapeClass.SHARP.value:
            mask.append(False)
        else:
            raise ValueError(f"label must be round or sharp, got {label!r}")
    return np.asarray(mask, dtype=bool)


def _checked_inputs(
    scores: Sequence[float],
    labels: Iterable[ShapeClass | str],
) -> tuple[np.ndarray, np.ndarray]:
    s = np.asarray(scores, dtype=np.float64)
    mask = _round_mask(labels)
    if s.ndim != 1 or len(s) != len(mask):
        raise ValueError("scores and labels must be equal-length 1-D sequences")
    if not np.isfinite(s).all():
        raise ValueError("scores must be finite")
    if mask.all() or not mask.any():
        raise OneClassOnlyError("both classes must be present")
    return s, mask


def _ranks_with_ties(scores: np.ndarray) -> np.ndarray:
    """1-based ranks, tied scores sharing their average rank."""
    order = np.argsort(scores, kind="stable")
    ranks = np.empty(len(scores), dtype=np.float64)
    ranks[order] = np.arange(1, len(scores) + 1, dtype=np.float64)
    sorted_scores = scores[order]
    i = 0
    while i < len(sorted_scores):
        j = i
        while j + 1 < len(sorted_scores) and sorted_scores[j + 1] == sorted_scores[i]:
            j += 1
        if j > i:
            ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _u_statistic(scores: np.ndarray, mask: np.ndarray) -> float:
    """Mann-Whitney U for the round class: #(round>sharp) + 0.5 #(ties)."""
    ranks = _ranks_with_ties(scores)
    m = int(mask.sum())
    return float(ranks[mask].sum()) - m * (m + 1) / 2.0


def roc_auc(
    scores: Sequence[float],
    labels: Iterable[ShapeClass | str],
) -> float:
    """Probability a round item outscores a sharp one, ties half-credited."""
    s, mask = _checked_inputs(scores, labels)
    m = int(mask.sum())
    n = len(s) - m
    return _u_statistic(s, mask) / (m * n)


def kendall_tau_b(
    scores: Sequence[float],
    labels: Iterable[ShapeClass | str],
    variant: str = "b",
) -> float:
    """Rank correlation between scores and binary labels (round=1).

    tau-b divides concordant-minus-discordant by
    sqrt((P - Tx)(P - Ty)) where P is the total pair count and Tx, Ty
    the score-tied and label-tied pair counts. ``variant="a"`` skips the
    tie correction and divides by P.
    """
    if variant not in ("a", "b"):
        raise ValueError(f"variant must be 'a' or 'b', got {variant!r}")
    s, mask = _checked_inputs(scores, labels)
    m = int(mask.sum())
    n = len(s) - m
    total = m + n

    # Over cross-class pairs: C - D = 2U - mn (score ties cancel).
    c_minus_d = 2.0 * _u_statistic(s, mask) - m * n

    _, counts = np.unique(s, return_counts=True)
    tx = int((counts * (counts - 1) // 2).sum())
    pairs = total * (total - 1) // 2
    ty = m * (m - 1) // 2 + n * (n - 1) // 2
    if tx == pairs:
        raise AllScoresTiedError("all scores identical; tau undefined")
    if variant == "a":
        return c_minus_d / pairs
    return c_minus_d / math.sqrt((pairs - tx) * (pairs - ty))


def permutation_p_value(
    scores: Sequence[float],
    labels: Iterable[ShapeClass | str],
    rounds: int = 999,
    seed: int = 0,
    two_sided: bool = False,
) -> float:
    """Label-shuffle significance of the observed AUC.

    One-sided toward AUC > 0.5 by default:
    ``p = (1 + #{shuffled AUC >= observed}) / (rounds + 1)``.
    Two-sided doubles the smaller tail. Shuffles come from
    ``numpy.random.default_rng(seed)``, so results are reproducible.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    s, mask = _checked_inputs(scores, labels)
    ranks = _ranks_with_ties(s)
    m = int(mask.sum())
    base = m * (m + 1) / 2.0
    u_observed = float(ranks[mask].sum()) - base

    rng = np.random.default_rng(seed)
    greater = 0
    lesser = 0
    for _ in range(rounds):
        shuffled = rng.permutation(mask)
        u = float(ranks[shuffled].sum()) - base
        if u >= u_observed:
            greater += 1
        if u <= u_observed:
            lesser += 1
    p_hi = (1 + greater) / (rounds + 1)
    if not two_sided:
        return p_hi
    p_lo = (1 + lesser) / (rounds + 1)
    return min(1.0, 2.0 * min(p_hi, p_lo))


def evaluate(
    table: ScoreTable,
    perm_rounds: int | None = None,
    perm_seed: int = 0,
    model_id: str = "",
) -> EvalResult:
    """Bundle AUC, tau-b, and (optionally) a permutation p-value."""
    scores = [row.score for row in table.rows]
    labels = [row.shape_class for row in table.rows]
    n_round = sum(1 for lbl in labels if lbl is ShapeClass.ROUND)
    p_value = None
    if perm_rounds is not None:
        p_value = permutation_p_value(scores, labels, rounds=perm_rounds, seed=perm_seed)
    return EvalResult(
        score_type=table.score_type,
        auc=roc_auc(scores, labels),
        tau=kendall_tau_b(scores, labels),
        n=len(scores),
        n_round=n_round,
        n_sharp=len(scores) - n_round,
        p_value=p_value,
        model_id=model_id,
    )
