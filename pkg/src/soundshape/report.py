"""Aggregation and presentation: score summaries and per-phone profiles.

Per-phone profiles group a sound score table by the first syllable's
consonant and, separately, its vowel, then average. Summaries render
one row per (model, score type) with a fixed random baseline appended.
Output is data emission only: CSV, markdown, a JSON series file, and a
minimal self-contained SVG with deterministic bytes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Sequence

from .errors import UnresolvedIdError
from .metrics import EvalResult
from .phonology import Phone, PhoneKind, ShapeClass
from .probe import ScoreTable
from .stimuli import DatasetManifest


class GroupKind(str, Enum):
    FIRST_CONSONANT = "firstConsonant"
    FIRST_VOWEL = "firstVowel"


@dataclass(frozen=True)
class PhoneGroupProfile:
    phone: Phone
    group_kind: GroupKind
    mean_score: float
    count: int

    @property
    def shape_class(self) -> ShapeClass:
        return self.phone.shape_class


def phone_group_means(
    table: ScoreTable,
    manifest: DatasetManifest,
) -> list[PhoneGroupProfile]:
    """Average score per first consonant and per first vowel.

    Every score row id must resolve to an audio stimulus in the
    manifest. Consonant profiles come first, then vowel profiles; each
    block is sorted ascending by mean score with ties broken by IPA.
    """
    by_id = {spec.id: spec for spec in manifest.audio}
    sums: dict[tuple[GroupKind, Phone], float] = {}
    counts: dict[tuple[GroupKind, Phone], int] = {}
    for row in table.rows:
        spec = by_id.get(row.id)
        if spec is None:
            raise UnresolvedIdError(f"score row {row.id!r} not in manifest audio list")
        first = spec.word.syllables[0]
        for kind, phone in (
            (GroupKind.FIRST_CONSONANT, first.consonant),
            (GroupKind.FIRST_VOWEL, first.vowel),
        ):
            key = (kind, phone)
            sums[key] = sums.get(key, 0.0) + row.score
            counts[key] = counts.get(key, 0) + 1

    profiles = [
        PhoneGroupProfile(
            phone=phone,
            group_kind=kind,
            mean_score=sums[(kind, phone)] / counts[(kind, phone)],
            count=counts[(kind, phone)],
        )
        for kind, phone in sums
    ]

    def block(kind: GroupKind) -> list[PhoneGroupProfile]:
        return sorted(
            (p for p in profiles if p.group_kind is kind),
            key=lambda p: (p.mean_score, p.phone.ipa),
        )

    return block(GroupKind.FIRST_CONSONANT) + block(GroupKind.FIRST_VOWEL)


# --- summary table ----------------------------------------------------------

BASELINE_MODEL_ID = "(Random)"


def _sorted_results(results: Sequence[EvalResult]) -> list[EvalResult]:
    if not results:
        raise ValueError("results must be non-empty")
    return sorted(results, key=lambda r: (r.model_id, r.score_type.value))


def summary_csv(results: Sequence[EvalResult]) -> str:
    """``modelId,scoreType,auc,tau,n,p`` rows plus the random baseline."""
    lines = ["modelId,scoreType,auc,tau,n,p"]
    for r in _sorted_results(results):
        p = "" if r.p_value is None else repr(r.p_value)
        lines.append(
            f"{r.model_id},{r.score_type.value},{r.auc!r},{r.tau!r},{r.n},{p}"
        )
    lines.append(f"{BASELINE_MODEL_ID},,0.50,0.00,,")
    return "\n".join(lines) + "\n"


def summary_markdown(results: Sequence[EvalResult]) -> str:
    lines = [
        "| Model | Score | AUC | tau | n | p |",
        "|---|---|---|---|---|---|",
    ]
    for r in _sorted_results(results):
        p = "-" if r.p_value is None else f"{r.p_value:.4g}"
        lines.append(
            f"| {r.model_id} | {r.score_type.value} "
            f"| {r.auc:.2f} | {r.tau:.2f} | {r.n} | {p} |"
        )
    lines.append(f"| {BASELINE_MODEL_ID} | - | 0.50 | 0.00 | - | - |")
    return "\n".join(lines) + "\n"


# --- per-phone profile emission ----------------------------------------------

def profiles_csv(profiles: Sequence[PhoneGroupProfile]) -> str:
    """``groupKind,ipa,shapeClass,count,meanScore`` in profile order."""
    if not profiles:
        raise ValueError("profiles must be non-empty")
    lines = ["groupKind,ipa,shapeClass,count,meanScore"]
    for p in profiles:
        lines.append(
            f"{p.group_kind.value},{p.phone.ipa},{p.shape_class.value},"
            f"{p.count},{p.mean_score!r}"
        )
    return "\n".join(lines) + "\n"


def profiles_markdown(profiles: Sequence[PhoneGroupProfile]) -> str:
    if not profiles:
        raise ValueError("profiles must be non-empty")
    lines = [
        "| Group | Phone | Class | Count | Mean score |",
        "|---|---|---|---|---|",
    ]
    for p in profiles:
        lines.append(
            f"| {p.group_kind.value} | {p.phone.ipa} | {p.shape_class.value} "
            f"| {p.count} | {p.mean_score:+.4f} |"
        )
    return "\n".join(lines) + "\n"


def plot_series(profiles: Sequence[PhoneGroupProfile]) -> dict:
    """Plot-ready series: consonants and vowels on separate scales."""
    if not profiles:
        raise ValueError("profiles must be non-empty")
    series: dict[str, list[dict]] = {"consonants": [], "vowels": []}
    for p in profiles:
        key = "consonants" if p.phone.kind is PhoneKind.CONSONANT else "vowels"
        series[key].append(
            {
                "ipa": p.phone.ipa,
                "meanScore": p.mean_score,
                "shapeClass": p.shape_class.value,
                "count": p.count,
            }
        )
    return series


def write_plot_series(profiles: Sequence[PhoneGroupProfile], path: str | Path) -> None:
    text = json.dumps(plot_series(profiles), ensure_ascii=False, indent=2)
    Path(path).write_text(text + "\n", encoding="utf-8")


# --- SVG rendering ------------------------------------------------------------

_COLORS = {
    ShapeClass.ROUND: "#3b6fb6",
    ShapeClass.SHARP: "#c0392b",
    ShapeClass.NEUTRAL: "#7f8c8d",
}

_WIDTH = 720
_LEFT = 70
_RIGHT = 40
_ROW_H = 18
_TITLE_H = 26
_GAP = 24


def _panel(
    entries: list[dict],
    title: str,
    y0: int,
    lines: list[str],
) -> int:
    scores = [e["meanScore"] for e in entries]
    lo = min(0.0, min(scores))
    hi = max(0.0, max(scores))
    if hi == lo:
        hi = lo + 1.0
    span = _WIDTH - _LEFT - _RIGHT

    def x(value: float) -> float:
        return _LEFT + (value - lo) / (hi - lo) * span

    lines.append(
        f'<text x="{_LEFT}" y="{y0 + 14}" class="title">{title}</text>'
    )
    y = y0 + _TITLE_H
    zero_x = x(0.0)
    bottom = y + len(entries) * _ROW_H
    lines.append(
        f'<line x1="{zero_x:.2f}" y1="{y}" x2="{zero_x:.2f}" y2="{bottom}" class="axis"/>'
    )
    for e in entries:
        bar_x = min(zero_x, x(e["meanScore"]))
        bar_w = abs(x(e["meanScore"]) - zero_x)
        color = _COLORS[ShapeClass(e["shapeClass"])]
        cy = y + _ROW_H / 2
        lines.append(
            f'<rect x="{bar_x:.2f}" y="{y + 3}" width="{max(bar_w, 0.5):.2f}" '
            f'height="{_ROW_H - 6}" fill="{color}"/>'
        )
        lines.append(
            f'<text x="{_LEFT - 8}" y="{cy + 4:.2f}" class="label" '
            f'text-anchor="end">{e["ipa"]}</text>'
        )
        lines.append(
            f'<text x="{_WIDTH - _RIGHT + 4}" y="{cy + 4:.2f}" class="value">'
            f'{e["meanScore"]:+.4f}</text>'
        )
        y += _ROW_H
    return y + _GAP


def render_profiles_svg(profiles: Sequence[PhoneGroupProfile]) -> str:
    """Self-contained SVG strip chart, deterministic bytes for equal input."""
    series = plot_series(profiles)
    body: list[str] = []
    y = 10
    if series["consonants"]:
        y = _panel(series["consonants"], "Consonants (mean score)", y, body)
    if series["vowels"]:
        y = _panel(series["vowels"], "Vowels (mean score)", y, body)
    height = y
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_WIDTH}" '
        f'height="{height}" viewBox="0 0 {_WIDTH} {height}">\n'
        "<style>\n"
        "text { font-family: monospace; font-size: 12px; }\n"
        ".title { font-size: 13px; font-weight: bold; }\n"
        ".axis { stroke: #444444; stroke-width: 1; }\n"
        "</style>\n"
    )
    return head + "\n".join(body) + "\n</svg>\n"
