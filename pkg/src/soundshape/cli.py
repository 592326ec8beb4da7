"""Command-line pipeline orchestrator.

Commands read and write the module file formats and nothing else; given
identical inputs, flags, and seeds, every output file is byte-identical
across runs. Exit codes: 0 success, 1 validation failure, 2 usage
error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report as report_mod
from .embedstore import Modality, read_csv_set, read_set, validate_set, write_set
from .errors import SoundShapeError
from .fixtures import FixtureSpec, synth_fixture
from .metrics import evaluate
from .probe import ScoreTable, ScoreType, geometric_scores, phonetic_scores
from .stimuli import build_manifest, default_speakers, read_manifest, write_manifest


def _load_set(path: str, modality_hint: Modality):
    p = Path(path)
    if p.suffix == ".csv":
        return read_csv_set(p, model_id=p.stem, modality=modality_hint)
    return read_set(p)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_gen_stimuli(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    manifest = build_manifest(
        seeds_per_adjective=args.seeds,
        speakers=default_speakers(args.speakers),
    )
    path = out_dir / "manifest.json"
    write_manifest(manifest, path)
    print(f"wrote {path} ({len(manifest.images)} image prompts, "
          f"{len(manifest.audio)} audio stimuli)")
    return 0


def _cmd_validate_store(args: argparse.Namespace) -> int:
    targets = [
        ("images", args.images, Modality.IMAGE),
        ("audio", args.audio, Modality.AUDIO),
        ("text", args.text, Modality.TEXT),
    ]
    any_findings = False
    for label, path, hint in targets:
        if path is None:
            continue
        findings = validate_set(_load_set(path, hint))
        if findings:
            any_findings = True
            for f in findings:
                row = "" if f.row is None else f" row={f.row}"
                print(f"{label}: {f.code.value}{row}: {f.message}")
        else:
            print(f"{label}: ok")
    return 1 if any_findings else 0


def _cmd_probe(args: argparse.Namespace) -> int:
    image_set = _load_set(args.images, Modality.IMAGE)
    if args.audio is not None:
        sound_set = _load_set(args.audio, Modality.AUDIO)
    else:
        sound_set = _load_set(args.text, Modality.TEXT)
    if args.score == ScoreType.GEOMETRIC.value:
        table = geometric_scores(image_set, sound_set, normalize_rows=args.normalize_rows)
    else:
        table = phonetic_scores(sound_set, image_set, normalize_rows=args.normalize_rows)

    if image_set.model_id == sound_set.model_id:
        model_id = image_set.model_id
    else:
        model_id = f"{image_set.model_id}+{sound_set.model_id}"
    for row in table.rows:
        row.meta.setdefault("modelId", model_id)

    Path(args.out).write_text(table.to_csv(), encoding="utf-8")
    print(f"wrote {args.out} ({len(table.rows)} rows)")
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    text = Path(args.scores).read_text(encoding="utf-8")
    default = ScoreType(args.score) if args.score else None
    table = ScoreTable.from_csv(text, default_score_type=default)
    model_ids = {row.meta.get("modelId", "") for row in table.rows}
    model_id = model_ids.pop() if len(model_ids) == 1 else ""
    result = evaluate(
        table,
        perm_rounds=args.perm_rounds,
        perm_seed=args.seed,
        model_id=model_id,
    )
    if args.format == "md":
        _emit(report_mod.summary_markdown([result]), args.out)
    else:
        _emit(report_mod.summary_csv([result]), args.out)
    return 0


def _cmd_report(args: argparse.Namespace) -> int:
    text = Path(args.scores).read_text(encoding="utf-8")
    table = ScoreTable.from_csv(text, default_score_type=ScoreType.GEOMETRIC)
    manifest = read_manifest(args.manifest)
    profiles = report_mod.phone_group_means(table, manifest)
    if args.format == "svg":
        _emit(report_mod.render_profiles_svg(profiles), args.out)
    elif args.format == "md":
        _emit(report_mod.profiles_markdown(profiles), args.out)
    else:
        _emit(report_mod.profiles_csv(profiles), args.out)
    return 0


def _cmd_synth_fixture(args: argparse.Namespace) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    spec = FixtureSpec(
        dim=args.dim,
        items_per_class=args.items_per_class,
        delta=args.delta,
        sigma=args.sigma,
        seed=args.seed,
    )
    image_set, audio_set = synth_fixture(spec)
    write_set(image_set, out_dir / "images.embs")
    write_set(audio_set, out_dir / "audio.embs")
    print(f"wrote {out_dir}/images.embs and {out_dir}/audio.embs "
          f"({spec.items_per_class} per class, dim {spec.dim})")
    return 0


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _nonneg_float(value: str) -> float:
    x = float(value)
    if x < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return x


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soundshape",
        description="Sound-shape association probing pipeline",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-stimuli", help="write the dataset manifest")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--speakers", type=_positive_int, default=4, metavar="N")
    p.add_argument("--seeds", type=_positive_int, default=25, metavar="N")
    p.set_defaults(func=_cmd_gen_stimuli)

    p = sub.add_parser("validate-store", help="validate embedding-set files")
    p.add_argument("--images", metavar="PATH")
    p.add_argument("--audio", metavar="PATH")
    p.add_argument("--text", metavar="PATH")
    p.set_defaults(func=_cmd_validate_store)

    p = sub.add_parser("probe", help="compute projection scores")
    p.add_argument("--images", required=True, metavar="PATH")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--audio", metavar="PATH")
    group.add_argument("--text", metavar="PATH")
    p.add_argument("--score", required=True, choices=["geometric", "phonetic"])
    p.add_argument("--normalize-rows", action="store_true")
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(func=_cmd_probe)

    p = sub.add_parser("eval", help="AUC / tau summary for a score table")
    p.add_argument("scores", metavar="SCORES.csv")
    p.add_argument("--perm-rounds", type=_positive_int, default=None, metavar="N")
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.add_argument("--score", choices=["geometric", "phonetic"], default=None)
    p.add_argument("--format", choices=["csv", "md"], default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("report", help="per-phone score profiles")
    p.add_argument("scores", metavar="SCORES.csv")
    p.add_argument("manifest", metavar="MANIFEST.json")
    p.add_argument("--format", choices=["csv", "md", "svg"], default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_report)

    p = sub.add_parser("synth-fixture", help="write synthetic embedding sets")
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--dim", type=_positive_int, default=64)
    p.add_argument("--items-per-class", type=_positive_int, default=100, metavar="M")
    p.add_argument("--delta", type=_nonneg_float, default=1.0)
    p.add_argument("--sigma", type=_nonneg_float, default=0.0)
    p.add_argument("--seed", type=int, default=0, metavar="N")
    p.set_defaults(func=_cmd_synth_fixture)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SoundShapeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
