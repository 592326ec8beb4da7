"""Command-line interface: run extraction or list the model roster."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import ExtractorError
from .extract import ExtractorConfig, extract
from .registry import list_models


def _cmd_list_models(args: argparse.Namespace) -> int:
    for info in list_models():
        print(
            f"{info.model_id:16s} {info.representation:18s} "
            f"{info.data_domain:28s} {'/'.join(info.modalities):18s} {info.loader}"
        )
        print(f"{'':16s} pooling: {info.pooling}")
        if info.checkpoint:
            print(f"{'':16s} checkpoint: {info.checkpoint}")
    return 0


def _cmd_extract(args: argparse.Namespace) -> int:
    config = ExtractorConfig(
        model_id=args.model,
        modality=args.modality,
        manifest_path=Path(args.manifest),
        out_path=Path(args.out),
        media_dir=Path(args.media_dir) if args.media_dir else None,
        batch_size=args.batch_size,
        device=args.device,
    )
    out = extract(config)
    print(f"wrote {out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="soundshape-extract",
        description="Encode soundshape stimuli with pretrained or built-in models",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list-models", help="show the model roster")
    p.set_defaults(func=_cmd_list_models)

    p = sub.add_parser("extract", help="encode one modality of a manifest")
    p.add_argument("--model", required=True)
    p.add_argument("--modality", required=True, choices=["image", "audio", "text"])
    p.add_argument("--manifest", required=True, metavar="PATH")
    p.add_argument("--media-dir", metavar="DIR")
    p.add_argument("--out", required=True, metavar="PATH")
    p.add_argument("--batch-size", type=int, default=32, metavar="N")
    p.add_argument("--device", default="cpu")
    p.set_defaults(func=_cmd_extract)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ExtractorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
