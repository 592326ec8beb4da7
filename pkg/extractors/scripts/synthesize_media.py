#!/usr/bin/env python3
"""Emit media-synthesis request files from a dataset manifest.

This is the documented manual step between `soundshape gen-stimuli` and
extraction: it does NOT call any service itself. It writes two JSONL
request lists you can feed to your image-generation and TTS tooling:

    images.jsonl   {"id", "prompt", "seed", "file"}   one per image
    speech.jsonl   {"id", "ipa", "text", "voice", "file"}   one per utterance

Each record names the output file the extractor will look for
({media_dir}/{id}.png or {id}.wav). How you fulfil the requests (which
diffusion checkpoint, which TTS voices map to the manifest's speaker
tags) is deployment configuration; record it alongside the media.

Usage:
    python synthesize_media.py MANIFEST.json OUT_DIR
"""

from __future__ import annotations

import json
import sys
from pathlib import Path


def main(argv: list[str]) -> int:
    if len(argv) != 3:
        print(__doc__, file=sys.stderr)
        return 2
    manifest = json.loads(Path(argv[1]).read_text(encoding="utf-8"))
    out_dir = Path(argv[2])
    out_dir.mkdir(parents=True, exist_ok=True)

    with (out_dir / "images.jsonl").open("w", encoding="utf-8") as fh:
        for spec in manifest["images"]:
            fh.write(json.dumps({
                "id": spec["id"],
                "prompt": spec["prompt"],
                "seed": spec["seed"],
                "file": f"{spec['id']}.png",
            }, ensure_ascii=False) + "\n")

    with (out_dir / "speech.jsonl").open("w", encoding="utf-8") as fh:
        for spec in manifest["audio"]:
            fh.write(json.dumps({
                "id": spec["id"],
                "ipa": spec["ipa"],
                "text": spec["grapheme"],
                "voice": spec["speaker"],
                "file": f"{spec['id']}.wav",
            }, ensure_ascii=False) + "\n")

    print(f"wrote {out_dir}/images.jsonl ({len(manifest['images'])} requests)")
    print(f"wrote {out_dir}/speech.jsonl ({len(manifest['audio'])} requests)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(sys.argv))
