#!/usr/bin/env python3
"""Convert an aclImdb split directory (pos/ and neg/ subdirs of .txt reviews)
into the tokenizer CLI's line-delimited record format."""

import json
import sys
from pathlib import Path


def convert(split_dir: Path, out_path: Path) -> int:
    records = []
    for label_name, label in (("neg", 0), ("pos", 1)):
        sub = split_dir / label_name
        if not sub.is_dir():
            raise SystemExit(f"missing directory: {sub}")
        for path in sorted(sub.glob("*.txt")):
            text = path.read_text(encoding="utf-8").replace("<br />", " ")
            records.append({"id": f"{label_name}/{path.stem}", "text": text, "label": label})
    out_path.parent.mkdir(parents=True, exist_ok=True)
    with out_path.open("w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")
    return len(records)


if __name__ == "__main__":
    if len(sys.argv) != 3:
        raise SystemExit("usage: aclimdb_to_jsonl.py <aclImdb/train|test dir> <out.jsonl>")
    n = convert(Path(sys.argv[1]), Path(sys.argv[2]))
    print(f"wrote {n} records to {sys.argv[2]}")
