"""Line-delimited corpus record formats (raw and encoded), canonical form.

One JSON object per line, UTF-8, fixed key order, newline-terminated. Raw
records carry exactly one of text/tokens; encoded records carry token ids.
"""

from __future__ import annotations

import json
from pathlib import Path

from .dictionary import MultiTokError
from .encoder import EncodedCorpus, EncodedSample, Sample
from .tokenizers import SubwordVocab, word_tokenize

BASE_MODES = ("word", "subword", "pretokenized")


def _records(path: str | Path):
    for lineno, line in enumerate(Path(path).read_bytes().decode("utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
        except json.JSONDecodeError as exc:
            raise MultiTokError(f"{path}:{lineno}: malformed record: {exc}") from None
        if not isinstance(rec, dict):
            raise MultiTokError(f"{path}:{lineno}: record is not an object")
        yield lineno, rec


def load_corpus(
    path: str | Path,
    base: str = "word",
    subword_vocab: SubwordVocab | None = None,
) -> list[Sample]:
    """Read raw corpus records and produce base-token samples.

    `base` selects how text fields become base tokens: whitespace words,
    greedy subword pieces over those words, or none at all (pretokenized
    inputs must carry a tokens field). Records that already carry tokens are
    passed through unchanged under any mode.
    """
    if base not in BASE_MODES:
        raise MultiTokError(f"unknown base tokenizer {base!r}: expected one of {BASE_MODES}")
    if base == "subword" and subword_vocab is None:
        raise MultiTokError("base 'subword' requires a vocabulary file")
    samples: list[Sample] = []
    for lineno, rec in _records(path):
        has_text = "text" in rec
        has_tokens = "tokens" in rec
        if has_text == has_tokens:
            raise MultiTokError(f"{path}:{lineno}: exactly one of text/tokens is required")
        sample_id = rec.get("id", len(samples))
        label = rec.get("label")
        if label is not None and not isinstance(label, int):
            raise MultiTokError(f"{path}:{lineno}: label must be an integer")
        if has_tokens:
            tokens = rec["tokens"]
            if not isinstance(tokens, list) or not all(isinstance(t, str) and t for t in tokens):
                raise MultiTokError(f"{path}:{lineno}: tokens must be a list of nonempty strings")
            samples.append(Sample(sample_id, tokens, label, word_count=len(tokens)))
            continue
        if base == "pretokenized":
            raise MultiTokError(f"{path}:{lineno}: pretokenized base requires a tokens field")
        words = word_tokenize(rec["text"])
        tokens = subword_vocab.tokenize(words) if base == "subword" else words
        samples.append(Sample(sample_id, tokens, label, word_count=len(words)))
    return samples


def write_corpus(path: str | Path, samples: list[Sample]) -> None:
    """Write raw records with a tokens field (used by fixtures and fetchers)."""
    lines = []
    for sample in samples:
        rec: dict = {"id": sample.sample_id, "tokens": sample.tokens}
        if sample.label is not None:
            rec["label"] = sample.label
        lines.append(json.dumps(rec, ensure_ascii=False, separators=(",", ":")))
    Path(path).write_bytes(("\n".join(lines) + "\n").encode("utf-8") if lines else b"")


def encoded_to_bytes(encoded: EncodedCorpus) -> bytes:
    lines = []
    for sample in encoded:
        rec: dict = {"id": sample.sample_id, "token_ids": sample.token_ids}
        if sample.label is not None:
            rec["label"] = sample.label
        rec["multitok_applied"] = sample.multitok_applied
        lines.append(json.dumps(rec, ensure_ascii=False, separators=(",", ":")))
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""


def write_encoded(path: str | Path, encoded: EncodedCorpus) -> None:
    Path(path).write_bytes(encoded_to_bytes(encoded))


def load_encoded(path: str | Path) -> EncodedCorpus:
    samples: list[EncodedSample] = []
    for lineno, rec in _records(path):
        token_ids = rec.get("token_ids")
        if not isinstance(token_ids, list) or not all(isinstance(t, int) and t >= 0 for t in token_ids):
            raise MultiTokError(f"{path}:{lineno}: token_ids must be a list of non-negative integers")
        samples.append(
            EncodedSample(
                rec.get("id", len(samples)),
                token_ids,
                rec.get("label"),
                bool(rec.get("multitok_applied", True)),
            )
        )
    return EncodedCorpus(samples)
