"""Compression-ratio and training-time metrics, plus dictionary statistics."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .dictionary import MultiTokDictionary, MultiTokError
from .encoder import EncodedCorpus, Sample
from .pruning import FrequencyTable


@dataclass
class CompressionReport:
    tokens_before: int  # sum of n(x) over the base-token corpus
    tokens_after: int  # sum of m(x) over the encoded corpus
    ratio: float  # tokens_after / tokens_before
    words_reference: int  # word-level token count, for cross-base comparisons
    ratio_vs_words: float
    dict_total: int = 0
    dict_multiword: int = 0
    dict_pruned: int = 0
    training_time: int | None = None
    epsilon: float | None = None

    def to_document(self) -> dict:
        doc = {
            "tokens_before": self.tokens_before,
            "tokens_after": self.tokens_after,
            "ratio": round(self.ratio, 4),
            "words_reference": self.words_reference,
            "ratio_vs_words": round(self.ratio_vs_words, 4),
            "dict_total": self.dict_total,
            "dict_multiword": self.dict_multiword,
            "dict_pruned": self.dict_pruned,
        }
        if self.epsilon is not None:
            doc["epsilon"] = self.epsilon
            doc["training_time"] = self.training_time
        return doc

    def to_bytes(self) -> bytes:
        return (json.dumps(self.to_document(), ensure_ascii=False, separators=(",", ":")) + "\n").encode("utf-8")

    def save(self, path: str | Path) -> None:
        Path(path).write_bytes(self.to_bytes())


def compression_ratio(
    original: list[Sample],
    encoded: EncodedCorpus,
    d: MultiTokDictionary | None = None,
    dict_pruned: int = 0,
) -> CompressionReport:
    """Token counts before/after encoding and their ratio.

    words_reference counts underlying words (equal to tokens_before for
    word-level streams) so ratios against a different base, like subword
    streams at >1 tokens per word, stay expressible.
    """
    if len(original) != len(encoded):
        raise MultiTokError(f"corpus mismatch: {len(original)} original vs {len(encoded)} encoded samples")
    for sample, enc in zip(original, encoded):
        if sample.sample_id != enc.sample_id:
            raise MultiTokError(f"corpus mismatch: sample {sample.sample_id!r} paired with {enc.sample_id!r}")
    tokens_before = sum(s.n for s in original)
    tokens_after = sum(e.m for e in encoded)
    if tokens_before == 0:
        raise MultiTokError("original corpus has no tokens")
    words_reference = sum(s.word_count if s.word_count is not None else s.n for s in original)
    return CompressionReport(
        tokens_before=tokens_before,
        tokens_after=tokens_after,
        ratio=tokens_after / tokens_before,
        words_reference=words_reference,
        ratio_vs_words=tokens_after / words_reference,
        dict_total=len(d) if d is not None else 0,
        dict_multiword=d.num_multiword if d is not None else 0,
        dict_pruned=dict_pruned,
    )


def training_time(losses: Sequence[float], epsilon: float, lookahead: int = 10) -> int | None:
    """Earliest epoch index i with the next `lookahead` losses strictly below epsilon.

    Losses are 1-based per-epoch values l_1..l_E; the returned i satisfies
    l_{i+1}..l_{i+lookahead} < epsilon. None means not converged.
    """
    if epsilon <= 0:
        raise MultiTokError(f"epsilon {epsilon} must be positive")
    if not losses:
        raise MultiTokError("empty loss curve")
    for loss in losses:
        if not math.isfinite(loss) or loss < 0:
            raise MultiTokError(f"invalid loss value {loss!r}")
    for i in range(len(losses) - lookahead + 1):
        if all(loss < epsilon for loss in losses[i : i + lookahead]):
            return i
    return None


def dictionary_stats(d: MultiTokDictionary, freq: FrequencyTable) -> dict:
    """Length/count histograms over multi-word entries, for threshold selection."""
    length_histogram: dict[int, int] = {}
    count_histogram: dict[int, int] = {}
    never_emitted = 0
    for entry in d.entries:
        if entry.length == 1:
            continue
        length_histogram[entry.length] = length_histogram.get(entry.length, 0) + 1
        emitted = freq.get(entry.id, 0)
        count_histogram[emitted] = count_histogram.get(emitted, 0) + 1
        if emitted == 0:
            never_emitted += 1
    return {
        "total_entries": len(d),
        "base_entries": d.num_base,
        "multiword_entries": d.num_multiword,
        "length_histogram": dict(sorted(length_histogram.items())),
        "count_histogram": dict(sorted(count_histogram.items())),
        "never_emitted": never_emitted,
    }


def read_loss_curve(path: str | Path) -> list[float]:
    """Read line-delimited epoch/loss pairs (epoch<TAB>loss, epochs 1..E)."""
    losses: list[float] = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise MultiTokError(f"{path}:{lineno}: expected 'epoch loss', got {line!r}")
        try:
            epoch, loss = int(parts[0]), float(parts[1])
        except ValueError:
            raise MultiTokError(f"{path}:{lineno}: malformed epoch/loss pair {line!r}") from None
        if epoch != len(losses) + 1:
            raise MultiTokError(f"{path}:{lineno}: epoch {epoch} out of order")
        losses.append(loss)
    return losses


def write_loss_curve(path: str | Path, losses: Sequence[float]) -> None:
    lines = [f"{epoch}\t{loss!r}" for epoch, loss in enumerate(losses, start=1)]
    Path(path).write_bytes(("\n".join(lines) + "\n").encode("utf-8") if lines else b"")
