"""Frequency analysis and pruning of rare multi-word tokens.

Pruned occurrences are re-expanded into surviving tokens (recursively through
the prefix chain) and the surviving id space is compacted so downstream
embedding tables stay dense.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .dictionary import MultiTokDictionary, MultiTokError
from .encoder import EncodedCorpus, EncodedSample

FrequencyTable = Counter  # token id -> occurrence count in an encoded corpus


@dataclass
class PruneConfig:
    min_count: int = 2  # keep multi-word tokens emitted at least this often

    def __post_init__(self):
        if self.min_count < 1:
            raise MultiTokError(f"min_count {self.min_count} must be >= 1")


@dataclass
class IdRemap:
    mapping: dict[int, int] = field(default_factory=dict)  # old id -> new id, survivors only
    cascade_pruned: list[int] = field(default_factory=list)  # removed for a pruned ancestor

    def to_bytes(self) -> bytes:
        lines = [
            json.dumps({"old": old, "new": self.mapping[old]}, separators=(",", ":"))
            for old in sorted(self.mapping)
        ]
        lines.append(json.dumps({"cascade_pruned": sorted(self.cascade_pruned)}, separators=(",", ":")))
        return ("\n".join(lines) + "\n").encode("utf-8")

    def save(self, path: str | Path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def load(cls, path: str | Path) -> "IdRemap":
        remap = cls()
        for lineno, line in enumerate(Path(path).read_bytes().decode("utf-8").splitlines(), start=1):
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MultiTokError(f"{path}:{lineno}: malformed remap record: {exc}") from None
            if "cascade_pruned" in rec:
                remap.cascade_pruned = list(rec["cascade_pruned"])
            else:
                remap.mapping[rec["old"]] = rec["new"]
        return remap


def count_frequencies(encoded: EncodedCorpus, d: MultiTokDictionary | None = None) -> FrequencyTable:
    """Exact multiset count of emitted ids (base tokens included)."""
    counts: Counter[int] = Counter()
    for sample in encoded:
        for pos, tid in enumerate(sample.token_ids):
            if not isinstance(tid, int) or tid < 0 or (d is not None and tid >= len(d)):
                raise MultiTokError(f"sample {sample.sample_id!r}: invalid token id {tid!r} at position {pos}")
            counts[tid] += 1
    return counts


def prune_and_reencode(
    d: MultiTokDictionary, encoded: EncodedCorpus, cfg: PruneConfig
) -> tuple[MultiTokDictionary, EncodedCorpus, IdRemap]:
    """Drop rare multi-word tokens and rewrite the corpus without them.

    A multi-word token is frequency-pruned when it appears in the encoding but
    fewer than min_count times (tokens that never appear carry no evidence and
    are left alone, which also makes min_count=1 an exact no-op). Entries whose
    prefix chain contains a pruned token can no longer be derived and are
    cascade-removed even if frequent enough themselves. Pruned occurrences are
    replaced by their (prefix, suffix) parts, recursing until everything
    emitted survives; surviving ids are then compacted (base block unchanged,
    multi-word survivors renumbered ascending by old id). The returned corpus
    is already in the new id space.
    """
    counts = count_frequencies(encoded, d)

    removed: set[int] = set()
    cascade: list[int] = []
    mapping: dict[int, int] = {t: t for t in range(len(d.base_vocab) + 1)}
    next_id = len(d.base_vocab) + 1
    for entry in d.entries:
        if entry.length == 1:
            continue
        emitted = counts.get(entry.id, 0)
        if 1 <= emitted < cfg.min_count:
            removed.add(entry.id)
        elif entry.prefix in removed:
            removed.add(entry.id)
            cascade.append(entry.id)
        else:
            mapping[entry.id] = next_id
            next_id += 1

    remap = IdRemap(mapping, cascade)

    new_d = MultiTokDictionary(
        sorted(d.base_vocab, key=d.base_vocab.get), d.max_entry_length
    )
    for entry in d.entries:
        if entry.length == 1 or entry.id in removed:
            continue
        new_id = new_d.insert_extension(mapping[entry.prefix], entry.suffix)
        assert new_id == mapping[entry.id]

    # old id -> surviving old ids it decomposes into
    expansion: dict[int, list[int]] = {}

    def survivors_of(tid: int) -> list[int]:
        if tid not in removed:
            return [tid]
        cached = expansion.get(tid)
        if cached is None:
            entry = d.entries[tid]
            cached = survivors_of(entry.prefix) + [entry.suffix]
            expansion[tid] = cached
        return cached

    new_samples = []
    for sample in encoded:
        new_ids = [mapping[part] for tid in sample.token_ids for part in survivors_of(tid)]
        new_samples.append(
            EncodedSample(sample.sample_id, new_ids, sample.label, sample.multitok_applied)
        )
    new_encoded = EncodedCorpus(new_samples, dict_size=len(new_d), window=encoded.window)
    return new_d, new_encoded, remap


def remap_ids(remap: IdRemap, encoded: EncodedCorpus) -> EncodedCorpus:
    """Order-preserving id substitution; every id must be mapped."""
    new_samples = []
    for sample in encoded:
        new_ids = []
        for pos, tid in enumerate(sample.token_ids):
            try:
                new_ids.append(remap.mapping[tid])
            except KeyError:
                raise MultiTokError(
                    f"sample {sample.sample_id!r}: id {tid} at position {pos} is not in the remap"
                ) from None
        new_samples.append(
            EncodedSample(sample.sample_id, new_ids, sample.label, sample.multitok_applied)
        )
    return EncodedCorpus(new_samples, dict_size=encoded.dict_size, window=encoded.window)
