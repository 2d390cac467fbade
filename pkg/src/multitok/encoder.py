"""Adaptive dictionary build-and-encode, frozen-dictionary inference, exact decode.

The builder is the LZW adaptation: at each position emit the longest phrase
already in the dictionary (capped at the training window), then register that
phrase extended by the next word. The dictionary persists across samples and
only grows while encoding the selected fraction of the corpus; inference
matching never mutates it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .dictionary import UNK_ID, UNK_SURFACE, MultiTokDictionary, MultiTokError


@dataclass
class Sample:
    sample_id: int | str
    tokens: list[str]
    label: int | None = None
    # word count of the underlying text; differs from len(tokens) for subword streams
    word_count: int | None = None

    @property
    def n(self) -> int:
        return len(self.tokens)


@dataclass
class EncodedSample:
    sample_id: int | str
    token_ids: list[int]
    label: int | None = None
    multitok_applied: bool = True

    @property
    def m(self) -> int:
        return len(self.token_ids)


@dataclass
class EncodedCorpus:
    samples: list[EncodedSample] = field(default_factory=list)
    # provenance: size of the producing dictionary and the window in effect
    dict_size: int | None = None
    window: str | None = None

    def __iter__(self):
        return iter(self.samples)

    def __len__(self) -> int:
        return len(self.samples)


@dataclass
class BuildConfig:
    w: int | None = None  # training window; None = unbounded
    apply_fraction: float = 1.0
    seed: int = 0
    vocab_from_full_corpus: bool = True  # non-selected samples still seed the base vocab

    def __post_init__(self):
        if self.w is not None and self.w < 1:
            raise MultiTokError(f"invalid window {self.w}: must be >= 1")
        if not 0.0 < self.apply_fraction <= 1.0:
            raise MultiTokError(f"apply_fraction {self.apply_fraction} outside (0, 1]")


def _longest_match(d: MultiTokDictionary, base_ids: list[int], i: int, limit: int) -> tuple[int, int]:
    """Longest dictionary match starting at position i, at most `limit` tokens.

    Returns (token id, match length). Valid because the table is prefix-closed:
    every phrase's prefixes are entries, so extending one suffix at a time
    through pair_index finds the maximal match. Unknown words match only as
    the unknown token itself.
    """
    cur = base_ids[i]
    if cur == UNK_ID:
        return UNK_ID, 1
    length = 1
    while length < limit:
        nxt = base_ids[i + length]
        if nxt == UNK_ID:
            break
        ext = d.pair_index.get((cur, nxt))
        if ext is None:
            break
        cur = ext
        length += 1
    return cur, length


def select_samples(n: int, fraction: float, seed: int) -> set[int]:
    """Seeded uniform choice of ceil(fraction*n) sample indices."""
    indices = list(range(n))
    random.Random(seed).shuffle(indices)
    return set(indices[: math.ceil(fraction * n)])


def build_and_encode(corpus: list[Sample], cfg: BuildConfig) -> tuple[MultiTokDictionary, EncodedCorpus]:
    """Build the phrase dictionary while encoding the corpus.

    The base vocabulary is collected from the full corpus in first-appearance
    order (unless cfg.vocab_from_full_corpus is off, in which case only
    selected samples contribute). Multi-word entries are grown only while
    encoding the selected fraction; non-selected samples pass through as base
    ids with multitok_applied=False. Output order equals input order.
    """
    if not corpus:
        raise MultiTokError("corpus is empty")
    for sample in corpus:
        if not sample.tokens:
            raise MultiTokError(f"sample {sample.sample_id!r} is empty")

    selected = select_samples(len(corpus), cfg.apply_fraction, cfg.seed)

    vocab: list[str] = []
    seen: set[str] = set()
    for idx, sample in enumerate(corpus):
        if not cfg.vocab_from_full_corpus and idx not in selected:
            continue
        for word in sample.tokens:
            if word not in seen:
                seen.add(word)
                vocab.append(word)
    d = MultiTokDictionary(vocab, cfg.w)

    encoded = EncodedCorpus(dict_size=None, window=None)
    for idx, sample in enumerate(corpus):
        base_ids = [d.base_id(word) for word in sample.tokens]
        if idx not in selected:
            encoded.samples.append(
                EncodedSample(sample.sample_id, base_ids, sample.label, multitok_applied=False)
            )
            continue
        token_ids: list[int] = []
        n = len(base_ids)
        i = 0
        while i < n:
            limit = n - i if cfg.w is None else min(cfg.w, n - i)
            tid, length = _longest_match(d, base_ids, i, limit)
            token_ids.append(tid)
            j = i + length
            # register longest-match + next word, unless the window or the
            # sample end forbids it
            if (
                j < n
                and (cfg.w is None or length < cfg.w)
                and tid != UNK_ID
                and base_ids[j] != UNK_ID
            ):
                d.insert_extension(tid, base_ids[j])
            i = j
        encoded.samples.append(EncodedSample(sample.sample_id, token_ids, sample.label, multitok_applied=True))

    encoded.dict_size = len(d)
    encoded.window = "max" if cfg.w is None else str(cfg.w)
    return d, encoded


def encode_inference(d: MultiTokDictionary, sample: Sample, w_test: int | None = None) -> EncodedSample:
    """Greedy longest-match encoding against a frozen dictionary.

    Match length is capped at w_test (None = unbounded); out-of-vocabulary
    words map to the unknown id. Pure function of (d, sample, w_test).
    """
    if w_test is not None and w_test < 1:
        raise MultiTokError(f"invalid window {w_test}: must be >= 1")
    base_ids = [d.base_id(word) for word in sample.tokens]
    token_ids: list[int] = []
    n = len(base_ids)
    i = 0
    while i < n:
        limit = n - i if w_test is None else min(w_test, n - i)
        tid, length = _longest_match(d, base_ids, i, limit)
        token_ids.append(tid)
        i += length
    return EncodedSample(sample.sample_id, token_ids, sample.label, multitok_applied=True)


def decode(d: MultiTokDictionary, e: EncodedSample) -> Sample:
    """Exact inverse: expand every id back to base-word surfaces."""
    tokens: list[str] = []
    for pos, tid in enumerate(e.token_ids):
        if not isinstance(tid, int) or not 0 <= tid < len(d):
            raise MultiTokError(f"sample {e.sample_id!r}: unknown token id {tid!r} at position {pos}")
        for base in d.expand(tid):
            tokens.append(UNK_SURFACE if base == UNK_ID else d.surface(base))
    return Sample(e.sample_id, tokens, e.label)
