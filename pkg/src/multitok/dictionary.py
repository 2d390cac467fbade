"""Pair-linked phrase dictionary shared by the builder and the inference encoder.

Multi-word entries are stored as (prefix token, suffix base token) pairs, the
classic LZW table layout: membership is one hash lookup and expansion walks the
prefix chain. Ids are dense: 0 is the unknown token, base words occupy
1..|vocab| in the order given, multi-word entries follow.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

UNK_ID = 0
UNK_SURFACE = "<unk>"

DICT_FORMAT_VERSION = 1


class MultiTokError(ValueError):
    """Raised on contract violations in dictionary, corpus, or file data."""


@dataclass
class DictEntry:
    id: int
    prefix: int  # entry this one extends; equals id for base entries and unk
    suffix: int  # appended base token; equals id for base entries and unk
    length: int  # number of base tokens represented
    surface: str | None = None  # base entries and unk only


def spell_window(w: int | None) -> str:
    return "max" if w is None else str(w)


def parse_window(text: str) -> int | None:
    """Parse a window spelling: a positive integer or the literal "max"."""
    if text.lower() == "max":
        return None
    try:
        w = int(text)
    except ValueError:
        raise MultiTokError(f"invalid window {text!r}: expected a positive integer or 'max'") from None
    if w < 1:
        raise MultiTokError(f"invalid window {w}: must be >= 1")
    return w


class MultiTokDictionary:
    """Token identity space plus the pair-linked multi-word phrase table."""

    def __init__(self, base_vocab: list[str], w: int | None = None):
        """Start from an initial dictionary of single-word tokens.

        Ids are assigned densely: unk=0, then one id per word in the order
        given. `w` caps the length (in base tokens) of any multi-word entry;
        None means unbounded.
        """
        if w is not None and w < 1:
            raise MultiTokError(f"invalid window {w}: must be >= 1")
        self.max_entry_length = w
        self.entries: list[DictEntry] = [DictEntry(UNK_ID, UNK_ID, UNK_ID, 1, UNK_SURFACE)]
        self.pair_index: dict[tuple[int, int], int] = {}
        self.base_vocab: dict[str, int] = {}
        for word in base_vocab:
            if not word:
                raise MultiTokError("base vocabulary words must be nonempty")
            if word in self.base_vocab:
                raise MultiTokError(f"duplicate word in base vocabulary: {word!r}")
            tid = len(self.entries)
            self.base_vocab[word] = tid
            self.entries.append(DictEntry(tid, tid, tid, 1, word))

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def num_base(self) -> int:
        return len(self.base_vocab)

    @property
    def num_multiword(self) -> int:
        return len(self.entries) - 1 - len(self.base_vocab)

    def is_base(self, t: int) -> bool:
        return 1 <= t <= len(self.base_vocab)

    def _check_id(self, t: int) -> DictEntry:
        if not isinstance(t, int) or not 0 <= t < len(self.entries):
            raise MultiTokError(f"unknown token id {t!r}")
        return self.entries[t]

    def base_id(self, word: str) -> int:
        """Id of a base word, or UNK_ID when out of vocabulary."""
        return self.base_vocab.get(word, UNK_ID)

    def surface(self, t: int) -> str:
        entry = self._check_id(t)
        if entry.surface is None:
            raise MultiTokError(f"token id {t} is not a base token")
        return entry.surface

    def lookup_extension(self, prefix: int, suffix: int) -> int | None:
        """Id of the phrase expand(prefix) + word(suffix), or None if absent."""
        self._check_id(prefix)
        if not self.is_base(suffix):
            raise MultiTokError(f"suffix {suffix!r} is not a base token id")
        return self.pair_index.get((prefix, suffix))

    def insert_extension(self, prefix: int, suffix: int) -> int:
        """Add the phrase expand(prefix) + word(suffix) at the next free id."""
        pentry = self._check_id(prefix)
        if prefix == UNK_ID:
            raise MultiTokError("cannot extend the unknown token")
        if not self.is_base(suffix):
            raise MultiTokError(f"suffix {suffix!r} is not a base token id")
        if (prefix, suffix) in self.pair_index:
            raise MultiTokError(f"extension ({prefix}, {suffix}) already present as id {self.pair_index[(prefix, suffix)]}")
        length = pentry.length + 1
        if self.max_entry_length is not None and length > self.max_entry_length:
            raise MultiTokError(f"extension of length {length} exceeds window {self.max_entry_length}")
        tid = len(self.entries)
        self.entries.append(DictEntry(tid, prefix, suffix, length))
        self.pair_index[(prefix, suffix)] = tid
        return tid

    def expand(self, t: int) -> list[int]:
        """Base-token ids represented by `t`, via the prefix chain."""
        entry = self._check_id(t)
        parts: list[int] = []
        while entry.length > 1:
            parts.append(entry.suffix)
            entry = self.entries[entry.prefix]
        parts.append(entry.id)
        parts.reverse()
        return parts

    # --- canonical file form ---------------------------------------------

    def to_document(self) -> dict:
        words = [None] * len(self.base_vocab)
        for word, tid in self.base_vocab.items():
            words[tid - 1] = word
        return {
            "version": DICT_FORMAT_VERSION,
            "w": spell_window(self.max_entry_length),
            "unk": UNK_ID,
            "base_vocab": words,
            "entries": [
                {"id": e.id, "prefix": e.prefix, "suffix": e.suffix}
                for e in self.entries
                if e.length > 1
            ],
        }

    def to_bytes(self) -> bytes:
        doc = json.dumps(self.to_document(), ensure_ascii=False, separators=(",", ":"))
        return (doc + "\n").encode("utf-8")

    def save(self, path: str | Path) -> None:
        Path(path).write_bytes(self.to_bytes())

    @classmethod
    def from_document(cls, doc: dict) -> "MultiTokDictionary":
        if not isinstance(doc, dict) or doc.get("version") != DICT_FORMAT_VERSION:
            raise MultiTokError(f"unknown dictionary version: {doc.get('version')!r}")
        if doc.get("unk") != UNK_ID:
            raise MultiTokError(f"unsupported unknown-token id: {doc.get('unk')!r}")
        d = cls(doc["base_vocab"], parse_window(str(doc["w"])))
        for rec in doc["entries"]:
            tid = d.insert_extension(rec["prefix"], rec["suffix"])
            if tid != rec["id"]:
                raise MultiTokError(f"non-canonical dictionary file: entry {rec['id']} assigned id {tid}")
        return d

    @classmethod
    def load(cls, path: str | Path) -> "MultiTokDictionary":
        try:
            doc = json.loads(Path(path).read_bytes().decode("utf-8"))
        except json.JSONDecodeError as exc:
            raise MultiTokError(f"malformed dictionary file {path}: {exc}") from None
        return cls.from_document(doc)
