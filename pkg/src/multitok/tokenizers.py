"""Base tokenizers producing the streams the multi-word encoder consumes."""

from __future__ import annotations

import string
from pathlib import Path

from .dictionary import MultiTokError

MARKER = "##"
UNK_PIECE = "[UNK]"


def word_tokenize(text: str) -> list[str]:
    """Lowercase, split on whitespace, strip surrounding ASCII punctuation.

    Intra-word punctuation is kept ("don't" stays one word); tokens that are
    pure punctuation are dropped.
    """
    words = []
    for raw in text.lower().split():
        word = raw.strip(string.punctuation)
        if word:
            words.append(word)
    return words


class SubwordVocab:
    """Greedy longest-prefix subword vocabulary (BERT vocab file convention).

    Pieces prefixed with "##" only ever match after the first piece of a word;
    a word with no decomposition maps to the single unk piece.
    """

    def __init__(self, pieces: list[str]):
        self.pieces: dict[str, int] = {}
        for i, piece in enumerate(pieces):
            if not piece:
                raise MultiTokError("subword vocabulary pieces must be nonempty")
            if piece in self.pieces:
                raise MultiTokError(f"duplicate subword piece: {piece!r}")
            self.pieces[piece] = i

    @classmethod
    def load(cls, path: str | Path) -> "SubwordVocab":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls([line for line in lines if line])

    def tokenize_word(self, word: str) -> list[str]:
        out: list[str] = []
        start = 0
        while start < len(word):
            end = len(word)
            match = None
            while start < end:
                cand = word[start:end]
                if start > 0:
                    cand = MARKER + cand
                if cand in self.pieces:
                    match = cand
                    break
                end -= 1
            if match is None:
                return [UNK_PIECE]
            out.append(match)
            start = end
        return out

    def tokenize(self, words: list[str]) -> list[str]:
        pieces: list[str] = []
        for word in words:
            pieces.extend(self.tokenize_word(word))
        return pieces
