"""multitok: LZW-style multi-word tokenization toolkit.

Builds a phrase dictionary while encoding a training corpus, re-encodes
corpora at configurable train/test window sizes, prunes rare multi-word
tokens, and reports compression and convergence metrics.
"""

__version__ = "0.1.0"

from .dictionary import (
    DICT_FORMAT_VERSION,
    UNK_ID,
    UNK_SURFACE,
    DictEntry,
    MultiTokDictionary,
    MultiTokError,
    parse_window,
    spell_window,
)
from .encoder import (
    BuildConfig,
    EncodedCorpus,
    EncodedSample,
    Sample,
    build_and_encode,
    decode,
    encode_inference,
)
from .metrics import (
    CompressionReport,
    compression_ratio,
    dictionary_stats,
    read_loss_curve,
    training_time,
    write_loss_curve,
)
from .pruning import (
    FrequencyTable,
    IdRemap,
    PruneConfig,
    count_frequencies,
    prune_and_reencode,
    remap_ids,
)
from .tokenizers import SubwordVocab, word_tokenize

__all__ = [
    "BuildConfig",
    "CompressionReport",
    "DICT_FORMAT_VERSION",
    "DictEntry",
    "EncodedCorpus",
    "EncodedSample",
    "FrequencyTable",
    "IdRemap",
    "MultiTokDictionary",
    "MultiTokError",
    "PruneConfig",
    "Sample",
    "SubwordVocab",
    "UNK_ID",
    "UNK_SURFACE",
    "build_and_encode",
    "compression_ratio",
    "count_frequencies",
    "decode",
    "dictionary_stats",
    "encode_inference",
    "parse_window",
    "prune_and_reencode",
    "read_loss_curve",
    "remap_ids",
    "spell_window",
    "training_time",
    "word_tokenize",
    "write_loss_curve",
]
