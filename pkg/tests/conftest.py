import random

import pytest

from multitok import BuildConfig, MultiTokDictionary, Sample, build_and_encode

ALICE_TEXT = "Alice goes to the Wonderland and Bob goes to the Wonderland Zoo"
ALICE_WORDS = ALICE_TEXT.lower().split()
ALICE_VOCAB = ["alice", "goes", "to", "the", "wonderland", "and", "bob", "zoo"]

# Frozen by independent step-through of the build rule and cross-checked
# against the textbook LZW reference coder (tests/lzw_reference.py).
ALICE_TOKEN_IDS = [1, 2, 3, 4, 5, 6, 7, 10, 12, 8]
ALICE_INSERTS = [
    (9, 1, 2),   # alice goes
    (10, 2, 3),  # goes to
    (11, 3, 4),  # to the
    (12, 4, 5),  # the wonderland
    (13, 5, 6),  # wonderland and
    (14, 6, 7),  # and bob
    (15, 7, 2),  # bob goes
    (16, 10, 4),  # goes to the
    (17, 12, 8),  # the wonderland zoo
]


@pytest.fixture
def alice_sample():
    return Sample("alice", list(ALICE_WORDS))


@pytest.fixture
def alice_build(alice_sample):
    return build_and_encode([alice_sample], BuildConfig(w=None, apply_fraction=1.0, seed=0))


@pytest.fixture
def alice_dict():
    d = MultiTokDictionary(list(ALICE_VOCAB))
    return d


def random_corpus(rng: random.Random, max_samples=8, max_len=30, vocab_size=12):
    """Small random in-vocab corpus for round-trip and pruning properties."""
    vocab = [f"w{k}" for k in range(rng.randint(2, vocab_size))]
    samples = []
    for i in range(rng.randint(1, max_samples)):
        tokens = [rng.choice(vocab) for _ in range(rng.randint(1, max_len))]
        samples.append(Sample(i, tokens, label=rng.randint(0, 1)))
    return samples
