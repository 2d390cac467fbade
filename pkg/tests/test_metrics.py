import random

import pytest

from multitok import (
    BuildConfig,
    EncodedCorpus,
    EncodedSample,
    MultiTokError,
    Sample,
    SubwordVocab,
    build_and_encode,
    compression_ratio,
    count_frequencies,
    dictionary_stats,
    read_loss_curve,
    training_time,
    write_loss_curve,
)

from conftest import random_corpus


def test_ratio_golden_trace(alice_sample, alice_build):
    d, encoded = alice_build
    report = compression_ratio([alice_sample], encoded, d)
    assert report.tokens_before == 12 and report.tokens_after == 10
    assert report.ratio == 10 / 12
    assert round(report.ratio, 4) == 0.8333
    assert report.words_reference == 12
    assert report.dict_total == len(d) and report.dict_multiword == 9


def test_ratio_identity_window(alice_sample):
    d, encoded = build_and_encode([alice_sample], BuildConfig(w=1))
    report = compression_ratio([alice_sample], encoded, d)
    assert report.ratio == 1.0


def test_ratio_mismatched_corpora_rejected(alice_sample, alice_build):
    _, encoded = alice_build
    with pytest.raises(MultiTokError, match="mismatch"):
        compression_ratio([alice_sample, alice_sample], encoded)
    with pytest.raises(MultiTokError, match="mismatch"):
        compression_ratio([Sample("other", ["a"])], encoded)


def test_ratio_vs_words_expressible_above_one():
    # subword streams run above one token per word; same-base ratio stays <= 1
    vocab = SubwordVocab(["play", "##ing", "watch"])
    words = ["playing", "watching", "playing"]
    pieces = vocab.tokenize(words)
    sample = Sample(0, pieces, word_count=len(words))
    d, encoded = build_and_encode([sample], BuildConfig(w=1))
    report = compression_ratio([sample], encoded, d)
    assert report.ratio == 1.0
    assert report.ratio_vs_words > 1.0


def test_ratio_report_file_canonical(tmp_path, alice_sample, alice_build):
    d, encoded = alice_build
    report = compression_ratio([alice_sample], encoded, d)
    path = tmp_path / "report.json"
    report.save(path)
    text = path.read_bytes().decode()
    assert text.endswith("\n")
    assert '"ratio":0.8333' in text


def test_training_time_forced_example():
    losses = [0.5] * 5 + [0.005] * 15
    assert training_time(losses, 0.01) == 5


def test_training_time_not_converged():
    assert training_time([0.5] * 30, 0.01) is None
    assert training_time([0.001] * 9, 0.01) is None  # no window of ten fits


def test_training_time_single_window():
    losses = [0.9] + [0.001] * 10 + [0.9]
    assert training_time(losses, 0.01) == 1


def test_training_time_zero_index():
    assert training_time([0.001] * 10, 0.01) == 0


def test_training_time_strict_inequality():
    losses = [0.01] * 10
    assert training_time(losses, 0.01) is None


def test_training_time_monotone_in_epsilon():
    rng = random.Random(4)
    for _ in range(100):
        losses = [rng.random() for _ in range(rng.randint(1, 40))]
        e1, e2 = sorted((rng.uniform(0.01, 1.0), rng.uniform(0.01, 1.0)))
        c1, c2 = training_time(losses, e1), training_time(losses, e2)
        inf = float("inf")
        assert (inf if c1 is None else c1) >= (inf if c2 is None else c2)


def test_training_time_rejects_bad_input():
    with pytest.raises(MultiTokError):
        training_time([], 0.01)
    with pytest.raises(MultiTokError):
        training_time([0.1], 0.0)
    with pytest.raises(MultiTokError):
        training_time([-0.1] * 10, 0.01)
    with pytest.raises(MultiTokError):
        training_time([float("nan")] * 10, 0.01)


def test_training_time_custom_lookahead():
    losses = [0.5, 0.001, 0.001, 0.5]
    assert training_time(losses, 0.01, lookahead=2) == 1
    assert training_time(losses, 0.01, lookahead=3) is None


def test_dictionary_stats_fresh(alice_dict):
    stats = dictionary_stats(alice_dict, count_frequencies(EncodedCorpus([])))
    assert stats["multiword_entries"] == 0
    assert stats["length_histogram"] == {}


def test_dictionary_stats_golden_trace(alice_build):
    d, encoded = alice_build
    stats = dictionary_stats(d, count_frequencies(encoded, d))
    assert stats["multiword_entries"] == 9
    assert stats["never_emitted"] == 7  # only "goes to" and "the wonderland" were emitted
    assert stats["length_histogram"] == {2: 7, 3: 2}
    assert sum(stats["length_histogram"].values()) == stats["multiword_entries"]
    assert sum(stats["count_histogram"].values()) == stats["multiword_entries"]


def test_loss_curve_file_roundtrip(tmp_path):
    losses = [0.6931471805599453, 0.1234567890123456, 7e-05]
    path = tmp_path / "losses.tsv"
    write_loss_curve(path, losses)
    assert read_loss_curve(path) == losses


def test_loss_curve_rejects_disorder(tmp_path):
    path = tmp_path / "losses.tsv"
    path.write_text("1\t0.5\n3\t0.4\n")
    with pytest.raises(MultiTokError, match="out of order"):
        read_loss_curve(path)


def test_ratio_random_corpora_never_above_one():
    for seed in range(15):
        corpus = random_corpus(random.Random(seed))
        for w in (1, 2, None):
            d, encoded = build_and_encode(corpus, BuildConfig(w=w))
            report = compression_ratio(corpus, encoded, d)
            assert 0 < report.ratio <= 1.0
