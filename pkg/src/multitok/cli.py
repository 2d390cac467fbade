"""Batch command-line front end: build, encode, prune, stats.

Wires ingestion, base tokenization, dictionary build/encode, pruning, and
metrics into deterministic file-to-file commands. Every output file gets a
companion <output>.manifest.json recording resolved parameters and input
digests; identical manifests imply bit-identical outputs.

Exit codes: 0 success, 1 usage error, 2 data error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from .corpus_io import load_corpus, load_encoded, write_encoded
from .dictionary import MultiTokDictionary, MultiTokError, parse_window, spell_window
from .encoder import BuildConfig, build_and_encode, encode_inference, EncodedCorpus
from .metrics import compression_ratio, read_loss_curve, training_time
from .pruning import PruneConfig, prune_and_reencode
from .tokenizers import SubwordVocab


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; usage errors are 1
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _window_arg(text: str) -> int | None:
    try:
        return parse_window(text)
    except MultiTokError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _fraction_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid fraction {text!r}") from None
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"fraction {value} outside (0, 1]")
    return value


def _min_count_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid min-count {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"min-count {value} must be >= 1")
    return value


def _base_arg(text: str) -> tuple[str, str | None]:
    if text in ("word", "pretokenized"):
        return text, None
    if text.startswith("subword:") and text[len("subword:"):]:
        return "subword", text[len("subword"):][1:]
    raise argparse.ArgumentTypeError(f"invalid base {text!r}: expected word, subword:VOCAB, or pretokenized")


def _sha256(path: str) -> str:
    digest = hashlib.sha256()
    with open(path, "rb") as fh:
        for chunk in iter(lambda: fh.read(1 << 20), b""):
            digest.update(chunk)
    return "sha256:" + digest.hexdigest()


def _write_manifests(command: str, parameters: dict, inputs: list[str], outputs: list[str]) -> None:
    manifest = {
        "tool": "multitok",
        "version": __version__,
        "command": command,
        "parameters": parameters,
        "inputs": {path: _sha256(path) for path in inputs},
        "outputs": sorted(outputs),
    }
    payload = (json.dumps(manifest, ensure_ascii=False, separators=(",", ":")) + "\n").encode("utf-8")
    for out in outputs:
        Path(out + ".manifest.json").write_bytes(payload)


def _load_base(args) -> tuple[str, SubwordVocab | None]:
    mode, vocab_path = args.base
    vocab = SubwordVocab.load(vocab_path) if mode == "subword" else None
    return mode, vocab


def _cmd_build(args) -> int:
    mode, vocab = _load_base(args)
    corpus = load_corpus(args.input, base=mode, subword_vocab=vocab)
    cfg = BuildConfig(w=args.w, apply_fraction=args.fraction, seed=args.seed)
    d, encoded = build_and_encode(corpus, cfg)
    report = compression_ratio(corpus, encoded, d)
    d.save(args.out_dict)
    write_encoded(args.out_encoded, encoded)
    report.save(args.report)
    parameters = {
        "input": args.input,
        "w": spell_window(args.w),
        "fraction": args.fraction,
        "seed": args.seed,
        "base": args.base_spec,
    }
    inputs = [args.input] + ([args.base[1]] if args.base[1] else [])
    _write_manifests("build", parameters, inputs, [args.out_dict, args.out_encoded, args.report])
    return 0


def _cmd_encode(args) -> int:
    d = MultiTokDictionary.load(args.dict)
    mode, vocab = _load_base(args)
    corpus = load_corpus(args.input, base=mode, subword_vocab=vocab)
    encoded = EncodedCorpus(
        [encode_inference(d, sample, args.w_test) for sample in corpus],
        dict_size=len(d),
        window=spell_window(args.w_test),
    )
    write_encoded(args.out, encoded)
    parameters = {
        "dict": args.dict,
        "input": args.input,
        "w_test": spell_window(args.w_test),
        "base": args.base_spec,
    }
    inputs = [args.dict, args.input] + ([args.base[1]] if args.base[1] else [])
    _write_manifests("encode", parameters, inputs, [args.out])
    return 0


def _cmd_prune(args) -> int:
    d = MultiTokDictionary.load(args.dict)
    encoded = load_encoded(args.encoded)
    new_d, new_encoded, remap = prune_and_reencode(d, encoded, PruneConfig(args.min_count))
    new_d.save(args.out_dict)
    write_encoded(args.out_encoded, new_encoded)
    remap.save(args.out_remap)
    parameters = {"dict": args.dict, "encoded": args.encoded, "min_count": args.min_count}
    _write_manifests(
        "prune", parameters, [args.dict, args.encoded],
        [args.out_dict, args.out_encoded, args.out_remap],
    )
    return 0


def _cmd_stats(args) -> int:
    mode, vocab = _load_base(args)
    corpus = load_corpus(args.original, base=mode, subword_vocab=vocab)
    encoded = load_encoded(args.encoded)
    d = MultiTokDictionary.load(args.dict)
    report = compression_ratio(corpus, encoded, d)
    if args.losses is not None:
        losses = read_loss_curve(args.losses)
        report.epsilon = args.epsilon
        report.training_time = training_time(losses, args.epsilon)
    report.save(args.out)
    parameters = {
        "original": args.original,
        "encoded": args.encoded,
        "dict": args.dict,
        "base": args.base_spec,
        "losses": args.losses,
        "epsilon": args.epsilon if args.losses is not None else None,
    }
    inputs = [args.original, args.encoded, args.dict]
    if args.losses is not None:
        inputs.append(args.losses)
    if args.base[1]:
        inputs.append(args.base[1])
    _write_manifests("stats", parameters, inputs, [args.out])
    return 0


def _add_base_flag(parser) -> None:
    parser.add_argument(
        "--base", default="word", metavar="word|subword:VOCAB|pretokenized",
        help="base tokenizer applied to text fields (default: word)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="multitok", description="LZW-style multi-word tokenization toolkit")
    parser.add_argument("--version", action="version", version=f"multitok {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", parents=[], help="build a dictionary while encoding a training corpus")
    p.add_argument("--input", required=True, help="line-delimited corpus records")
    p.add_argument("--w", type=_window_arg, default=None, metavar="N|max",
                   help="training window: max phrase length (default: max)")
    p.add_argument("--fraction", type=_fraction_arg, default=1.0,
                   help="fraction of samples encoded adaptively (default: 1.0)")
    p.add_argument("--seed", type=int, default=0, help="seed for sample selection (default: 0)")
    _add_base_flag(p)
    p.add_argument("--out-dict", required=True)
    p.add_argument("--out-encoded", required=True)
    p.add_argument("--report", required=True)
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("encode", help="encode a corpus against a frozen dictionary")
    p.add_argument("--dict", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--w-test", type=_window_arg, default=None, metavar="N|max",
                   help="testing window: max match length (default: max)")
    _add_base_flag(p)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("prune", help="prune rare multi-word tokens and re-encode")
    p.add_argument("--dict", required=True)
    p.add_argument("--encoded", required=True)
    p.add_argument("--min-count", type=_min_count_arg, default=2,
                   help="keep multi-word tokens emitted at least this often (default: 2)")
    p.add_argument("--out-dict", required=True)
    p.add_argument("--out-encoded", required=True)
    p.add_argument("--out-remap", required=True)
    p.set_defaults(func=_cmd_prune)

    p = sub.add_parser("stats", help="compression report, optionally with training time")
    p.add_argument("--original", required=True, help="raw corpus the encoding was produced from")
    p.add_argument("--encoded", required=True)
    p.add_argument("--dict", required=True)
    _add_base_flag(p)
    p.add_argument("--losses", default=None, help="line-delimited epoch/loss pairs")
    p.add_argument("--epsilon", type=float, default=0.01,
                   help="convergence threshold for training time (default: 0.01)")
    p.add_argument("--out", required=True, help="report file")
    p.set_defaults(func=_cmd_stats)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.base_spec = getattr(args, "base", "word")
    if hasattr(args, "base") and isinstance(args.base, str):
        try:
            args.base = _base_arg(args.base)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    try:
        return args.func(args)
    except MultiTokError as exc:
        print(f"multitok {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"multitok {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
