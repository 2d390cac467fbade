#!/usr/bin/env node
/** Harness commands: fetch datasets, train on encoded corpora, run the
 * convergence-speedup comparison. */

import { withDefaults } from "./config";
import { fetchDatasets } from "./fetch";
import { applyRemap, readEncodedCorpus, readRemap } from "./records";
import { runSpeedup } from "./speedup";
import { trainAndEvaluate } from "./train";

type Flags = Record<string, string | boolean>;

function parseFlags(argv: string[]): Flags {
  const flags: Flags = {};
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (!arg.startsWith("--")) {
      throw new Error(`unexpected argument ${arg}`);
    }
    const key = arg.slice(2);
    if (i + 1 < argv.length && !argv[i + 1].startsWith("--")) {
      flags[key] = argv[++i];
    } else {
      flags[key] = true;
    }
  }
  return flags;
}

function requireString(flags: Flags, key: string): string {
  const value = flags[key];
  if (typeof value !== "string" || value === "") {
    throw new Error(`missing required flag --${key}`);
  }
  return value;
}

function optionalNumber(flags: Flags, key: string): number | undefined {
  const value = flags[key];
  if (value === undefined) return undefined;
  const parsed = Number(value);
  if (!Number.isFinite(parsed)) {
    throw new Error(`invalid numeric value for --${key}: ${value}`);
  }
  return parsed;
}

const USAGE = `usage:
  multitok-harness fetch   --name imdb[,sst2,ag_news] --out-dir DIR [--max-rows N] [--base-url URL]
  multitok-harness train   --train ENC.jsonl --test ENC.jsonl --out-dir DIR
                           [--remap REMAP.jsonl] [--epochs N] [--trials N] [--batch-size N]
                           [--lr F] [--seed N] [--max-len N] [--vocab-size N]
                           [--epsilon F] [--freeze-embeddings]
  multitok-harness speedup --corpus RAW.jsonl --out-dir DIR [--subset N] [--trials N]
                           [--epochs N] [--epsilon F] [--seed N] [--batch-size N]
                           [--max-len N] [--multitok CMD]`;

export async function main(argv: string[]): Promise<number> {
  const [command, ...rest] = argv;
  try {
    const flags = parseFlags(rest);
    if (command === "fetch") {
      const names = requireString(flags, "name").split(",");
      const written = await fetchDatasets(names, requireString(flags, "out-dir"), {
        baseUrl: typeof flags["base-url"] === "string" ? (flags["base-url"] as string) : undefined,
        maxRows: optionalNumber(flags, "max-rows"),
      });
      for (const file of written) console.log(file);
      return 0;
    }
    if (command === "train") {
      let train = readEncodedCorpus(requireString(flags, "train"));
      let test = readEncodedCorpus(requireString(flags, "test"));
      if (typeof flags.remap === "string") {
        const remap = readRemap(flags.remap);
        train = applyRemap(train, remap);
        test = applyRemap(test, remap);
      }
      const cfg = withDefaults({
        ...(optionalNumber(flags, "epochs") !== undefined ? { epochs: optionalNumber(flags, "epochs")! } : {}),
        ...(optionalNumber(flags, "trials") !== undefined ? { trials: optionalNumber(flags, "trials")! } : {}),
        ...(optionalNumber(flags, "batch-size") !== undefined ? { batchSize: optionalNumber(flags, "batch-size")! } : {}),
        ...(optionalNumber(flags, "lr") !== undefined ? { learningRate: optionalNumber(flags, "lr")! } : {}),
        ...(optionalNumber(flags, "seed") !== undefined ? { seed: optionalNumber(flags, "seed")! } : {}),
        ...(optionalNumber(flags, "max-len") !== undefined ? { maxSequenceLength: optionalNumber(flags, "max-len")! } : {}),
        ...(optionalNumber(flags, "vocab-size") !== undefined ? { vocabSize: optionalNumber(flags, "vocab-size")! } : {}),
        ...(flags["freeze-embeddings"] === true ? { freezeEmbeddings: true } : {}),
      });
      const summary = await trainAndEvaluate(
        train, test, cfg, requireString(flags, "out-dir"),
        optionalNumber(flags, "epsilon") ?? 0.01
      );
      console.log(
        `trials=${summary.trials.length} testAccuracy=${summary.averages.testAccuracy.toFixed(4)} ` +
          `auc=${summary.averages.auc.toFixed(4)} trainingTime=${summary.averages.trainingTime}`
      );
      return 0;
    }
    if (command === "speedup") {
      const result = await runSpeedup({
        corpus: requireString(flags, "corpus"),
        outDir: requireString(flags, "out-dir"),
        subset: optionalNumber(flags, "subset"),
        trials: optionalNumber(flags, "trials"),
        epochs: optionalNumber(flags, "epochs"),
        epsilon: optionalNumber(flags, "epsilon"),
        seed: optionalNumber(flags, "seed"),
        batchSize: optionalNumber(flags, "batch-size"),
        maxSequenceLength: optionalNumber(flags, "max-len"),
        multitokCmd: typeof flags.multitok === "string" ? (flags.multitok as string) : undefined,
      });
      console.log(
        `multitok C=${result.multitok.trainingTime} r=${result.multitok.ratio} | ` +
          `baseline C=${result.baseline.trainingTime} r=${result.baseline.ratio} | ` +
          `speedup=${result.speedupFactor?.toFixed(2) ?? "n/a"} ` +
          `speedupOk=${result.speedupOk} accuracyComparable=${result.accuracyComparable}`
      );
      return result.speedupOk && result.accuracyComparable ? 0 : 3;
    }
    console.error(USAGE);
    return 1;
  } catch (err) {
    console.error(`multitok-harness ${command ?? ""}: error: ${(err as Error).message}`);
    return 2;
  }
}

if (require.main === module) {
  main(process.argv.slice(2)).then((code) => {
    process.exitCode = code;
  });
}
