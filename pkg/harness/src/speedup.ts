/** Convergence-speedup experiment: multi-word tokenization (w=2, w_test=1,
 * 50% application) against the word-level baseline on the same subset, both
 * encoded by the tokenizer CLI and trained with identical settings. */

import * as fs from "fs";
import * as path from "path";
import { spawnSync } from "child_process";

import { withDefaults, ExperimentConfig } from "./config";
import { readEncodedCorpus, readRawCorpus, writeRawCorpus } from "./records";
import { mulberry32, shuffleInPlace } from "./rng";
import { trainAndEvaluate, TrainSummary } from "./train";

export interface SpeedupOptions {
  corpus: string; // raw records with text + binary labels
  outDir: string;
  subset?: number; // samples drawn from the corpus (default 5000)
  holdout?: number; // fraction held out for accuracy/AUC (default 0.2)
  trials?: number; // default 3
  epochs?: number;
  epsilon?: number; // default 0.01
  seed?: number;
  batchSize?: number;
  maxSequenceLength?: number;
  multitokCmd?: string; // tokenizer CLI executable (default "multitok")
  modelOverrides?: Partial<ExperimentConfig>; // shrink the model at desk scale
}

export interface SpeedupResult {
  multitok: { trainingTime: number | null; testAccuracy: number; ratio: number };
  baseline: { trainingTime: number | null; testAccuracy: number; ratio: number };
  speedupFactor: number | null; // baseline C / multitok C
  speedupOk: boolean; // multitok C <= 0.6 x baseline C
  accuracyComparable: boolean; // within 5 points of the baseline
}

export function runCli(cmd: string, args: string[]): void {
  // cmd may carry leading arguments, e.g. "python3 -m multitok.cli"
  const [exe, ...pre] = cmd.split(/\s+/);
  const proc = spawnSync(exe, [...pre, ...args], { encoding: "utf8" });
  if (proc.error) {
    throw new Error(`failed to run ${exe}: ${proc.error.message}`);
  }
  if (proc.status !== 0) {
    throw new Error(`${cmd} ${args[0]} exited ${proc.status}: ${proc.stderr.trim()}`);
  }
}

export function dictSize(dictPath: string): number {
  const doc = JSON.parse(fs.readFileSync(dictPath, "utf8"));
  return 1 + doc.base_vocab.length + doc.entries.length;
}

async function trainArm(
  name: string,
  workDir: string,
  cfg: ExperimentConfig,
  epsilon: number
): Promise<{ summary: TrainSummary; ratio: number }> {
  const train = readEncodedCorpus(path.join(workDir, `${name}.train.jsonl`));
  const test = readEncodedCorpus(path.join(workDir, `${name}.test.jsonl`));
  const vocabSize = dictSize(path.join(workDir, `${name}.dict.json`));
  const report = JSON.parse(fs.readFileSync(path.join(workDir, `${name}.report.json`), "utf8"));
  const summary = await trainAndEvaluate(
    train,
    test,
    { ...cfg, vocabSize },
    path.join(workDir, name),
    epsilon
  );
  return { summary, ratio: report.ratio };
}

export async function runSpeedup(options: SpeedupOptions): Promise<SpeedupResult> {
  const {
    corpus,
    outDir,
    subset = 5000,
    holdout = 0.2,
    trials = 3,
    epochs = 30,
    epsilon = 0.01,
    seed = 0,
    multitokCmd = "multitok",
  } = options;

  fs.mkdirSync(outDir, { recursive: true });
  const all = readRawCorpus(corpus);
  if (all.some((r) => r.label !== 0 && r.label !== 1)) {
    throw new Error(`${corpus}: binary labels required on every record`);
  }
  const picked = shuffleInPlace([...all], mulberry32(seed)).slice(0, Math.min(subset, all.length));
  const nTest = Math.max(1, Math.round(picked.length * holdout));
  const testRaw = picked.slice(0, nTest);
  const trainRaw = picked.slice(nTest);
  const trainPath = path.join(outDir, "subset_train.jsonl");
  const testPath = path.join(outDir, "subset_test.jsonl");
  writeRawCorpus(trainPath, trainRaw);
  writeRawCorpus(testPath, testRaw);

  const arms: Array<{ name: string; w: string; fraction: string }> = [
    { name: "multitok", w: "2", fraction: "0.5" },
    { name: "baseline", w: "1", fraction: "1.0" },
  ];
  for (const arm of arms) {
    const prefix = path.join(outDir, arm.name);
    runCli(multitokCmd, [
      "build", "--input", trainPath, "--w", arm.w, "--fraction", arm.fraction,
      "--seed", String(seed), "--out-dict", `${prefix}.dict.json`,
      "--out-encoded", `${prefix}.train.jsonl`, "--report", `${prefix}.report.json`,
    ]);
    runCli(multitokCmd, [
      "encode", "--dict", `${prefix}.dict.json`, "--input", testPath,
      "--w-test", "1", "--out", `${prefix}.test.jsonl`,
    ]);
  }

  const cfg = withDefaults({
    ...(options.modelOverrides ?? {}),
    trials,
    epochs,
    seed,
    ...(options.batchSize !== undefined ? { batchSize: options.batchSize } : {}),
    ...(options.maxSequenceLength !== undefined
      ? { maxSequenceLength: options.maxSequenceLength }
      : {}),
  });
  const mt = await trainArm("multitok", outDir, cfg, epsilon);
  const base = await trainArm("baseline", outDir, cfg, epsilon);

  const cMt = mt.summary.averages.trainingTime;
  const cBase = base.summary.averages.trainingTime;
  const result: SpeedupResult = {
    multitok: { trainingTime: cMt, testAccuracy: mt.summary.averages.testAccuracy, ratio: mt.ratio },
    baseline: { trainingTime: cBase, testAccuracy: base.summary.averages.testAccuracy, ratio: base.ratio },
    speedupFactor: cMt !== null && cBase !== null && cMt > 0 ? cBase / cMt : null,
    speedupOk: cMt !== null && cBase !== null && cMt <= 0.6 * cBase,
    accuracyComparable:
      Math.abs(mt.summary.averages.testAccuracy - base.summary.averages.testAccuracy) <= 0.05,
  };
  fs.writeFileSync(path.join(outDir, "comparison.json"), JSON.stringify(result, null, 2) + "\n");
  return result;
}
