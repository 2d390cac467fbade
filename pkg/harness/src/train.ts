/** Trial loop: train the classifier on encoded corpora, record loss curves,
 * accuracy, and AUC, and emit files the tokenizer's stats command can read. */

import * as fs from "fs";
import * as path from "path";
import * as tf from "@tensorflow/tfjs";

import { ExperimentConfig } from "./config";
import { checkIdsInRange, inferVocabSize, toTensors } from "./data";
import { accuracy, mean, rocAuc, trainingTime } from "./metrics";
import { buildModel } from "./model";
import { EncodedRecord, writeLossCurve } from "./records";
import { mulberry32, shuffleInPlace } from "./rng";

export interface TrialResult {
  seed: number;
  trainAccuracy: number;
  testAccuracy: number;
  auc: number;
  trainingTime: number | null;
  finalLoss: number;
  losses: number[];
}

export interface TrainSummary {
  config: ExperimentConfig & { vocabSize: number };
  epsilon: number;
  trials: TrialResult[];
  averages: {
    trainAccuracy: number;
    testAccuracy: number;
    auc: number;
    trainingTime: number | null;
  };
  lossCurve: number[]; // averaged over trials, one value per epoch
}

function scoresOf(model: tf.Sequential, xs: tf.Tensor2D, batchSize: number): number[] {
  const pred = model.predict(xs, { batchSize }) as tf.Tensor;
  const values = Array.from(pred.dataSync());
  pred.dispose();
  return values;
}

export async function trainAndEvaluate(
  train: EncodedRecord[],
  test: EncodedRecord[],
  cfg: ExperimentConfig,
  outDir: string,
  epsilon = 0.01
): Promise<TrainSummary> {
  if (train.length === 0 || test.length === 0) {
    throw new Error("train and test corpora must be nonempty");
  }
  const vocabSize = cfg.vocabSize ?? inferVocabSize(train);
  checkIdsInRange(train, vocabSize, "train");
  checkIdsInRange(test, vocabSize, "test");

  const trainLabels = train.map((r) => r.label ?? -1);
  const testLabels = test.map((r) => r.label ?? -1);

  const trials: TrialResult[] = [];
  for (let trial = 0; trial < cfg.trials; trial++) {
    const seed = cfg.seed + trial * 1000;
    const order = shuffleInPlace([...train.keys()], mulberry32(seed));
    const shuffled = order.map((i) => train[i]);

    const { xs, ys } = toTensors(shuffled, cfg.maxSequenceLength);
    const { xs: testXs } = toTensors(test, cfg.maxSequenceLength);
    const model = buildModel(cfg, vocabSize, seed);

    const history = await model.fit(xs, ys, {
      epochs: cfg.epochs,
      batchSize: cfg.batchSize,
      shuffle: false, // order is pre-shuffled with the trial seed
      verbose: 0,
    });
    const losses = (history.history.loss as Array<number | tf.Tensor>).map((v) => Number(v));

    const trainScores = scoresOf(model, xs, cfg.batchSize);
    const testScores = scoresOf(model, testXs, cfg.batchSize);
    trials.push({
      seed,
      trainAccuracy: accuracy(trainScores, order.map((i) => trainLabels[i])),
      testAccuracy: accuracy(testScores, testLabels),
      auc: rocAuc(testScores, testLabels),
      trainingTime: trainingTime(losses, epsilon),
      finalLoss: losses[losses.length - 1],
      losses,
    });

    xs.dispose();
    ys.dispose();
    testXs.dispose();
    model.dispose();
  }

  const lossCurve = trials[0].losses.map((_, epoch) => mean(trials.map((t) => t.losses[epoch])));
  const converged = trials.every((t) => t.trainingTime !== null);
  const summary: TrainSummary = {
    config: { ...cfg, vocabSize },
    epsilon,
    trials,
    averages: {
      trainAccuracy: mean(trials.map((t) => t.trainAccuracy)),
      testAccuracy: mean(trials.map((t) => t.testAccuracy)),
      auc: mean(trials.map((t) => t.auc)),
      trainingTime: converged ? mean(trials.map((t) => t.trainingTime as number)) : null,
    },
    lossCurve,
  };

  fs.mkdirSync(outDir, { recursive: true });
  writeLossCurve(path.join(outDir, "losses.tsv"), lossCurve);
  fs.writeFileSync(path.join(outDir, "metrics.json"), JSON.stringify(summary, null, 2) + "\n");
  return summary;
}
