/** Turns encoded corpora into fixed-shape training tensors. */

import * as tf from "@tensorflow/tfjs";

import { EncodedRecord } from "./records";

/** Keras-style pre-padding/pre-truncation: keep the tail of long samples. */
export function padTruncate(tokenIds: number[], maxLen: number): number[] {
  if (tokenIds.length >= maxLen) {
    return tokenIds.slice(tokenIds.length - maxLen);
  }
  return new Array<number>(maxLen - tokenIds.length).fill(0).concat(tokenIds);
}

export function inferVocabSize(records: EncodedRecord[]): number {
  let max = 0;
  for (const rec of records) {
    for (const t of rec.tokenIds) {
      if (t > max) max = t;
    }
  }
  return max + 1;
}

export function checkIdsInRange(records: EncodedRecord[], vocabSize: number, name: string): void {
  for (const rec of records) {
    for (const t of rec.tokenIds) {
      if (t >= vocabSize) {
        throw new Error(
          `${name} sample ${rec.id}: token id ${t} is outside the embedding range ` +
            `(vocab size ${vocabSize}); ids must be dense - run the tokenizer's ` +
            `prune step and apply its remap before training`
        );
      }
    }
  }
}

export function requireLabels(records: EncodedRecord[], name: string): number[] {
  return records.map((rec) => {
    if (rec.label !== 0 && rec.label !== 1) {
      throw new Error(`${name} sample ${rec.id}: binary label required, got ${rec.label}`);
    }
    return rec.label;
  });
}

export function toTensors(records: EncodedRecord[], maxLen: number): { xs: tf.Tensor2D; ys: tf.Tensor2D } {
  const labels = requireLabels(records, "corpus");
  const rows = records.map((rec) => padTruncate(rec.tokenIds, maxLen));
  return {
    xs: tf.tensor2d(rows, [records.length, maxLen], "int32"),
    ys: tf.tensor2d(labels.map((l) => [l]), [records.length, 1], "float32"),
  };
}
