/** Classifier: random-vector embedding, LSTM, two hidden layers, sigmoid. */

import * as tf from "@tensorflow/tfjs";

import { ExperimentConfig } from "./config";

export function buildModel(cfg: ExperimentConfig, vocabSize: number, seed: number): tf.Sequential {
  const model = tf.sequential();
  model.add(
    tf.layers.embedding({
      inputDim: vocabSize,
      outputDim: cfg.embeddingDim,
      inputLength: cfg.maxSequenceLength,
      trainable: !cfg.freezeEmbeddings,
      embeddingsInitializer: tf.initializers.randomNormal({ seed }),
    })
  );
  model.add(
    tf.layers.lstm({
      units: cfg.lstmUnits,
      kernelInitializer: tf.initializers.glorotUniform({ seed: seed + 1 }),
      recurrentInitializer: tf.initializers.orthogonal({ seed: seed + 2 }),
    })
  );
  model.add(
    tf.layers.dense({
      units: cfg.hidden1,
      activation: "relu",
      kernelInitializer: tf.initializers.glorotUniform({ seed: seed + 3 }),
    })
  );
  model.add(
    tf.layers.dense({
      units: cfg.hidden2,
      activation: "relu",
      kernelInitializer: tf.initializers.glorotUniform({ seed: seed + 4 }),
    })
  );
  model.add(
    tf.layers.dense({
      units: 1,
      activation: "sigmoid",
      kernelInitializer: tf.initializers.glorotUniform({ seed: seed + 5 }),
    })
  );
  model.compile({
    optimizer: tf.train.adam(cfg.learningRate),
    loss: "binaryCrossentropy",
    metrics: ["accuracy"],
  });
  return model;
}
