/** Experiment configuration, defaulting to the reference training setup. */

export interface ExperimentConfig {
  embeddingDim: number;
  lstmUnits: number;
  hidden1: number;
  hidden2: number;
  epochs: number;
  batchSize: number;
  learningRate: number;
  trials: number;
  maxSequenceLength: number;
  seed: number;
  freezeEmbeddings: boolean;
  /** Embedding-table size; inferred as max train id + 1 when omitted. */
  vocabSize?: number;
}

export const defaultConfig: ExperimentConfig = {
  embeddingDim: 100,
  lstmUnits: 100,
  hidden1: 100,
  hidden2: 50,
  epochs: 30,
  batchSize: 1000,
  learningRate: 0.01,
  trials: 20,
  maxSequenceLength: 200,
  seed: 0,
  freezeEmbeddings: false,
};

export function withDefaults(overrides: Partial<ExperimentConfig>): ExperimentConfig {
  return { ...defaultConfig, ...overrides };
}
