/** Evaluation metrics: accuracy, ROC AUC, and the convergence-time measure. */

export function accuracy(scores: number[], labels: number[]): number {
  if (scores.length !== labels.length || scores.length === 0) {
    throw new Error("scores and labels must be nonempty and aligned");
  }
  let correct = 0;
  for (let i = 0; i < scores.length; i++) {
    if ((scores[i] >= 0.5 ? 1 : 0) === labels[i]) correct++;
  }
  return correct / scores.length;
}

/**
 * Rank-based ROC AUC (Mann-Whitney), ties sharing average ranks. A degenerate
 * set with only one class carries no ranking signal and scores 0.5.
 */
export function rocAuc(scores: number[], labels: number[]): number {
  if (scores.length !== labels.length || scores.length === 0) {
    throw new Error("scores and labels must be nonempty and aligned");
  }
  const nPos = labels.filter((l) => l === 1).length;
  const nNeg = labels.length - nPos;
  if (nPos === 0 || nNeg === 0) return 0.5;

  const order = labels.map((_, i) => i).sort((a, b) => scores[a] - scores[b]);
  const ranks = new Array<number>(scores.length);
  let i = 0;
  while (i < order.length) {
    let j = i;
    while (j + 1 < order.length && scores[order[j + 1]] === scores[order[i]]) j++;
    const avgRank = (i + j) / 2 + 1; // ranks are 1-based
    for (let k = i; k <= j; k++) ranks[order[k]] = avgRank;
    i = j + 1;
  }
  let posRankSum = 0;
  for (let k = 0; k < labels.length; k++) {
    if (labels[k] === 1) posRankSum += ranks[k];
  }
  return (posRankSum - (nPos * (nPos + 1)) / 2) / (nPos * nNeg);
}

/**
 * Earliest epoch index i such that the next `lookahead` losses are all
 * strictly below epsilon; null when the curve never converges.
 */
export function trainingTime(losses: number[], epsilon: number, lookahead = 10): number | null {
  if (epsilon <= 0) throw new Error("epsilon must be positive");
  if (losses.length === 0) throw new Error("empty loss curve");
  for (let i = 0; i + lookahead <= losses.length; i++) {
    let ok = true;
    for (let k = i; k < i + lookahead; k++) {
      if (!(losses[k] < epsilon)) {
        ok = false;
        break;
      }
    }
    if (ok) return i;
  }
  return null;
}

export function mean(values: number[]): number {
  if (values.length === 0) throw new Error("mean of empty list");
  return values.reduce((a, b) => a + b, 0) / values.length;
}
