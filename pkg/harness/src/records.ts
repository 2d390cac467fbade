/** Readers/writers for the tokenizer CLI's line-delimited file formats. */

import * as fs from "fs";

export interface EncodedRecord {
  id: number | string;
  tokenIds: number[];
  label?: number;
  multitokApplied: boolean;
}

export interface RawRecord {
  id: number | string;
  text: string;
  label?: number;
}

export interface Remap {
  mapping: Map<number, number>;
  cascadePruned: number[];
}

function lines(path: string): string[] {
  return fs
    .readFileSync(path, "utf8")
    .split("\n")
    .filter((line) => line.trim() !== "");
}

export function readEncodedCorpus(path: string): EncodedRecord[] {
  return lines(path).map((line, i) => {
    let rec: any;
    try {
      rec = JSON.parse(line);
    } catch {
      throw new Error(`${path}:${i + 1}: malformed record`);
    }
    if (!Array.isArray(rec.token_ids) || rec.token_ids.some((t: any) => !Number.isInteger(t) || t < 0)) {
      throw new Error(`${path}:${i + 1}: token_ids must be non-negative integers`);
    }
    return {
      id: rec.id ?? i,
      tokenIds: rec.token_ids,
      label: rec.label,
      multitokApplied: rec.multitok_applied ?? true,
    };
  });
}

export function readRawCorpus(path: string): RawRecord[] {
  return lines(path).map((line, i) => {
    let rec: any;
    try {
      rec = JSON.parse(line);
    } catch {
      throw new Error(`${path}:${i + 1}: malformed record`);
    }
    if (typeof rec.text !== "string") {
      throw new Error(`${path}:${i + 1}: expected a text field`);
    }
    return { id: rec.id ?? i, text: rec.text, label: rec.label };
  });
}

export function writeRawCorpus(path: string, records: RawRecord[]): void {
  const out = records
    .map((r) => JSON.stringify(r.label === undefined ? { id: r.id, text: r.text } : { id: r.id, text: r.text, label: r.label }))
    .join("\n");
  fs.writeFileSync(path, out.length ? out + "\n" : "");
}

export function readRemap(path: string): Remap {
  const mapping = new Map<number, number>();
  let cascadePruned: number[] = [];
  for (const [i, line] of lines(path).entries()) {
    let rec: any;
    try {
      rec = JSON.parse(line);
    } catch {
      throw new Error(`${path}:${i + 1}: malformed remap record`);
    }
    if (Array.isArray(rec.cascade_pruned)) {
      cascadePruned = rec.cascade_pruned;
    } else {
      mapping.set(rec.old, rec.new);
    }
  }
  return { mapping, cascadePruned };
}

export function applyRemap(records: EncodedRecord[], remap: Remap): EncodedRecord[] {
  return records.map((rec) => ({
    ...rec,
    tokenIds: rec.tokenIds.map((t, pos) => {
      const mapped = remap.mapping.get(t);
      if (mapped === undefined) {
        throw new Error(`sample ${rec.id}: id ${t} at position ${pos} is not in the remap`);
      }
      return mapped;
    }),
  }));
}

/** Epoch/loss pairs, full precision, consumable by the tokenizer's stats command. */
export function writeLossCurve(path: string, losses: number[]): void {
  const out = losses.map((loss, i) => `${i + 1}\t${loss}`).join("\n");
  fs.writeFileSync(path, out.length ? out + "\n" : "");
}

export function readLossCurve(path: string): number[] {
  return lines(path).map((line, i) => {
    const parts = line.split(/\s+/);
    const epoch = Number(parts[0]);
    const loss = Number(parts[1]);
    if (parts.length !== 2 || !Number.isInteger(epoch) || epoch !== i + 1 || !Number.isFinite(loss)) {
      throw new Error(`${path}:${i + 1}: malformed epoch/loss pair`);
    }
    return loss;
  });
}
