/** Dataset fetching: paginated rows API -> the tokenizer CLI's record format.
 *
 * Downloads are atomic (tmp file + rename) and idempotent: an existing output
 * file is never re-fetched. AG-News (4 classes) is binarized as
 * World+Sports -> 0, Business+SciTech -> 1, since the classifier head is binary.
 */

import * as fs from "fs";
import * as path from "path";

import { writeRawCorpus, RawRecord } from "./records";

export const DEFAULT_BASE_URL = "https://datasets-server.huggingface.co";

interface DatasetSpec {
  dataset: string;
  config: string;
  textKey: string;
  splits: { train: string; test: string };
  mapLabel?: (label: number) => number;
}

export const DATASETS: Record<string, DatasetSpec> = {
  imdb: {
    dataset: "stanfordnlp/imdb",
    config: "plain_text",
    textKey: "text",
    splits: { train: "train", test: "test" },
  },
  sst2: {
    dataset: "stanfordnlp/sst2",
    config: "default",
    textKey: "sentence",
    // GLUE test labels are withheld; the validation split stands in as test
    splits: { train: "train", test: "validation" },
  },
  ag_news: {
    dataset: "fancyzhx/ag_news",
    config: "default",
    textKey: "text",
    splits: { train: "train", test: "test" },
    mapLabel: (label) => (label >= 2 ? 1 : 0),
  },
};

export interface FetchOptions {
  baseUrl?: string;
  pageSize?: number;
  maxRows?: number;
}

async function fetchRows(
  baseUrl: string,
  spec: DatasetSpec,
  split: string,
  pageSize: number,
  maxRows?: number
): Promise<RawRecord[]> {
  const records: RawRecord[] = [];
  let offset = 0;
  let total = Infinity;
  while (offset < total && (maxRows === undefined || records.length < maxRows)) {
    const url =
      `${baseUrl}/rows?dataset=${encodeURIComponent(spec.dataset)}` +
      `&config=${encodeURIComponent(spec.config)}&split=${encodeURIComponent(split)}` +
      `&offset=${offset}&length=${pageSize}`;
    const response = await fetch(url);
    if (!response.ok) {
      throw new Error(`download failed: HTTP ${response.status} for ${url}`);
    }
    const body: any = await response.json();
    if (!Array.isArray(body.rows)) {
      throw new Error(`download failed: unexpected response shape for ${url}`);
    }
    total = typeof body.num_rows_total === "number" ? body.num_rows_total : offset + body.rows.length;
    for (const item of body.rows) {
      const row = item.row ?? {};
      const text = row[spec.textKey];
      const label = row.label;
      if (typeof text !== "string" || typeof label !== "number") {
        throw new Error(`download failed: malformed row ${item.row_idx} in ${spec.dataset}/${split}`);
      }
      records.push({
        id: records.length,
        text,
        label: spec.mapLabel ? spec.mapLabel(label) : label,
      });
      if (maxRows !== undefined && records.length >= maxRows) break;
    }
    if (body.rows.length === 0) break;
    offset += body.rows.length;
  }
  return records;
}

/** Fetch the named datasets into outDir as <name>_train.jsonl / <name>_test.jsonl. */
export async function fetchDatasets(
  names: string[],
  outDir: string,
  options: FetchOptions = {}
): Promise<string[]> {
  const baseUrl = options.baseUrl ?? DEFAULT_BASE_URL;
  const pageSize = options.pageSize ?? 100;
  const written: string[] = [];
  fs.mkdirSync(outDir, { recursive: true });
  for (const name of names) {
    const spec = DATASETS[name];
    if (!spec) {
      throw new Error(`unknown dataset ${name}; expected one of ${Object.keys(DATASETS).join(", ")}`);
    }
    for (const [role, split] of Object.entries(spec.splits)) {
      const outPath = path.join(outDir, `${name}_${role}.jsonl`);
      if (fs.existsSync(outPath)) {
        written.push(outPath);
        continue; // cached
      }
      const records = await fetchRows(baseUrl, spec, split, pageSize, options.maxRows);
      const tmpPath = outPath + ".tmp";
      try {
        writeRawCorpus(tmpPath, records);
        fs.renameSync(tmpPath, outPath);
      } catch (err) {
        fs.rmSync(tmpPath, { force: true });
        throw err;
      }
      written.push(outPath);
    }
  }
  return written;
}
