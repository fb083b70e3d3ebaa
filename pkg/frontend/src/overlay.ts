/**
 * Extraction overlay view-model: colored spans per zone level with the
 * per-separator error values reported by the service, plus comparison
 * against draft/gold labels so a wrong or missed span can be turned
 * into a corrective label.
 */

import type { ExtractionView } from "./api.js";
import type { LabelsPayload, Span } from "./labels.js";

export interface OverlaySpan {
  level: "global" | "record" | "attribute";
  name?: string;
  span: Span;
  beginError: number;
  endError: number;
}

export function buildOverlay(result: ExtractionView): OverlaySpan[] {
  const spans: OverlaySpan[] = [
    {
      level: "global",
      span: result.global.span,
      beginError: result.global.begin_error,
      endError: result.global.end_error,
    },
  ];
  for (const t of result.tuples) {
    spans.push({
      level: "record",
      span: t.span,
      beginError: t.begin_error,
      endError: t.end_error,
    });
    for (const [name, values] of Object.entries(t.attributes)) {
      for (const v of values) {
        spans.push({
          level: "attribute",
          name,
          span: v.span,
          beginError: v.begin_error,
          endError: v.end_error,
        });
      }
    }
  }
  return spans;
}

function sameSpan(a: Span, b: Span): boolean {
  return a[0] === b[0] && a[1] === b[1];
}

export interface OverlayDiff {
  matches: boolean;
  missingRecords: Span[]; // labelled but not extracted
  extraRecords: Span[]; // extracted but not labelled
  attributeMismatches: { record: Span; detail: string }[];
}

/** Compare an extraction against reference labels span for span. */
export function diffAgainstLabels(
  result: ExtractionView,
  labels: LabelsPayload,
): OverlayDiff {
  const extracted = result.tuples.map((t) => t.span);
  const missingRecords = labels.records.filter(
    (r) => !extracted.some((e) => sameSpan(e, r)),
  );
  const extraRecords = extracted.filter(
    (e) => !labels.records.some((r) => sameSpan(e, r)),
  );
  const attributeMismatches: { record: Span; detail: string }[] = [];
  for (let i = 0; i < labels.records.length; i++) {
    const record = labels.records[i]!;
    const tuple = result.tuples.find((t) => sameSpan(t.span, record));
    if (!tuple) continue;
    const want = labels.attributes[i]!
      .map((a) => `${a.name}@${a.span[0]}-${a.span[1]}`)
      .sort();
    const got = Object.entries(tuple.attributes)
      .flatMap(([name, values]) => values.map((v) => `${name}@${v.span[0]}-${v.span[1]}`))
      .sort();
    if (want.join(",") !== got.join(",")) {
      attributeMismatches.push({
        record,
        detail: `want ${want.join(", ") || "none"}; got ${got.join(", ") || "none"}`,
      });
    }
  }
  return {
    matches:
      missingRecords.length === 0 &&
      extraRecords.length === 0 &&
      attributeMismatches.length === 0,
    missingRecords,
    extraRecords,
    attributeMismatches,
  };
}

/** Non-overlapping text segments for rendering highlighted page text. */
export interface Segment {
  span: Span;
  levels: string[]; // e.g. ["record", "attribute:code"]
  maxAbsError: number;
}

export function toSegments(pageLength: number, spans: OverlaySpan[]): Segment[] {
  const cuts = new Set<number>([0, pageLength]);
  for (const s of spans) {
    cuts.add(s.span[0]);
    cuts.add(s.span[1]);
  }
  const points = [...cuts].sort((a, b) => a - b);
  const segments: Segment[] = [];
  for (let i = 0; i + 1 < points.length; i++) {
    const span: Span = [points[i]!, points[i + 1]!];
    const covering = spans.filter((s) => s.span[0] <= span[0] && span[1] <= s.span[1]);
    segments.push({
      span,
      levels: covering.map((s) =>
        s.level === "attribute" ? `attribute:${s.name}` : s.level,
      ),
      maxAbsError: covering.reduce(
        (acc, s) => Math.max(acc, Math.abs(s.beginError), Math.abs(s.endError)),
        0,
      ),
    });
  }
  return segments;
}
