import { describe, expect, it } from "vitest";

import {
  DraftLabels,
  TokenInfo,
  emptyDraft,
  snapOutward,
  toPayload,
  validateDraft,
  withAttribute,
  withGlobal,
  withRecord,
} from "../src/labels.js";

// tokens of "Gudo 75" starting at offset 10
const TOKENS: TokenInfo[] = [
  { class: 1, class_name: "CAPITALIZED", lexeme: "Gudo", span: [10, 14] },
  { class: 7, class_name: "CTRL_OPEN", lexeme: " ", span: [14, 15] },
  { class: 3, class_name: "NUMBER", lexeme: "75", span: [15, 17] },
];

describe("snapOutward", () => {
  it("keeps boundary-aligned selections unchanged", () => {
    expect(snapOutward([10, 14], TOKENS)).toEqual([10, 14]);
  });

  it("widens a mid-token selection to the enclosing boundaries", () => {
    expect(snapOutward([11, 13], TOKENS)).toEqual([10, 14]);
    expect(snapOutward([12, 16], TOKENS)).toEqual([10, 17]);
  });

  it("normalizes reversed selections", () => {
    expect(snapOutward([16, 11], TOKENS)).toEqual([10, 17]);
  });
});

function draftWith(global: [number, number], records: [number, number][]): DraftLabels {
  let draft = withGlobal(emptyDraft(), global);
  for (const record of records) draft = withRecord(draft, record);
  return draft;
}

describe("validateDraft", () => {
  it("accepts a well-nested draft", () => {
    const draft = draftWith([0, 100], [[10, 20], [30, 40]]);
    expect(validateDraft(draft, 100)).toEqual({ ok: true });
  });

  it("requires a global zone", () => {
    const verdict = validateDraft(emptyDraft(), 100);
    expect(verdict.ok).toBe(false);
    if (!verdict.ok) expect(verdict.error).toBe("GlobalNotSet");
  });

  it("rejects overlapping records and reports the offset", () => {
    const draft = draftWith([0, 100], [[10, 25], [20, 40]]);
    const verdict = validateDraft(draft, 100);
    expect(verdict.ok).toBe(false);
    if (!verdict.ok) {
      expect(verdict.error).toBe("OverlappingSpans");
      expect(verdict.offset).toBe(20);
    }
  });

  it("rejects records escaping the global zone", () => {
    const draft = draftWith([10, 50], [[40, 60]]);
    const verdict = validateDraft(draft, 100);
    expect(verdict.ok).toBe(false);
    if (!verdict.ok) expect(verdict.error).toBe("SpanOutsideParent");
  });

  it("rejects attributes that cross record boundaries", () => {
    const draft = draftWith([0, 100], [[10, 20], [30, 40]]);
    const attempt = withAttribute(draft, [15, 35], "country");
    expect("error" in attempt).toBe(true);
    if ("error" in attempt) expect(attempt.error).toBe("SpanOutsideParent");
  });

  it("keeps records ordered regardless of marking order", () => {
    const draft = draftWith([0, 100], [[30, 40], [10, 20]]);
    expect(draft.records).toEqual([[10, 20], [30, 40]]);
    expect(validateDraft(draft, 100)).toEqual({ ok: true });
  });

  it("rejects overlapping attributes inside one record", () => {
    let draft = draftWith([0, 100], [[10, 30]]);
    const first = withAttribute(draft, [12, 20], "country");
    if ("error" in first) throw new Error("setup failed");
    draft = first.draft;
    const second = withAttribute(draft, [18, 25], "code");
    if ("error" in second) throw new Error("setup failed");
    const verdict = validateDraft(second.draft, 100);
    expect(verdict.ok).toBe(false);
    if (!verdict.ok) expect(verdict.error).toBe("OverlappingSpans");
  });
});

describe("toPayload", () => {
  it("round-trips the draft shape", () => {
    let draft = draftWith([0, 100], [[10, 20]]);
    const attempt = withAttribute(draft, [10, 14], "country");
    if ("error" in attempt) throw new Error("setup failed");
    draft = attempt.draft;
    expect(toPayload(draft)).toEqual({
      global: [0, 100],
      records: [[10, 20]],
      attributes: [[{ name: "country", span: [10, 14] }]],
    });
  });
});
