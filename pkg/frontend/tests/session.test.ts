import { describe, expect, it } from "vitest";

import type { TokenInfo } from "../src/labels.js";
import { AnnotationSession } from "../src/session.js";

// "Gudo 75,Doka 445" tokens
const TOKENS: TokenInfo[] = [
  { class: 1, class_name: "CAPITALIZED", lexeme: "Gudo", span: [0, 4] },
  { class: 7, class_name: "CTRL_OPEN", lexeme: " ", span: [4, 5] },
  { class: 3, class_name: "NUMBER", lexeme: "75", span: [5, 7] },
  { class: 5, class_name: "PUNCT", lexeme: ",", span: [7, 8] },
  { class: 1, class_name: "CAPITALIZED", lexeme: "Doka", span: [8, 12] },
  { class: 7, class_name: "CTRL_OPEN", lexeme: " ", span: [12, 13] },
  { class: 3, class_name: "NUMBER", lexeme: "445", span: [13, 16] },
];

function freshSession(): AnnotationSession {
  const session = new AnnotationSession("p0", TOKENS, 16);
  expect(session.markZone([0, 16], { kind: "global" })).toEqual({ ok: true });
  return session;
}

describe("AnnotationSession", () => {
  it("requires the global zone before records", () => {
    const session = new AnnotationSession("p0", TOKENS, 16);
    const outcome = session.markZone([0, 7], { kind: "record" });
    expect(outcome.ok).toBe(false);
    if (!outcome.ok) expect(outcome.error).toBe("GlobalNotSet");
    expect(session.draft.records).toEqual([]);
  });

  it("snaps selections outward before adding them", () => {
    const session = freshSession();
    expect(session.markZone([1, 6], { kind: "record" })).toEqual({ ok: true });
    expect(session.draft.records).toEqual([[0, 7]]);
  });

  it("blocks an overlapping record selection and keeps the draft", () => {
    const session = freshSession();
    expect(session.markZone([0, 7], { kind: "record" })).toEqual({ ok: true });
    const before = JSON.stringify(session.draft);
    const outcome = session.markZone([5, 12], { kind: "record" });
    expect(outcome.ok).toBe(false);
    if (!outcome.ok) expect(outcome.error).toBe("OverlappingSpans");
    expect(JSON.stringify(session.draft)).toBe(before);
  });

  it("attaches attributes to their containing record", () => {
    const session = freshSession();
    session.markZone([0, 7], { kind: "record" });
    session.markZone([8, 16], { kind: "record" });
    const outcome = session.markZone([13, 16], { kind: "attribute", name: "code" });
    expect(outcome).toEqual({ ok: true });
    expect(session.draft.attributes[1]).toEqual([{ name: "code", span: [13, 16] }]);
    expect(session.attributeNames).toContain("code");
  });

  it("payload() refuses to produce an invalid submission", () => {
    const session = new AnnotationSession("p0", TOKENS, 16);
    expect(() => session.payload()).toThrow(/GlobalNotSet/);
  });

  it("tracks dirtiness across edits and saves", () => {
    const session = freshSession();
    expect(session.dirty).toBe(true);
    session.markSaved();
    expect(session.dirty).toBe(false);
    session.markZone([0, 7], { kind: "record" });
    expect(session.dirty).toBe(true);
  });

  it("supports removing a span (edit/delete affordance)", () => {
    const session = freshSession();
    session.markZone([0, 7], { kind: "record" });
    session.markZone([0, 4], { kind: "attribute", name: "country" });
    session.deleteAttribute(0, 0);
    expect(session.draft.attributes[0]).toEqual([]);
    session.deleteRecord(0);
    expect(session.draft.records).toEqual([]);
  });
});
