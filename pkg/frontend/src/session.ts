/**
 * Annotation session: selection modes, draft edits, and the guarantee
 * that only drafts passing the client-side nesting checks reach the
 * service.
 */

import {
  DraftLabels,
  LabelsPayload,
  Outcome,
  Span,
  TokenInfo,
  cloneDraft,
  emptyDraft,
  removeAttribute,
  removeRecord,
  snapOutward,
  toPayload,
  validateDraft,
  withAttribute,
  withGlobal,
  withRecord,
} from "./labels.js";

export type SelectionMode =
  | { kind: "global" }
  | { kind: "record" }
  | { kind: "attribute"; name: string };

export class AnnotationSession {
  draft: DraftLabels = emptyDraft();
  mode: SelectionMode = { kind: "global" };
  dirty = false;
  /** Per-project attribute schema, grown as names are used. */
  attributeNames: string[] = [];

  constructor(
    public pageId: string,
    public tokens: TokenInfo[],
    public pageLength: number,
  ) {}

  setMode(mode: SelectionMode): void {
    this.mode = mode;
    if (mode.kind === "attribute" && !this.attributeNames.includes(mode.name)) {
      this.attributeNames.push(mode.name);
    }
  }

  /**
   * Snap a raw selection outward to token boundaries and fold it into
   * the draft under the current mode.  An invalid result leaves the
   * draft untouched and reports the reason for display.
   */
  markZone(selection: Span, mode?: SelectionMode): Outcome {
    const m = mode ?? this.mode;
    const span = snapOutward(selection, this.tokens);
    let candidate: DraftLabels;
    if (m.kind === "global") {
      candidate = withGlobal(this.draft, span);
    } else if (m.kind === "record") {
      if (this.draft.global === null) {
        return { ok: false, error: "GlobalNotSet", detail: "mark the global zone first" };
      }
      candidate = withRecord(this.draft, span);
    } else {
      const attempt = withAttribute(this.draft, span, m.name);
      if ("error" in attempt) return { ok: false, ...attempt };
      candidate = attempt.draft;
      if (!this.attributeNames.includes(m.name)) this.attributeNames.push(m.name);
    }
    const verdict = validateDraft(candidate, this.pageLength);
    if (!verdict.ok) return verdict;
    this.draft = candidate;
    this.dirty = true;
    return { ok: true };
  }

  deleteRecord(index: number): void {
    this.draft = removeRecord(this.draft, index);
    this.dirty = true;
  }

  deleteAttribute(recordIndex: number, attrIndex: number): void {
    this.draft = removeAttribute(this.draft, recordIndex, attrIndex);
    this.dirty = true;
  }

  /** Replace the whole draft (used when loading stored labels). */
  load(draft: DraftLabels): void {
    this.draft = cloneDraft(draft);
    this.dirty = false;
  }

  /**
   * The payload for PUT, available only when the draft validates;
   * callers cannot send an invalid draft through this path.
   */
  payload(): LabelsPayload {
    const verdict = validateDraft(this.draft, this.pageLength);
    if (!verdict.ok) {
      throw new Error(`draft does not validate: ${verdict.error}: ${verdict.detail}`);
    }
    return toPayload(this.draft);
  }

  markSaved(): void {
    this.dirty = false;
  }
}
