/**
 * Zone label draft model: snapping and client-side validation.
 *
 * The validation rules mirror the service exactly, so a draft that
 * passes here is never rejected by the PUT endpoint: spans nest
 * (attributes inside their record, records inside the global zone),
 * spans at one level are ordered and disjoint, and names are non-empty.
 * Token alignment is guaranteed by construction because every selection
 * is snapped outward to token boundaries before it enters the draft.
 */

export type Span = [number, number];

export interface TokenInfo {
  class: number;
  class_name: string;
  lexeme: string;
  span: Span;
}

export interface AttributeLabel {
  name: string;
  span: Span;
}

/** Draft labels; global may be unset while the user is still working. */
export interface DraftLabels {
  global: Span | null;
  records: Span[];
  attributes: AttributeLabel[][];
}

/** Wire shape accepted by PUT /pages/{id}/labels. */
export interface LabelsPayload {
  global: Span;
  records: Span[];
  attributes: { name: string; span: Span }[][];
}

export type Rejection = {
  error:
    | "OverlappingSpans"
    | "SpanOutsideParent"
    | "InvalidSpan"
    | "GlobalNotSet";
  detail: string;
  offset?: number;
};

export type Outcome = { ok: true } | ({ ok: false } & Rejection);

export function emptyDraft(): DraftLabels {
  return { global: null, records: [], attributes: [] };
}

export function cloneDraft(draft: DraftLabels): DraftLabels {
  return {
    global: draft.global ? [...draft.global] : null,
    records: draft.records.map((r) => [...r] as Span),
    attributes: draft.attributes.map((attrs) =>
      attrs.map((a) => ({ name: a.name, span: [...a.span] as Span })),
    ),
  };
}

/** Snap a raw selection outward to the nearest token boundaries. */
export function snapOutward(span: Span, tokens: TokenInfo[]): Span {
  if (tokens.length === 0) return span;
  let [s, e] = span;
  if (s > e) [s, e] = [e, s];
  let start = tokens[0]!.span[0];
  for (const t of tokens) {
    if (t.span[0] <= s) start = t.span[0];
    else break;
  }
  let end = tokens[tokens.length - 1]!.span[1];
  for (let i = tokens.length - 1; i >= 0; i--) {
    const t = tokens[i]!;
    if (t.span[1] >= e) end = t.span[1];
    else break;
  }
  return [start, Math.max(end, start)];
}

function spanInside(inner: Span, outer: Span): boolean {
  return inner[0] >= outer[0] && inner[1] <= outer[1];
}

function overlaps(a: Span, b: Span): boolean {
  return a[0] < b[1] && b[0] < a[1];
}

function checkLevel(spans: Span[], what: string): Rejection | null {
  for (let i = 0; i < spans.length; i++) {
    const span = spans[i]!;
    if (span[0] >= span[1]) {
      return {
        error: "InvalidSpan",
        detail: `${what} span [${span[0]}, ${span[1]}) is empty`,
        offset: span[0],
      };
    }
    if (i > 0 && span[0] < spans[i - 1]![1]) {
      return {
        error: "OverlappingSpans",
        detail: `${what} span at ${span[0]} overlaps its predecessor`,
        offset: span[0],
      };
    }
  }
  return null;
}

/** Full nesting validation of a draft; pageLength bounds the global zone. */
export function validateDraft(draft: DraftLabels, pageLength: number): Outcome {
  if (draft.global === null) {
    return { ok: false, error: "GlobalNotSet", detail: "mark the global zone first" };
  }
  if (!spanInside(draft.global, [0, pageLength])) {
    return {
      ok: false,
      error: "SpanOutsideParent",
      detail: "global zone escapes the page",
      offset: draft.global[1] > pageLength ? draft.global[1] : draft.global[0],
    };
  }
  const levelError = checkLevel(draft.records, "record");
  if (levelError) return { ok: false, ...levelError };
  for (const record of draft.records) {
    if (!spanInside(record, draft.global)) {
      return {
        ok: false,
        error: "SpanOutsideParent",
        detail: `record at ${record[0]} escapes the global zone`,
        offset: record[0],
      };
    }
  }
  if (draft.attributes.length !== draft.records.length) {
    return { ok: false, error: "InvalidSpan", detail: "attribute groups out of sync" };
  }
  for (let i = 0; i < draft.records.length; i++) {
    const record = draft.records[i]!;
    const attrs = draft.attributes[i]!;
    const attrError = checkLevel(attrs.map((a) => a.span), "attribute");
    if (attrError) return { ok: false, ...attrError };
    for (const a of attrs) {
      if (!a.name) {
        return { ok: false, error: "InvalidSpan", detail: "attribute name is empty" };
      }
      if (!spanInside(a.span, record)) {
        return {
          ok: false,
          error: "SpanOutsideParent",
          detail: `attribute ${a.name} at ${a.span[0]} escapes its record`,
          offset: a.span[0],
        };
      }
    }
  }
  return { ok: true };
}

function sortedInsert(spans: Span[], span: Span): number {
  let k = 0;
  while (k < spans.length && spans[k]![0] < span[0]) k++;
  spans.splice(k, 0, span);
  return k;
}

/** Add a snapped global span (replacing any previous one). */
export function withGlobal(draft: DraftLabels, span: Span): DraftLabels {
  const next = cloneDraft(draft);
  next.global = [...span];
  return next;
}

/** Add a snapped record span, keeping records ordered. */
export function withRecord(draft: DraftLabels, span: Span): DraftLabels {
  const next = cloneDraft(draft);
  const k = sortedInsert(next.records, [...span]);
  next.attributes.splice(k, 0, []);
  return next;
}

/** Attach a snapped attribute span to the record containing it. */
export function withAttribute(
  draft: DraftLabels,
  span: Span,
  name: string,
): { draft: DraftLabels; recordIndex: number } | Rejection {
  const idx = draft.records.findIndex((r) => spanInside(span, r));
  if (idx < 0) {
    return {
      error: "SpanOutsideParent",
      detail: `selection at ${span[0]} is not inside a single record`,
      offset: span[0],
    };
  }
  const next = cloneDraft(draft);
  const spans = next.attributes[idx]!.map((a) => a.span);
  sortedInsert(spans, span); // positions only; rebuild labels below
  const merged: AttributeLabel[] = [];
  let inserted = false;
  for (const a of next.attributes[idx]!) {
    if (!inserted && span[0] < a.span[0]) {
      merged.push({ name, span: [...span] });
      inserted = true;
    }
    merged.push(a);
  }
  if (!inserted) merged.push({ name, span: [...span] });
  next.attributes[idx] = merged;
  return { draft: next, recordIndex: idx };
}

export function removeRecord(draft: DraftLabels, index: number): DraftLabels {
  const next = cloneDraft(draft);
  next.records.splice(index, 1);
  next.attributes.splice(index, 1);
  return next;
}

export function removeAttribute(
  draft: DraftLabels,
  recordIndex: number,
  attrIndex: number,
): DraftLabels {
  const next = cloneDraft(draft);
  next.attributes[recordIndex]!.splice(attrIndex, 1);
  return next;
}

export function toPayload(draft: DraftLabels): LabelsPayload {
  if (draft.global === null) throw new Error("draft has no global zone");
  return {
    global: [...draft.global],
    records: draft.records.map((r) => [...r] as Span),
    attributes: draft.attributes.map((attrs) =>
      attrs.map((a) => ({ name: a.name, span: [...a.span] as Span })),
    ),
  };
}
