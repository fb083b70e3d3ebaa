/**
 * DOM wiring for the labeling app.
 *
 * The page is rendered as escaped text, one element per token, with
 * tick marks at token boundaries; scripts never execute and offsets
 * stay exact. Selection works by clicking a start token and
 * shift-clicking an end token (or dragging). Train/extract talk to the
 * service; the extraction overlay is drawn from the reported spans and
 * error values, and any wrong or missed span can be corrected by
 * re-labeling and retraining.
 */

import { ApiClient } from "./api.js";
import type { ExtractionView } from "./api.js";
import type { Span, TokenInfo } from "./labels.js";
import { buildOverlay, diffAgainstLabels, toSegments } from "./overlay.js";
import { AnnotationSession, SelectionMode } from "./session.js";

interface AppState {
  api: ApiClient;
  session: AnnotationSession | null;
  html: string;
  tokens: TokenInfo[];
  modelId: string | null;
  lastExtraction: ExtractionView | null;
  anchor: number | null; // token index where a selection started
}

const state: AppState = {
  api: new ApiClient(
    (window as unknown as { FUZZWRAP_API?: string }).FUZZWRAP_API ?? "http://127.0.0.1:8040",
  ),
  session: null,
  html: "",
  tokens: [],
  modelId: null,
  lastExtraction: null,
  anchor: null,
};

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function setStatus(text: string, isError = false): void {
  const status = el<HTMLDivElement>("status");
  status.textContent = text;
  status.className = isError ? "status error" : "status";
}

function currentMode(): SelectionMode {
  const picked = (document.querySelector('input[name="mode"]:checked') as HTMLInputElement)
    ?.value;
  if (picked === "record") return { kind: "record" };
  if (picked === "attribute") {
    const name = el<HTMLInputElement>("attr-name").value.trim();
    return { kind: "attribute", name: name || "value" };
  }
  return { kind: "global" };
}

function renderTokens(): void {
  const host = el<HTMLDivElement>("page-text");
  host.textContent = "";
  state.tokens.forEach((token, index) => {
    const node = document.createElement("span");
    node.className = `tok tok-${token.class_name.toLowerCase()}`;
    node.dataset.index = String(index);
    node.textContent = token.lexeme;
    node.addEventListener("mousedown", () => {
      state.anchor = index;
    });
    node.addEventListener("mouseup", () => {
      if (state.anchor === null) return;
      const a = state.tokens[Math.min(state.anchor, index)]!;
      const b = state.tokens[Math.max(state.anchor, index)]!;
      state.anchor = null;
      applySelection([a.span[0], b.span[1]]);
    });
    host.appendChild(node);
    const tick = document.createElement("span");
    tick.className = "tick";
    host.appendChild(tick);
  });
}

function applySelection(span: Span): void {
  if (!state.session) return;
  const outcome = state.session.markZone(span, currentMode());
  if (!outcome.ok) {
    setStatus(`rejected: ${outcome.error}: ${outcome.detail}`, true);
    return;
  }
  setStatus("draft updated");
  renderDraft();
}

function renderDraft(): void {
  const session = state.session;
  const list = el<HTMLUListElement>("draft-list");
  list.textContent = "";
  if (!session) return;
  const push = (text: string, onRemove?: () => void) => {
    const item = document.createElement("li");
    item.textContent = text;
    if (onRemove) {
      const btn = document.createElement("button");
      btn.textContent = "remove";
      btn.addEventListener("click", () => {
        onRemove();
        renderDraft();
      });
      item.appendChild(btn);
    }
    list.appendChild(item);
  };
  if (session.draft.global) push(`global [${session.draft.global.join(", ")})`);
  session.draft.records.forEach((record, recordIndex) => {
    push(`record [${record.join(", ")})`, () => session.deleteRecord(recordIndex));
    session.draft.attributes[recordIndex]!.forEach((attr, attrIndex) =>
      push(`  ${attr.name} [${attr.span.join(", ")})`, () =>
        session.deleteAttribute(recordIndex, attrIndex),
      ),
    );
  });
}

function renderOverlay(): void {
  const host = el<HTMLDivElement>("overlay-text");
  host.textContent = "";
  if (!state.lastExtraction) return;
  const spans = buildOverlay(state.lastExtraction);
  for (const segment of toSegments(state.html.length, spans)) {
    const node = document.createElement("span");
    node.className = segment.levels
      .map((l) => `ov-${l.replace(":", "-").toLowerCase()}`)
      .join(" ");
    if (segment.maxAbsError > 0) node.title = `|error| ${segment.maxAbsError.toFixed(3)}`;
    node.textContent = state.html.slice(segment.span[0], segment.span[1]);
    host.appendChild(node);
  }
  const session = state.session;
  if (session && session.draft.global) {
    const diff = diffAgainstLabels(state.lastExtraction, session.payload());
    el<HTMLDivElement>("overlay-diff").textContent = diff.matches
      ? "overlay matches the current labels"
      : `differences: ${diff.missingRecords.length} missed, ${diff.extraRecords.length} extra, ` +
        `${diff.attributeMismatches.length} attribute mismatches`;
  }
}

async function onUpload(): Promise<void> {
  const html = el<HTMLTextAreaElement>("page-input").value;
  const uploaded = await state.api.uploadPage(html);
  state.html = html;
  state.tokens = uploaded.tokens;
  state.session = new AnnotationSession(uploaded.page_id, uploaded.tokens, html.length);
  state.modelId = null;
  state.lastExtraction = null;
  renderTokens();
  renderDraft();
  setStatus(`page ${uploaded.page_id} loaded (${uploaded.tokens.length} tokens)`);
}

async function onSave(): Promise<void> {
  if (!state.session) return;
  try {
    await state.api.putLabels(state.session.pageId, state.session.payload());
    state.session.markSaved();
    setStatus("labels stored");
  } catch (err) {
    setStatus(String(err), true);
  }
}

async function onTrain(): Promise<void> {
  if (!state.session) return;
  await onSave();
  const summary = await state.api.train([state.session.pageId]);
  state.modelId = summary.model_id;
  setStatus(`trained ${summary.model_id} (window ${summary.window_len})`);
}

async function onExtract(): Promise<void> {
  if (!state.session || !state.modelId) return;
  state.lastExtraction = await state.api.extract(state.modelId, state.session.pageId);
  renderOverlay();
  setStatus(`extracted ${state.lastExtraction.tuples.length} tuple(s)`);
}

export function bootstrap(): void {
  el<HTMLButtonElement>("btn-upload").addEventListener("click", () => void onUpload());
  el<HTMLButtonElement>("btn-save").addEventListener("click", () => void onSave());
  el<HTMLButtonElement>("btn-train").addEventListener("click", () => void onTrain());
  el<HTMLButtonElement>("btn-extract").addEventListener("click", () => void onExtract());
}

if (typeof document !== "undefined" && document.getElementById("btn-upload")) {
  bootstrap();
}
