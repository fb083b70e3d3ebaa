/** Typed client for the wrapper service; all state lives server-side. */

import type { LabelsPayload, Span, TokenInfo } from "./labels.js";

export interface PageUpload {
  page_id: string;
  tokens: TokenInfo[];
}

export interface PageView {
  page_id: string;
  html: string;
  tokens: TokenInfo[];
  labels: (LabelsPayload & { page_id: string }) | null;
}

export interface DetectorSummary {
  n_instances: number;
  cost_min: number;
  cost_max: number;
  cost_mid: number;
}

export interface SeparatorSummary {
  zone: string;
  edge: "begin" | "end";
  left: DetectorSummary;
  right: DetectorSummary;
}

export interface ModelSummary {
  model_id: string;
  window_len: number;
  config: Record<string, unknown>;
  attribute_names: string[];
  separators: SeparatorSummary[];
}

export interface AttributeHit {
  text: string;
  span: Span;
  begin_error: number;
  end_error: number;
}

export interface TupleHit {
  span: Span;
  begin_error: number;
  end_error: number;
  attributes: Record<string, AttributeHit[]>;
}

export interface ExtractionView {
  page_id: string;
  global: { span: Span; begin_error: number; end_error: number };
  tuples: TupleHit[];
}

export class ApiError extends Error {
  constructor(
    public status: number,
    public body: { error?: string; detail?: string; offset?: number },
  ) {
    super(body.detail ?? `request failed with ${status}`);
  }
}

async function expectJson<T>(resp: Response): Promise<T> {
  if (!resp.ok) {
    let body = {};
    try {
      body = await resp.json();
    } catch {
      // non-JSON error body; keep the status
    }
    throw new ApiError(resp.status, body);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(public base: string) {}

  private url(path: string): string {
    return `${this.base.replace(/\/$/, "")}${path}`;
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(this.url("/health"));
      return resp.ok;
    } catch {
      return false;
    }
  }

  uploadPage(html: string, pageId?: string): Promise<PageUpload> {
    return fetch(this.url("/pages"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ html, page_id: pageId ?? null }),
    }).then((r) => expectJson<PageUpload>(r));
  }

  getPage(pageId: string): Promise<PageView> {
    return fetch(this.url(`/pages/${pageId}`)).then((r) => expectJson<PageView>(r));
  }

  putLabels(pageId: string, labels: LabelsPayload): Promise<{ status: string }> {
    return fetch(this.url(`/pages/${pageId}/labels`), {
      method: "PUT",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(labels),
    }).then((r) => expectJson<{ status: string }>(r));
  }

  train(pageIds: string[], config?: Record<string, unknown>): Promise<ModelSummary> {
    return fetch(this.url("/train"), {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ page_ids: pageIds, config: config ?? null }),
    }).then((r) => expectJson<ModelSummary>(r));
  }

  getModel(modelId: string): Promise<ModelSummary> {
    return fetch(this.url(`/models/${modelId}`)).then((r) => expectJson<ModelSummary>(r));
  }

  extract(modelId: string, pageId: string): Promise<ExtractionView> {
    return fetch(this.url(`/models/${modelId}/extract?page=${encodeURIComponent(pageId)}`), {
      method: "POST",
    }).then((r) => expectJson<ExtractionView>(r));
  }
}
