// Thin typed client for the chart session service.

import type {
  ApplyResponse,
  ChartSnapshot,
  ParseDto,
  RuleName,
  StepResponse,
  StrategyName,
  TreeResponse,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, init);
  const body = await response.json().catch(() => ({}));
  if (!response.ok) {
    throw new ApiError(response.status, (body as { error?: string }).error ?? response.statusText);
  }
  return body as T;
}

function post(body: unknown): RequestInit {
  return {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body ?? {}),
  };
}

export class SessionApi {
  constructor(
    readonly base: string,
    public sessionId: string,
  ) {}

  static async create(
    base: string,
    grammar: string,
    sentence: string,
    strategy: StrategyName,
  ): Promise<SessionApi> {
    const made = await request<{ id: string }>(`${base}/api/v1/sessions`, post({ grammar, sentence, strategy }));
    return new SessionApi(base, made.id);
  }

  private url(tail: string): string {
    return `${this.base}/api/v1/sessions/${this.sessionId}${tail}`;
  }

  chart(): Promise<ChartSnapshot> {
    return request(this.url("/chart"));
  }

  step(): Promise<StepResponse> {
    return request(this.url("/step"), post({}));
  }

  apply(rule: RuleName, edgeIds?: number[]): Promise<ApplyResponse> {
    const body = edgeIds && edgeIds.length ? { rule, edge_ids: edgeIds } : { rule };
    return request(this.url("/apply"), post(body));
  }

  strategy(name: StrategyName): Promise<{ strategy: string }> {
    return request(this.url("/strategy"), post({ name }));
  }

  reset(preset: string): Promise<{ reset: string; edges: number }> {
    return request(this.url("/reset"), post({ preset }));
  }

  undo(): Promise<{ removed: number[] }> {
    return request(this.url("/undo"), post({}));
  }

  tree(edgeId: number): Promise<TreeResponse> {
    return request(this.url(`/tree?edge=${edgeId}`));
  }

  parses(): Promise<{ parses: ParseDto[] }> {
    return request(this.url("/parses"));
  }
}

export function listPresets(base: string): Promise<{ presets: string[] }> {
  return request(`${base}/api/v1/presets`);
}

export function getPreset(base: string, name: string): Promise<ChartSnapshot> {
  return request(`${base}/api/v1/presets/${encodeURIComponent(name)}`);
}
