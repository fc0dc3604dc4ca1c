/**
 * Thin fetch wrapper over the decision service.
 *
 * Base URL is configurable (constructor argument, `window.FFDECIDE_API_BASE`,
 * or the default same-origin `/api/v1`).  The fetch implementation is
 * injectable so tests can intercept traffic.
 */

import type {
  Aggregator,
  EntropyModel,
  EvaluateResponse,
  PerturbResponse,
  ProblemDocument,
  ServiceError,
  SweepResponse,
} from './types.js';

export interface EvaluateRequest {
  problem: ProblemDocument;
  alpha: number;
  entropy_model: EntropyModel;
  aggregator?: Aggregator;
  standard_marcos?: boolean;
  include_intermediate?: boolean;
}

export class ApiError extends Error {
  readonly field: string;
  readonly status: number;

  constructor(status: number, field: string, message: string) {
    super(message);
    this.field = field;
    this.status = status;
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

const defaultBase = (): string => {
  const declared = (globalThis as { FFDECIDE_API_BASE?: string }).FFDECIDE_API_BASE;
  return declared ?? '/api/v1';
};

export class ApiClient {
  readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl?: string, fetchImpl?: FetchLike) {
    this.baseUrl = (baseUrl ?? defaultBase()).replace(/\/$/, '');
    this.fetchImpl = fetchImpl ?? ((input, init) => fetch(input, init));
  }

  private async request<T>(path: string, body?: unknown, signal?: AbortSignal): Promise<T> {
    const init: RequestInit = body === undefined
      ? { method: 'GET', signal: signal ?? null }
      : {
          method: 'POST',
          headers: { 'Content-Type': 'application/json' },
          body: JSON.stringify(body),
          signal: signal ?? null,
        };
    const resp = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    if (!resp.ok) {
      let field = '';
      let message = `service responded ${resp.status}`;
      try {
        const payload = (await resp.json()) as ServiceError;
        field = payload.error?.field ?? '';
        message = payload.error?.message ?? message;
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(resp.status, field, message);
    }
    return (await resp.json()) as T;
  }

  evaluate(req: EvaluateRequest, signal?: AbortSignal): Promise<EvaluateResponse> {
    return this.request<EvaluateResponse>('/evaluate', req, signal);
  }

  sweep(req: EvaluateRequest & { alpha_grid?: number[] | string }, signal?: AbortSignal): Promise<SweepResponse> {
    return this.request<SweepResponse>('/sweep', req, signal);
  }

  perturb(req: EvaluateRequest & { delta?: number }, signal?: AbortSignal): Promise<PerturbResponse> {
    return this.request<PerturbResponse>('/perturb', req, signal);
  }

  cases(): Promise<{ cases: string[] }> {
    return this.request<{ cases: string[] }>('/cases');
  }

  caseDocument(name: string): Promise<ProblemDocument> {
    return this.request<ProblemDocument>(`/cases/${encodeURIComponent(name)}`);
  }

  defaultScale(): Promise<{ terms: Record<string, [number, number]> }> {
    return this.request<{ terms: Record<string, [number, number]> }>('/scales/default');
  }
}
