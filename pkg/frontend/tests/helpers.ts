/**
 * Test scaffolding: a small valid document, a scripted fake service, and the
 * DOM skeleton the app expects.
 */

import type { EvaluateResponse, ProblemDocument } from '../src/types.js';
import type { FetchLike } from '../src/api.js';

export const SCALE: Record<string, [number, number]> = {
  AI: [1.0, 0.0],
  VI: [0.85, 0.25],
  I: [0.7, 0.4],
  M: [0.5, 0.5],
  L: [0.4, 0.7],
  VL: [0.25, 0.85],
  U: [0.0, 1.0],
};

export function makeDocument(): ProblemDocument {
  return {
    schema_version: 1,
    title: 'test problem',
    scale: structuredClone(SCALE),
    criteria: [
      { id: 'C1', name: 'first', orientation: 'cost' },
      { id: 'C2', name: 'second', orientation: 'benefit' },
    ],
    alternatives: [
      { id: 'A1', name: 'alpha' },
      { id: 'A2', name: 'bravo' },
    ],
    experts: [
      { id: 'E1', grade: 'AI' },
      { id: 'E2', grade: 'VI' },
    ],
    evaluations: [
      [
        ['I', 'M'],
        ['L', 'VI'],
      ],
      [
        ['M', 'M'],
        ['I', 'L'],
      ],
    ],
    criterion_importance: [
      ['VI', 'M'],
      ['I', 'L'],
    ],
  };
}

export interface RecordedCall {
  url: string;
  method: string;
  body: Record<string, unknown> | null;
}

export interface FakeService {
  fetchImpl: FetchLike;
  calls: RecordedCall[];
  evaluateCalls(): RecordedCall[];
}

/**
 * Scripted service double.  Evaluate payloads are minted per call with a
 * distinctive, monotonically varying sentinel so tests can prove displayed
 * numbers came from the wire and from the *correct* (non-stale) response.
 */
export function fakeService(document: ProblemDocument): FakeService {
  const calls: RecordedCall[] = [];
  let evaluateCount = 0;

  const fetchImpl: FetchLike = async (url, init) => {
    const method = init?.method ?? 'GET';
    const body = init?.body ? (JSON.parse(init.body as string) as Record<string, unknown>) : null;
    calls.push({ url, method, body });

    if (method === 'GET' && url.includes('/cases/')) {
      return jsonResponse(document);
    }
    if (method === 'POST' && url.endsWith('/evaluate')) {
      evaluateCount += 1;
      const problem = body!['problem'] as ProblemDocument;
      const alpha = body!['alpha'] as number;
      return jsonResponse(scriptedEvaluate(problem, alpha, evaluateCount));
    }
    return jsonResponse({ error: { field: '', message: `unscripted ${method} ${url}` } }, 400);
  };

  return {
    fetchImpl,
    calls,
    evaluateCalls: () => calls.filter((c) => c.method === 'POST' && c.url.endsWith('/evaluate')),
  };
}

export function jsonResponse(payload: unknown, status = 200): Response {
  return new Response(JSON.stringify(payload), {
    status,
    headers: { 'Content-Type': 'application/json' },
  });
}

/**
 * Deterministic canned response: numbers vary with the call index (so stale
 * responses are distinguishable) and normalized cells flip with the
 * requested orientations (so the preview provably mirrors the service).
 */
export function scriptedEvaluate(
  problem: ProblemDocument,
  alpha: number,
  callIndex: number,
): EvaluateResponse {
  const alternatives = problem.alternatives.map((a) => a.id);
  const criteria = problem.criteria.map((c) => c.id);
  const n = alternatives.length;
  const sentinel = callIndex / 1000;
  const fU = alternatives.map((_, i) => 0.42 + sentinel + i * 0.07);
  const order = [...alternatives].sort(
    (x, y) => fU[alternatives.indexOf(y)]! - fU[alternatives.indexOf(x)]!,
  );
  const weight = (j: number): number => (j + 1) / ((criteria.length * (criteria.length + 1)) / 2);
  return {
    schema_version: 1,
    title: problem.title,
    weights: {
      criteria,
      expert: {
        ids: problem.experts.map((e) => e.id),
        grades: problem.experts.map((e) => e.grade),
        weights: problem.experts.map(() => 1 / problem.experts.length),
      },
      entropies: {
        model: 'cosine',
        reduction: 'mean',
        values: criteria.map((_, j) => 0.8 + sentinel + j * 0.01),
      },
      piprecia: {
        crisp: criteria.map((_, j) => 0.7 - j * 0.05),
        s: [null, ...criteria.slice(1).map(() => 1.0)],
        kappa: criteria.map(() => 1.0),
        q: criteria.map(() => 1.0),
      },
      objective: criteria.map((_, j) => weight(j)),
      subjective: criteria.map((_, j) => weight(criteria.length - 1 - j)),
      alpha,
      integrated: criteria.map((_, j) => 0.1234 + sentinel + j * 0.001),
    },
    marcos: {
      alternatives,
      s: fU.map((v) => v * 3),
      s_pis: 3.21,
      s_nis: 2.1,
      u_minus: fU.map((v) => v * 0.9),
      u_plus: fU.map((v) => v * 1.1),
      f_u: fU,
      order,
      ranks: alternatives.map((id) => order.indexOf(id) + 1),
    },
    intermediate: {
      aggregated: {
        rows: alternatives,
        columns: criteria,
        orientations: problem.criteria.map((c) => c.orientation),
        cells: alternatives.map(() => criteria.map(() => [0.9, 0.1] as [number, number])),
      },
      normalized: {
        rows: alternatives,
        columns: criteria,
        orientations: problem.criteria.map(() => 'benefit' as const),
        cells: alternatives.map(() =>
          problem.criteria.map((c) =>
            c.orientation === 'cost' ? ([0.1, 0.9] as [number, number]) : ([0.9, 0.1] as [number, number]),
          ),
        ),
      },
      weighted: {
        rows: alternatives,
        columns: criteria,
        orientations: problem.criteria.map(() => 'benefit' as const),
        cells: alternatives.map(() => criteria.map(() => [0.5, 0.5] as [number, number])),
      },
      pis: criteria.map(() => [0.9, 0.1] as [number, number]),
      nis: criteria.map(() => [0.1, 0.9] as [number, number]),
      scores: alternatives.map((_, i) => criteria.map(() => fU[i]! / n)),
    },
  };
}

/** The container skeleton `startApp` expects, mirroring index.html. */
export function installDom(): void {
  document.body.innerHTML = `
    <div id="status"></div>
    <div id="controls"></div>
    <span id="revision"></span>
    <div id="grid"></div>
    <div id="ranking"></div>
    <div id="weights"></div>
    <div id="normalized-preview"></div>
    <button id="export-button" type="button"></button>
    <textarea id="import-text"></textarea>
  `;
}

/** Collect every numeric token rendered inside an element, per text node
 * (concatenating across nodes would glue neighbouring cells together). */
export function renderedNumbers(el: HTMLElement): string[] {
  const walker = document.createTreeWalker(el, NodeFilter.SHOW_TEXT);
  const out: string[] = [];
  while (walker.nextNode()) {
    out.push(...((walker.currentNode.textContent ?? '').match(/\d+\.\d+/g) ?? []));
  }
  return out;
}
