/**
 * Wire types shared with the decision service.
 *
 * These mirror the JSON problem-document schema and the service response
 * payloads field-for-field; the client never reshapes numeric data, it only
 * renders what the service sent.
 */

export type Orientation = 'benefit' | 'cost';
export type EntropyModel = 'cosine' | 'shannon' | 'linear';
export type Aggregator = 'ffwa' | 'ffwg';

export const ENTROPY_MODELS: EntropyModel[] = ['cosine', 'shannon', 'linear'];

/** Problem document (schema_version 1), the format the CLI and service share. */
export interface ProblemDocument {
  schema_version: number;
  title: string;
  /** term label -> [membership, non-membership] */
  scale: Record<string, [number, number]>;
  criteria: { id: string; name: string; orientation: Orientation }[];
  alternatives: { id: string; name: string }[];
  experts: { id: string; grade: string }[];
  /** expert-major tensor: [expert][alternative][criterion] term labels */
  evaluations: string[][][];
  /** [expert][criterion] term labels */
  criterion_importance: string[][];
}

export interface WeightsPayload {
  criteria: string[];
  expert: { ids: string[]; grades: string[]; weights: number[] };
  entropies: { model: EntropyModel; reduction: string; values: number[] };
  piprecia: { crisp: number[]; s: (number | null)[]; kappa: number[]; q: number[] };
  objective: number[];
  subjective: number[];
  alpha: number;
  integrated: number[];
}

export interface MarcosPayload {
  alternatives: string[];
  s: number[];
  s_pis: number;
  s_nis: number;
  u_minus: number[];
  u_plus: number[];
  f_u: number[];
  order: string[];
  ranks: number[];
}

export interface MatrixPayload {
  rows: string[];
  columns: string[];
  orientations: Orientation[];
  cells: [number, number][][];
}

export interface EvaluateResponse {
  schema_version: number;
  title: string;
  weights: WeightsPayload;
  marcos: MarcosPayload;
  intermediate?: {
    aggregated: MatrixPayload;
    normalized: MatrixPayload;
    weighted: MatrixPayload;
    pis: [number, number][];
    nis: [number, number][];
    scores: number[][];
  };
}

export interface SweepResponse {
  schema_version: number;
  alternatives: string[];
  alpha_grid: number[];
  results: { alpha: number; f_u: number[]; order: string[] }[];
}

export interface PerturbScenario {
  criterion: string;
  direction: '+' | '-';
  weights: number[];
  order: string[];
  tau: number;
}

export interface PerturbResponse {
  schema_version: number;
  delta: number;
  base_order: string[];
  scenarios: PerturbScenario[];
}

export interface ServiceError {
  error: { field: string; message: string };
}

/** One rejected field, same shape the service reports. */
export interface ValidationIssue {
  field: string;
  message: string;
}
