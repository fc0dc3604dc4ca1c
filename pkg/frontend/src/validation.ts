/**
 * Client-side problem-document validation.
 *
 * Mirrors the service's checks in the same order and with the same field
 * paths, so a draft rejected here is rejected by the service with an
 * identical `error.field` (minus the `problem.` prefix the service adds for
 * inline documents).  A draft failing validation is never submitted.
 */

import type { ProblemDocument, ValidationIssue } from './types.js';

const SCHEMA_VERSION = 1;
const EPS_TOL = 1e-9;
const ORIENTATIONS = ['benefit', 'cost'];

const issue = (field: string, message: string): ValidationIssue => ({ field, message });

const isPlainObject = (v: unknown): v is Record<string, unknown> =>
  typeof v === 'object' && v !== null && !Array.isArray(v);

const isNumber = (v: unknown): v is number => typeof v === 'number' && !Number.isNaN(v);

/** membership/non-membership pair admissible under the cube-sum bound */
const validPair = (mu: number, nu: number): boolean =>
  Number.isFinite(mu) &&
  Number.isFinite(nu) &&
  mu >= -EPS_TOL &&
  mu <= 1 + EPS_TOL &&
  nu >= -EPS_TOL &&
  nu <= 1 + EPS_TOL &&
  Math.max(mu, 0) ** 3 + Math.max(nu, 0) ** 3 <= 1 + EPS_TOL;

const checkStringListOfObjects = (
  doc: Record<string, unknown>,
  key: string,
  fields: string[],
): ValidationIssue | null => {
  const raw = doc[key];
  if (raw === undefined) return issue(key, 'missing field');
  if (!Array.isArray(raw)) return issue(key, `expected array, got ${typeof raw}`);
  for (let i = 0; i < raw.length; i++) {
    const entry = raw[i];
    if (!isPlainObject(entry)) return issue(`${key}[${i}]`, 'expected object');
    for (const f of fields) {
      if (!(f in entry)) return issue(`${key}[${i}].${f}`, 'missing field');
      if (typeof entry[f] !== 'string') {
        return issue(`${key}[${i}].${f}`, `expected string, got ${typeof entry[f]}`);
      }
    }
  }
  return null;
};

const checkTermGrid = (raw: unknown, path: string, depth: number): ValidationIssue | null => {
  if (depth === 0) {
    return typeof raw === 'string' ? null : issue(path, 'expected term label');
  }
  if (!Array.isArray(raw)) return issue(path, 'expected array');
  for (let i = 0; i < raw.length; i++) {
    const err = checkTermGrid(raw[i], `${path}[${i}]`, depth - 1);
    if (err) return err;
  }
  return null;
};

const checkUnique = (path: string, ids: string[]): ValidationIssue | null => {
  const seen = new Set<string>();
  for (let i = 0; i < ids.length; i++) {
    const id = ids[i]!;
    if (seen.has(id)) return issue(`${path}[${i}].id`, `duplicate id ${id}`);
    seen.add(id);
  }
  return null;
};

/**
 * Validate a candidate document.  Returns the first problem found (matching
 * the service's own check order) or null when the draft is submittable.
 */
export function validateDocument(candidate: unknown): ValidationIssue | null {
  if (!isPlainObject(candidate)) return issue('', 'document root must be an object');
  const doc = candidate;

  const version = doc['schema_version'];
  if (version === undefined) return issue('schema_version', 'missing field');
  if (typeof version !== 'number' || !Number.isInteger(version)) {
    return issue('schema_version', 'expected integer');
  }
  if (version !== SCHEMA_VERSION) {
    return issue('schema_version', `unsupported schema_version ${version}`);
  }

  if (doc['title'] === undefined) return issue('title', 'missing field');
  if (typeof doc['title'] !== 'string') return issue('title', 'expected string');

  const scale = doc['scale'];
  if (scale === undefined) return issue('scale', 'missing field');
  if (!isPlainObject(scale)) return issue('scale', 'expected object');
  for (const [term, pair] of Object.entries(scale)) {
    if (!Array.isArray(pair) || pair.length !== 2 || !pair.every(isNumber)) {
      return issue(`scale.${term}`, 'expected [mu, nu] pair of numbers');
    }
    if (!validPair(pair[0] as number, pair[1] as number)) {
      return issue(`scale.${term}`, 'pair violates the cube-sum bound');
    }
  }
  if (Object.keys(scale).length === 0) return issue('scale', 'scale has no terms');

  let err =
    checkStringListOfObjects(doc, 'criteria', ['id', 'name', 'orientation']) ??
    checkStringListOfObjects(doc, 'alternatives', ['id', 'name']) ??
    checkStringListOfObjects(doc, 'experts', ['id', 'grade']);
  if (err) return err;

  if (doc['evaluations'] === undefined) return issue('evaluations', 'missing field');
  err = checkTermGrid(doc['evaluations'], 'evaluations', 3);
  if (err) return err;
  if (doc['criterion_importance'] === undefined) {
    return issue('criterion_importance', 'missing field');
  }
  err = checkTermGrid(doc['criterion_importance'], 'criterion_importance', 2);
  if (err) return err;

  // Schema is sound; now the semantic checks, in the service's order.
  const p = doc as unknown as ProblemDocument;
  if (p.criteria.length === 0) return issue('criteria', 'need at least one criterion');
  if (p.alternatives.length === 0) return issue('alternatives', 'need at least one alternative');
  if (p.experts.length === 0) return issue('experts', 'need at least one expert');

  err =
    checkUnique('criteria', p.criteria.map((c) => c.id)) ??
    checkUnique('alternatives', p.alternatives.map((a) => a.id)) ??
    checkUnique('experts', p.experts.map((e) => e.id));
  if (err) return err;

  for (let i = 0; i < p.criteria.length; i++) {
    if (!ORIENTATIONS.includes(p.criteria[i]!.orientation)) {
      return issue(`criteria[${i}].orientation`, 'orientation must be benefit or cost');
    }
  }
  for (let i = 0; i < p.experts.length; i++) {
    if (!(p.experts[i]!.grade in p.scale)) {
      return issue(`experts[${i}].grade`, `grade ${p.experts[i]!.grade} not in scale`);
    }
  }

  const nE = p.experts.length;
  const nA = p.alternatives.length;
  const nC = p.criteria.length;
  if (p.evaluations.length !== nE) {
    return issue('evaluations', `expected ${nE} expert blocks, got ${p.evaluations.length}`);
  }
  for (let e = 0; e < nE; e++) {
    const block = p.evaluations[e]!;
    if (block.length !== nA) {
      return issue(`evaluations[${e}]`, `expected ${nA} alternative rows, got ${block.length}`);
    }
    for (let a = 0; a < nA; a++) {
      const row = block[a]!;
      if (row.length !== nC) {
        return issue(`evaluations[${e}][${a}]`, `expected ${nC} terms, got ${row.length}`);
      }
      for (let c = 0; c < nC; c++) {
        if (!(row[c]! in p.scale)) {
          return issue(`evaluations[${e}][${a}][${c}]`, `term ${row[c]} not in scale`);
        }
      }
    }
  }

  if (p.criterion_importance.length !== nE) {
    return issue(
      'criterion_importance',
      `expected ${nE} expert rows, got ${p.criterion_importance.length}`,
    );
  }
  for (let e = 0; e < nE; e++) {
    const row = p.criterion_importance[e]!;
    if (row.length !== nC) {
      return issue(`criterion_importance[${e}]`, `expected ${nC} terms, got ${row.length}`);
    }
    for (let c = 0; c < nC; c++) {
      if (!(row[c]! in p.scale)) {
        return issue(`criterion_importance[${e}][${c}]`, `term ${row[c]} not in scale`);
      }
    }
  }

  return null;
}

/** True when a single grid entry is a term of the active scale. */
export const isKnownTerm = (term: string, scale: Record<string, [number, number]>): boolean =>
  term in scale;
