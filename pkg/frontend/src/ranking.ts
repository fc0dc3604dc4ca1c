/**
 * Result views: ranking bar list, weight breakdown, normalized preview.
 *
 * Every number rendered here is read from the service payload; the only
 * client-side transformation is display rounding.  Rendered roots carry the
 * revision that produced them so stale and fresh numbers can never mix.
 */

import type { EvaluateResponse } from './types.js';

const UTILITY_DIGITS = 4;
const WEIGHT_DIGITS = 4;
const FFN_DIGITS = 2;

export function renderRanking(
  container: HTMLElement,
  payload: EvaluateResponse,
  revision: number,
): void {
  container.textContent = '';
  container.dataset['revision'] = String(revision);
  const marcos = payload.marcos;
  const best = Math.max(...marcos.f_u);
  const list = document.createElement('ol');
  list.className = 'ranking-bars';
  for (const id of marcos.order) {
    const i = marcos.alternatives.indexOf(id);
    const fu = marcos.f_u[i]!;
    const item = document.createElement('li');
    item.dataset['alternative'] = id;
    const bar = document.createElement('span');
    bar.className = 'bar';
    bar.style.width = `${(100 * fu) / best}%`;
    const text = document.createElement('span');
    text.className = 'value';
    text.textContent = `${id} ${fu.toFixed(UTILITY_DIGITS)}`;
    item.appendChild(bar);
    item.appendChild(text);
    list.appendChild(item);
  }
  container.appendChild(list);
}

export function renderWeights(
  container: HTMLElement,
  payload: EvaluateResponse,
  revision: number,
  highlighted: string | null = null,
): void {
  container.textContent = '';
  container.dataset['revision'] = String(revision);
  const weights = payload.weights;
  const table = document.createElement('table');
  table.className = 'weight-breakdown';
  const head = table.createTHead().insertRow();
  for (const title of ['criterion', 'entropy', 'objective', 'subjective', 'integrated']) {
    const th = document.createElement('th');
    th.textContent = title;
    head.appendChild(th);
  }
  const body = table.createTBody();
  weights.criteria.forEach((id, j) => {
    const row = body.insertRow();
    row.dataset['criterion'] = id;
    if (highlighted === id) row.classList.add('highlight');
    const cells = [
      id,
      weights.entropies.values[j]!.toFixed(WEIGHT_DIGITS),
      weights.objective[j]!.toFixed(WEIGHT_DIGITS),
      weights.subjective[j]!.toFixed(WEIGHT_DIGITS),
      weights.integrated[j]!.toFixed(WEIGHT_DIGITS),
    ];
    for (const value of cells) {
      const cell = row.insertCell();
      cell.textContent = value;
    }
  });
  container.appendChild(table);
}

/** Side-by-side aggregated vs normalized cells (cost columns flip). */
export function renderNormalizedPreview(
  container: HTMLElement,
  payload: EvaluateResponse,
  revision: number,
): void {
  container.textContent = '';
  container.dataset['revision'] = String(revision);
  const intermediate = payload.intermediate;
  if (!intermediate) return;
  const normalized = intermediate.normalized;
  const table = document.createElement('table');
  table.className = 'normalized-preview';
  const head = table.createTHead().insertRow();
  head.appendChild(document.createElement('th'));
  for (const column of normalized.columns) {
    const th = document.createElement('th');
    th.textContent = column;
    head.appendChild(th);
  }
  const body = table.createTBody();
  normalized.rows.forEach((rowId, i) => {
    const row = body.insertRow();
    const label = document.createElement('th');
    label.textContent = rowId;
    row.appendChild(label);
    normalized.cells[i]!.forEach(([mu, nu], j) => {
      const cell = row.insertCell();
      cell.dataset['column'] = normalized.columns[j]!;
      cell.textContent = `(${mu.toFixed(FFN_DIGITS)}, ${nu.toFixed(FFN_DIGITS)})`;
    });
  });
  container.appendChild(table);
}
