/**
 * Judgment grid: one block per expert, alternatives x criteria cells.
 *
 * Cell edits are constrained to the active scale's terms via a select; a
 * free-text mode exists for pasting, with inline rejection of unknown terms.
 * Edited cells carry a dirty marker until a response for a revision at or
 * after the edit lands.
 */

import { Session } from './session.js';
import { isKnownTerm } from './validation.js';

export interface GridCallbacks {
  onEdit(expert: number, alternative: number, criterion: number, term: string): void;
  onInvalidTerm(term: string, known: string[]): void;
}

export function renderGrid(
  container: HTMLElement,
  session: Session,
  callbacks: GridCallbacks,
  freeText = false,
): void {
  const { draft } = session;
  const terms = Object.keys(draft.scale);
  container.textContent = '';

  draft.experts.forEach((expert, e) => {
    const block = document.createElement('section');
    block.className = 'expert-block';
    block.dataset['expert'] = String(e);

    const heading = document.createElement('h3');
    heading.textContent = `${expert.id} (grade ${expert.grade})`;
    block.appendChild(heading);

    const table = document.createElement('table');
    table.className = 'judgment-grid';
    const head = table.createTHead().insertRow();
    head.appendChild(document.createElement('th'));
    for (const criterion of draft.criteria) {
      const th = document.createElement('th');
      th.textContent = criterion.id;
      th.title = `${criterion.name} (${criterion.orientation})`;
      head.appendChild(th);
    }

    const body = table.createTBody();
    draft.alternatives.forEach((alternative, a) => {
      const row = body.insertRow();
      const label = document.createElement('th');
      label.textContent = alternative.id;
      label.title = alternative.name;
      row.appendChild(label);

      draft.criteria.forEach((_, c) => {
        const cell = row.insertCell();
        cell.dataset['cell'] = Session.cellKey(e, a, c);
        if (session.dirtyCells.has(Session.cellKey(e, a, c))) {
          cell.classList.add('dirty');
        }
        const current = draft.evaluations[e]![a]![c]!;
        if (freeText) {
          const input = document.createElement('input');
          input.type = 'text';
          input.value = current;
          input.addEventListener('change', () => {
            const term = input.value.trim();
            if (!isKnownTerm(term, draft.scale)) {
              cell.classList.add('invalid');
              callbacks.onInvalidTerm(term, terms);
              return;
            }
            cell.classList.remove('invalid');
            callbacks.onEdit(e, a, c, term);
          });
          cell.appendChild(input);
        } else {
          const select = document.createElement('select');
          for (const term of terms) {
            const option = document.createElement('option');
            option.value = term;
            option.textContent = term;
            option.selected = term === current;
            select.appendChild(option);
          }
          select.addEventListener('change', () => {
            callbacks.onEdit(e, a, c, select.value);
          });
          cell.appendChild(select);
        }
      });
    });

    block.appendChild(table);
    container.appendChild(block);
  });
}

/** Clear dirty markers after a matching response rendered. */
export function clearDirtyMarkers(container: HTMLElement): void {
  for (const el of container.querySelectorAll('.dirty')) {
    el.classList.remove('dirty');
  }
}
