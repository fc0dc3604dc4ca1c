/**
 * Application bootstrap: load the built-in case, wire the grid, controls,
 * and result panels to a Session, and keep revisions consistent.
 */

import { ApiClient, ApiError } from './api.js';
import { renderAgreementBadge, renderControls } from './controls.js';
import { clearDirtyMarkers, renderGrid } from './grid.js';
import { renderNormalizedPreview, renderRanking, renderWeights } from './ranking.js';
import { Session, type CommittedResponse } from './session.js';
import type { ProblemDocument, ValidationIssue } from './types.js';
import { validateDocument } from './validation.js';

const byId = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
};

export interface App {
  session: Session;
}

/** Wire the UI inside `root`; exported for the test harness. */
export async function startApp(api: ApiClient, caseName = 'turkiye-energy-poverty'): Promise<App> {
  const gridEl = byId<HTMLElement>('grid');
  const controlsEl = byId<HTMLElement>('controls');
  const rankingEl = byId<HTMLElement>('ranking');
  const weightsEl = byId<HTMLElement>('weights');
  const previewEl = byId<HTMLElement>('normalized-preview');
  const statusEl = byId<HTMLElement>('status');
  const revisionEl = byId<HTMLElement>('revision');

  const draft = await api.caseDocument(caseName);

  const session: Session = new Session(draft, api, {
    onRevision(revision: number): void {
      revisionEl.textContent = `rev ${revision}`;
      statusEl.textContent = '';
      statusEl.classList.remove('error');
    },
    onResponse(committed: CommittedResponse, agreement: number | null): void {
      renderRanking(rankingEl, committed.payload, committed.revision);
      renderWeights(weightsEl, committed.payload, committed.revision, session.highlightedCriterion);
      renderNormalizedPreview(previewEl, committed.payload, committed.revision);
      renderAgreementBadge(byId<HTMLElement>('tau-badge'), agreement);
      clearDirtyMarkers(gridEl);
      session.dirtyCells.clear();
      statusEl.textContent = `evaluated rev ${committed.revision}`;
    },
    onValidationError(issue: ValidationIssue): void {
      statusEl.textContent = `invalid draft at ${issue.field}: ${issue.message}`;
      statusEl.classList.add('error');
    },
    onServiceError(error: ApiError): void {
      const where = error.field ? ` at ${error.field}` : '';
      statusEl.textContent = `service rejected the request${where}: ${error.message}`;
      statusEl.classList.add('error');
    },
  });

  const rewire = (): void => {
    renderGrid(gridEl, session, {
      onEdit: (e, a, c, term) => session.editCell(e, a, c, term),
      onInvalidTerm: (term, known) => {
        statusEl.textContent = `unknown term "${term}"; expected one of ${known.join(', ')}`;
        statusEl.classList.add('error');
      },
    });
    renderControls(controlsEl, session, {
      onAlpha: (alpha) => session.setAlpha(alpha),
      onEntropyModel: (model) => session.setEntropyModel(model),
      onToggleOrientation: (j) => {
        session.toggleOrientation(j);
        rewire(); // orientation shows on the toggle labels and grid headers
      },
      onHighlightCriterion: (id) => {
        session.highlightedCriterion = id;
        if (session.lastResponse) {
          renderWeights(weightsEl, session.lastResponse.payload, session.lastResponse.revision, id);
        }
      },
    });
  };
  rewire();

  byId<HTMLButtonElement>('export-button').addEventListener('click', () => {
    const blob = new Blob([session.exportDocument()], { type: 'application/json' });
    const url = URL.createObjectURL(blob);
    const link = document.createElement('a');
    link.href = url;
    link.download = 'problem.json';
    link.click();
    URL.revokeObjectURL(url);
  });

  byId<HTMLTextAreaElement>('import-text').addEventListener('change', (event) => {
    const textarea = event.target as HTMLTextAreaElement;
    let parsed: unknown;
    try {
      parsed = JSON.parse(textarea.value);
    } catch (err) {
      statusEl.textContent = `import failed: ${(err as Error).message}`;
      statusEl.classList.add('error');
      return;
    }
    const issue = validateDocument(parsed);
    if (issue) {
      statusEl.textContent = `import rejected at ${issue.field}: ${issue.message}`;
      statusEl.classList.add('error');
      return;
    }
    session.replaceDraft(parsed as ProblemDocument);
    rewire();
  });

  await session.evaluateNow();
  return { session };
}

// Browser entry point; tests drive startApp directly.
if (typeof document !== 'undefined' && document.getElementById('grid') && !('vitest' in globalThis)) {
  void startApp(new ApiClient());
}
