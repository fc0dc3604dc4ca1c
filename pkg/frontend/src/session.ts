/**
 * Session state and request discipline.
 *
 * Every draft or control mutation bumps a revision counter.  Valid drafts
 * schedule exactly one debounced evaluate call (150 ms); superseded timers
 * are cancelled, superseded in-flight responses are discarded, and at most
 * one request is outstanding at a time.  A response is rendered only when
 * its revision still equals the session's current revision, so stale numbers
 * never reach the screen.
 */

import { ApiClient, ApiError } from './api.js';
import { rankAgreement } from './rank-agreement.js';
import type {
  EntropyModel,
  EvaluateResponse,
  ProblemDocument,
  ValidationIssue,
} from './types.js';
import { validateDocument } from './validation.js';

export const DEBOUNCE_MS = 150;

export interface CommittedResponse {
  revision: number;
  payload: EvaluateResponse;
}

export interface SessionListener {
  /** A response matching the current revision arrived. */
  onResponse(committed: CommittedResponse, agreement: number | null): void;
  /** The draft failed client-side validation; nothing was submitted. */
  onValidationError(issue: ValidationIssue): void;
  /** The service rejected the request. */
  onServiceError(error: ApiError): void;
  /** Revision moved (draft edited / control changed); render dirty state. */
  onRevision(revision: number): void;
}

export class Session {
  draft: ProblemDocument;
  revision = 0;
  alpha = 0.5;
  entropyModel: EntropyModel = 'cosine';
  includeIntermediate = true;
  highlightedCriterion: string | null = null;
  lastResponse: CommittedResponse | null = null;
  lastAgreement: number | null = null;
  validationIssue: ValidationIssue | null = null;
  readonly dirtyCells = new Set<string>();

  private readonly api: ApiClient;
  private readonly listener: SessionListener;
  private readonly debounceMs: number;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inflight: { revision: number; controller: AbortController } | null = null;

  constructor(
    draft: ProblemDocument,
    api: ApiClient,
    listener: SessionListener,
    debounceMs: number = DEBOUNCE_MS,
  ) {
    this.draft = draft;
    this.api = api;
    this.listener = listener;
    this.debounceMs = debounceMs;
  }

  /** Key for dirty-cell tracking: expert/alternative/criterion indices. */
  static cellKey(expert: number, alternative: number, criterion: number): string {
    return `${expert}:${alternative}:${criterion}`;
  }

  // -- mutations ---------------------------------------------------------

  editCell(expert: number, alternative: number, criterion: number, term: string): void {
    this.draft.evaluations[expert]![alternative]![criterion] = term;
    this.dirtyCells.add(Session.cellKey(expert, alternative, criterion));
    this.bump();
  }

  editImportance(expert: number, criterion: number, term: string): void {
    this.draft.criterion_importance[expert]![criterion] = term;
    this.bump();
  }

  setAlpha(alpha: number): void {
    this.alpha = alpha;
    this.bump();
  }

  setEntropyModel(model: EntropyModel): void {
    this.entropyModel = model;
    this.bump();
  }

  toggleOrientation(criterionIndex: number): void {
    const criterion = this.draft.criteria[criterionIndex]!;
    criterion.orientation = criterion.orientation === 'cost' ? 'benefit' : 'cost';
    this.bump();
  }

  replaceDraft(draft: ProblemDocument): void {
    this.draft = draft;
    this.dirtyCells.clear();
    this.bump();
  }

  /** Export the draft in the exact document format the CLI consumes. */
  exportDocument(): string {
    return JSON.stringify(this.draft, null, 2) + '\n';
  }

  // -- request discipline --------------------------------------------------

  private bump(): void {
    this.revision += 1;
    this.listener.onRevision(this.revision);
    const issue = validateDocument(this.draft);
    this.validationIssue = issue;
    if (issue) {
      // Invalid drafts are never submitted; cancel anything pending.
      if (this.timer !== null) clearTimeout(this.timer);
      this.timer = null;
      this.listener.onValidationError(issue);
      return;
    }
    this.scheduleEvaluate();
  }

  private scheduleEvaluate(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    const revision = this.revision;
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fireEvaluate(revision);
    }, this.debounceMs);
  }

  /** Issue the initial evaluation for the loaded draft (no debounce). */
  async evaluateNow(): Promise<void> {
    const issue = validateDocument(this.draft);
    this.validationIssue = issue;
    if (issue) {
      this.listener.onValidationError(issue);
      return;
    }
    await this.fireEvaluate(this.revision);
  }

  private async fireEvaluate(revision: number): Promise<void> {
    if (revision !== this.revision) return; // superseded while queued
    this.inflight?.controller.abort();
    const controller = new AbortController();
    this.inflight = { revision, controller };
    try {
      const payload = await this.api.evaluate(
        {
          problem: this.draft,
          alpha: this.alpha,
          entropy_model: this.entropyModel,
          include_intermediate: this.includeIntermediate,
        },
        controller.signal,
      );
      if (revision !== this.revision) return; // stale; discard silently
      const previous = this.lastResponse?.payload.marcos.order ?? null;
      this.lastAgreement = previous ? rankAgreement(previous, payload.marcos.order) : null;
      this.lastResponse = { revision, payload };
      this.dirtyCells.clear();
      this.listener.onResponse(this.lastResponse, this.lastAgreement);
    } catch (err) {
      if (controller.signal.aborted) return; // superseded request
      if (err instanceof ApiError) {
        this.listener.onServiceError(err);
        return;
      }
      throw err;
    } finally {
      if (this.inflight?.controller === controller) this.inflight = null;
    }
  }
}
