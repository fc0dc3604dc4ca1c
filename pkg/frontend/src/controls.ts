/**
 * Steering controls: blend slider (0..1 step 0.05), entropy-model selector,
 * per-criterion benefit/cost toggles, and the rank-agreement badge.
 */

import { Session } from './session.js';
import { ENTROPY_MODELS, type EntropyModel } from './types.js';

export interface ControlCallbacks {
  onAlpha(alpha: number): void;
  onEntropyModel(model: EntropyModel): void;
  onToggleOrientation(criterionIndex: number): void;
  onHighlightCriterion(id: string | null): void;
}

export function renderControls(
  container: HTMLElement,
  session: Session,
  callbacks: ControlCallbacks,
): void {
  container.textContent = '';

  const alphaLabel = document.createElement('label');
  alphaLabel.textContent = 'blend α ';
  const slider = document.createElement('input');
  slider.type = 'range';
  slider.id = 'alpha-slider';
  slider.min = '0';
  slider.max = '1';
  slider.step = '0.05';
  slider.value = String(session.alpha);
  const alphaValue = document.createElement('span');
  alphaValue.id = 'alpha-value';
  alphaValue.textContent = session.alpha.toFixed(2);
  slider.addEventListener('input', () => {
    const alpha = Number(slider.value);
    alphaValue.textContent = alpha.toFixed(2);
    callbacks.onAlpha(alpha);
  });
  alphaLabel.appendChild(slider);
  alphaLabel.appendChild(alphaValue);
  container.appendChild(alphaLabel);

  const entropyLabel = document.createElement('label');
  entropyLabel.textContent = ' entropy ';
  const select = document.createElement('select');
  select.id = 'entropy-select';
  for (const model of ENTROPY_MODELS) {
    const option = document.createElement('option');
    option.value = model;
    option.textContent = model;
    option.selected = model === session.entropyModel;
    select.appendChild(option);
  }
  select.addEventListener('change', () => {
    callbacks.onEntropyModel(select.value as EntropyModel);
  });
  entropyLabel.appendChild(select);
  container.appendChild(entropyLabel);

  const toggles = document.createElement('span');
  toggles.id = 'orientation-toggles';
  session.draft.criteria.forEach((criterion, j) => {
    const button = document.createElement('button');
    button.type = 'button';
    button.dataset['criterion'] = criterion.id;
    button.textContent = `${criterion.id}: ${criterion.orientation}`;
    button.title = `toggle ${criterion.name} between benefit and cost`;
    button.addEventListener('click', () => callbacks.onToggleOrientation(j));
    button.addEventListener('mouseenter', () => callbacks.onHighlightCriterion(criterion.id));
    button.addEventListener('mouseleave', () => callbacks.onHighlightCriterion(null));
    toggles.appendChild(button);
  });
  container.appendChild(toggles);

  const badge = document.createElement('span');
  badge.id = 'tau-badge';
  badge.title = 'rank agreement with the previous order';
  renderAgreementBadge(badge, session.lastAgreement);
  container.appendChild(badge);
}

export function renderAgreementBadge(badge: HTMLElement, agreement: number | null): void {
  badge.textContent = agreement === null ? 'τ —' : `τ ${agreement.toFixed(2)}`;
  badge.classList.toggle('tau-perfect', agreement !== null && agreement >= 1);
}
