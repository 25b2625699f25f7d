import type {
  AbstractionEntry,
  ApiToken,
  MatchPayload,
  MethodName,
  ProductDetail,
  QueryTokenPayload,
} from './types';
import { METHODS, isInteractive } from './types';
import type { WizardState, WizardStore } from './state';

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K, className?: string, text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function renderBanner(container: HTMLElement, message: string): void {
  container.querySelector('.banner')?.remove();
  const banner = el('div', 'banner', message);
  banner.setAttribute('role', 'alert');
  container.prepend(banner);
}

export function clearBanner(container: HTMLElement): void {
  container.querySelector('.banner')?.remove();
}

/** Step 1: checklist of the product's sentences, in order. */
export function renderSentencePicker(
  container: HTMLElement, product: ProductDetail, store: WizardStore,
): void {
  container.innerHTML = '';
  container.append(el('h2', 'step-title', 'Step 1: pick the sentences that matter'));
  const list = el('ul', 'sentence-list');
  for (const sentence of product.sentences) {
    const item = el('li', 'sentence-item');
    const label = el('label');
    const box = el('input') as HTMLInputElement;
    box.type = 'checkbox';
    box.dataset.sentenceIndex = String(sentence.index);
    box.checked = store.get().selectedSentences.has(sentence.index);
    box.addEventListener('change', () => store.toggleSentence(sentence.index));
    label.append(box, el('span', 'sentence-raw', ` ${sentence.raw}`));
    item.append(label);
    list.append(item);
  }
  container.append(list);
}

function selectedTokens(product: ProductDetail, state: WizardState): ApiToken[][] {
  return [...state.selectedSentences]
    .sort((a, b) => a - b)
    .map((index) => product.sentences[index]?.tokens ?? []);
}

/** Step 2: per-token IGNORE toggles; non-content tokens are inert. */
export function renderIgnoreEditor(
  container: HTMLElement, product: ProductDetail, store: WizardStore,
): void {
  container.innerHTML = '';
  container.append(el('h2', 'step-title', 'Step 2: ignore irrelevant terms'));
  const state = store.get();
  for (const tokens of selectedTokens(product, state)) {
    const row = el('p', 'token-row');
    for (const token of tokens) {
      if (!isInteractive(token)) {
        row.append(el('span', 'token inert', token.surface), ' ');
        continue;
      }
      const button = el('button', 'token interactive', token.surface);
      button.dataset.lemma = token.lemma;
      if (state.ignored.has(token.lemma)) button.classList.add('ignored');
      button.title = state.ignored.has(token.lemma)
        ? `un-ignore "${token.lemma}"` : `IGNORE "${token.lemma}"`;
      button.addEventListener('click', () => store.toggleIgnore(token.lemma));
      row.append(button, ' ');
    }
    container.append(row);
  }
}

/**
 * Step 3: an abstraction dropdown per kept content token. Options come
 * straight from the /terms API (level-ordered, at most 3 levels); the
 * dropdown is disabled while the term is ignored.
 */
export function renderTermEditor(
  container: HTMLElement, product: ProductDetail, store: WizardStore,
  abstractionsByLemma: ReadonlyMap<string, AbstractionEntry[]>,
): void {
  container.innerHTML = '';
  container.append(el('h2', 'step-title', 'Step 3: abstract important terms'));
  const state = store.get();
  const rendered = new Set<string>();
  for (const tokens of selectedTokens(product, state)) {
    for (const token of tokens) {
      if (!isInteractive(token) || rendered.has(token.lemma)) continue;
      rendered.add(token.lemma);
      const row = el('div', 'abstraction-row');
      row.append(el('span', 'token interactive', token.surface));
      const entries = abstractionsByLemma.get(token.lemma) ?? [];
      const ignored = state.ignored.has(token.lemma);
      if (entries.length === 0) {
        row.append(el('span', 'no-abstractions', 'no abstractions available'));
      } else {
        const dropdown = el('select', 'abstraction-dropdown') as HTMLSelectElement;
        dropdown.dataset.lemma = token.lemma;
        dropdown.disabled = ignored;
        dropdown.append(new Option('keep as is', ''));
        for (const entry of entries) {
          dropdown.append(new Option(`${entry.property} (level ${entry.level})`,
            entry.property));
        }
        dropdown.value = state.abstractions.get(token.lemma) ?? '';
        dropdown.addEventListener('change', () => {
          store.chooseAbstraction(token.lemma, dropdown.value || null);
        });
        row.append(dropdown);
      }
      if (ignored) row.append(el('span', 'ignored-note', 'ignored'));
      container.append(row);
    }
  }
}

/** Query chips: kept terms and chosen properties, visually distinct. */
export function renderQueryChips(
  container: HTMLElement, tokens: QueryTokenPayload[],
): void {
  container.innerHTML = '';
  for (const token of tokens) {
    const chip = el('span',
      token.kind === 'property' ? 'chip property' : 'chip term', token.text);
    container.append(chip, ' ');
  }
}

function highlightedText(
  detail: ProductDetail, matchedLemmas: ReadonlyMap<string, string[]>,
): HTMLElement {
  const body = el('p', 'match-text');
  for (const sentence of detail.sentences) {
    for (const token of sentence.tokens) {
      const properties = matchedLemmas.get(token.lemma);
      if (properties && isInteractive(token)) {
        const mark = el('mark', 'matched-term', token.surface);
        mark.title = properties.join(', ');
        body.append(mark, el('code', 'matched-property', `[${properties.join(', ')}]`), ' ');
      } else {
        body.append(`${token.surface} `);
      }
    }
  }
  return body;
}

export interface ResultsCallbacks {
  onMethodSwitch: (method: MethodName) => void;
  onBack: () => void;
}

/** Ranked matches with scores, matched properties highlighted in the text. */
export function renderResults(
  container: HTMLElement,
  queryTokens: QueryTokenPayload[],
  matches: MatchPayload[],
  details: ReadonlyMap<string, ProductDetail>,
  current: MethodName,
  callbacks: ResultsCallbacks,
): void {
  container.innerHTML = '';
  container.append(el('h2', 'step-title', 'Matches'));

  const chipBox = el('div', 'query-chips');
  renderQueryChips(chipBox, queryTokens);
  container.append(chipBox);

  const switcher = el('div', 'method-switcher');
  for (const method of METHODS) {
    const button = el('button', 'method-option', method);
    if (method === current) button.classList.add('active');
    button.addEventListener('click', () => callbacks.onMethodSwitch(method));
    switcher.append(button);
  }
  container.append(switcher);

  const list = el('ol', 'match-list');
  for (const match of matches) {
    const item = el('li', 'match-item');
    const detail = details.get(match.doc_id);
    const title = detail?.title ?? match.doc_id;
    item.append(el('strong', 'match-title',
      `${title} `), el('span', 'match-score', `score ${match.score.toFixed(4)}`));
    if (detail) {
      const byLemma = new Map<string, string[]>();
      for (const [lemma, property] of match.matched_properties) {
        const existing = byLemma.get(lemma) ?? [];
        if (!existing.includes(property)) existing.push(property);
        byLemma.set(lemma, existing);
      }
      item.append(highlightedText(detail, byLemma));
    }
    list.append(item);
  }
  container.append(list);

  const back = el('button', 'back-button', 'Back to step 3');
  back.addEventListener('click', () => callbacks.onBack());
  container.append(back);
}

/** Wizard chrome: step indicator plus navigation buttons. */
export function renderNav(
  container: HTMLElement, store: WizardStore, onSubmit: () => void,
): void {
  container.innerHTML = '';
  const state = store.get();
  const steps: (1 | 2 | 3 | 'results')[] = [1, 2, 3, 'results'];
  const indicator = el('div', 'step-indicator');
  for (const step of steps) {
    const label = step === 'results' ? 'results' : `step ${step}`;
    const node = el('span', 'step-dot', label);
    if (state.step === step) node.classList.add('active');
    indicator.append(node);
  }
  container.append(indicator);

  const back = el('button', 'nav-back', 'Back');
  back.disabled = state.step === 1;
  back.addEventListener('click', () => store.back());
  container.append(back);

  if (state.step === 3) {
    const submit = el('button', 'nav-search', 'Search');
    submit.addEventListener('click', onSubmit);
    container.append(submit);
  } else if (state.step !== 'results') {
    const next = el('button', 'nav-next', 'Next');
    next.disabled = !store.canAdvance();
    next.addEventListener('click', () => store.next());
    container.append(next);
  }
}
