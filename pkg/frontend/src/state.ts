import type { MethodName } from './types';

export type Step = 1 | 2 | 3 | 'results';

export interface WizardState {
  productId: string | null;
  step: Step;
  selectedSentences: ReadonlySet<number>;
  ignored: ReadonlySet<string>;
  abstractions: ReadonlyMap<string, string>;
  method: MethodName;
  k: number;
}

type Listener = (state: WizardState) => void;

const FORWARD: Record<string, Step> = { 1: 2, 2: 3, 3: 'results' };
const BACKWARD: Record<string, Step> = { results: 3, 3: 2, 2: 1 };

/**
 * Wizard state with the legal step transitions (1 -> 2 -> 3 -> results and
 * backward only). Choices survive navigation in both directions; only
 * switching products resets them.
 */
export class WizardStore {
  private state: WizardState = {
    productId: null,
    step: 1,
    selectedSentences: new Set(),
    ignored: new Set(),
    abstractions: new Map(),
    method: 'focus-abstracted',
    k: 10,
  };
  private listeners: Listener[] = [];

  get(): WizardState {
    return this.state;
  }

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private set(patch: Partial<WizardState>): void {
    this.state = { ...this.state, ...patch };
    for (const listener of this.listeners) listener(this.state);
  }

  selectProduct(productId: string): void {
    this.set({
      productId,
      step: 1,
      selectedSentences: new Set(),
      ignored: new Set(),
      abstractions: new Map(),
    });
  }

  toggleSentence(index: number): void {
    const selected = new Set(this.state.selectedSentences);
    if (selected.has(index)) selected.delete(index);
    else selected.add(index);
    this.set({ selectedSentences: selected });
  }

  /** Flip the IGNORE flag; ignoring a lemma drops any abstraction it had. */
  toggleIgnore(lemma: string): void {
    const ignored = new Set(this.state.ignored);
    const abstractions = new Map(this.state.abstractions);
    if (ignored.has(lemma)) {
      ignored.delete(lemma);
    } else {
      ignored.add(lemma);
      abstractions.delete(lemma);
    }
    this.set({ ignored, abstractions });
  }

  /**
   * Pick (or clear, with null) an abstraction for a lemma. Refused while
   * the lemma is ignored: IGNORE and abstraction are mutually exclusive.
   */
  chooseAbstraction(lemma: string, property: string | null): boolean {
    if (this.state.ignored.has(lemma)) return false;
    const abstractions = new Map(this.state.abstractions);
    if (property === null) abstractions.delete(lemma);
    else abstractions.set(lemma, property);
    this.set({ abstractions });
    return true;
  }

  setMethod(method: MethodName): void {
    this.set({ method });
  }

  setK(k: number): void {
    this.set({ k });
  }

  canAdvance(): boolean {
    if (this.state.step === 1) return this.state.selectedSentences.size > 0;
    return this.state.step !== 'results';
  }

  next(): boolean {
    const target = FORWARD[String(this.state.step)];
    if (target === undefined || !this.canAdvance()) return false;
    this.set({ step: target });
    return true;
  }

  back(): boolean {
    const target = BACKWARD[String(this.state.step)];
    if (target === undefined) return false;
    this.set({ step: target });
    return true;
  }

  /**
   * Canonical focus-selection JSON: exactly the bytes the search service
   * (and the shipped golden file) use. Key order, sorted indices, sorted
   * ignored lemmas and sorted abstraction keys make it reproducible.
   */
  serializeSelection(): string {
    const { productId, selectedSentences, ignored, abstractions } = this.state;
    if (productId === null) throw new Error('no product selected');
    const indices = [...selectedSentences].sort((a, b) => a - b);
    const ignoredSorted = [...ignored].sort();
    const abstractionPairs = [...abstractions.keys()].sort()
      .map((lemma) => [lemma, abstractions.get(lemma) as string] as const);
    return JSON.stringify({
      doc_id: productId,
      sentence_indices: indices,
      ignored: ignoredSorted,
      abstractions: Object.fromEntries(abstractionPairs),
    });
  }
}
