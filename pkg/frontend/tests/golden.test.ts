/**
 * The wizard acceptance flow: drive the rendered UI through the worked
 * example (select the "extendable..." sentence, IGNORE "bars", abstract
 * sizes -> SpatialQuantity and soap -> PersonalProduct) and check that the
 * emitted selection payload is byte-identical to the golden file shipped
 * with the engine, and that the rendered query chips are the four expected
 * tokens.
 */

import { beforeEach, describe, expect, it } from 'vitest';

import {
  renderQueryChips,
  renderSentencePicker,
  renderIgnoreEditor,
  renderTermEditor,
} from '../src/render';
import { WizardStore } from '../src/state';
import type { AbstractionEntry, ProductDetail, SearchResponse } from '../src/types';
import { fixture, goldenSelection } from './helpers';

const product = fixture<ProductDetail>('product_soapy_slider.json');
const soapAbstractions = fixture<AbstractionEntry[]>('abstractions_soap.json');
const sizeAbstractions = fixture<AbstractionEntry[]>('abstractions_size.json');
const searchResponse = fixture<SearchResponse>('search_fig2.json');

function clickToken(container: HTMLElement, lemma: string): void {
  const button = container.querySelector<HTMLButtonElement>(
    `button.token[data-lemma="${lemma}"]`);
  if (!button) throw new Error(`no interactive token for ${lemma}`);
  button.click();
}

function pickAbstraction(container: HTMLElement, lemma: string, property: string): void {
  const dropdown = container.querySelector<HTMLSelectElement>(
    `select[data-lemma="${lemma}"]`);
  if (!dropdown) throw new Error(`no dropdown for ${lemma}`);
  dropdown.value = property;
  dropdown.dispatchEvent(new Event('change'));
}

describe('fig. 2 wizard flow', () => {
  let store: WizardStore;
  let app: HTMLElement;

  beforeEach(() => {
    document.body.innerHTML = '<main id="app"></main>';
    app = document.getElementById('app')!;
    store = new WizardStore();
    store.selectProduct(product.id);
  });

  it('emits the golden selection payload byte for byte', () => {
    // step 1: tick the "extendable for different sizes of soap bars." sentence
    renderSentencePicker(app, product, store);
    const box = app.querySelector<HTMLInputElement>(
      'input[data-sentence-index="1"]');
    expect(box).not.toBeNull();
    box!.click();
    expect(store.next()).toBe(true);

    // step 2: IGNORE "bars" (the button carries the lemma "bar")
    renderIgnoreEditor(app, product, store);
    clickToken(app, 'bar');
    expect(store.get().ignored.has('bar')).toBe(true);
    expect(store.next()).toBe(true);

    // step 3: abstract sizes -> SpatialQuantity, soap -> PersonalProduct
    const known = new Map<string, AbstractionEntry[]>([
      ['soap', soapAbstractions],
      ['size', sizeAbstractions],
    ]);
    renderTermEditor(app, product, store, known);
    pickAbstraction(app, 'size', 'SpatialQuantity');
    pickAbstraction(app, 'soap', 'PersonalProduct');

    expect(store.serializeSelection()).toBe(goldenSelection());
  });

  it('renders the four expected query chips from the search response', () => {
    renderQueryChips(app, searchResponse.query_tokens);
    const chips = [...app.querySelectorAll('.chip')];
    expect(chips.map((chip) => chip.textContent)).toEqual(
      ['extendable', 'different', 'SpatialQuantity', 'PersonalProduct']);
    expect(chips.map((chip) => chip.classList.contains('property'))).toEqual(
      [false, false, true, true]);
  });

  it('keeps ignored dropdowns disabled', () => {
    store.toggleSentence(1);
    store.next();
    renderIgnoreEditor(app, product, store);
    clickToken(app, 'bar');
    store.next();
    const known = new Map<string, AbstractionEntry[]>([
      ['bar', [{ property: 'SolidTangibleThing', level: 1 }]],
    ]);
    renderTermEditor(app, product, store, known);
    const dropdown = app.querySelector<HTMLSelectElement>('select[data-lemma="bar"]');
    expect(dropdown).not.toBeNull();
    expect(dropdown!.disabled).toBe(true);
  });

  it('marks inert tokens and leaves them unclickable', () => {
    store.toggleSentence(1);
    store.next();
    renderIgnoreEditor(app, product, store);
    // "for" and "of" are stopwords in the fixture sentence
    const inert = [...app.querySelectorAll('.token.inert')].map((n) => n.textContent);
    expect(inert).toContain('for');
    expect(inert).toContain('of');
    expect(app.querySelector('button.token[data-lemma="for"]')).toBeNull();
  });

  it('disables Next until a sentence is picked', () => {
    renderSentencePicker(app, product, store);
    expect(store.canAdvance()).toBe(false);
    const box = app.querySelector<HTMLInputElement>('input[data-sentence-index="0"]');
    box!.click();
    expect(store.canAdvance()).toBe(true);
    box!.click();
    expect(store.canAdvance()).toBe(false);
  });
});
