import { describe, expect, it } from 'vitest';

import { WizardStore } from '../src/state';

function storeOnStep3(): WizardStore {
  const store = new WizardStore();
  store.selectProduct('soapy-slider');
  store.toggleSentence(1);
  store.next();
  store.next();
  return store;
}

describe('step transitions', () => {
  it('walks 1 -> 2 -> 3 -> results and back', () => {
    const store = storeOnStep3();
    expect(store.get().step).toBe(3);
    expect(store.next()).toBe(true);
    expect(store.get().step).toBe('results');
    expect(store.next()).toBe(false); // no step past results
    expect(store.back()).toBe(true);
    expect(store.get().step).toBe(3);
    store.back();
    store.back();
    expect(store.get().step).toBe(1);
    expect(store.back()).toBe(false);
  });

  it('cannot leave step 1 without a selected sentence', () => {
    const store = new WizardStore();
    store.selectProduct('soapy-slider');
    expect(store.canAdvance()).toBe(false);
    expect(store.next()).toBe(false);
    store.toggleSentence(0);
    expect(store.canAdvance()).toBe(true);
    expect(store.next()).toBe(true);
  });

  it('toggling a sentence twice restores the initial state', () => {
    const store = new WizardStore();
    store.selectProduct('soapy-slider');
    store.toggleSentence(2);
    store.toggleSentence(2);
    expect(store.get().selectedSentences.size).toBe(0);
  });
});

describe('ignore / abstraction exclusivity', () => {
  it('refuses an abstraction for an ignored lemma', () => {
    const store = storeOnStep3();
    store.toggleIgnore('bar');
    expect(store.chooseAbstraction('bar', 'SolidTangibleThing')).toBe(false);
    expect(store.get().abstractions.has('bar')).toBe(false);
  });

  it('ignoring a lemma drops its abstraction', () => {
    const store = storeOnStep3();
    store.chooseAbstraction('soap', 'PersonalProduct');
    store.toggleIgnore('soap');
    expect(store.get().abstractions.has('soap')).toBe(false);
    expect(store.get().ignored.has('soap')).toBe(true);
  });

  it('clears an abstraction with null', () => {
    const store = storeOnStep3();
    store.chooseAbstraction('soap', 'PersonalProduct');
    store.chooseAbstraction('soap', null);
    expect(store.get().abstractions.has('soap')).toBe(false);
  });
});

describe('navigation keeps choices', () => {
  it('back and forward never lose entered state', () => {
    const store = storeOnStep3();
    store.toggleIgnore('bar');
    store.chooseAbstraction('size', 'SpatialQuantity');
    store.back();
    store.back();
    expect(store.get().step).toBe(1);
    store.next();
    store.next();
    const state = store.get();
    expect([...state.selectedSentences]).toEqual([1]);
    expect(state.ignored.has('bar')).toBe(true);
    expect(state.abstractions.get('size')).toBe('SpatialQuantity');
  });

  it('switching products resets choices', () => {
    const store = storeOnStep3();
    store.toggleIgnore('bar');
    store.selectProduct('knife-rolodex');
    const state = store.get();
    expect(state.step).toBe(1);
    expect(state.selectedSentences.size).toBe(0);
    expect(state.ignored.size).toBe(0);
    expect(state.abstractions.size).toBe(0);
  });
});

describe('selection serialization', () => {
  it('orders keys, indices and lemmas deterministically', () => {
    const store = new WizardStore();
    store.selectProduct('soapy-slider');
    store.toggleSentence(3);
    store.toggleSentence(1);
    store.toggleIgnore('zz');
    store.toggleIgnore('aa');
    store.chooseAbstraction('soap', 'PersonalProduct');
    store.chooseAbstraction('size', 'SpatialQuantity');
    expect(store.serializeSelection()).toBe(
      '{"doc_id":"soapy-slider","sentence_indices":[1,3],"ignored":["aa","zz"],'
      + '"abstractions":{"size":"SpatialQuantity","soap":"PersonalProduct"}}');
  });

  it('throws without a product', () => {
    expect(() => new WizardStore().serializeSelection()).toThrow();
  });
});
