/**
 * The abstraction dropdown is a pure view of the /terms API: at most 3
 * levels, level-ascending, and in exactly the order the server sent
 * (fixtures captured from a live instance).
 */

import { beforeEach, describe, expect, it } from 'vitest';

import { renderTermEditor } from '../src/render';
import { WizardStore } from '../src/state';
import type { AbstractionEntry, ProductDetail } from '../src/types';
import { fixture } from './helpers';

const product = fixture<ProductDetail>('product_soapy_slider.json');
const soapAbstractions = fixture<AbstractionEntry[]>('abstractions_soap.json');

describe('abstraction dropdown for "soap"', () => {
  let app: HTMLElement;
  let store: WizardStore;

  beforeEach(() => {
    document.body.innerHTML = '<main id="app"></main>';
    app = document.getElementById('app')!;
    store = new WizardStore();
    store.selectProduct(product.id);
    store.toggleSentence(1);
    store.next();
    store.next();
    renderTermEditor(app, product, store,
      new Map([['soap', soapAbstractions]]));
  });

  function dropdownProperties(): string[] {
    const dropdown = app.querySelector<HTMLSelectElement>('select[data-lemma="soap"]');
    expect(dropdown).not.toBeNull();
    return [...dropdown!.options].map((o) => o.value).filter((v) => v !== '');
  }

  it('shows the API response order exactly', () => {
    expect(dropdownProperties()).toEqual(soapAbstractions.map((e) => e.property));
  });

  it('is level-ascending with at most 3 levels', () => {
    const byProperty = new Map(soapAbstractions.map((e) => [e.property, e.level]));
    const levels = dropdownProperties().map((p) => byProperty.get(p)!);
    expect(levels).toEqual([...levels].sort((a, b) => a - b));
    expect(Math.max(...levels)).toBeLessThanOrEqual(3);
    expect(new Set(levels).size).toBeLessThanOrEqual(3);
  });

  it('renders a note when a term has no abstractions', () => {
    document.body.innerHTML = '<main id="app"></main>';
    app = document.getElementById('app')!;
    renderTermEditor(app, product, store,
      new Map([['extendable', []]]));
    const notes = [...app.querySelectorAll('.no-abstractions')];
    expect(notes.length).toBeGreaterThan(0);
    expect(notes[0]!.textContent).toBe('no abstractions available');
  });
});
