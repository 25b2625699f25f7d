import { ApiClient, ApiError } from './api';
import {
  clearBanner,
  renderBanner,
  renderIgnoreEditor,
  renderNav,
  renderResults,
  renderSentencePicker,
  renderTermEditor,
} from './render';
import { WizardStore } from './state';
import type {
  AbstractionEntry,
  MethodName,
  ProductDetail,
  SearchResponse,
} from './types';
import { isInteractive } from './types';

const api = new ApiClient(import.meta.env?.VITE_API_URL ?? '');
const store = new WizardStore();

const abstractionCache = new Map<string, AbstractionEntry[]>();
const detailCache = new Map<string, ProductDetail>();

let currentProduct: ProductDetail | null = null;
let lastResponse: SearchResponse | null = null;
// Only the newest in-flight search may render; older responses are dropped.
let searchSequence = 0;

async function productDetail(id: string): Promise<ProductDetail> {
  const cached = detailCache.get(id);
  if (cached) return cached;
  const detail = await api.getProduct(id);
  detailCache.set(id, detail);
  return detail;
}

async function abstractionsFor(lemma: string): Promise<AbstractionEntry[]> {
  const cached = abstractionCache.get(lemma);
  if (cached) return cached;
  const entries = await api.getAbstractions(lemma);
  abstractionCache.set(lemma, entries);
  return entries;
}

async function runSearch(method: MethodName): Promise<void> {
  const app = document.getElementById('app')!;
  const sequence = ++searchSequence;
  try {
    const response = await api.search(store.serializeSelection(), method, store.get().k);
    if (sequence !== searchSequence) return;
    lastResponse = response;
    const details = new Map<string, ProductDetail>();
    await Promise.all(response.matches.map(async (match) => {
      try {
        details.set(match.doc_id, await productDetail(match.doc_id));
      } catch {
        // detail fetch is best-effort; the match still lists id and score
      }
    }));
    if (sequence !== searchSequence) return;
    detailCache.forEach((detail, id) => details.set(id, detail));
    clearBanner(app);
    if (store.get().step !== 'results') store.next();
    else render();
  } catch (err) {
    if (sequence !== searchSequence) return;
    // selection and step are untouched: the designer can adjust and retry
    const reason = err instanceof ApiError
      ? `search failed (${err.code}): ${err.message}`
      : `search failed: ${err}`;
    renderBanner(app, reason);
  }
}

function submit(): void {
  void runSearch(store.get().method);
}

function switchMethod(method: MethodName): void {
  store.setMethod(method);
  void runSearch(method);
}

async function prefetchAbstractions(product: ProductDetail): Promise<void> {
  const lemmas = new Set<string>();
  const state = store.get();
  for (const index of state.selectedSentences) {
    for (const token of product.sentences[index]?.tokens ?? []) {
      if (isInteractive(token)) lemmas.add(token.lemma);
    }
  }
  await Promise.all([...lemmas].map((lemma) => abstractionsFor(lemma)));
}

function render(): void {
  const app = document.getElementById('app')!;
  const nav = document.getElementById('nav')!;
  const state = store.get();
  renderNav(nav, store, submit);
  if (!currentProduct || currentProduct.id !== state.productId) return;
  if (state.step === 1) {
    renderSentencePicker(app, currentProduct, store);
  } else if (state.step === 2) {
    renderIgnoreEditor(app, currentProduct, store);
  } else if (state.step === 3) {
    const known = new Map(abstractionCache);
    renderTermEditor(app, currentProduct, store, known);
    void prefetchAbstractions(currentProduct).then(() => {
      if (store.get().step === 3) {
        renderTermEditor(app, currentProduct!, store, new Map(abstractionCache));
      }
    });
  } else if (state.step === 'results' && lastResponse) {
    const details = new Map(detailCache);
    renderResults(app, lastResponse.query_tokens, lastResponse.matches, details,
      state.method, { onMethodSwitch: switchMethod, onBack: () => store.back() });
  }
}

async function boot(): Promise<void> {
  const picker = document.getElementById('product-picker') as HTMLSelectElement;
  const app = document.getElementById('app')!;
  try {
    const products = await api.listProducts();
    picker.append(new Option('choose a seed product...', ''));
    for (const product of products) {
      picker.append(new Option(product.title, product.id));
    }
  } catch (err) {
    renderBanner(app, err instanceof ApiError
      ? `cannot load products (${err.code}): ${err.message}`
      : `cannot load products: ${err}`);
    return;
  }
  picker.addEventListener('change', async () => {
    if (!picker.value) return;
    try {
      currentProduct = await productDetail(picker.value);
      lastResponse = null;
      store.selectProduct(picker.value);
    } catch (err) {
      renderBanner(app, `cannot load product: ${err}`);
    }
  });
  store.subscribe(render);
  render();
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  void boot();
}
