import { describe, expect, it } from 'vitest';

import { ApiError } from '../src/api';
import type { ProductSummary, SearchResponse } from '../src/types';
import { cannedClient, fixtureText, goldenSelection, type RecordedRequest } from './helpers';

describe('api client', () => {
  it('lists products', async () => {
    const client = cannedClient({ '/products': fixtureText('products.json') });
    const products: ProductSummary[] = await client.listProducts();
    expect(products.length).toBe(12);
    expect(products[0]).toEqual({ id: 'soapy-slider', title: 'Soapy slider' });
  });

  it('posts the selection JSON verbatim', async () => {
    const log: RecordedRequest[] = [];
    const client = cannedClient(
      { 'POST /search': fixtureText('search_fig2.json') }, log);
    const selection = goldenSelection();
    const response: SearchResponse = await client.search(selection, 'focus-abstracted', 10);
    expect(response.query_tokens.length).toBe(4);
    expect(log[0]!.body).toBe(
      `{"selection":${selection},"method":"focus-abstracted","k":10}`);
  });

  it('surfaces machine-readable error codes', async () => {
    const client = cannedClient({
      'POST /search': {
        status: 400,
        body: JSON.stringify({ error: { code: 'invalid_k', message: 'k must be >= 1' } }),
      },
    });
    await expect(client.search('{}', 'focus-only', 0)).rejects.toMatchObject({
      status: 400,
      code: 'invalid_k',
    });
  });

  it('maps network failure to a transport error', async () => {
    const failing = new (await import('../src/api')).ApiClient('', async () => {
      throw new TypeError('connection refused');
    });
    await expect(failing.listProducts()).rejects.toBeInstanceOf(ApiError);
    await expect(failing.listProducts()).rejects.toMatchObject({ code: 'network_error' });
  });
});
