import { readFileSync } from 'node:fs';
import { dirname, join } from 'node:path';
import { fileURLToPath } from 'node:url';

import { ApiClient } from '../src/api';

const here = dirname(fileURLToPath(import.meta.url));

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, 'fixtures', name), 'utf-8')) as T;
}

export function fixtureText(name: string): string {
  return readFileSync(join(here, 'fixtures', name), 'utf-8');
}

/** The golden selection file shipped with the search engine package. */
export function goldenSelection(): string {
  return readFileSync(
    join(here, '..', '..', 'src', 'analogon', 'data', 'golden', 'fig2_selection.json'),
    'utf-8');
}

export interface RecordedRequest {
  url: string;
  body?: string;
}

/**
 * ApiClient over canned responses captured from a live server. Routes map
 * URL (or "POST <url>") to a JSON string or an {status, body} pair.
 */
export function cannedClient(
  routes: Record<string, string | { status: number; body: string }>,
  log?: RecordedRequest[],
): ApiClient {
  const fetchImpl: typeof fetch = async (input, init) => {
    const url = String(input);
    const key = init?.method === 'POST' ? `POST ${url}` : url;
    log?.push({ url: key, body: init?.body ? String(init.body) : undefined });
    const route = routes[key];
    if (route === undefined) {
      return new Response(
        JSON.stringify({ error: { code: 'unknown_route', message: key } }),
        { status: 404 });
    }
    if (typeof route === 'string') {
      return new Response(route, { status: 200 });
    }
    return new Response(route.body, { status: route.status });
  };
  return new ApiClient('', fetchImpl);
}
