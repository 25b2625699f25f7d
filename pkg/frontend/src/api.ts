import type {
  AbstractionEntry,
  MethodName,
  ProductDetail,
  ProductSummary,
  SearchResponse,
} from './types';

/** Error carrying the server's machine-readable code alongside the message. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

type FetchLike = typeof fetch;

/**
 * Thin client for the search service. The base URL is configurable and
 * fetch is injectable so tests can run against canned responses.
 */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchImpl(this.baseUrl + path, init);
    } catch (err) {
      throw new ApiError(0, 'network_error', `cannot reach the search service (${err})`);
    }
    const body = await response.text();
    let parsed: unknown = null;
    try {
      parsed = body ? JSON.parse(body) : null;
    } catch {
      throw new ApiError(response.status, 'bad_payload', 'server returned non-JSON');
    }
    if (!response.ok) {
      const error = (parsed as { error?: { code?: string; message?: string } })?.error;
      throw new ApiError(response.status, error?.code ?? 'http_error',
        error?.message ?? `HTTP ${response.status}`);
    }
    return parsed as T;
  }

  listProducts(): Promise<ProductSummary[]> {
    return this.request('/products');
  }

  getProduct(id: string): Promise<ProductDetail> {
    return this.request(`/products/${encodeURIComponent(id)}`);
  }

  getAbstractions(lemma: string): Promise<AbstractionEntry[]> {
    return this.request(`/terms/${encodeURIComponent(lemma)}/abstractions`);
  }

  search(selectionJson: string, method: MethodName, k: number): Promise<SearchResponse> {
    const body = `{"selection":${selectionJson},"method":${JSON.stringify(method)},"k":${k}}`;
    return this.request('/search', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body,
    });
  }
}
