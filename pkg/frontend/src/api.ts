// Typed client for the semlift HTTP API. At most one /search request is in
// flight: starting a new one aborts its predecessor, and aborted calls
// reject with AbortError so callers can ignore them.

export interface Completion {
  surface: string;
  language: string | null;
  concept: string;
  score: number;
}

export interface FacetDef {
  id: string;
  kind: "class-hierarchy" | "property-value" | "category";
  anchor: string;
  label: string;
}

export interface Selection {
  facet: string;
  values: string[];
}

export interface Suggestion {
  facet: string;
  value: string;
  count: number;
  origin: "direct" | "hierarchy-expanded";
  hop: string | null;
}

export interface EntityRow {
  iri: string;
  label: string | null;
  types: string[];
}

export interface SearchResponse {
  total: number;
  entities: EntityRow[];
  suggestions: Suggestion[];
}

export interface PropertyValue {
  type: "iri" | "literal";
  value: string;
  language?: string | null;
  datatype?: string;
}

export interface EntityView {
  iri: string;
  label: string | null;
  types: string[];
  categories: string[];
  properties: Record<string, PropertyValue[]>;
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

type FetchLike = typeof fetch;

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) detail = body.error;
    } catch {
      // keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class ApiClient {
  private searchController: AbortController | null = null;

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  async autocomplete(query: string, limit = 8): Promise<Completion[]> {
    const url = `${this.baseUrl}/autocomplete?q=${encodeURIComponent(query)}&limit=${limit}`;
    return asJson(await this.fetchFn(url));
  }

  async facets(): Promise<FacetDef[]> {
    return asJson(await this.fetchFn(`${this.baseUrl}/facets`));
  }

  async search(selections: Selection[], offset = 0, limit = 50): Promise<SearchResponse> {
    this.searchController?.abort();
    const controller = new AbortController();
    this.searchController = controller;
    const response = await this.fetchFn(`${this.baseUrl}/search`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ selections, offset, limit }),
      signal: controller.signal,
    });
    return asJson(await Promise.resolve(response));
  }

  async entity(iri: string): Promise<EntityView> {
    return asJson(await this.fetchFn(`${this.baseUrl}/entity/${encodeURIComponent(iri)}`));
  }
}

export function isAbortError(e: unknown): boolean {
  return e instanceof DOMException && e.name === "AbortError";
}
