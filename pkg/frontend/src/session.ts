// UI session state and transitions.
//
// The chips shown to the user are session.selections, and those are only
// ever committed together with the /search response they produced, so the
// chip set always equals the selections of the last completed request.
// A 400 resets to the last valid state with a visible message; a network
// failure keeps the previous state with an inline error; a superseded
// (aborted) request changes nothing at all.

import {
  ApiClient,
  ApiError,
  Completion,
  EntityView,
  FacetDef,
  SearchResponse,
  Selection,
  isAbortError,
} from "./api.js";

export interface UiSession {
  facets: FacetDef[];
  selections: Selection[];
  pendingQuery: string;
  completions: Completion[];
  results: SearchResponse | null;
  entity: EntityView | null;
  error: string | null;
}

export type Listener = (session: UiSession) => void;

export class SessionController {
  readonly session: UiSession = {
    facets: [],
    selections: [],
    pendingQuery: "",
    completions: [],
    results: null,
    entity: null,
    error: null,
  };

  private listeners: Listener[] = [];

  constructor(private readonly client: ApiClient) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener(this.session);
  }

  async init(): Promise<void> {
    this.session.facets = await this.client.facets();
    await this.runSearch([]);
  }

  /** POST /search; commit selections and results together on success. */
  async runSearch(next: Selection[]): Promise<SearchResponse | null> {
    try {
      const response = await this.client.search(next);
      this.session.selections = next;
      this.session.results = response;
      this.session.error = null;
      this.emit();
      return response;
    } catch (e) {
      if (isAbortError(e)) return null; // superseded; a newer request owns the UI
      this.session.error =
        e instanceof ApiError ? `request rejected: ${e.message}` : `network error: ${String(e)}`;
      this.emit();
      return null;
    }
  }

  async addValue(facet: string, value: string): Promise<void> {
    await this.runSearch([...this.session.selections, { facet, values: [value] }]);
  }

  async removeChip(index: number): Promise<void> {
    await this.runSearch(this.session.selections.filter((_, i) => i !== index));
  }

  async typeahead(text: string): Promise<void> {
    this.session.pendingQuery = text;
    if (!text) {
      this.session.completions = [];
      this.emit();
      return;
    }
    try {
      this.session.completions = await this.client.autocomplete(text);
      this.session.error = null;
    } catch (e) {
      if (isAbortError(e)) return;
      this.session.error = `network error: ${String(e)}`;
    }
    this.emit();
  }

  clearCompletions(): void {
    this.session.pendingQuery = "";
    this.session.completions = [];
    this.emit();
  }

  /**
   * Picking a proposed term: if the concept narrows the primary
   * class-hierarchy facet (the probe search matches something), it becomes a
   * filter chip; otherwise it is an instance, so open its entity view.
   */
  async chooseCompletion(completion: Completion): Promise<void> {
    this.clearCompletions();
    const classFacet = this.session.facets.find((f) => f.kind === "class-hierarchy");
    if (classFacet) {
      const candidate: Selection[] = [
        ...this.session.selections,
        { facet: classFacet.id, values: [completion.concept] },
      ];
      try {
        const probe = await this.client.search(candidate);
        if (probe.total > 0) {
          this.session.selections = candidate;
          this.session.results = probe;
          this.session.error = null;
          this.emit();
          return;
        }
      } catch (e) {
        if (isAbortError(e)) return;
        // fall through to the entity view on a rejected probe
      }
    }
    await this.openEntity(completion.concept);
  }

  async openEntity(iri: string): Promise<void> {
    try {
      this.session.entity = await this.client.entity(iri);
      this.session.error = null;
    } catch (e) {
      if (isAbortError(e)) return;
      this.session.error =
        e instanceof ApiError ? `request rejected: ${e.message}` : `network error: ${String(e)}`;
    }
    this.emit();
  }

  closeEntity(): void {
    this.session.entity = null;
    this.emit();
  }
}
