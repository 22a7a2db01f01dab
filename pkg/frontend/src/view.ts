// DOM layer: a static skeleton built once, dynamic regions re-rendered from
// the session on every change. No framework, no virtual DOM; the graph is
// desk-scale and the server does all the thinking.

import { Completion, EntityView, Suggestion } from "./api.js";
import { debounce } from "./debounce.js";
import { SessionController, UiSession } from "./session.js";

export const AUTOCOMPLETE_DEBOUNCE_MS = 150;

export function shorten(iri: string): string {
  const cut = Math.max(iri.lastIndexOf("#"), iri.lastIndexOf("/"));
  return cut >= 0 && cut < iri.length - 1 ? iri.slice(cut + 1) : iri;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function mountApp(root: HTMLElement, controller: SessionController): void {
  root.innerHTML = `
    <div class="explorer">
      <div class="error-bar" hidden></div>
      <div class="searchbox">
        <input type="search" placeholder="Search compounds, classes, synonyms…" autocomplete="off" />
        <ul class="dropdown" hidden></ul>
      </div>
      <div class="chips"></div>
      <div class="columns">
        <aside class="facets"></aside>
        <section class="results"></section>
      </div>
      <section class="entity" hidden></section>
    </div>`;

  const input = root.querySelector("input")!;
  const dropdown = root.querySelector<HTMLUListElement>(".dropdown")!;
  const errorBar = root.querySelector<HTMLDivElement>(".error-bar")!;
  const chipsBox = root.querySelector<HTMLDivElement>(".chips")!;
  const facetsBox = root.querySelector<HTMLElement>(".facets")!;
  const resultsBox = root.querySelector<HTMLElement>(".results")!;
  const entityBox = root.querySelector<HTMLElement>(".entity")!;

  const debouncedTypeahead = debounce(
    (text: string) => void controller.typeahead(text),
    AUTOCOMPLETE_DEBOUNCE_MS,
  );
  input.addEventListener("input", () => {
    const text = input.value.trim();
    if (!text) {
      debouncedTypeahead.cancel();
      controller.clearCompletions();
      return;
    }
    debouncedTypeahead(text);
  });

  controller.subscribe((session) => render(session));

  function render(session: UiSession): void {
    errorBar.hidden = session.error === null;
    errorBar.textContent = session.error ?? "";
    renderDropdown(session.completions);
    renderChips(session);
    renderFacets(session);
    renderResults(session);
    renderEntity(session.entity);
  }

  function renderDropdown(completions: Completion[]): void {
    dropdown.innerHTML = "";
    dropdown.hidden = completions.length === 0;
    for (const completion of completions) {
      const item = el("li", "completion");
      item.dataset.concept = completion.concept;
      item.dataset.surface = completion.surface;
      if (completion.language) item.dataset.language = completion.language;
      item.append(el("span", "surface", completion.surface));
      if (completion.language) item.append(el("span", "lang", `@${completion.language}`));
      item.append(el("span", "concept", shorten(completion.concept)));
      item.addEventListener("click", () => {
        input.value = "";
        void controller.chooseCompletion(completion);
      });
      dropdown.append(item);
    }
  }

  function renderChips(session: UiSession): void {
    chipsBox.innerHTML = "";
    session.selections.forEach((selection, index) => {
      const facet = session.facets.find((f) => f.id === selection.facet);
      const chip = el("span", "chip");
      chip.dataset.facet = selection.facet;
      chip.dataset.values = JSON.stringify([...selection.values].sort());
      chip.append(
        el(
          "span",
          "chip-label",
          `${facet?.label ?? selection.facet}: ${selection.values.map(shorten).join(" or ")}`,
        ),
      );
      const remove = el("button", "chip-remove", "×");
      remove.setAttribute("aria-label", "remove filter");
      remove.addEventListener("click", () => void controller.removeChip(index));
      chip.append(remove);
      chipsBox.append(chip);
    });
  }

  function renderFacets(session: UiSession): void {
    facetsBox.innerHTML = "";
    const suggestions = session.results?.suggestions ?? [];
    for (const facet of session.facets) {
      const mine = suggestions.filter((s) => s.facet === facet.id);
      if (mine.length === 0) continue;
      const group = el("div", "facet-group");
      group.dataset.facet = facet.id;
      group.append(el("h3", "facet-title", facet.label));
      const list = el("ul", "facet-values");
      for (const suggestion of mine) list.append(suggestionItem(suggestion));
      group.append(list);
      facetsBox.append(group);
    }
  }

  function suggestionItem(suggestion: Suggestion): HTMLLIElement {
    const item = el("li", "suggestion");
    const button = el("button", "suggestion-button");
    button.dataset.facet = suggestion.facet;
    button.dataset.value = suggestion.value;
    button.dataset.count = String(suggestion.count);
    button.dataset.origin = suggestion.origin;
    button.append(el("span", "value", shorten(suggestion.value)));
    if (suggestion.origin === "hierarchy-expanded") {
      const badge = el("span", "badge", suggestion.hop ?? "related");
      badge.title = `suggested from the ontology hierarchy (${suggestion.hop})`;
      button.append(badge);
    }
    button.append(el("span", "count", String(suggestion.count)));
    button.addEventListener("click", () => {
      void controller.addValue(suggestion.facet, suggestion.value);
    });
    item.append(button);
    return item;
  }

  function renderResults(session: UiSession): void {
    resultsBox.innerHTML = "";
    const results = session.results;
    if (!results) return;
    resultsBox.append(el("h2", "results-title", `${results.total} result(s)`));
    const list = el("ul", "result-list");
    for (const entity of results.entities) {
      const item = el("li", "result");
      item.dataset.iri = entity.iri;
      const link = el("button", "result-link", entity.label ?? shorten(entity.iri));
      link.addEventListener("click", () => void controller.openEntity(entity.iri));
      item.append(link);
      item.append(el("span", "types", entity.types.map(shorten).join(", ")));
      list.append(item);
    }
    resultsBox.append(list);
  }

  function renderEntity(entity: EntityView | null): void {
    entityBox.innerHTML = "";
    entityBox.hidden = entity === null;
    if (!entity) return;
    entityBox.dataset.iri = entity.iri;
    const close = el("button", "entity-close", "close");
    close.addEventListener("click", () => controller.closeEntity());
    entityBox.append(close);
    entityBox.append(el("h2", "entity-title", entity.label ?? shorten(entity.iri)));
    entityBox.append(el("div", "entity-iri", entity.iri));

    const names = namesAndSynonyms(entity);
    if (names.length) {
      entityBox.append(section("Names & synonyms", names));
    }
    if (entity.types.length) {
      entityBox.append(section("Types", entity.types.map(shorten)));
    }
    if (entity.categories.length) {
      entityBox.append(section("Categories", entity.categories.map(shorten)));
    }
    const table = el("table", "entity-properties");
    for (const [predicate, values] of Object.entries(entity.properties)) {
      const row = el("tr");
      row.append(el("th", "", shorten(predicate)));
      const cell = el("td");
      cell.textContent = values
        .map((v) =>
          v.type === "literal" ? `${v.value}${v.language ? `@${v.language}` : ""}` : shorten(v.value),
        )
        .join("; ");
      row.append(cell);
      table.append(row);
    }
    entityBox.append(table);
  }

  function section(title: string, items: string[]): HTMLElement {
    const box = el("div", "entity-section");
    box.append(el("h3", "", title));
    const list = el("ul");
    for (const item of items) list.append(el("li", "", item));
    box.append(list);
    return box;
  }
}

function namesAndSynonyms(entity: EntityView): string[] {
  const out: string[] = [];
  for (const [predicate, values] of Object.entries(entity.properties)) {
    const local = shorten(predicate).toLowerCase();
    if (local.endsWith("label") || local.endsWith("name") || local === "altlabel") {
      for (const v of values) {
        if (v.type === "literal") out.push(`${v.value}${v.language ? ` (@${v.language})` : ""}`);
      }
    }
  }
  return [...new Set(out)].sort();
}
