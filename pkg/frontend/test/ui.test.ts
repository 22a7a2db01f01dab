// Integration tests against a real fixture-backed service (spawned by the
// global setup). The final entity set of the narrowing scenario is the one
// the server-side oracles pin down (engine parity and brute-force
// equivalence are enforced in the service's own test suite).

import { beforeEach, describe, expect, inject, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { SessionController } from "../src/session.js";
import { mountApp } from "../src/view.js";

const baseUrl = inject("baseUrl");

const CHEBI_COMPOUND = "http://chebi.example/Compound";
const CAT_SOLVENTS = "http://dbpedia.example/category/Solvents";
const LOCAL_WATER = "http://fixtures.semlift.example/thermo/data/d1/compound/1";
const LOCAL_ETHANOL = "http://fixtures.semlift.example/thermo/data/d1/compound/2";
const CHEBI_ETHANOL = "http://chebi.example/16236";

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

async function waitFor(condition: () => boolean, what: string, timeout = 8000): Promise<void> {
  const start = Date.now();
  while (Date.now() - start < timeout) {
    if (condition()) return;
    await sleep(20);
  }
  throw new Error(`timed out waiting for ${what}`);
}

interface App {
  root: HTMLElement;
  controller: SessionController;
  requests: string[];
}

async function makeApp(): Promise<App> {
  const requests: string[] = [];
  const client = new ApiClient(baseUrl, (input, init) => {
    requests.push(typeof input === "string" ? input : input.toString());
    return fetch(input, init);
  });
  const controller = new SessionController(client);
  const root = document.createElement("div");
  document.body.innerHTML = "";
  document.body.append(root);
  mountApp(root, controller);
  await controller.init();
  await waitFor(() => root.querySelector(".results-title") !== null, "initial results");
  return { root, controller, requests };
}

function suggestionButton(root: HTMLElement, facet: string, value: string): HTMLButtonElement {
  const button = root.querySelector<HTMLButtonElement>(
    `.suggestion-button[data-facet="${facet}"][data-value="${value}"]`,
  );
  if (!button) throw new Error(`no suggestion for ${facet}=${value}`);
  return button;
}

function resultIris(root: HTMLElement): string[] {
  return [...root.querySelectorAll<HTMLElement>(".result")].map((r) => r.dataset.iri!);
}

function resultTotal(root: HTMLElement): number {
  const title = root.querySelector(".results-title")?.textContent ?? "";
  return Number(title.split(" ")[0]);
}

function assertNoZeroCounts(root: HTMLElement): void {
  const counts = [...root.querySelectorAll<HTMLElement>(".suggestion-button")].map((b) =>
    Number(b.dataset.count),
  );
  expect(counts.length).toBeGreaterThan(0);
  expect(counts.every((c) => c >= 1)).toBe(true);
}

function typeInto(root: HTMLElement, text: string): void {
  const input = root.querySelector("input")!;
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

describe("facet explorer against the fixture service", () => {
  let app: App;

  beforeEach(async () => {
    app = await makeApp();
  });

  it("narrows in three scripted steps to the oracle-computed entity set", async () => {
    const { root } = app;
    assertNoZeroCounts(root);

    suggestionButton(root, "class", CHEBI_COMPOUND).click();
    await waitFor(() => root.querySelectorAll(".chip").length === 1, "first chip");
    assertNoZeroCounts(root);

    const solvents = suggestionButton(root, "category", CAT_SOLVENTS);
    const promisedCount = Number(solvents.dataset.count);
    solvents.click();
    await waitFor(() => root.querySelectorAll(".chip").length === 2, "second chip");
    // suggestion soundness made visible: the count promised is what arrived
    expect(resultTotal(root)).toBe(promisedCount);
    assertNoZeroCounts(root);

    suggestionButton(root, "formula", "C2H6O").click();
    await waitFor(() => root.querySelectorAll(".chip").length === 3, "third chip");
    expect(resultIris(root)).toEqual([CHEBI_ETHANOL, LOCAL_ETHANOL]);
  });

  it("chips mirror the applied selections; add-then-remove is an exact inverse", async () => {
    const { root, controller } = app;
    const initialTotal = resultTotal(root);

    suggestionButton(root, "class", CHEBI_COMPOUND).click();
    await waitFor(() => root.querySelectorAll(".chip").length === 1, "chip added");
    const totalWithOne = resultTotal(root);

    suggestionButton(root, "formula", "H2O").click();
    await waitFor(() => root.querySelectorAll(".chip").length === 2, "second chip");

    // bijection: rendered chips == selections of the last completed request
    const chips = [...root.querySelectorAll<HTMLElement>(".chip")].map((c) => ({
      facet: c.dataset.facet,
      values: JSON.parse(c.dataset.values!),
    }));
    expect(chips).toEqual(
      controller.session.selections.map((s) => ({ facet: s.facet, values: [...s.values].sort() })),
    );

    root.querySelectorAll<HTMLButtonElement>(".chip-remove")[1]!.click();
    await waitFor(() => root.querySelectorAll(".chip").length === 1, "chip removed");
    expect(resultTotal(root)).toBe(totalWithOne);

    root.querySelector<HTMLButtonElement>(".chip-remove")!.click();
    await waitFor(() => root.querySelectorAll(".chip").length === 0, "all chips removed");
    expect(resultTotal(root)).toBe(initialTotal);
  });

  it("renders both cross-language surfaces for 'was', mapped to one concept", async () => {
    const { root } = app;
    typeInto(root, "was");
    await waitFor(
      () => root.querySelectorAll(".completion").length > 0,
      "autocomplete dropdown",
    );
    const items = [...root.querySelectorAll<HTMLElement>(".completion")];
    const waterConceptSurfaces = items
      .filter((i) => i.dataset.concept === LOCAL_WATER)
      .map((i) => i.dataset.surface);
    expect(waterConceptSurfaces).toContain("water");
    expect(waterConceptSurfaces).toContain("Wasser");
  });

  it("empty input closes the dropdown and issues no request", async () => {
    const { root, requests } = app;
    typeInto(root, "was");
    await waitFor(() => root.querySelectorAll(".completion").length > 0, "dropdown open");
    const requestsBefore = requests.filter((u) => u.includes("/autocomplete")).length;
    typeInto(root, "");
    await sleep(250); // longer than the debounce interval
    expect(root.querySelector<HTMLElement>(".dropdown")!.hidden).toBe(true);
    expect(requests.filter((u) => u.includes("/autocomplete")).length).toBe(requestsBefore);
  });

  it("selecting a class-concept completion adds a filter chip", async () => {
    const { root } = app;
    typeInto(root, "alcoh");
    await waitFor(() => root.querySelectorAll(".completion").length > 0, "dropdown");
    const item = [...root.querySelectorAll<HTMLElement>(".completion")].find(
      (i) => i.dataset.concept === "http://chebi.example/Alcohol",
    )!;
    item.click();
    await waitFor(() => root.querySelectorAll(".chip").length === 1, "chip from completion");
    const chip = root.querySelector<HTMLElement>(".chip")!;
    expect(chip.dataset.facet).toBe("class");
    expect(JSON.parse(chip.dataset.values!)).toEqual(["http://chebi.example/Alcohol"]);
    expect(resultTotal(root)).toBeGreaterThan(0);
  });

  it("selecting an instance completion opens the entity view instead", async () => {
    const { root } = app;
    typeInto(root, "wasser");
    await waitFor(() => root.querySelectorAll(".completion").length > 0, "dropdown");
    const item = [...root.querySelectorAll<HTMLElement>(".completion")].find(
      (i) => i.dataset.concept === LOCAL_WATER,
    )!;
    item.click();
    await waitFor(() => !root.querySelector<HTMLElement>(".entity")!.hidden, "entity view");
    const entity = root.querySelector<HTMLElement>(".entity")!;
    expect(entity.dataset.iri).toBe(LOCAL_WATER);
    expect(root.querySelectorAll(".chip").length).toBe(0);
  });

  it("entity view shows labels, types, categories, and enriched synonyms", async () => {
    const { root } = app;
    await app.controller.openEntity(LOCAL_WATER);
    const entity = root.querySelector<HTMLElement>(".entity")!;
    expect(entity.hidden).toBe(false);
    const text = entity.textContent!;
    expect(text).toContain("water");
    expect(text).toContain("Wasser");   // enriched multilingual label
    expect(text).toContain("oxidane");  // enriched synonym
    expect(text).toContain("Compound"); // type
    expect(text).toContain("Solvents"); // category
  });

  it("hierarchy-expanded suggestions carry a visible badge", async () => {
    const { root } = app;
    suggestionButton(root, "class", CHEBI_COMPOUND).click();
    await waitFor(() => root.querySelectorAll(".chip").length === 1, "chip");
    await waitFor(
      () =>
        root.querySelector(
          `.suggestion-button[data-facet="category"][data-origin="hierarchy-expanded"]`,
        ) !== null,
      "expanded category suggestion",
    );
    const expanded = root.querySelector<HTMLElement>(
      `.suggestion-button[data-facet="category"][data-origin="hierarchy-expanded"]`,
    )!;
    expect(expanded.querySelector(".badge")).not.toBeNull();
  });
});
