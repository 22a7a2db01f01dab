// State-transition tests against a scripted in-memory API: the chip/request
// bijection, 400 reset-to-last-valid, abort transparency, add-then-remove
// as exact inverses.

import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, SearchResponse, Selection } from "../src/api.js";
import { SessionController } from "../src/session.js";

type SearchFn = (selections: Selection[]) => SearchResponse;

function response(total: number): SearchResponse {
  return {
    total,
    entities: Array.from({ length: total }, (_, i) => ({
      iri: `http://x.example/e${i}`,
      label: `e${i}`,
      types: [],
    })),
    suggestions: [],
  };
}

function fakeClient(searchFn: SearchFn): ApiClient {
  const client = Object.create(ApiClient.prototype) as ApiClient;
  Object.assign(client, {
    facets: async () => [
      { id: "class", kind: "class-hierarchy", anchor: "http://x.example/Root", label: "Class" },
    ],
    search: async (selections: Selection[]) => searchFn(selections),
    autocomplete: async () => [],
    entity: async (iri: string) => ({
      iri,
      label: null,
      types: [],
      categories: [],
      properties: {},
    }),
  });
  return client;
}

// deterministic toy evaluator: each selection on "class" halves the total
const halving: SearchFn = (selections) => response(Math.floor(16 / 2 ** selections.length));

describe("SessionController", () => {
  it("commits selections only together with their response", async () => {
    const controller = new SessionController(fakeClient(halving));
    await controller.init();
    expect(controller.session.results?.total).toBe(16);
    await controller.addValue("class", "http://x.example/A");
    expect(controller.session.selections).toEqual([
      { facet: "class", values: ["http://x.example/A"] },
    ]);
    expect(controller.session.results?.total).toBe(8);
  });

  it("a 400 keeps the last valid state and surfaces the message", async () => {
    let reject = false;
    const controller = new SessionController(
      fakeClient((selections) => {
        if (reject) throw new ApiError(400, "unknown facet id 'nope'");
        return halving(selections);
      }),
    );
    await controller.init();
    await controller.addValue("class", "http://x.example/A");
    const before = { ...controller.session };
    reject = true;
    await controller.addValue("nope", "http://x.example/B");
    expect(controller.session.selections).toEqual(before.selections);
    expect(controller.session.results).toEqual(before.results);
    expect(controller.session.error).toContain("unknown facet");
  });

  it("network failure keeps previous state with an inline error", async () => {
    let down = false;
    const controller = new SessionController(
      fakeClient((selections) => {
        if (down) throw new TypeError("fetch failed");
        return halving(selections);
      }),
    );
    await controller.init();
    down = true;
    await controller.addValue("class", "http://x.example/A");
    expect(controller.session.selections).toEqual([]);
    expect(controller.session.results?.total).toBe(16);
    expect(controller.session.error).toContain("network error");
  });

  it("aborted requests change nothing", async () => {
    const controller = new SessionController(
      fakeClient(() => {
        throw new DOMException("aborted", "AbortError");
      }),
    );
    await controller.runSearch([{ facet: "class", values: ["v"] }]);
    expect(controller.session.selections).toEqual([]);
    expect(controller.session.error).toBeNull();
  });

  it("add-then-remove restores the previous result total", async () => {
    const controller = new SessionController(fakeClient(halving));
    await controller.init();
    await controller.addValue("class", "http://x.example/A");
    const totalBefore = controller.session.results!.total;
    await controller.addValue("class", "http://x.example/B");
    expect(controller.session.results!.total).toBe(4);
    await controller.removeChip(1);
    expect(controller.session.results!.total).toBe(totalBefore);
    expect(controller.session.selections).toEqual([
      { facet: "class", values: ["http://x.example/A"] },
    ]);
  });

  it("choosing a completion that matches the class facet adds a chip", async () => {
    const controller = new SessionController(
      fakeClient((selections) => response(selections.length === 0 ? 16 : 3)),
    );
    await controller.init();
    await controller.chooseCompletion({
      surface: "alcohol",
      language: "en",
      concept: "http://x.example/Alcohol",
      score: 1,
    });
    expect(controller.session.selections).toEqual([
      { facet: "class", values: ["http://x.example/Alcohol"] },
    ]);
    expect(controller.session.entity).toBeNull();
  });

  it("choosing a completion with no matching facet opens the entity view", async () => {
    const controller = new SessionController(
      fakeClient((selections) => response(selections.length === 0 ? 16 : 0)),
    );
    await controller.init();
    await controller.chooseCompletion({
      surface: "water",
      language: "en",
      concept: "http://x.example/water1",
      score: 1,
    });
    expect(controller.session.selections).toEqual([]);
    expect(controller.session.entity?.iri).toBe("http://x.example/water1");
  });
});
