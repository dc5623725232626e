import { describe, expect, it } from "vitest";

import {
  DEFAULT_AUTHOR_K,
  DEFAULT_SEARCH_K,
  parseHash,
  toHash,
  type ViewState,
} from "../src/state.js";
import { MemoryHistory } from "../src/history.js";

describe("hash round trips", () => {
  const cases: ViewState[] = [
    { view: "search", query: "stream mining", k: 10 },
    { view: "search", query: "nöisy wörds & more", k: 3 },
    { view: "author", author: "a rivers", k: 15 },
    { view: "author", author: "O'Neil, Jr.", k: 7 },
  ];

  it.each(cases)("round trips %j", (state) => {
    expect(parseHash(toHash(state))).toEqual(state);
  });
});

describe("parseHash", () => {
  it("reads a search hash", () => {
    expect(parseHash("#/search?q=stream+mining&k=5")).toEqual({
      view: "search",
      query: "stream mining",
      k: 5,
    });
  });

  it("reads an author hash", () => {
    expect(parseHash("#/author?a=a+rivers&k=2")).toEqual({
      view: "author",
      author: "a rivers",
      k: 2,
    });
  });

  it("defaults k when missing or invalid", () => {
    expect(parseHash("#/search?q=x")).toEqual({
      view: "search",
      query: "x",
      k: DEFAULT_SEARCH_K,
    });
    expect(parseHash("#/search?q=x&k=zero")).toMatchObject({ k: DEFAULT_SEARCH_K });
    expect(parseHash("#/search?q=x&k=0")).toMatchObject({ k: DEFAULT_SEARCH_K });
    expect(parseHash("#/search?q=x&k=-3")).toMatchObject({ k: DEFAULT_SEARCH_K });
    expect(parseHash("#/author?a=x")).toMatchObject({ k: DEFAULT_AUTHOR_K });
  });

  it("returns null for unknown or empty paths", () => {
    expect(parseHash("")).toBeNull();
    expect(parseHash("#")).toBeNull();
    expect(parseHash("#/nowhere?q=x")).toBeNull();
    expect(parseHash("#/search/extra?q=x")).toBeNull();
  });
});

describe("MemoryHistory", () => {
  it("pushes, walks back, and truncates the forward stack on push", () => {
    const h = new MemoryHistory();
    const seen: string[] = [];
    h.onChange((hash) => seen.push(hash));

    h.push("#/search?q=a&k=10");
    h.push("#/search?q=b&k=10");
    h.back();
    expect(h.current()).toBe("#/search?q=a&k=10");
    h.push("#/search?q=c&k=10");
    h.forward();
    expect(h.current()).toBe("#/search?q=c&k=10");
    expect(seen).toEqual([
      "#/search?q=a&k=10",
      "#/search?q=b&k=10",
      "#/search?q=a&k=10",
      "#/search?q=c&k=10",
    ]);
  });

  it("ignores back at the start and forward at the end", () => {
    const h = new MemoryHistory("#/search?q=a&k=10");
    h.back();
    expect(h.current()).toBe("#/search?q=a&k=10");
    h.forward();
    expect(h.current()).toBe("#/search?q=a&k=10");
  });
});
