/** View state serialized in the URL hash.
 *
 * The hash is the single source of truth for what is on screen, so
 * back/forward navigation replays earlier views exactly.
 */

export const DEFAULT_SEARCH_K = 10;
export const DEFAULT_AUTHOR_K = 15;

export type ViewState =
  | { view: "search"; query: string; k: number }
  | { view: "author"; author: string; k: number };

export function toHash(state: ViewState): string {
  const params = new URLSearchParams();
  if (state.view === "search") {
    params.set("q", state.query);
    params.set("k", String(state.k));
    return `#/search?${params.toString()}`;
  }
  params.set("a", state.author);
  params.set("k", String(state.k));
  return `#/author?${params.toString()}`;
}

export function parseHash(hash: string): ViewState | null {
  const clean = hash.startsWith("#") ? hash.slice(1) : hash;
  const cut = clean.indexOf("?");
  const path = cut < 0 ? clean : clean.slice(0, cut);
  const params = new URLSearchParams(cut < 0 ? "" : clean.slice(cut + 1));
  const kOr = (fallback: number): number => {
    const raw = Number(params.get("k"));
    return Number.isInteger(raw) && raw >= 1 ? raw : fallback;
  };
  if (path === "/search") {
    return { view: "search", query: params.get("q") ?? "", k: kOr(DEFAULT_SEARCH_K) };
  }
  if (path === "/author") {
    return { view: "author", author: params.get("a") ?? "", k: kOr(DEFAULT_AUTHOR_K) };
  }
  return null;
}
