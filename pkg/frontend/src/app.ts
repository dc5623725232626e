/** View controller: binds URL hash state to service calls and rendering.
 *
 * The hash is the single source of truth.  navigate() pushes a new hash
 * and then fetches/renders; history traversal (back/forward) re-applies
 * whatever state the restored hash encodes without pushing again.  Each
 * apply() bumps a token and any response arriving after a newer apply()
 * is discarded, so out-of-order responses never overwrite newer views.
 */

import { ApiClient, ApiError } from "./api.js";
import type { HistoryLike } from "./history.js";
import {
  renderAuthorView,
  renderErrorView,
  renderLoading,
  renderSearchView,
  renderWelcome,
} from "./render.js";
import {
  DEFAULT_AUTHOR_K,
  DEFAULT_SEARCH_K,
  parseHash,
  toHash,
  type ViewState,
} from "./state.js";

export type RenderSink = (html: string) => void;

export type Action =
  | { kind: "query"; query: string }
  | { kind: "chip"; phrase: string }
  | { kind: "term"; phrase: string }
  | { kind: "author"; author: string }
  | { kind: "retry" };

export class App {
  private readonly api: ApiClient;
  private readonly history: HistoryLike;
  private readonly sink: RenderSink;
  private token = 0;
  private appliedHash: string | null = null;
  private lastState: ViewState | null = null;

  constructor(api: ApiClient, history: HistoryLike, sink: RenderSink) {
    this.api = api;
    this.history = history;
    this.sink = sink;
  }

  start(): Promise<void> {
    this.history.onChange((hash) => {
      if (hash === this.appliedHash) {
        return;
      }
      const state = parseHash(hash);
      if (state === null) {
        this.appliedHash = hash;
        this.sink(renderWelcome());
        return;
      }
      void this.apply(state, hash);
    });
    const initial = parseHash(this.history.current());
    if (initial === null) {
      this.appliedHash = this.history.current();
      this.sink(renderWelcome());
      return Promise.resolve();
    }
    return this.apply(initial, this.history.current());
  }

  navigate(state: ViewState): Promise<void> {
    const hash = toHash(state);
    this.appliedHash = hash;
    this.history.push(hash);
    return this.apply(state, hash);
  }

  dispatch(action: Action): Promise<void> {
    switch (action.kind) {
      case "query":
        return this.navigate({
          view: "search",
          query: action.query,
          k: DEFAULT_SEARCH_K,
        });
      case "chip":
      case "term":
        return this.navigate({
          view: "search",
          query: action.phrase,
          k: DEFAULT_SEARCH_K,
        });
      case "author":
        return this.navigate({
          view: "author",
          author: action.author,
          k: DEFAULT_AUTHOR_K,
        });
      case "retry":
        if (this.lastState === null) {
          return Promise.resolve();
        }
        return this.apply(this.lastState, toHash(this.lastState));
    }
  }

  private async apply(state: ViewState, hash: string): Promise<void> {
    this.token += 1;
    const token = this.token;
    this.appliedHash = hash;
    this.lastState = state;
    this.sink(renderLoading(state));
    try {
      if (state.view === "search") {
        const payload = await this.api.experts(state.query, state.k);
        if (token !== this.token) {
          return;
        }
        this.sink(renderSearchView(payload));
      } else {
        const payload = await this.api.expertise(state.author, state.k);
        if (token !== this.token) {
          return;
        }
        this.sink(renderAuthorView(payload));
      }
    } catch (err) {
      if (token !== this.token) {
        return;
      }
      if (err instanceof ApiError) {
        this.sink(renderErrorView(err.message, err.status));
      } else {
        this.sink(renderErrorView(String(err), 0));
      }
    }
  }
}
