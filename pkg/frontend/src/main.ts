/** Browser bootstrap: the only module that touches document/window.
 *
 * Wires the search form and delegated data-action clicks to App.dispatch,
 * and renders App output into #app.  The service base URL comes from
 * window.SEERKIT_SERVICE_URL, a ?service= query parameter, or a local
 * default, in that order.
 */

import { ApiClient } from "./api.js";
import { App, type Action } from "./app.js";
import { BrowserHistory } from "./history.js";

declare global {
  interface Window {
    SEERKIT_SERVICE_URL?: string;
  }
}

function serviceBaseUrl(): string {
  if (typeof window.SEERKIT_SERVICE_URL === "string") {
    return window.SEERKIT_SERVICE_URL;
  }
  const fromQuery = new URLSearchParams(window.location.search).get("service");
  if (fromQuery) {
    return fromQuery;
  }
  return "http://127.0.0.1:8040";
}

function actionFrom(el: HTMLElement): Action | null {
  switch (el.dataset["action"]) {
    case "chip":
      return { kind: "chip", phrase: el.dataset["phrase"] ?? "" };
    case "term":
      return { kind: "term", phrase: el.dataset["phrase"] ?? "" };
    case "author":
      return { kind: "author", author: el.dataset["author"] ?? "" };
    case "retry":
      return { kind: "retry" };
    default:
      return null;
  }
}

function bootstrap(): void {
  const root = document.getElementById("app");
  if (root === null) {
    throw new Error("missing #app container");
  }
  const api = new ApiClient(serviceBaseUrl());
  const app = new App(api, new BrowserHistory(), (html) => {
    root.innerHTML = html;
  });

  root.addEventListener("click", (event) => {
    const target = (event.target as HTMLElement | null)?.closest<HTMLElement>(
      "[data-action]",
    );
    if (!target) {
      return;
    }
    const action = actionFrom(target);
    if (action) {
      event.preventDefault();
      void app.dispatch(action);
    }
  });

  const form = document.getElementById("search-form");
  const input = document.getElementById("search-input") as HTMLInputElement | null;
  if (form && input) {
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const query = input.value.trim();
      if (query) {
        void app.dispatch({ kind: "query", query });
      }
    });
  }

  void app.start();
}

bootstrap();
