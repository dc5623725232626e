/** HTML renderers: pure functions from service payloads to markup strings.
 *
 * No scores are computed or reordered here; entries are rendered in the
 * order the service returned them.  Interactive elements carry
 * data-action attributes that the bootstrap's click delegation (or a
 * test) turns into dispatched actions.
 */

import type { ViewState } from "./state.js";
import type {
  DocSummary,
  ExpertisePayload,
  ExpertsPayload,
  RankedEntry,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

function formatScore(score: number): string {
  return Number.isFinite(score) ? score.toPrecision(6) : String(score);
}

function supportingList(docs: DocSummary[]): string {
  if (docs.length === 0) {
    return "";
  }
  const items = docs
    .map(
      (doc) =>
        `<li class="supporting-doc">${escapeHtml(doc.title)}` +
        ` <span class="citations">(${doc.citations} citations)</span></li>`,
    )
    .join("");
  return `<ul class="supporting">${items}</ul>`;
}

function expertItem(entry: RankedEntry): string {
  return (
    `<li class="expert">` +
    `<button type="button" data-action="author" data-author="${escapeHtml(entry.id)}">` +
    `${escapeHtml(entry.name)}</button>` +
    ` <span class="score">${formatScore(entry.score)}</span>` +
    supportingList(entry.supporting) +
    `</li>`
  );
}

function termItem(entry: RankedEntry): string {
  return (
    `<li class="term">` +
    `<button type="button" data-action="term" data-phrase="${escapeHtml(entry.id)}">` +
    `${escapeHtml(entry.name)}</button>` +
    ` <span class="score">${formatScore(entry.score)}</span>` +
    supportingList(entry.supporting) +
    `</li>`
  );
}

export function renderSearchView(payload: ExpertsPayload): string {
  const heading = `<h1>Experts for “${escapeHtml(payload.query)}”</h1>`;
  const note = payload.in_lexicon
    ? `<p class="query-note">matched lexicon phrase <code>${escapeHtml(payload.normalized)}</code></p>`
    : `<p class="query-note">out-of-lexicon query; word-level retrieval for <code>${escapeHtml(payload.normalized)}</code></p>`;
  const results =
    payload.results.length === 0
      ? `<p class="empty-state">No experts found for this query.</p>`
      : `<ol class="experts">${payload.results.map(expertItem).join("")}</ol>`;
  const chips =
    payload.related.length === 0
      ? ""
      : `<nav class="related"><h2>Related phrases</h2>` +
        payload.related
          .map(
            (chip) =>
              `<button type="button" class="chip" data-action="chip" ` +
              `data-phrase="${escapeHtml(chip.phrase)}">${escapeHtml(chip.phrase)}</button>`,
          )
          .join("") +
        `</nav>`;
  return `<section class="search-view">${heading}${note}${results}${chips}</section>`;
}

export function renderAuthorView(payload: ExpertisePayload): string {
  const heading = `<h1>${escapeHtml(payload.author.name)}</h1>`;
  const summary = `<p class="author-note">${payload.author.documents} documents in the corpus</p>`;
  const results =
    payload.results.length === 0
      ? `<p class="empty-state">No expertise phrases for this author.</p>`
      : `<ol class="terms">${payload.results.map(termItem).join("")}</ol>`;
  return `<section class="author-view">${heading}${summary}${results}</section>`;
}

export function renderLoading(state: ViewState): string {
  const label =
    state.view === "search"
      ? `experts for “${escapeHtml(state.query)}”`
      : `expertise of ${escapeHtml(state.author)}`;
  return `<section class="loading">Loading ${label}…</section>`;
}

export function renderErrorView(message: string, status: number): string {
  const kind = status === 404 ? "not-found" : status === 0 ? "unreachable" : "error";
  return (
    `<section class="error-view" data-kind="${kind}">` +
    `<p class="error-message">${escapeHtml(message)}</p>` +
    `<button type="button" data-action="retry">Retry</button>` +
    `</section>`
  );
}

export function renderWelcome(): string {
  return (
    `<section class="welcome">` +
    `<h1>Expert explorer</h1>` +
    `<p>Search a topic to rank authors, then pivot through related phrases.</p>` +
    `</section>`
  );
}
