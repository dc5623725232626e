"""Expert, expertise, and related-phrase ranking.

Everything reduces to sums of per-document summands

    p(d) * p(q|d) * p(a|d)

with p(d) = ln(1 + citations), p(q|d) the smoothed phrase model, and
p(a|d) an authorship indicator.  Scores are computed exactly: the sum over
a phrase's posting list is completed with an analytic tail for every
document outside it, using the per-author aggregate

    A_a = sum over a's documents of p(d) * mu / (|d| + mu)

so that the smoothing contribution c(q,D)/|D| * A_a covers all non-posting
documents without iterating them.

Ranked lists are deterministic: descending score, ties broken by ascending
entity id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .candidates import normalize_phrase
from .errors import (
    EmptyCorpusError,
    EmptyQueryError,
    PhraseNotInLexiconError,
    UnknownAuthorError,
)
from .langmodel import log_p_words_given_doc, p_phrase_given_doc

RankedList = list[tuple[str, float]]


@dataclass(frozen=True)
class OovConfig:
    """Fallback retrieval: documents kept for out-of-lexicon queries."""

    top_n: int = 1000

    def __post_init__(self):
        if self.top_n < 1:
            raise ValueError(f"top_n must be >= 1, got {self.top_n}")


@dataclass(frozen=True)
class Query:
    raw: str
    tokens: tuple[str, ...]
    phrase: str
    in_lexicon: bool

    @classmethod
    def parse(cls, raw: str, lexicon) -> "Query":
        tokens = normalize_phrase(raw)
        if not tokens:
            raise EmptyQueryError(f"query normalizes to nothing: {raw!r}")
        phrase = " ".join(tokens)
        return cls(raw=raw, tokens=tokens, phrase=phrase, in_lexicon=phrase in lexicon)


def ranked(scores: Mapping[str, float], k: int | None = None) -> RankedList:
    """Sort descending by score, ascending by id; truncate to k if given."""
    items = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return items if k is None else items[:k]


def author_in_doc(state, author_key: str, doc_id: str) -> int:
    """The p(a|d) indicator."""
    return 1 if author_key in state.corpus.author_keys_of(doc_id) else 0


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def score_experts_for_phrase(state, phrase: str) -> dict[str, float]:
    """Raw Eq-style author scores for an in-lexicon phrase (no truncation)."""
    stats = state.stats
    if stats.phrase_length_total <= 0:
        raise EmptyCorpusError("cannot rank against an empty collection")
    mu = state.lm.mu
    bg = stats.phrase_cf.get(phrase, 0) / stats.phrase_length_total
    # smoothing tail over every document each author wrote
    scores = {a: state.author_smooth[a] * bg for a in state.corpus.authors}
    for doc_id, c in stats.phrase_postings.get(phrase, {}).items():
        dlen = stats.doc_phrase_len[doc_id]
        delta = state.p_doc[doc_id] * (c / (dlen + mu))
        if delta == 0.0:
            continue
        for akey in state.corpus.author_keys_of(doc_id):
            scores[akey] += delta
    return scores


def _top_docs_for_words(state, words: Sequence[str], top_n: int) -> list[tuple[str, float]]:
    """D_1: documents ranked by p(d) * p(q'|d), word-level model.

    Returns (doc_id, p_words) pairs for the kept documents; ordering is
    descending joint score with ascending doc id on ties.  Documents whose
    joint is exactly zero carry no relevance signal and never enter D_1.
    """
    stats = state.stats
    if stats.phrase_length_total <= 0:
        raise EmptyCorpusError("no documents indexed")
    keyed: list[tuple[float, str, float]] = []
    for doc_id in stats.doc_phrase_len:
        pd = state.p_doc[doc_id]
        log_pw = log_p_words_given_doc(words, doc_id, stats, state.lm)
        if pd <= 0.0 or log_pw == -math.inf:
            continue
        keyed.append((math.log(pd) + log_pw, doc_id, log_pw))
    keyed.sort(key=lambda t: (-t[0], t[1]))
    return [(doc_id, math.exp(log_pw)) for _joint, doc_id, log_pw in keyed[:top_n]]


def score_experts_oov(state, words: Sequence[str], top_n: int) -> dict[str, float]:
    """Author scores for an out-of-lexicon query, restricted to D_1."""
    scores: dict[str, float] = {}
    for doc_id, pw in _top_docs_for_words(state, words, top_n):
        contribution = state.p_doc[doc_id] * pw
        for akey in state.corpus.author_keys_of(doc_id):
            scores[akey] = scores.get(akey, 0.0) + contribution
    return scores


def rank_experts(state, query: Query | str, k: int, oov: OovConfig | None = None) -> RankedList:
    """Top-k authors for a query phrase."""
    _check_k(k)
    if isinstance(query, str):
        query = Query.parse(query, state.lexicon)
    oov = oov or state.oov
    if query.in_lexicon:
        scores = state.cached_expert_scores(query.phrase)
    else:
        scores = score_experts_oov(state, query.tokens, oov.top_n)
    return ranked(scores, k)


def score_expertise(state, author_key: str) -> dict[str, float]:
    """Phrase scores over an author's own documents (full smoothing)."""
    corpus = state.corpus
    stats = state.stats
    mu = state.lm.mu
    author = corpus.authors.get(author_key)
    if author is None:
        raise UnknownAuthorError(f"unknown author: {author_key!r}")
    acc: dict[str, float] = {}
    for doc_id in author.doc_ids:
        pd = state.p_doc[doc_id]
        if pd == 0.0:
            continue
        dlen = stats.doc_phrase_len[doc_id]
        for phrase, c in stats.doc_phrases[doc_id].items():
            acc[phrase] = acc.get(phrase, 0.0) + pd * (c / (dlen + mu))
    # candidate set is every phrase occurring in the author's documents,
    # including those in zero-weight documents
    for doc_id in author.doc_ids:
        for phrase in stats.doc_phrases[doc_id]:
            acc.setdefault(phrase, 0.0)
    tail = state.author_smooth[author_key]
    total = stats.phrase_length_total
    if total > 0:
        for phrase in acc:
            acc[phrase] += (stats.phrase_cf.get(phrase, 0) / total) * tail
    return acc


def resolve_author(state, author: str) -> str:
    """Accept either an author key or a raw name; raise if unknown."""
    from .corpus import normalize_name

    if author in state.corpus.authors:
        return author
    try:
        key = normalize_name(author)
    except ValueError:
        raise UnknownAuthorError(f"unknown author: {author!r}") from None
    if key in state.corpus.authors:
        return key
    raise UnknownAuthorError(f"unknown author: {author!r}")


def rank_expertise(state, author: str, k: int) -> RankedList:
    """Top-k expertise phrases for an author."""
    _check_k(k)
    key = resolve_author(state, author)
    return ranked(score_expertise(state, key), k)


def score_related(state, phrase: str) -> dict[str, float]:
    """Co-phrase scores over the pivot phrase's posting list.

    score(s) = sum over d in postings(t) of p(d) p(t|d) p(s|d); candidates
    are the phrases sharing at least one document with t, t itself
    excluded.
    """
    stats = state.stats
    mu = state.lm.mu
    postings = stats.phrase_postings.get(phrase, {})
    doc_weight: dict[str, float] = {}
    smoothing_mass = 0.0
    for doc_id in postings:
        w = state.p_doc[doc_id] * p_phrase_given_doc(phrase, doc_id, stats, state.lm)
        doc_weight[doc_id] = w
        dlen = stats.doc_phrase_len[doc_id]
        smoothing_mass += w * (mu / (dlen + mu))
    acc: dict[str, float] = {}
    for doc_id, w in doc_weight.items():
        dlen = stats.doc_phrase_len[doc_id]
        for s, c in stats.doc_phrases[doc_id].items():
            if s == phrase:
                continue
            acc[s] = acc.get(s, 0.0) + w * (c / (dlen + mu))
    total = stats.phrase_length_total
    for s in acc:
        acc[s] += (stats.phrase_cf.get(s, 0) / total) * smoothing_mass
    return acc


def rank_related(state, query: Query | str, k: int) -> RankedList:
    """Top-k related phrases for an in-lexicon phrase."""
    _check_k(k)
    if isinstance(query, str):
        query = Query.parse(query, state.lexicon)
    if not query.in_lexicon:
        raise PhraseNotInLexiconError(
            f"related phrases exist only for lexicon phrases: {query.raw!r}"
        )
    return ranked(score_related(state, query.phrase), k)


def gs_star_rank(state, query: Query | str, k: int, oov: OovConfig | None = None) -> RankedList:
    """Citation-total baseline: candidates come from the word-level D_1
    retrieval (for every query), scored by the author's total in-citations
    regardless of topic."""
    _check_k(k)
    if isinstance(query, str):
        query = Query.parse(query, state.lexicon)
    oov = oov or state.oov
    candidates: set[str] = set()
    for doc_id, _pw in _top_docs_for_words(state, query.tokens, oov.top_n):
        candidates.update(state.corpus.author_keys_of(doc_id))
    scores: dict[str, float] = {}
    for akey in candidates:
        author = state.corpus.authors[akey]
        scores[akey] = float(
            sum(state.corpus.citation_counts[d] for d in author.doc_ids)
        )
    return ranked(scores, k)
