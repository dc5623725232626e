"""Brute-force reference implementations used to cross-check the engine.

Everything here recomputes results from first principles over plain dicts:
matching tries every phrase at every position, scoring sums over every
(author, document) pair with no posting-list shortcut, and the fallback
path evaluates the per-word product directly.  Shared with the package is
only the tokenizer (`segment_tokens`), which has its own frozen vectors.
"""

from __future__ import annotations

import math
from collections import Counter

from seerkit.candidates import segment_tokens

# -- name keys -----------------------------------------------------------------


def oracle_author_key(name: str) -> str:
    """First-initial + last-name key, written independently of the package."""
    import unicodedata

    folded = unicodedata.normalize("NFKD", name).encode("ascii", "ignore").decode()
    tokens = ["".join(ch for ch in t if ch.isalnum()) for t in folded.lower().split()]
    tokens = [t for t in tokens if t]
    if not tokens:
        raise ValueError(f"name {name!r} has no usable tokens")
    if len(tokens) == 1:
        return tokens[0]
    return f"{tokens[0][0]} {tokens[-1]}"


# -- matching ------------------------------------------------------------------


def naive_extract(segments: list[list[str]], phrase_seqs: list[tuple[str, ...]]):
    """Greedy longest-match by direct sequence comparison, one segment at
    a time.  Returns (phrase Counter keyed by space-joined phrase,
    residual token list)."""
    by_len = sorted(set(phrase_seqs), key=len, reverse=True)
    counts: Counter[str] = Counter()
    residual: list[str] = []
    for seg in segments:
        i = 0
        while i < len(seg):
            hit = None
            for seq in by_len:
                if len(seq) <= len(seg) - i and tuple(seg[i : i + len(seq)]) == seq:
                    hit = seq
                    break
            if hit is None:
                residual.append(seg[i])
                i += 1
            else:
                counts[" ".join(hit)] += 1
                i += len(hit)
    return counts, residual


# -- fixture view --------------------------------------------------------------


class OracleView:
    """Everything the scoring oracles need, computed from raw records.

    records: [{"id","title","abstract","authors","citations"}], citations
    being outgoing cited ids.  lexicon_keys: normalized phrase strings.
    """

    def __init__(self, records: list[dict], lexicon_keys: list[str]):
        self.records = {r["id"]: r for r in records}
        self.order = [r["id"] for r in records]
        self.phrase_seqs = [tuple(p.split(" ")) for p in lexicon_keys]
        self.lexicon = set(lexicon_keys)

        present = set(self.records)
        incoming: Counter[str] = Counter()
        for r in records:
            for target in sorted(set(r.get("citations", []))):
                if target in present and target != r["id"]:
                    incoming[target] += 1
        self.in_citations = {doc_id: incoming.get(doc_id, 0) for doc_id in self.order}
        self.p_doc = {
            doc_id: math.log1p(self.in_citations[doc_id]) for doc_id in self.order
        }

        self.doc_phrases: dict[str, Counter] = {}
        self.doc_words: dict[str, Counter] = {}
        self.doc_len: dict[str, int] = {}
        for doc_id in self.order:
            r = self.records[doc_id]
            phrases: Counter[str] = Counter()
            words: Counter[str] = Counter()
            residual_total = 0
            for text in (r.get("title", ""), r.get("abstract", "")):
                segs = segment_tokens(text)
                c, residual = naive_extract(segs, self.phrase_seqs)
                phrases.update(c)
                residual_total += len(residual)
                for seg in segs:
                    words.update(seg)
            self.doc_phrases[doc_id] = phrases
            self.doc_words[doc_id] = words
            self.doc_len[doc_id] = sum(phrases.values()) + residual_total

        self.total_len = sum(self.doc_len.values())
        self.phrase_cf: Counter[str] = Counter()
        self.word_cf: Counter[str] = Counter()
        for doc_id in self.order:
            self.phrase_cf.update(self.doc_phrases[doc_id])
            self.word_cf.update(self.doc_words[doc_id])
        self.word_total = sum(self.word_cf.values())

        self.doc_authors: dict[str, list[str]] = {}
        self.author_names: dict[str, str] = {}
        for doc_id in self.order:
            keys = []
            for name in self.records[doc_id].get("authors", []):
                try:
                    key = oracle_author_key(name)
                except ValueError:
                    continue
                if key not in keys:
                    keys.append(key)
                self.author_names.setdefault(key, name)
            self.doc_authors[doc_id] = keys
        self.authors = sorted(self.author_names)

    # -- language model ---------------------------------------------------

    def p_phrase(self, phrase: str, doc_id: str, mu: float) -> float:
        dlen = self.doc_len[doc_id]
        bg = self.phrase_cf.get(phrase, 0) / self.total_len
        if dlen == 0:
            doc_term = 0.0
        else:
            doc_term = (dlen / (dlen + mu)) * (
                self.doc_phrases[doc_id].get(phrase, 0) / dlen
            )
        return doc_term + (1.0 - dlen / (dlen + mu)) * bg

    def p_word(self, word: str, doc_id: str, mu: float) -> float:
        dlen = self.doc_len[doc_id]
        bg = self.word_cf.get(word, 0) / self.total_len
        if dlen == 0:
            doc_term = 0.0
        else:
            doc_term = (dlen / (dlen + mu)) * (
                self.doc_words[doc_id].get(word, 0) / dlen
            )
        return doc_term + (1.0 - dlen / (dlen + mu)) * bg

    def p_words(self, words: list[str], doc_id: str, mu: float) -> float:
        value = 1.0
        for w in words:
            value *= self.p_word(w, doc_id, mu)
        return value

    # -- rankings ----------------------------------------------------------

    def expert_scores(self, phrase: str, mu: float) -> dict[str, float]:
        """Eq. 2 summed over every (author, document) pair."""
        scores = {a: 0.0 for a in self.authors}
        for doc_id in self.order:
            pq = self.p_phrase(phrase, doc_id, mu)
            w = self.p_doc[doc_id]
            for a in self.doc_authors[doc_id]:
                scores[a] += w * pq
        return scores

    def top_docs_for_words(self, words: list[str], mu: float, top_n: int):
        """D_1: highest p(d) * p(words|d), joint evaluated directly."""
        joint = []
        for doc_id in self.order:
            j = self.p_doc[doc_id] * self.p_words(words, doc_id, mu)
            if j > 0.0:
                joint.append((doc_id, j))
        joint.sort(key=lambda pair: (-pair[1], pair[0]))
        return joint[:top_n]

    def oov_expert_scores(self, words: list[str], mu: float, top_n: int):
        """Eq. 4: sum restricted to D_1, candidates are D_1's authors."""
        d1 = self.top_docs_for_words(words, mu, top_n)
        scores: dict[str, float] = {}
        for doc_id, joint in d1:
            for a in self.doc_authors[doc_id]:
                scores[a] = scores.get(a, 0.0) + joint
        return scores

    def expertise_scores(self, author_key: str, mu: float) -> dict[str, float]:
        """Eq. 6 over the author's documents, candidates from those docs."""
        docs = [d for d in self.order if author_key in self.doc_authors[d]]
        candidates = sorted({p for d in docs for p in self.doc_phrases[d]})
        return {
            t: sum(self.p_doc[d] * self.p_phrase(t, d, mu) for d in docs)
            for t in candidates
        }

    def related_scores(self, pivot: str, mu: float) -> dict[str, float]:
        """Eq. 7 over the pivot's posting list, pivot excluded."""
        posting = [d for d in self.order if self.doc_phrases[d].get(pivot, 0) > 0]
        candidates = sorted(
            {s for d in posting for s in self.doc_phrases[d] if s != pivot}
        )
        return {
            s: sum(
                self.p_doc[d] * self.p_phrase(pivot, d, mu) * self.p_phrase(s, d, mu)
                for d in posting
            )
            for s in candidates
        }

    def gs_star_scores(self, words: list[str], mu: float, top_n: int):
        """Topic-blind citation totals over D_1's authors."""
        d1 = self.top_docs_for_words(words, mu, top_n)
        scores: dict[str, float] = {}
        for doc_id, _ in d1:
            for a in self.doc_authors[doc_id]:
                if a not in scores:
                    scores[a] = float(
                        sum(
                            self.in_citations[d]
                            for d in self.order
                            if a in self.doc_authors[d]
                        )
                    )
        return scores


# -- comparison helpers ---------------------------------------------------------


def rank_of(scores: dict[str, float], k: int | None = None):
    items = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))
    return items if k is None else items[:k]


def assert_scores_close(actual, expected, rel=1e-9, context=""):
    """Same ids, each score within `rel` relative tolerance."""
    a_ids = {i for i, _ in actual}
    e_ids = {i for i, _ in expected}
    assert a_ids == e_ids, f"{context}: id sets differ: {a_ids ^ e_ids}"
    e_map = dict(expected)
    for entity, score in actual:
        want = e_map[entity]
        assert math.isclose(score, want, rel_tol=rel, abs_tol=1e-15), (
            f"{context}: {entity}: {score!r} vs oracle {want!r}"
        )


def assert_same_order(actual, expected, context=""):
    a = [i for i, _ in actual]
    e = [i for i, _ in expected]
    assert a == e, f"{context}: order differs:\n  got    {a}\n  oracle {e}"
