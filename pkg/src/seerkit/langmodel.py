"""Bag-of-phrases language model with Dirichlet smoothing.

For a phrase q and document d:

    p(q|d) = |d|/(|d|+mu) * c(q,d)/|d|  +  (1 - |d|/(|d|+mu)) * c(q,D)/|D|

where |d| and |D| count phrase tokens (matched occurrences plus residual
words), not words.  When |d| = 0 the first term is defined as 0.  The
word-level fallback multiplies the same smoothed term per word — still with
the phrase-denominated |d| and |D| — and is evaluated in log space so long
queries cannot underflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import EmptyCorpusError, EmptyQueryError, UnknownDocumentError
from .matcher import DocKeyphrases


@dataclass(frozen=True)
class LmConfig:
    """Smoothing configuration; ``mu`` is the Dirichlet pseudo-length."""

    mu: float = 2000.0

    def __post_init__(self):
        if not (self.mu > 0):
            raise ValueError(f"mu must be positive, got {self.mu}")


class CorpusStats:
    """Aggregated phrase/word counts with per-phrase posting lists.

    Insertion orders are deterministic (corpus order), which keeps
    floating-point summations reproducible and makes an incrementally
    updated instance bit-identical to one rebuilt from scratch.
    """

    def __init__(self) -> None:
        self.phrase_length_total = 0  # |D|
        self.word_total = 0
        self.phrase_cf: dict[str, int] = {}
        self.word_cf: dict[str, int] = {}
        # phrase -> {doc_id: count}, insertion-ordered
        self.phrase_postings: dict[str, dict[str, int]] = {}
        self.word_postings: dict[str, dict[str, int]] = {}
        self.doc_phrase_len: dict[str, int] = {}
        self.doc_word_len: dict[str, int] = {}
        self.doc_phrases: dict[str, dict[str, int]] = {}

    def __contains__(self, doc_id: str) -> bool:
        return doc_id in self.doc_phrase_len

    @property
    def n_documents(self) -> int:
        return len(self.doc_phrase_len)

    def add_document(self, ex: DocKeyphrases) -> None:
        if ex.doc_id in self.doc_phrase_len:
            raise ValueError(f"document {ex.doc_id!r} already counted")
        self.doc_phrase_len[ex.doc_id] = ex.phrase_length
        self.doc_word_len[ex.doc_id] = ex.total_words
        self.doc_phrases[ex.doc_id] = ex.phrase_counts
        self.phrase_length_total += ex.phrase_length
        self.word_total += ex.total_words
        for phrase, c in ex.phrase_counts.items():
            self.phrase_cf[phrase] = self.phrase_cf.get(phrase, 0) + c
            self.phrase_postings.setdefault(phrase, {})[ex.doc_id] = c
        for word, c in ex.word_counts.items():
            self.word_cf[word] = self.word_cf.get(word, 0) + c
            self.word_postings.setdefault(word, {})[ex.doc_id] = c

    @classmethod
    def from_extractions(cls, extractions: Iterable[DocKeyphrases]) -> "CorpusStats":
        stats = cls()
        for ex in extractions:
            stats.add_document(ex)
        return stats

    def copy_extended(self, extractions: Sequence[DocKeyphrases]) -> "CorpusStats":
        """Copy-on-write extension; the original instance is untouched."""
        new = CorpusStats()
        new.phrase_length_total = self.phrase_length_total
        new.word_total = self.word_total
        new.phrase_cf = dict(self.phrase_cf)
        new.word_cf = dict(self.word_cf)
        new.phrase_postings = dict(self.phrase_postings)
        new.word_postings = dict(self.word_postings)
        new.doc_phrase_len = dict(self.doc_phrase_len)
        new.doc_word_len = dict(self.doc_word_len)
        new.doc_phrases = dict(self.doc_phrases)
        touched_phrases: set[str] = set()
        touched_words: set[str] = set()
        for ex in extractions:
            for phrase in ex.phrase_counts:
                if phrase not in touched_phrases:
                    new.phrase_postings[phrase] = dict(
                        new.phrase_postings.get(phrase, {})
                    )
                    touched_phrases.add(phrase)
            for word in ex.word_counts:
                if word not in touched_words:
                    new.word_postings[word] = dict(new.word_postings.get(word, {}))
                    touched_words.add(word)
            new.add_document(ex)
        return new

    # -- debug export -------------------------------------------------------

    def iter_phrase_records(self) -> Iterator[dict]:
        """{"phrase", "cD", "postings": [[doc, c], ...]} per phrase, sorted."""
        for phrase in sorted(self.phrase_cf):
            yield {
                "phrase": phrase,
                "cD": self.phrase_cf[phrase],
                "postings": [[d, c] for d, c in self.phrase_postings[phrase].items()],
            }

    def iter_word_records(self) -> Iterator[dict]:
        for word in sorted(self.word_cf):
            yield {
                "word": word,
                "cD": self.word_cf[word],
                "postings": [[d, c] for d, c in self.word_postings[word].items()],
            }


def _require_nonempty(stats: CorpusStats) -> None:
    if stats.phrase_length_total <= 0:
        raise EmptyCorpusError("collection has no phrase tokens (|D| = 0)")


def _doc_length(stats: CorpusStats, doc_id: str) -> int:
    try:
        return stats.doc_phrase_len[doc_id]
    except KeyError:
        raise UnknownDocumentError(f"unknown document: {doc_id!r}") from None


def p_phrase_given_doc(
    phrase: str, doc_id: str, stats: CorpusStats, cfg: LmConfig
) -> float:
    """Smoothed phrase probability; 0 <= p <= 1."""
    _require_nonempty(stats)
    dlen = _doc_length(stats, doc_id)
    mu = cfg.mu
    c_qd = stats.phrase_postings.get(phrase, {}).get(doc_id, 0)
    c_qD = stats.phrase_cf.get(phrase, 0)
    w = dlen / (dlen + mu)
    doc_term = (c_qd / dlen) if dlen > 0 else 0.0
    return w * doc_term + (1.0 - w) * (c_qD / stats.phrase_length_total)


def _word_term(
    word: str, doc_id: str, dlen: int, stats: CorpusStats, mu: float
) -> float:
    c_wd = stats.word_postings.get(word, {}).get(doc_id, 0)
    c_wD = stats.word_cf.get(word, 0)
    w = dlen / (dlen + mu)
    doc_term = (c_wd / dlen) if dlen > 0 else 0.0
    return w * doc_term + (1.0 - w) * (c_wD / stats.phrase_length_total)


def log_p_words_given_doc(
    words: Sequence[str], doc_id: str, stats: CorpusStats, cfg: LmConfig
) -> float:
    """log of the per-word product; -inf when any factor is exactly 0."""
    if not words:
        raise EmptyQueryError("no query words")
    _require_nonempty(stats)
    dlen = _doc_length(stats, doc_id)
    total = 0.0
    for word in words:
        term = _word_term(word, doc_id, dlen, stats, cfg.mu)
        if term <= 0.0:
            return -math.inf
        total += math.log(term)
    return total


def p_words_given_doc(
    words: Sequence[str], doc_id: str, stats: CorpusStats, cfg: LmConfig
) -> float:
    logp = log_p_words_given_doc(words, doc_id, stats, cfg)
    return math.exp(logp) if logp != -math.inf else 0.0
