"""Trie-based keyphrase extraction over normalized token segments.

The trie holds every lexicon phrase as a token-id path.  Extraction walks
each document segment greedily left to right, taking the longest phrase
starting at the current position; covered tokens are consumed, uncovered
tokens become residual words.  Title and abstract are matched in separate
passes and phrases never cross a segment boundary.

The scanning kernel is compiled (Cython) when available; set
``SEERKIT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

from __future__ import annotations

import os
import statistics
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from . import _trie_py
from .candidates import CandidateLexicon, segment_tokens
from .corpus import Corpus, Document, word_count

if os.environ.get("SEERKIT_PURE_PYTHON"):
    _kernel_cls = _trie_py.MatchKernel
    KERNEL_BACKEND: str = "python"
else:
    try:
        from . import _trie_cy

        _kernel_cls = _trie_cy.MatchKernel
        KERNEL_BACKEND = "cython"
    except ImportError:
        _kernel_cls = _trie_py.MatchKernel
        KERNEL_BACKEND = "python"


@dataclass
class DocKeyphrases:
    """Per-document extraction result.

    ``phrase_counts`` is a multiset (occurrence counts); ``phrase_length``
    is the phrase-denominated document length |d| = matched occurrences +
    residual words.  ``word_counts`` covers every token of title+abstract,
    including tokens inside matched phrases.
    """

    doc_id: str
    phrase_counts: dict[str, int]
    residual_words: tuple[str, ...]
    word_counts: dict[str, int]
    phrase_length: int

    @property
    def total_words(self) -> int:
        return sum(self.word_counts.values())

    @property
    def distinct_phrases(self) -> int:
        return len(self.phrase_counts)

    def to_json(self) -> dict:
        return {
            "id": self.doc_id,
            "phrases": [
                {"p": p, "c": c} for p, c in sorted(self.phrase_counts.items())
            ],
            "len": self.phrase_length,
        }


class PhraseTrie:
    """Lexicon phrases compiled to a token-id trie with a scan kernel."""

    def __init__(self, lexicon: CandidateLexicon, kernel_cls=None):
        self.lexicon = lexicon
        self._vocab: dict[str, int] = {}
        seqs: list[list[int]] = []
        for tokens in lexicon.token_seqs():
            ids = []
            for tok in tokens:
                tid = self._vocab.setdefault(tok, len(self._vocab))
                ids.append(tid)
            seqs.append(ids)
        cls = kernel_cls or _kernel_cls
        self._kernel = cls(seqs)
        self.backend = getattr(self._kernel, "backend", "python")

    @classmethod
    def build(cls, lexicon: CandidateLexicon, kernel_cls=None) -> "PhraseTrie":
        return cls(lexicon, kernel_cls=kernel_cls)

    def __contains__(self, phrase: str) -> bool:
        ids = [self._vocab.get(tok, -1) for tok in phrase.split(" ") if tok]
        if not ids or any(t < 0 for t in ids):
            return False
        return bool(self._kernel.contains(ids))

    def _scan_segment(self, tokens: list[str]) -> tuple[list[tuple[str, int]], list[str]]:
        ids = [self._vocab.get(tok, -1) for tok in tokens]
        spans = self._kernel.scan(ids)
        matches: list[tuple[str, int]] = []
        covered = bytearray(len(tokens))
        for start, pid, length in spans:
            matches.append((self.lexicon.phrases[pid], length))
            for i in range(start, start + length):
                covered[i] = 1
        residual = [tok for i, tok in enumerate(tokens) if not covered[i]]
        return matches, residual

    def extract(self, doc_id: str, title: str, abstract: str) -> DocKeyphrases:
        phrase_counts: Counter[str] = Counter()
        residual: list[str] = []
        word_counts: Counter[str] = Counter()
        occurrences = 0
        for text in (title, abstract):
            for segment in segment_tokens(text):
                word_counts.update(segment)
                matches, rest = self._scan_segment(segment)
                for phrase, _length in matches:
                    phrase_counts[phrase] += 1
                    occurrences += 1
                residual.extend(rest)
        return DocKeyphrases(
            doc_id=doc_id,
            phrase_counts=dict(phrase_counts),
            residual_words=tuple(residual),
            word_counts=dict(word_counts),
            phrase_length=occurrences + len(residual),
        )


def build_trie(lexicon: CandidateLexicon) -> PhraseTrie:
    return PhraseTrie.build(lexicon)


def extract_keyphrases(doc: Document, trie: PhraseTrie) -> DocKeyphrases:
    return trie.extract(doc.doc_id, doc.title, doc.abstract)


@dataclass
class KeyphraseStats:
    """Distribution of distinct-keyphrase counts per document."""

    n_documents: int
    minimum: float
    q1: float
    median: float
    mean: float
    q3: float
    maximum: float
    pmf: dict[int, float]

    def to_json(self) -> dict:
        return {
            "documents": self.n_documents,
            "min": self.minimum,
            "q1": self.q1,
            "median": self.median,
            "mean": self.mean,
            "q3": self.q3,
            "max": self.maximum,
            "pmf": {str(k): v for k, v in sorted(self.pmf.items())},
        }


def keyphrase_count_stats(
    corpus: Corpus,
    extractions: Mapping[str, DocKeyphrases] | Iterable[DocKeyphrases],
    min_title_words: int = 0,
    min_abstract_words: int = 0,
) -> KeyphraseStats:
    """Summary of distinct keyphrases per document, with length filters
    applied on raw word counts."""
    if isinstance(extractions, Mapping):
        items = extractions.values()
    else:
        items = extractions
    counts: list[int] = []
    for ex in items:
        doc = corpus.documents.get(ex.doc_id)
        if doc is None:
            continue
        if word_count(doc.title) < min_title_words:
            continue
        if word_count(doc.abstract) < min_abstract_words:
            continue
        counts.append(ex.distinct_phrases)
    if not counts:
        return KeyphraseStats(0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, {})
    if len(counts) >= 2:
        q1, med, q3 = statistics.quantiles(counts, n=4, method="inclusive")
    else:
        q1 = med = q3 = float(counts[0])
    total = len(counts)
    pmf = {k: v / total for k, v in sorted(Counter(counts).items())}
    return KeyphraseStats(
        n_documents=total,
        minimum=float(min(counts)),
        q1=float(q1),
        median=float(med),
        mean=sum(counts) / total,
        q3=float(q3),
        maximum=float(max(counts)),
        pmf=pmf,
    )
