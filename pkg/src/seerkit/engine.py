"""Engine assembly, snapshots, and on-disk persistence.

An ``EngineState`` is one immutable snapshot: corpus, lexicon, trie,
statistics, citation weights, and per-author smoothing aggregates.
``Engine`` holds the current snapshot behind an atomic reference; updates
build a fresh snapshot and swap it in, so concurrent readers always see a
consistent model.

On disk an engine directory contains the corpus snapshot, the lexicon with
its provenance sidecar, a manifest, and JSON-lines statistics exports.
Loading re-derives the in-memory state from corpus + lexicon, which is
deterministic, so the directory is self-contained and relocatable.
"""

from __future__ import annotations

import json
import logging
import shutil
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .candidates import CandidateLexicon, build_lexicon
from .corpus import Author, Corpus, Document, citation_weight
from .errors import EngineDirError
from .langmodel import CorpusStats, LmConfig, p_phrase_given_doc
from .matcher import KERNEL_BACKEND, DocKeyphrases, PhraseTrie, keyphrase_count_stats
from .ranking import (
    OovConfig,
    Query,
    RankedList,
    gs_star_rank,
    rank_experts,
    rank_expertise,
    rank_related,
    ranked,
    score_experts_for_phrase,
    score_related,
)

log = logging.getLogger(__name__)

MANIFEST_VERSION = 1


def author_smoothing_aggregates(
    corpus: Corpus, stats: CorpusStats, mu: float, p_doc: dict[str, float]
) -> dict[str, float]:
    """A_a = sum over a's documents of p(d) * mu / (|d| + mu)."""
    out: dict[str, float] = {}
    for key, author in corpus.authors.items():
        total = 0.0
        for doc_id in author.doc_ids:
            dlen = stats.doc_phrase_len[doc_id]
            total += p_doc[doc_id] * (mu / (dlen + mu))
        out[key] = total
    return out


@dataclass
class EngineState:
    corpus: Corpus
    lexicon: CandidateLexicon
    trie: PhraseTrie
    stats: CorpusStats
    lm: LmConfig
    oov: OovConfig
    p_doc: dict[str, float]
    author_smooth: dict[str, float]
    _expert_cache: dict[str, dict[str, float]] = field(default_factory=dict)

    def cached_expert_scores(self, phrase: str) -> dict[str, float]:
        """Memo of the online computation — bit-identical by construction."""
        cached = self._expert_cache.get(phrase)
        if cached is None:
            cached = score_experts_for_phrase(self, phrase)
            self._expert_cache[phrase] = cached
        return cached


def build_state(
    corpus: Corpus,
    lexicon: CandidateLexicon,
    lm: LmConfig | None = None,
    oov: OovConfig | None = None,
) -> EngineState:
    lm = lm or LmConfig()
    oov = oov or OovConfig()
    trie = PhraseTrie.build(lexicon)
    stats = CorpusStats.from_extractions(
        trie.extract(doc.doc_id, doc.title, doc.abstract)
        for doc in corpus.documents.values()
    )
    p_doc = {d: citation_weight(c) for d, c in corpus.citation_counts.items()}
    author_smooth = author_smoothing_aggregates(corpus, stats, lm.mu, p_doc)
    return EngineState(
        corpus=corpus,
        lexicon=lexicon,
        trie=trie,
        stats=stats,
        lm=lm,
        oov=oov,
        p_doc=p_doc,
        author_smooth=author_smooth,
    )


class Engine:
    """Query façade over an atomically swappable state snapshot."""

    def __init__(self, state: EngineState):
        self._state = state
        self._write_lock = threading.Lock()

    @property
    def state(self) -> EngineState:
        return self._state

    @classmethod
    def build(
        cls,
        corpus: Corpus,
        lexicon: CandidateLexicon,
        lm: LmConfig | None = None,
        oov: OovConfig | None = None,
    ) -> "Engine":
        return cls(build_state(corpus, lexicon, lm, oov))

    # -- queries ------------------------------------------------------------

    def rank_experts(self, query: str, k: int) -> RankedList:
        return rank_experts(self._state, query, k)

    def rank_expertise(self, author: str, k: int) -> RankedList:
        return rank_expertise(self._state, author, k)

    def rank_related(self, query: str, k: int) -> RankedList:
        return rank_related(self._state, query, k)

    def gs_star_rank(self, query: str, k: int) -> RankedList:
        return gs_star_rank(self._state, query, k)

    def keyphrase_stats(self, min_title_words: int = 0, min_abstract_words: int = 0):
        state = self._state
        extractions = [
            DocKeyphrases(
                doc_id=doc_id,
                phrase_counts=state.stats.doc_phrases[doc_id],
                residual_words=(),
                word_counts={},
                phrase_length=state.stats.doc_phrase_len[doc_id],
            )
            for doc_id in state.corpus.documents
        ]
        return keyphrase_count_stats(
            state.corpus, extractions, min_title_words, min_abstract_words
        )

    # -- persistence ----------------------------------------------------------

    def save(self, out_dir: str | Path) -> None:
        save_engine_dir(self, out_dir)

    @classmethod
    def load(cls, engine_dir: str | Path) -> "Engine":
        return load_engine_dir(engine_dir)


def _jsonl_dump(records: Iterable[dict], path: Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, separators=(",", ":"), sort_keys=False))
            fh.write("\n")


def save_engine_dir(engine: Engine, out_dir: str | Path) -> None:
    """Write a complete snapshot; replaces the directory atomically-ish by
    staging into a sibling temp dir and renaming over."""
    state = engine.state
    out_dir = Path(out_dir)
    staging = out_dir.with_name(out_dir.name + ".staging")
    if staging.exists():
        shutil.rmtree(staging)
    staging.mkdir(parents=True)
    manifest = {
        "format_version": MANIFEST_VERSION,
        "mu": state.lm.mu,
        "oov_top_n": state.oov.top_n,
        "documents": len(state.corpus),
        "authors": len(state.corpus.authors),
        "lexicon_size": len(state.lexicon),
        "phrase_tokens_total": state.stats.phrase_length_total,
        "matcher_backend": KERNEL_BACKEND,
    }
    (staging / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    _jsonl_dump(
        (doc.to_record() for doc in state.corpus.documents.values()),
        staging / "corpus.jsonl",
    )
    state.lexicon.save(staging / "lexicon.txt")
    _jsonl_dump(state.stats.iter_phrase_records(), staging / "phrase_stats.jsonl")
    _jsonl_dump(state.stats.iter_word_records(), staging / "word_stats.jsonl")
    if out_dir.exists():
        shutil.rmtree(out_dir)
    staging.rename(out_dir)


def load_engine_dir(engine_dir: str | Path) -> Engine:
    engine_dir = Path(engine_dir)
    manifest_path = engine_dir / "manifest.json"
    if not manifest_path.exists():
        raise EngineDirError(f"not an engine directory: {engine_dir}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    version = manifest.get("format_version")
    if version != MANIFEST_VERSION:
        raise EngineDirError(
            f"unsupported engine format {version!r} (supported: {MANIFEST_VERSION})"
        )
    from .corpus import ingest_corpus

    corpus, report = ingest_corpus(engine_dir / "corpus.jsonl")
    if report.rejected:
        raise EngineDirError(
            f"corrupt corpus snapshot: {len(report.rejected)} bad records"
        )
    lexicon = CandidateLexicon.load(engine_dir / "lexicon.txt")
    lm = LmConfig(mu=float(manifest.get("mu", 2000.0)))
    oov = OovConfig(top_n=int(manifest.get("oov_top_n", 1000)))
    return Engine.build(corpus, lexicon, lm=lm, oov=oov)


# -- shared query payloads ----------------------------------------------------
#
# The CLI prints exactly these dicts; the HTTP service returns them plus a
# timing_ms field added at the HTTP layer, keeping CLI output byte-stable.


def _doc_summary(state: EngineState, doc_id: str, relevance: float) -> dict:
    doc = state.corpus.documents[doc_id]
    return {
        "id": doc_id,
        "title": doc.title,
        "citations": state.corpus.citation_counts[doc_id],
        "relevance": relevance,
    }


def _supporting_docs_for_author(
    state: EngineState, author: Author, phrase: str | None, limit: int = 3
) -> list[dict]:
    """The author's documents that contribute most to p(d) * p(q|d)."""
    if phrase is None:
        return []
    weighted = []
    for doc_id in author.doc_ids:
        rel = p_phrase_given_doc(phrase, doc_id, state.stats, state.lm)
        contribution = state.p_doc[doc_id] * rel
        if contribution > 0.0:
            weighted.append((contribution, doc_id, rel))
    weighted.sort(key=lambda t: (-t[0], t[1]))
    return [_doc_summary(state, d, rel) for _c, d, rel in weighted[:limit]]


def experts_payload(engine: Engine, raw_query: str, k: int, related_k: int = 10) -> dict:
    state = engine.state
    query = Query.parse(raw_query, state.lexicon)
    results = rank_experts(state, query, k)
    entries = []
    for akey, score in results:
        author = state.corpus.authors[akey]
        entries.append(
            {
                "id": akey,
                "name": author.display_name,
                "score": score,
                "supporting": _supporting_docs_for_author(
                    state, author, query.phrase if query.in_lexicon else None
                ),
            }
        )
    related = []
    if query.in_lexicon:
        related = [
            {"phrase": p, "score": s}
            for p, s in ranked(score_related(state, query.phrase), related_k)
        ]
    return {
        "query": raw_query,
        "normalized": query.phrase,
        "in_lexicon": query.in_lexicon,
        "results": entries,
        "related": related,
    }


def expertise_payload(engine: Engine, author: str, k: int) -> dict:
    from .ranking import resolve_author

    state = engine.state
    akey = resolve_author(state, author)
    record = state.corpus.authors[akey]
    results = rank_expertise(state, akey, k)
    entries = []
    for phrase, score in results:
        entries.append(
            {
                "id": phrase,
                "name": phrase,
                "score": score,
                "supporting": _supporting_docs_for_author(state, record, phrase),
            }
        )
    return {
        "query": author,
        "author": {"id": akey, "name": record.display_name, "documents": len(record.doc_ids)},
        "results": entries,
    }


def related_payload(engine: Engine, raw_query: str, k: int) -> dict:
    state = engine.state
    query = Query.parse(raw_query, state.lexicon)
    results = rank_related(state, query, k)
    postings = state.stats.phrase_postings.get(query.phrase, {})
    entries = []
    for phrase, score in results:
        weighted = []
        for doc_id in postings:
            rel = p_phrase_given_doc(phrase, doc_id, state.stats, state.lm)
            pivot = p_phrase_given_doc(query.phrase, doc_id, state.stats, state.lm)
            contribution = state.p_doc[doc_id] * pivot * rel
            if contribution > 0.0:
                weighted.append((contribution, doc_id, rel))
        weighted.sort(key=lambda t: (-t[0], t[1]))
        entries.append(
            {
                "id": phrase,
                "name": phrase,
                "score": score,
                "supporting": [
                    _doc_summary(state, d, rel) for _c, d, rel in weighted[:3]
                ],
            }
        )
    return {
        "query": raw_query,
        "normalized": query.phrase,
        "results": entries,
    }
