"""Incremental index updates with all-or-nothing snapshot semantics.

A batch is validated up front (any duplicate id — within the batch or
against the corpus — rejects the whole batch).  New documents are run
through the existing trie (the lexicon is never regrown here), statistics
are extended copy-on-write, citation weights are refreshed for documents
whose in-citation count changed, and the per-author smoothing aggregates
of touched authors are recomputed from scratch so the resulting state is
bit-identical to a rebuild over the concatenated corpus.  Readers keep the
old snapshot until the single reference swap at the end.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import Document, IngestReport, RejectedRecord, citation_weight, parse_record
from .engine import Engine, EngineState
from .errors import CorpusFormatError, DuplicateDocumentError

log = logging.getLogger(__name__)


@dataclass
class UpdateBatch:
    documents: list[Document] = field(default_factory=list)

    @classmethod
    def from_jsonl(cls, path: str | Path) -> tuple["UpdateBatch", IngestReport]:
        """Parse a batch file; malformed records are skipped and reported,
        duplicate ids are left for ``apply_update`` to reject atomically."""
        path = Path(path)
        if not path.exists():
            raise CorpusFormatError(f"batch file not found: {path}")
        report = IngestReport()
        docs: list[Document] = []
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                except json.JSONDecodeError as exc:
                    report.rejected.append(
                        RejectedRecord(lineno, None, f"bad JSON: {exc.msg}")
                    )
                    continue
                try:
                    docs.append(parse_record(rec))
                except CorpusFormatError as exc:
                    rid = rec.get("id") if isinstance(rec, dict) else None
                    report.rejected.append(
                        RejectedRecord(
                            lineno, rid if isinstance(rid, str) else None, str(exc)
                        )
                    )
        report.accepted = len(docs)
        return cls(documents=docs), report


@dataclass
class UpdateSummary:
    documents_added: int = 0
    authors_added: int = 0
    phrases_touched: int = 0
    citations_incremented: int = 0

    def to_json(self) -> dict:
        return {
            "documents_added": self.documents_added,
            "authors_added": self.authors_added,
            "phrases_touched": self.phrases_touched,
            "citations_incremented": self.citations_incremented,
        }


def apply_update(engine: Engine, batch: UpdateBatch) -> UpdateSummary:
    """Apply a batch atomically; returns a summary of what changed."""
    with engine._write_lock:
        old = engine.state
        summary = _validate(old, batch)
        if not batch.documents:
            return summary
        new_state = _extended_state(old, batch)
        engine._state = new_state
        log.info(
            "update applied: +%d docs, +%d authors",
            summary.documents_added,
            summary.authors_added,
        )
        _fill_summary(old, new_state, summary)
        return summary


def _validate(state: EngineState, batch: UpdateBatch) -> UpdateSummary:
    seen: set[str] = set()
    for doc in batch.documents:
        if doc.doc_id in state.corpus.documents:
            raise DuplicateDocumentError(
                f"document {doc.doc_id!r} already exists; batch rejected"
            )
        if doc.doc_id in seen:
            raise DuplicateDocumentError(
                f"document {doc.doc_id!r} appears twice in the batch; batch rejected"
            )
        seen.add(doc.doc_id)
    return UpdateSummary(documents_added=len(batch.documents))


def _extended_state(old: EngineState, batch: UpdateBatch) -> EngineState:
    corpus, changed_existing = old.corpus.extended(batch.documents)
    extractions = [
        old.trie.extract(doc.doc_id, doc.title, doc.abstract)
        for doc in batch.documents
    ]
    stats = old.stats.copy_extended(extractions)

    p_doc = dict(old.p_doc)
    for doc in batch.documents:
        p_doc[doc.doc_id] = citation_weight(corpus.citation_counts[doc.doc_id])
    for doc_id in changed_existing:
        p_doc[doc_id] = citation_weight(corpus.citation_counts[doc_id])

    # authors whose aggregate inputs moved: authors of new documents and of
    # documents whose citation weight changed; recomputed from scratch so
    # the floats match a ground-up rebuild exactly
    touched: set[str] = set()
    for doc in batch.documents:
        touched.update(corpus.author_keys_of(doc.doc_id))
    for doc_id in changed_existing:
        touched.update(corpus.author_keys_of(doc_id))
    author_smooth = dict(old.author_smooth)
    mu = old.lm.mu
    for akey in touched:
        author = corpus.authors[akey]
        total = 0.0
        for doc_id in author.doc_ids:
            dlen = stats.doc_phrase_len[doc_id]
            total += p_doc[doc_id] * (mu / (dlen + mu))
        author_smooth[akey] = total

    # every cached list is stale: |D|, c(q,D) and citation weights shifted
    return EngineState(
        corpus=corpus,
        lexicon=old.lexicon,
        trie=old.trie,
        stats=stats,
        lm=old.lm,
        oov=old.oov,
        p_doc=p_doc,
        author_smooth=author_smooth,
    )


def _fill_summary(old: EngineState, new: EngineState, summary: UpdateSummary) -> None:
    summary.authors_added = len(new.corpus.authors) - len(old.corpus.authors)
    summary.phrases_touched = sum(
        1
        for phrase, postings in new.stats.phrase_postings.items()
        if postings is not old.stats.phrase_postings.get(phrase)
    )
    summary.citations_incremented = sum(
        new.corpus.citation_counts[d] - old.corpus.citation_counts.get(d, 0)
        for d in new.corpus.citation_counts
    )
