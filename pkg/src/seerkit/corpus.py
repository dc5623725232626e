"""Corpus ingestion: documents, authors, and the in-citation table.

Input is JSON-lines, one record per line:

    {"id": str, "title": str, "abstract": str,
     "authors": [str, ...], "year": int|null, "citations": [str, ...]}

Malformed records are skipped and reported; a record whose id was already
seen is rejected (first occurrence wins).  Citations are resolved against
the full corpus after loading, so forward references count; targets that
never appear stay recorded on the citing document but contribute nothing.
"""

from __future__ import annotations

import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .candidates import fold_ascii
from .errors import CorpusFormatError, UnknownDocumentError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Document:
    doc_id: str
    title: str = ""
    abstract: str = ""
    authors: tuple[str, ...] = ()
    year: int | None = None
    cited_doc_ids: tuple[str, ...] = ()

    def to_record(self) -> dict:
        return {
            "id": self.doc_id,
            "title": self.title,
            "abstract": self.abstract,
            "authors": list(self.authors),
            "year": self.year,
            "citations": list(self.cited_doc_ids),
        }


@dataclass
class Author:
    author_id: str
    display_name: str
    doc_ids: list[str] = field(default_factory=list)
    surface_counts: dict[str, int] = field(default_factory=dict)

    def _copy(self) -> "Author":
        return Author(
            author_id=self.author_id,
            display_name=self.display_name,
            doc_ids=list(self.doc_ids),
            surface_counts=dict(self.surface_counts),
        )


@dataclass(frozen=True)
class RejectedRecord:
    line: int
    doc_id: str | None
    reason: str

    def to_json(self) -> dict:
        return {"line": self.line, "id": self.doc_id, "reason": self.reason}


@dataclass
class IngestReport:
    accepted: int = 0
    rejected: list[RejectedRecord] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "accepted": self.accepted,
            "rejected": [r.to_json() for r in self.rejected],
        }


def normalize_name(raw: str) -> str:
    """Collapse an author name to "<first-initial> <lastname>", lowercase.

    Punctuation is deleted (hyphenated surnames stay one token), middle
    tokens are dropped, and a single-token name is returned whole.
    """
    folded = fold_ascii(raw)
    tokens = ["".join(ch for ch in tok if ch.isalnum()) for tok in folded.split()]
    tokens = [t for t in tokens if t]
    if not tokens:
        raise ValueError(f"author name has no usable characters: {raw!r}")
    if len(tokens) == 1:
        return tokens[0]
    return f"{tokens[0][0]} {tokens[-1]}"


def citation_weight(count: float) -> float:
    """ln(1 + citations); zero citations carry zero weight."""
    if count < 0:
        raise ValueError("citation count cannot be negative")
    return math.log1p(count)


class Corpus:
    """Loaded documents plus derived author and citation tables.

    Treated as immutable after construction; ``extended`` returns a new
    corpus sharing untouched author objects (copy-on-write), which is what
    lets incremental updates swap snapshots atomically.
    """

    def __init__(
        self,
        documents: dict[str, Document],
        authors: dict[str, Author],
        citation_counts: dict[str, int],
        dangling_citations: dict[str, int],
    ):
        self.documents = documents
        self.authors = authors
        self.citation_counts = citation_counts
        self.dangling_citations = dangling_citations

    def __len__(self) -> int:
        return len(self.documents)

    def citation_weight(self, doc_id: str) -> float:
        try:
            return citation_weight(self.citation_counts[doc_id])
        except KeyError:
            raise UnknownDocumentError(f"unknown document: {doc_id!r}") from None

    def author_keys_of(self, doc_id: str) -> tuple[str, ...]:
        doc = self.documents[doc_id]
        seen: list[str] = []
        for raw in doc.authors:
            try:
                key = normalize_name(raw)
            except ValueError:
                continue
            if key not in seen:
                seen.append(key)
        return tuple(seen)

    @classmethod
    def from_documents(cls, docs: Iterable[Document]) -> "Corpus":
        documents: dict[str, Document] = {}
        for doc in docs:
            if doc.doc_id in documents:
                raise CorpusFormatError(f"duplicate doc id {doc.doc_id!r}")
            documents[doc.doc_id] = doc
        corpus = cls(documents, {}, {d: 0 for d in documents}, {})
        corpus._index_authors(documents.values())
        corpus._count_citations(documents.values())
        return corpus

    def _index_authors(self, docs: Iterable[Document]) -> None:
        for doc in docs:
            for raw in doc.authors:
                try:
                    key = normalize_name(raw)
                except ValueError:
                    log.debug("skipping unusable author name %r on %s", raw, doc.doc_id)
                    continue
                author = self.authors.get(key)
                if author is None:
                    author = Author(author_id=key, display_name=raw.strip())
                    self.authors[key] = author
                author.surface_counts[raw.strip()] = (
                    author.surface_counts.get(raw.strip(), 0) + 1
                )
                if doc.doc_id not in author.doc_ids:
                    author.doc_ids.append(doc.doc_id)
        for author in self.authors.values():
            author.display_name = _preferred_surface(author.surface_counts)

    def _count_citations(self, docs: Iterable[Document]) -> None:
        for doc in docs:
            for target in sorted(set(doc.cited_doc_ids)):
                if target in self.documents:
                    self.citation_counts[target] += 1
                else:
                    self.dangling_citations[target] = (
                        self.dangling_citations.get(target, 0) + 1
                    )

    def extended(self, new_docs: Sequence[Document]) -> tuple["Corpus", set[str]]:
        """New corpus with ``new_docs`` appended; also returns the ids of
        pre-existing documents whose citation count changed."""
        documents = dict(self.documents)
        citation_counts = dict(self.citation_counts)
        dangling = dict(self.dangling_citations)
        authors = dict(self.authors)
        changed: set[str] = set()

        for doc in new_docs:
            documents[doc.doc_id] = doc
            # citations that were dangling until this document arrived
            citation_counts[doc.doc_id] = dangling.pop(doc.doc_id, 0)
        for doc in new_docs:
            for target in sorted(set(doc.cited_doc_ids)):
                if target in documents:
                    citation_counts[target] += 1
                    if target in self.documents:
                        changed.add(target)
                else:
                    dangling[target] = dangling.get(target, 0) + 1
            for raw in doc.authors:
                try:
                    key = normalize_name(raw)
                except ValueError:
                    continue
                author = authors.get(key)
                if author is None:
                    author = Author(author_id=key, display_name=raw.strip())
                elif author is self.authors.get(key):
                    # copy-on-write: never mutate the previous snapshot
                    author = author._copy()
                authors[key] = author
                author.surface_counts[raw.strip()] = (
                    author.surface_counts.get(raw.strip(), 0) + 1
                )
                if doc.doc_id not in author.doc_ids:
                    author.doc_ids.append(doc.doc_id)
        for key, author in authors.items():
            if author is not self.authors.get(key):
                author.display_name = _preferred_surface(author.surface_counts)
        return Corpus(documents, authors, citation_counts, dangling), changed


def _preferred_surface(surface_counts: dict[str, int]) -> str:
    # most frequent raw spelling; first-seen wins ties (dict order)
    best = max(surface_counts.values())
    for surface, count in surface_counts.items():
        if count == best:
            return surface
    raise AssertionError("unreachable")


def parse_record(rec: object) -> Document:
    """Validate one decoded JSON record; raises CorpusFormatError with a reason."""
    if not isinstance(rec, dict):
        raise CorpusFormatError("record is not a JSON object")
    doc_id = rec.get("id")
    if not isinstance(doc_id, str) or not doc_id.strip():
        raise CorpusFormatError("missing or empty id")
    title = rec.get("title", "")
    abstract = rec.get("abstract", "")
    if not isinstance(title, str) or not isinstance(abstract, str):
        raise CorpusFormatError("title/abstract must be strings")
    authors = rec.get("authors", [])
    if not isinstance(authors, list) or any(not isinstance(a, str) for a in authors):
        raise CorpusFormatError("authors must be a list of strings")
    year = rec.get("year")
    if year is not None and not isinstance(year, int):
        raise CorpusFormatError("year must be an integer or null")
    citations = rec.get("citations", [])
    if not isinstance(citations, list) or any(
        not isinstance(c, str) for c in citations
    ):
        raise CorpusFormatError("citations must be a list of strings")
    return Document(
        doc_id=doc_id,
        title=title,
        abstract=abstract,
        authors=tuple(authors),
        year=year,
        cited_doc_ids=tuple(citations),
    )


def ingest_corpus(path: str | Path, fmt: str = "jsonl") -> tuple[Corpus, IngestReport]:
    """Load a corpus file; returns the corpus and a skip/reject report."""
    if fmt != "jsonl":
        raise CorpusFormatError(f"unsupported corpus format {fmt!r}")
    report = IngestReport()
    documents: dict[str, Document] = {}
    path = Path(path)
    if not path.exists():
        raise CorpusFormatError(f"corpus file not found: {path}")
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                report.rejected.append(RejectedRecord(lineno, None, f"bad JSON: {exc.msg}"))
                continue
            try:
                doc = parse_record(rec)
            except CorpusFormatError as exc:
                rid = rec.get("id") if isinstance(rec, dict) else None
                report.rejected.append(
                    RejectedRecord(lineno, rid if isinstance(rid, str) else None, str(exc))
                )
                continue
            if doc.doc_id in documents:
                report.rejected.append(
                    RejectedRecord(lineno, doc.doc_id, "duplicate id")
                )
                continue
            documents[doc.doc_id] = doc
    report.accepted = len(documents)
    corpus = Corpus.from_documents(documents.values())
    if report.rejected:
        log.warning("ingest: %d records rejected", len(report.rejected))
    return corpus, report


def word_count(text: str) -> int:
    """Raw whitespace word count, used by the length filters."""
    return len(text.split())


__all__ = [
    "Author",
    "Corpus",
    "Document",
    "IngestReport",
    "RejectedRecord",
    "citation_weight",
    "ingest_corpus",
    "normalize_name",
    "parse_record",
    "word_count",
]
