"""Keyphrase candidate compilation.

Two sources feed the candidate lexicon: encyclopedia category traversal
(page titles plus the anchor texts of links in page introductions) and
frequent n-grams mined from corpus titles.  Both go through the same
normalization (``normalize_phrase``) so lexicon entries and document
tokens live in one space.

Normalization rules:
  * lowercase, diacritics folded to ASCII;
  * every non-alphanumeric run becomes a single token separator;
  * each token is stemmed to a Porter fixpoint (idempotent by construction).

Document text additionally carries *segment boundaries*: punctuation other
than intra-word connectors (hyphen, apostrophe, slash) splits the token
stream, and later phrase matching / n-gram mining never cross a boundary.
"""

from __future__ import annotations

import json
import logging
import re
import unicodedata
from collections import Counter, deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .errors import LexiconFormatError
from .porter import stem_fixpoint

log = logging.getLogger(__name__)

MAX_PHRASE_TOKENS = 8

PROVENANCE_WIKI = "wiki"
PROVENANCE_NGRAM = "ngram"
PROVENANCE_BOTH = "both"

# letters NFKD alone cannot reduce, plus typographic punctuation variants
_CHAR_FOLD = str.maketrans(
    {
        "ø": "o", "Ø": "O", "æ": "ae", "Æ": "Ae", "œ": "oe", "Œ": "Oe",
        "ß": "ss", "ð": "d", "Ð": "D", "þ": "th", "Þ": "Th",
        "ł": "l", "Ł": "L", "đ": "d", "Đ": "D", "ı": "i",
        "’": "'", "‘": "'", "“": '"', "”": '"',
        "–": "-", "—": "-", "−": "-",
    }
)

_NON_TOKEN = re.compile(r"[^a-z0-9]+")
_BOUNDARY = re.compile(r"[^a-z0-9\-'/\s]+")
_CONNECTOR = re.compile(r"[-'/]+")


def fold_ascii(text: str) -> str:
    """Lowercase and reduce to plain ASCII, dropping what will not fold."""
    text = text.translate(_CHAR_FOLD)
    text = unicodedata.normalize("NFKD", text)
    return text.encode("ascii", "ignore").decode("ascii").lower()


def normalize_phrase(raw: str) -> tuple[str, ...]:
    """Normalize a candidate phrase to its stemmed token sequence.

    An empty tuple signals a non-phrase (input was empty or all
    punctuation).
    """
    cleaned = _NON_TOKEN.sub(" ", fold_ascii(raw))
    return tuple(stem_fixpoint(tok) for tok in cleaned.split())


def phrase_key(raw: str) -> str:
    """Space-joined form of ``normalize_phrase``, the canonical lexicon key."""
    return " ".join(normalize_phrase(raw))


def segment_tokens(raw: str) -> list[list[str]]:
    """Split document text into boundary-delimited stemmed token segments."""
    folded = fold_ascii(raw)
    segments = []
    for chunk in _BOUNDARY.split(folded):
        tokens = [stem_fixpoint(t) for t in _CONNECTOR.sub(" ", chunk).split()]
        if tokens:
            segments.append(tokens)
    return segments


# -- encyclopedia harvest ---------------------------------------------------


@dataclass(frozen=True)
class WikiPage:
    title: str
    categories: tuple[str, ...]
    intro_link_texts: tuple[str, ...]


class CategoryGraph:
    """Directed parent -> child category edges with BFS reachability."""

    def __init__(self) -> None:
        self._children: dict[str, list[str]] = {}

    def add_edge(self, parent: str, child: str) -> None:
        self._children.setdefault(parent, []).append(child)

    def __contains__(self, category: str) -> bool:
        return category in self._children or any(
            category in kids for kids in self._children.values()
        )

    def depths_from(self, root: str, max_depth: int) -> dict[str, int]:
        """Shortest hop count from ``root`` for every category within reach.

        Cycle-safe: each category is visited once, at its minimal depth.
        """
        depths = {root: 0}
        queue = deque([root])
        while queue:
            cat = queue.popleft()
            d = depths[cat]
            if d >= max_depth:
                continue
            for child in self._children.get(cat, ()):
                if child not in depths:
                    depths[child] = d + 1
                    queue.append(child)
        return depths


@dataclass
class HarvestResult:
    phrases: set[str]
    pages_in_scope: int = 0
    missing_roots: list[str] = field(default_factory=list)
    dropped_overlong: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def default_roots(primary: str, auxiliary: Sequence[str] = ()) -> list[tuple[str, int]]:
    """Primary discipline explored three levels deep, auxiliaries two."""
    return [(primary, 3)] + [(aux, 2) for aux in auxiliary]


def load_wiki_dump(path: str | Path) -> list[WikiPage]:
    """JSON-lines pages: {"title", "categories", "intro_link_texts"}."""
    pages = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiconFormatError(f"wiki dump line {lineno}: {exc}") from exc
            pages.append(
                WikiPage(
                    title=str(rec.get("title", "")),
                    categories=tuple(rec.get("categories", ())),
                    intro_link_texts=tuple(rec.get("intro_link_texts", ())),
                )
            )
    return pages


def load_category_edges(path: str | Path) -> CategoryGraph:
    """JSON-lines edges: {"parent", "child"}."""
    graph = CategoryGraph()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise LexiconFormatError(f"edge file line {lineno}: {exc}") from exc
            graph.add_edge(str(rec["parent"]), str(rec["child"]))
    return graph


def harvest_wiki(
    pages: Iterable[WikiPage],
    graph: CategoryGraph,
    roots: Sequence[tuple[str, int]],
) -> HarvestResult:
    """Collect candidate phrases from pages reachable under the given roots.

    A page is in scope when any of its categories sits within ``max_depth``
    hops of some root.  In-scope pages contribute their title and the
    anchor texts of their introduction links; anchors of out-of-scope pages
    are ignored.  Normalized phrases longer than ``MAX_PHRASE_TOKENS`` are
    dropped and reported.
    """
    result = HarvestResult(phrases=set())
    pages = list(pages)
    if not pages:
        result.warnings.append("empty page dump")
    reachable: dict[str, int] = {}
    for root, max_depth in roots:
        if root not in graph and not any(root in p.categories for p in pages):
            result.missing_roots.append(root)
            continue
        for cat, depth in graph.depths_from(root, max_depth).items():
            if cat not in reachable or depth < reachable[cat]:
                reachable[cat] = depth

    def admit(raw: str) -> None:
        tokens = normalize_phrase(raw)
        if not tokens:
            return
        if len(tokens) > MAX_PHRASE_TOKENS:
            result.dropped_overlong.append(raw)
            return
        result.phrases.add(" ".join(tokens))

    for page in pages:
        if not any(cat in reachable for cat in page.categories):
            continue
        result.pages_in_scope += 1
        admit(page.title)
        for anchor in page.intro_link_texts:
            admit(anchor)
    if result.missing_roots:
        log.warning("harvest: roots not found: %s", ", ".join(result.missing_roots))
    return result


# -- title n-grams ----------------------------------------------------------


def mine_title_ngrams(
    corpus,
    min_count: int = 3,
    orders: Sequence[int] = (2, 3, 4),
) -> set[str]:
    """Frequent title n-grams (total occurrences across all titles).

    ``corpus`` may be a corpus object (anything with ``.documents`` whose
    values expose ``.title``) or a plain iterable of title strings.
    N-grams never cross a segment boundary.
    """
    documents = getattr(corpus, "documents", None)
    if documents is not None:
        titles: Iterator[str] = (doc.title for doc in documents.values())
    else:
        titles = iter(corpus)
    counts: Counter[str] = Counter()
    for title in titles:
        for seg in segment_tokens(title):
            for n in orders:
                for i in range(len(seg) - n + 1):
                    counts[" ".join(seg[i : i + n])] += 1
    return {phrase for phrase, c in counts.items() if c >= min_count}


# -- lexicon ----------------------------------------------------------------


@dataclass(frozen=True)
class CandidateLexicon:
    """Deduplicated candidate phrase set with provenance.

    Phrases are stored sorted, as space-joined stemmed tokens; ``index_of``
    gives each phrase a stable integer id (its sorted position).
    """

    phrases: tuple[str, ...]
    provenance: dict[str, str]
    _index: dict[str, int] = field(repr=False, default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "_index", {p: i for i, p in enumerate(self.phrases)}
        )

    def __len__(self) -> int:
        return len(self.phrases)

    def __contains__(self, phrase: str) -> bool:
        return phrase in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.phrases)

    def index_of(self, phrase: str) -> int:
        return self._index[phrase]

    def token_seqs(self) -> list[tuple[str, ...]]:
        return [tuple(p.split(" ")) for p in self.phrases]

    def save(self, path: str | Path) -> None:
        """Sorted text file plus a JSON provenance sidecar."""
        path = Path(path)
        path.write_text(
            "".join(f"{p}\n" for p in self.phrases), encoding="utf-8"
        )
        sidecar = path.with_suffix(path.suffix + ".provenance.json")
        sidecar.write_text(
            json.dumps(self.provenance, indent=0, sort_keys=True),
            encoding="utf-8",
        )

    @classmethod
    def load(cls, path: str | Path) -> "CandidateLexicon":
        path = Path(path)
        phrases = [
            line.strip()
            for line in path.read_text(encoding="utf-8").splitlines()
            if line.strip()
        ]
        for p in phrases:
            if phrase_key(p) != p:
                raise LexiconFormatError(
                    f"lexicon entry not in normalized form: {p!r}"
                )
        sidecar = path.with_suffix(path.suffix + ".provenance.json")
        if sidecar.exists():
            provenance = json.loads(sidecar.read_text(encoding="utf-8"))
        else:
            provenance = {p: PROVENANCE_NGRAM for p in phrases}
        return build_lexicon(
            {p for p in phrases if provenance.get(p) in (PROVENANCE_WIKI, PROVENANCE_BOTH)},
            {p for p in phrases if provenance.get(p) in (PROVENANCE_NGRAM, PROVENANCE_BOTH, None)},
        )


def build_lexicon(wiki_phrases: set[str], ngram_phrases: set[str]) -> CandidateLexicon:
    """Union the two candidate sources, tagging each phrase's origin.

    Inputs may be surface forms; every entry is normalized here, and
    entries whose normalization collides merge into one lexicon phrase.
    """
    provenance: dict[str, str] = {}
    for p in wiki_phrases:
        key = phrase_key(p)
        if key:
            provenance[key] = PROVENANCE_WIKI
    for p in ngram_phrases:
        key = phrase_key(p)
        if key:
            provenance[key] = PROVENANCE_BOTH if key in provenance else PROVENANCE_NGRAM
    phrases = tuple(sorted(provenance))
    return CandidateLexicon(phrases=phrases, provenance=provenance)
