"""seerkit: expert recommendation over a scholarly corpus.

Pipeline: compile a keyphrase candidate lexicon (encyclopedia categories +
frequent title n-grams), extract keyphrases per document with a
longest-match trie, then rank authors, expertise phrases, and related
phrases with a citation-weighted, Dirichlet-smoothed phrase language
model.  Ships with an incremental updater, an evaluation harness, a CLI,
and a JSON HTTP service.
"""

from .candidates import (
    CandidateLexicon,
    build_lexicon,
    harvest_wiki,
    mine_title_ngrams,
    normalize_phrase,
)
from .corpus import Corpus, Document, citation_weight, ingest_corpus, normalize_name
from .engine import Engine
from .errors import SeerkitError
from .evaluation import SystemRun, consensus_at_n, precision_at_k
from .langmodel import LmConfig, p_phrase_given_doc, p_words_given_doc
from .matcher import KERNEL_BACKEND, PhraseTrie, extract_keyphrases
from .ranking import OovConfig, Query, gs_star_rank, rank_experts, rank_expertise, rank_related
from .update import UpdateBatch, apply_update

__version__ = "0.1.0"

__all__ = [
    "CandidateLexicon",
    "Corpus",
    "Document",
    "Engine",
    "KERNEL_BACKEND",
    "LmConfig",
    "OovConfig",
    "PhraseTrie",
    "Query",
    "SeerkitError",
    "SystemRun",
    "UpdateBatch",
    "apply_update",
    "build_lexicon",
    "citation_weight",
    "consensus_at_n",
    "extract_keyphrases",
    "gs_star_rank",
    "harvest_wiki",
    "ingest_corpus",
    "mine_title_ngrams",
    "normalize_name",
    "normalize_phrase",
    "p_phrase_given_doc",
    "p_words_given_doc",
    "precision_at_k",
    "rank_experts",
    "rank_expertise",
    "rank_related",
    "__version__",
]
