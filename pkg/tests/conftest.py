"""Shared fixture builders.

Randomized corpora use digit-bearing tokens ("w0".."w24"), which the
stemmer passes through unchanged, so oracle and engine tokenizations
cannot drift.  Author pools use distinct last names so normalized keys
never collide by accident; surface variants of the same person appear
deliberately to exercise author merging.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

import pytest

from seerkit.candidates import build_lexicon
from seerkit.corpus import Corpus, parse_record
from seerkit.engine import Engine
from seerkit.langmodel import LmConfig
from seerkit.ranking import OovConfig

TOKENS = [f"w{i}" for i in range(25)]

AUTHOR_POOL = [
    "Ann Alpha",
    "Bob Beta",
    "Cam Gamma",
    "Dee Delta",
    "Eli Epsilon",
    "Fay Zeta",
    "Gus Eta",
    "Hal Theta",
    "Ivy Iota",
    "Jan Kappa",
]

# Alternate surfaces that normalize to the same key as the pool entry.
SURFACE_VARIANTS = {
    "Ann Alpha": "A. Alpha",
    "Bob Beta": "B. Beta",
    "Cam Gamma": "Cam R. Gamma",
    "Dee Delta": "D Delta",
}


def _make_text(rng: random.Random, n_words: int, lexicon_keys: list[str]) -> str:
    parts: list[str] = []
    count = 0
    while count < n_words:
        if lexicon_keys and rng.random() < 0.35:
            phrase = rng.choice(lexicon_keys)
            parts.append(phrase)
            count += len(phrase.split())
        else:
            parts.append(rng.choice(TOKENS))
            count += 1
        if rng.random() < 0.08:
            parts[-1] += rng.choice([",", ".", ";"])
    return " ".join(parts)


def make_fixture(seed: int, max_docs: int = 50, max_authors: int = 10, max_phrases: int = 40):
    """Randomized (records, lexicon_keys) within the stated size bounds."""
    rng = random.Random(seed)
    n_docs = rng.randint(8, max_docs)
    n_authors = rng.randint(3, max_authors)
    n_phrases = rng.randint(6, max_phrases)
    pool = AUTHOR_POOL[:n_authors]

    phrases: set[str] = set()
    while len(phrases) < n_phrases:
        length = rng.choice([1, 2, 2, 3])
        phrases.add(" ".join(rng.sample(TOKENS, length)))
    lexicon_keys = sorted(phrases)

    records = []
    for i in range(n_docs):
        doc_id = f"d{i:03d}"
        title = _make_text(rng, rng.randint(3, 8), lexicon_keys)
        abstract = (
            _make_text(rng, rng.randint(10, 40), lexicon_keys)
            if rng.random() > 0.1
            else ""
        )
        n_auth = rng.choice([0, 1, 1, 2, 2, 3])
        authors = []
        for name in rng.sample(pool, min(n_auth, len(pool))):
            if name in SURFACE_VARIANTS and rng.random() < 0.3:
                authors.append(SURFACE_VARIANTS[name])
            else:
                authors.append(name)
        citations = []
        if i and rng.random() < 0.8:
            earlier = [f"d{j:03d}" for j in range(i)]
            citations = rng.sample(earlier, min(rng.randint(1, 4), i))
        if rng.random() < 0.1:
            citations.append(f"missing{rng.randint(0, 5)}")
        records.append(
            {
                "id": doc_id,
                "title": title,
                "abstract": abstract,
                "authors": authors,
                "year": rng.randint(1990, 2015),
                "citations": citations,
            }
        )
    return records, lexicon_keys


def engine_from(records, lexicon_keys, mu: float = 2000.0, top_n: int = 1000) -> Engine:
    corpus = Corpus.from_documents([parse_record(r) for r in records])
    lexicon = build_lexicon(set(), set(lexicon_keys))
    return Engine.build(
        corpus, lexicon, lm=LmConfig(mu=mu), oov=OovConfig(top_n=top_n)
    )


def write_jsonl(path: Path, records) -> Path:
    path.write_text("".join(json.dumps(r) + "\n" for r in records), encoding="utf-8")
    return path


# -- hand-counted fixture (mu=10) ----------------------------------------------
#
# Extraction by hand: lexicon A="w1 w2", B="w3".
#   d1 title "w1 w2 w3" -> A,B ; abstract "w1 w2 w1 w2 w9" -> A,A + resid w9
#       counts A=3 B=1, |d1| = 4+1 = 5, words w1*3 w2*3 w3*1 w9*1 (8)
#   d2 title "w3 w3" -> B,B ; abstract "w4 w5" -> resid*2
#       counts B=2, |d2| = 2+2 = 4, words w3*2 w4 w5 (4)
#   d3 title "w9" -> resid ; abstract ""        |d3| = 1, words w9 (1)
# totals |D| = 10, c(A,D)=3, c(B,D)=3, W_D = 13
# citations: d2->d1, d3->d1, d3->d2  =>  in-cit d1=2 d2=1 d3=0

TOY_RECORDS = [
    {
        "id": "d1",
        "title": "w1 w2 w3",
        "abstract": "w1 w2 w1 w2 w9",
        "authors": ["Ann Alpha", "Bob Beta"],
        "year": 2001,
        "citations": [],
    },
    {
        "id": "d2",
        "title": "w3 w3",
        "abstract": "w4 w5",
        "authors": ["Bob Beta"],
        "year": 2002,
        "citations": ["d1"],
    },
    {
        "id": "d3",
        "title": "w9",
        "abstract": "",
        "authors": ["Cam Gamma"],
        "year": 2003,
        "citations": ["d1", "d2"],
    },
]
TOY_LEXICON = ["w1 w2", "w3"]
TOY_MU = 10.0


@pytest.fixture()
def toy_engine() -> Engine:
    return engine_from(TOY_RECORDS, TOY_LEXICON, mu=TOY_MU)


# -- GS* failure fixture ---------------------------------------------------------
#
# Alice: one well-cited on-topic paper (d1, 2 in-citations).
# Bob: an off-topic blockbuster (d2, 3 in-citations) plus one weakly
# on-topic uncited note (d3).  Topic-blind citation totals put Bob first;
# topic-aware scoring puts Alice first (mu=50 keeps the document term
# meaningful on documents this small).

GS_RECORDS = [
    {
        "id": "d1",
        "title": "Stream mining systems",
        "abstract": "Stream mining for sensor data. Stream mining engines run fast.",
        "authors": ["Alice On"],
        "year": 2005,
        "citations": ["d2"],
    },
    {
        "id": "d2",
        "title": "Database indexing structures",
        "abstract": "B-tree indexing for relational databases and workloads.",
        "authors": ["Bob Famous"],
        "year": 2000,
        "citations": [],
    },
    {
        "id": "d3",
        "title": "A note on stream mining",
        "abstract": "Remarks about deployments, hardware, benchmarks and one stream mining aside.",
        "authors": ["Bob Famous"],
        "year": 2007,
        "citations": ["d1", "d2"],
    },
    {
        "id": "d4",
        "title": "Survey of computing",
        "abstract": "General survey of computing practice across fields.",
        "authors": ["Carol Filler"],
        "year": 2010,
        "citations": ["d1", "d2"],
    },
]
GS_LEXICON = ["stream mining"]
GS_MU = 50.0


@pytest.fixture()
def gs_engine() -> Engine:
    return engine_from(GS_RECORDS, GS_LEXICON, mu=GS_MU)


# -- published "data mining" top-10 lists from three reference systems ---------
#
# Under default name matching, "Mohammed J. Zaki" and "Mohammed Javeed Zaki"
# stay distinct people, which the expected consensus figures depend on.

DATA_MINING_TOP10 = {
    "csseer": [
        "Jiawei Han",
        "Salvatore J. Stolfo",
        "Mohammed J. Zaki",
        "Osmar R. Zaiane",
        "Maciej Zakrzewicz",
        "Krzysztof Koperski",
        "Marek Wojciechowski",
        "Christos Faloutsos",
        "Wei Wang",
        "Srinivasan Parthasarathy",
    ],
    "arnetminer": [
        "Jiawei Han",
        "Philip S. Yu",
        "Mohammed J. Zaki",
        "Christos Faloutsos",
        "Jian Pei",
        "Heikki Mannila",
        "Rakesh Agrawal",
        "Charu C. Aggarwal",
        "Raymond Ng",
        "Usama M. Fayyad",
    ],
    "mas": [
        "Jiawei Han",
        "Philip S. Yu",
        "Tzung-Pei Hong",
        "Yong Shi",
        "Shusaku Tsumoto",
        "Alex Alves Freitas",
        "Andrew Kusiak",
        "Mohammed Javeed Zaki",
        "Vipin Kumar",
        "Xin-Dong Wu",
    ],
}

# (csseer, arnetminer, mas) consensus counts keyed by n
EXPECTED_CONSENSUS = {3: (2, 3, 2), 5: (2, 3, 2), 10: (3, 4, 2)}


# -- acceptance summary ----------------------------------------------------------
#
# test_acceptance.py records one entry per criterion; the terminal summary
# prints them as stable one-liners greppable from CI logs.

ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for name, status in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(f"ACCEPTANCE: {name}: {status}")
