"""Throughput comparison of the two phrase-matching kernels.

Generates a synthetic corpus with a planted phrase lexicon, runs the same
extraction workload through the compiled kernel and the pure-Python
fallback, verifies they produce identical output, and prints a JSON
summary to stdout.

    python benchmarks/bench_matcher.py --docs 2000 --phrases 500
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from seerkit import _trie_py
from seerkit.candidates import build_lexicon
from seerkit.matcher import PhraseTrie

try:
    from seerkit import _trie_cy
except ImportError:
    _trie_cy = None

WORDS = [f"tok{i}" for i in range(400)]


def synth_corpus(rng: random.Random, n_docs: int, keys: list[str]):
    docs = []
    for i in range(n_docs):
        parts: list[str] = []
        for _ in range(rng.randint(40, 160)):
            if rng.random() < 0.3:
                parts.append(rng.choice(keys))
            else:
                parts.append(rng.choice(WORDS))
        text = " ".join(parts)
        split = rng.randint(3, 12)
        docs.append((f"d{i}", " ".join(parts[:split]), text))
    return docs


def synth_lexicon(rng: random.Random, n_phrases: int) -> list[str]:
    phrases: set[str] = set()
    while len(phrases) < n_phrases:
        length = rng.choice([1, 2, 2, 3, 3, 4])
        phrases.add(" ".join(rng.sample(WORDS, length)))
    return sorted(phrases)


def run_workload(trie: PhraseTrie, docs, repeats: int) -> tuple[float, list]:
    timings = []
    results = None
    for _ in range(repeats):
        start = time.perf_counter()
        results = [trie.extract(doc_id, title, abstract) for doc_id, title, abstract in docs]
        timings.append(time.perf_counter() - start)
    return min(timings), results


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--docs", type=int, default=2000)
    parser.add_argument("--phrases", type=int, default=500)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    keys = synth_lexicon(rng, args.phrases)
    lexicon = build_lexicon(set(), set(keys))
    docs = synth_corpus(rng, args.docs, keys)
    token_total = sum(len(t.split()) for _, _, t in docs)

    report = {
        "documents": args.docs,
        "lexicon_phrases": len(lexicon),
        "tokens": token_total,
        "repeats": args.repeats,
        "kernels": {},
    }

    baseline, py_results = run_workload(
        PhraseTrie(lexicon, kernel_cls=_trie_py.MatchKernel), docs, args.repeats
    )
    report["kernels"]["python"] = {
        "seconds": round(baseline, 4),
        "docs_per_second": round(args.docs / baseline, 1),
        "tokens_per_second": round(token_total / baseline, 1),
    }

    if _trie_cy is not None:
        compiled, cy_results = run_workload(
            PhraseTrie(lexicon, kernel_cls=_trie_cy.MatchKernel), docs, args.repeats
        )
        mismatches = sum(
            1
            for a, b in zip(py_results, cy_results)
            if a.phrase_counts != b.phrase_counts
            or a.residual_words != b.residual_words
        )
        if mismatches:
            print(f"kernel outputs diverge on {mismatches} documents", file=sys.stderr)
            return 1
        report["kernels"]["cython"] = {
            "seconds": round(compiled, 4),
            "docs_per_second": round(args.docs / compiled, 1),
            "tokens_per_second": round(token_total / compiled, 1),
        }
        report["speedup"] = round(baseline / compiled, 2)
        report["outputs_identical"] = True
    else:
        report["speedup"] = None
        report["note"] = "compiled kernel unavailable; python fallback only"

    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
