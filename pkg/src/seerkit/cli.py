"""Command-line front door.

Stdout carries exactly one JSON document per invocation; every diagnostic
goes to stderr.  Exit codes: 0 success, 1 I/O or configuration problem,
2 domain error (unknown author, out-of-lexicon related query, empty model).
``--engine`` falls back to the SEERKIT_ENGINE environment variable.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from .candidates import (
    CandidateLexicon,
    build_lexicon,
    harvest_wiki,
    load_category_edges,
    load_wiki_dump,
    mine_title_ngrams,
)
from .corpus import ingest_corpus
from .engine import Engine, experts_payload, expertise_payload, related_payload
from .errors import ConfigError, DomainError
from .evaluation import SystemRun, aggressive_name_key, evaluation_report, load_truth
from .langmodel import LmConfig
from .ranking import OovConfig
from .update import UpdateBatch, apply_update

log = logging.getLogger("seerkit")

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DOMAIN = 2


def _emit(payload: dict | list) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _positive_int(value: str) -> int:
    k = int(value)
    if k < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return k


def _parse_roots(values: list[str]) -> list[tuple[str, int]]:
    """--roots NAME[:DEPTH]; the first root defaults to depth 3, later
    (auxiliary) roots to depth 2."""
    roots: list[tuple[str, int]] = []
    for idx, spec in enumerate(values):
        name, sep, depth = spec.rpartition(":")
        if sep and depth.isdigit():
            roots.append((name, int(depth)))
        else:
            roots.append((spec, 3 if idx == 0 else 2))
    return roots


def _engine_path(args) -> Path:
    engine = args.engine or os.environ.get("SEERKIT_ENGINE")
    if not engine:
        raise ConfigError("no engine directory: pass --engine or set SEERKIT_ENGINE")
    return Path(engine)


def _load_engine(args) -> Engine:
    return Engine.load(_engine_path(args))


# -- subcommands ---------------------------------------------------------------


def cmd_build(args) -> int:
    out = Path(args.out)
    if out.exists():
        if not args.force:
            raise ConfigError(
                f"output directory {out} exists; pass --force to rebuild over it"
            )
    corpus, report = ingest_corpus(args.corpus)
    wiki_phrases: set[str] = set()
    harvest_info: dict = {}
    if args.lexicon:
        lexicon = CandidateLexicon.load(args.lexicon)
    else:
        if args.wiki_dump:
            if not args.roots:
                raise ConfigError("--wiki-dump requires at least one --roots entry")
            pages = load_wiki_dump(args.wiki_dump)
            if args.category_edges:
                graph = load_category_edges(args.category_edges)
            else:
                from .candidates import CategoryGraph

                graph = CategoryGraph()
            harvest = harvest_wiki(pages, graph, _parse_roots(args.roots))
            wiki_phrases = harvest.phrases
            harvest_info = {
                "pages_in_scope": harvest.pages_in_scope,
                "missing_roots": harvest.missing_roots,
                "dropped_overlong": len(harvest.dropped_overlong),
                "warnings": harvest.warnings,
            }
        ngram_phrases = mine_title_ngrams(corpus, min_count=args.min_ngram_count)
        lexicon = build_lexicon(wiki_phrases, ngram_phrases)
    engine = Engine.build(
        corpus,
        lexicon,
        lm=LmConfig(mu=args.mu),
        oov=OovConfig(top_n=args.oov_top_n),
    )
    if len(corpus) == 0:
        log.warning("corpus is empty; the engine will reject queries")
    engine.save(out)
    state = engine.state
    _emit(
        {
            "engine_dir": str(out),
            "documents": len(corpus),
            "rejected": report.to_json()["rejected"],
            "authors": len(corpus.authors),
            "lexicon": {
                "total": len(lexicon),
                "wiki": sum(1 for v in lexicon.provenance.values() if v == "wiki"),
                "ngram": sum(1 for v in lexicon.provenance.values() if v == "ngram"),
                "both": sum(1 for v in lexicon.provenance.values() if v == "both"),
                **harvest_info,
            },
            "phrase_tokens_total": state.stats.phrase_length_total,
            "distinct_phrases_matched": len(state.stats.phrase_cf),
            "matcher_backend": state.trie.backend,
        }
    )
    return EXIT_OK


def cmd_experts(args) -> int:
    engine = _load_engine(args)
    _emit(experts_payload(engine, args.query, args.k))
    return EXIT_OK


def cmd_expertise(args) -> int:
    engine = _load_engine(args)
    _emit(expertise_payload(engine, args.author, args.k))
    return EXIT_OK


def cmd_related(args) -> int:
    engine = _load_engine(args)
    _emit(related_payload(engine, args.query, args.k))
    return EXIT_OK


def cmd_add(args) -> int:
    path = _engine_path(args)
    engine = Engine.load(path)
    batch, report = UpdateBatch.from_jsonl(args.corpus)
    summary = apply_update(engine, batch)
    engine.save(path)
    payload = summary.to_json()
    payload["skipped_records"] = report.to_json()["rejected"]
    _emit(payload)
    return EXIT_OK


def cmd_eval(args) -> int:
    runs = [SystemRun.load(p) for p in args.runs]
    truth = load_truth(args.truth) if args.truth else None
    if len(runs) < 2 and truth is None:
        raise DomainError("nothing to evaluate: need two runs or a truth file")
    report = evaluation_report(
        runs,
        truth=truth,
        ns=args.n,
        ks=args.k,
        name_key=aggressive_name_key if args.normalize else None,
    )
    _emit(report)
    return EXIT_OK


def cmd_stats(args) -> int:
    engine = _load_engine(args)
    stats = engine.keyphrase_stats(
        min_title_words=args.min_title_words,
        min_abstract_words=args.min_abstract_words,
    )
    _emit(stats.to_json())
    return EXIT_OK


def cmd_dump_keyphrases(args) -> int:
    engine = _load_engine(args)
    state = engine.state
    records = []
    for doc_id in state.corpus.documents:
        records.append(
            {
                "id": doc_id,
                "phrases": [
                    {"p": p, "c": c}
                    for p, c in sorted(state.stats.doc_phrases[doc_id].items())
                ],
                "len": state.stats.doc_phrase_len[doc_id],
            }
        )
    _emit(records)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import ServiceConfig, create_app

    config = ServiceConfig.from_file(args.config) if args.config else ServiceConfig()
    if args.engine:
        config.engine_dir = str(_engine_path(args))
    elif not config.engine_dir:
        config.engine_dir = str(_engine_path(args))
    if args.port is not None:
        config.port = args.port
    if args.host:
        config.host = args.host
    if args.cors_origin:
        config.cors_origin = args.cors_origin
    app = create_app(engine_dir=config.engine_dir, cors_origin=config.cors_origin)
    print(f"serving engine {config.engine_dir} on {config.host}:{config.port}", file=sys.stderr)
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")
    return EXIT_OK


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seerkit",
        description="Expert recommendation over a scholarly corpus.",
    )
    parser.add_argument("--verbose", action="store_true", help="chatty stderr logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an engine directory from a corpus")
    p.add_argument("--corpus", required=True, help="JSON-lines corpus file")
    p.add_argument("--wiki-dump", help="JSON-lines encyclopedia page dump")
    p.add_argument("--category-edges", help="JSON-lines parent/child category edges")
    p.add_argument(
        "--roots",
        action="append",
        default=[],
        metavar="NAME[:DEPTH]",
        help="harvest root category; first defaults to depth 3, later ones to 2",
    )
    p.add_argument("--lexicon", help="use this prebuilt lexicon file instead of mining")
    p.add_argument("--out", required=True, help="engine directory to create")
    p.add_argument("--mu", type=float, default=2000.0, help="Dirichlet pseudo-length")
    p.add_argument("--min-ngram-count", type=int, default=3)
    p.add_argument("--oov-top-n", type=int, default=1000)
    p.add_argument("--force", action="store_true", help="allow rebuilding into --out")
    p.set_defaults(func=cmd_build)

    for name, func, flag, help_text in (
        ("experts", cmd_experts, "--query", "rank authors for a query phrase"),
        ("expertise", cmd_expertise, "--author", "rank an author's expertise phrases"),
        ("related", cmd_related, "--query", "rank phrases related to a lexicon phrase"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--engine", help="engine directory (default: $SEERKIT_ENGINE)")
        p.add_argument(flag, required=True)
        p.add_argument("-k", type=_positive_int, default=10)
        p.set_defaults(func=func)

    p = sub.add_parser("add", help="apply a document batch to an engine directory")
    p.add_argument("--engine", help="engine directory (default: $SEERKIT_ENGINE)")
    p.add_argument("--corpus", required=True, help="JSON-lines batch file")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("eval", help="score run files against each other and/or truth")
    p.add_argument("--runs", nargs="+", required=True, help="run files (JSON)")
    p.add_argument("--truth", help="ground-truth file (JSON)")
    p.add_argument("-n", type=_positive_int, nargs="+", default=[3, 5, 10])
    p.add_argument("-k", type=_positive_int, nargs="+", default=[3, 5, 10])
    p.add_argument(
        "--normalize",
        action="store_true",
        help="match names by first initial + last name instead of exact strings",
    )
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("stats", help="distinct-keyphrase distribution over documents")
    p.add_argument("--engine", help="engine directory (default: $SEERKIT_ENGINE)")
    p.add_argument("--min-title-words", type=int, default=0)
    p.add_argument("--min-abstract-words", type=int, default=0)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("dump-keyphrases", help="per-document keyphrase dump")
    p.add_argument("--engine", help="engine directory (default: $SEERKIT_ENGINE)")
    p.set_defaults(func=cmd_dump_keyphrases)

    p = sub.add_parser("serve", help="run the HTTP query service")
    p.add_argument("--engine", help="engine directory (default: $SEERKIT_ENGINE)")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--port", type=int)
    p.add_argument("--host")
    p.add_argument("--cors-origin")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
