"""Cross-system consensus, precision-at-k, and run-file evaluation reports.

Consensus for system i counts the distinct names in its top n that also
appear in at least one other system's top n:

    S@n = | union over k != i of (r_i top-n  intersect  r_k top-n) |

Name matching defaults to light canonicalization — casefold, punctuation
stripped, whitespace collapsed — which treats "Mohammed J. Zaki" and
"Mohammed Javeed Zaki" as different people.  Pass
``name_key=normalize_name`` (first-initial + last-name collapsing) when
run files spell the same person differently across systems; that is the
aggressive mode and it merges such near-variants.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping, Sequence

from .corpus import normalize_name
from .errors import ConfigError
from .ranking import gs_star_rank  # noqa: F401  (re-export: baseline lives with the metrics)

NameKey = Callable[[str], str]

_PUNCT = re.compile(r"[^\w\s]", re.UNICODE)


def exact_name_key(raw: str) -> str:
    """Default canonicalization: casefold, drop punctuation, squeeze space."""
    return " ".join(_PUNCT.sub("", raw.casefold()).split())


def _keyed_top(names: Sequence[str], n: int, key: NameKey) -> set[str]:
    # truncate first, then canonicalize; duplicates collapse via the set
    return {key(name) for name in names[:n]}


def consensus_at_n(
    lists: Sequence[Sequence[str]],
    i: int,
    n: int,
    name_key: NameKey | None = None,
) -> int:
    """S@n for system ``i`` among ``lists`` (one ranked name list each)."""
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if len(lists) < 2:
        raise ValueError("consensus needs at least two systems")
    if not 0 <= i < len(lists):
        raise IndexError(f"system index {i} out of range")
    key = name_key or exact_name_key
    mine = _keyed_top(lists[i], n, key)
    agreed: set[str] = set()
    for k, other in enumerate(lists):
        if k == i:
            continue
        agreed |= mine & _keyed_top(other, n, key)
    return len(agreed)


def precision_at_k(
    names: Sequence[str],
    truth: Sequence[str],
    k: int,
    name_key: NameKey | None = None,
) -> float:
    """|top-k intersect truth| / k; short runs count missing slots as misses."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    key = name_key or exact_name_key
    top = _keyed_top(names, k, key)
    relevant = {key(name) for name in truth}
    return len(top & relevant) / k


# -- run files ----------------------------------------------------------------


@dataclass
class SystemRun:
    system: str
    results: dict[str, list[str]] = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | Path) -> "SystemRun":
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"run file not found: {path}")
        try:
            raw = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"run file {path}: {exc}") from exc
        system = raw.get("system")
        results = raw.get("results")
        if not isinstance(system, str) or not isinstance(results, dict):
            raise ConfigError(f"run file {path}: expected {{system, results}}")
        clean: dict[str, list[str]] = {}
        for query, names in results.items():
            if not isinstance(names, list) or any(
                not isinstance(x, str) for x in names
            ):
                raise ConfigError(f"run file {path}: bad list for query {query!r}")
            clean[query] = names
        return cls(system=system, results=clean)


def load_truth(path: str | Path) -> dict[str, list[str]]:
    path = Path(path)
    if not path.exists():
        raise ConfigError(f"truth file not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"truth file {path}: {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"truth file {path}: expected an object")
    out: dict[str, list[str]] = {}
    for query, names in raw.items():
        if not isinstance(names, list) or any(not isinstance(x, str) for x in names):
            raise ConfigError(f"truth file {path}: bad list for query {query!r}")
        out[query] = names
    return out


def evaluation_report(
    runs: Sequence[SystemRun],
    truth: Mapping[str, Sequence[str]] | None = None,
    ns: Sequence[int] = (3, 5, 10),
    ks: Sequence[int] = (3, 5, 10),
    name_key: NameKey | None = None,
) -> dict:
    """Per-system, per-query S@n and P@k with macro averages."""
    queries = sorted({q for run in runs for q in run.results})
    report: dict = {
        "systems": [run.system for run in runs],
        "queries": queries,
        "n": list(ns),
        "k": list(ks),
    }
    if len(runs) >= 2:
        consensus: dict[str, dict[str, dict[str, int]]] = {}
        macro: dict[str, dict[str, float]] = {}
        for i, run in enumerate(runs):
            per_query: dict[str, dict[str, int]] = {}
            for query in queries:
                lists = [r.results.get(query, []) for r in runs]
                per_query[query] = {
                    str(n): consensus_at_n(lists, i, n, name_key) for n in ns
                }
            consensus[run.system] = per_query
            macro[run.system] = {
                str(n): (
                    sum(per_query[q][str(n)] for q in queries) / len(queries)
                    if queries
                    else 0.0
                )
                for n in ns
            }
        report["consensus"] = consensus
        report["consensus_macro"] = macro
    if truth is not None:
        precision: dict[str, dict[str, dict[str, float]]] = {}
        pmacro: dict[str, dict[str, float]] = {}
        judged = [q for q in queries if q in truth]
        for run in runs:
            per_query = {}
            for query in judged:
                names = run.results.get(query, [])
                per_query[query] = {
                    str(k): precision_at_k(names, truth[query], k, name_key)
                    for k in ks
                }
            precision[run.system] = per_query
            pmacro[run.system] = {
                str(k): (
                    sum(per_query[q][str(k)] for q in judged) / len(judged)
                    if judged
                    else 0.0
                )
                for k in ks
            }
        report["precision"] = precision
        report["precision_macro"] = pmacro
    return report


def aggressive_name_key(raw: str) -> str:
    """First-initial + last-name collapsing; unusable names key to ''."""
    try:
        return normalize_name(raw)
    except ValueError:
        return ""
