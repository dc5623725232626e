"""Pure-Python trie kernel over integer token ids.

Same contract as the compiled kernel in ``_trie_cy``: build from token-id
sequences, then ``scan`` a stream greedily left to right, always taking the
longest phrase that starts at the current position.
"""

from __future__ import annotations

from typing import Sequence


class MatchKernel:
    backend = "python"

    def __init__(self, phrases: Sequence[Sequence[int]]):
        # children[node] maps token id -> child node; terminal[node] is the
        # phrase id ending at that node, or -1
        self._children: list[dict[int, int]] = [{}]
        self._terminal: list[int] = [-1]
        for pid, seq in enumerate(phrases):
            node = 0
            for tok in seq:
                nxt = self._children[node].get(tok)
                if nxt is None:
                    nxt = len(self._children)
                    self._children[node][tok] = nxt
                    self._children.append({})
                    self._terminal.append(-1)
                node = nxt
            self._terminal[node] = pid

    def __len__(self) -> int:
        return len(self._children)

    def contains(self, seq: Sequence[int]) -> bool:
        node = 0
        for tok in seq:
            nxt = self._children[node].get(tok)
            if nxt is None:
                return False
            node = nxt
        return self._terminal[node] >= 0

    def scan(self, ids: Sequence[int]) -> list[tuple[int, int, int]]:
        """Greedy longest-match spans: (start, phrase_id, token_length)."""
        children = self._children
        terminal = self._terminal
        out: list[tuple[int, int, int]] = []
        n = len(ids)
        i = 0
        while i < n:
            node = 0
            best_pid = -1
            best_len = 0
            j = i
            while j < n:
                nxt = children[node].get(ids[j])
                if nxt is None:
                    break
                node = nxt
                j += 1
                if terminal[node] >= 0:
                    best_pid = terminal[node]
                    best_len = j - i
            if best_pid >= 0:
                out.append((i, best_pid, best_len))
                i += best_len
            else:
                i += 1
        return out
