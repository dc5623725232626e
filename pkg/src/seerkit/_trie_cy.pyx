# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled trie kernel: edges in one flat hash map keyed by (node, token).

Mirrors the pure-Python kernel in ``_trie_py`` exactly; the two are tested
for equality and benchmarked against each other.
"""

from cython.operator cimport dereference as deref
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector


cdef inline long long _key(int node, int tok):
    # token ids are small non-negatives or -1 (unknown); fold to unsigned
    return ((<long long> node) << 32) | <unsigned int> tok


cdef class MatchKernel:
    cdef unordered_map[long long, int] _edges
    cdef vector[int] _terminal
    cdef readonly str backend

    def __init__(self, phrases):
        self.backend = "cython"
        self._terminal.push_back(-1)
        cdef int node, nxt, tok, pid
        cdef long long key
        for pid, seq in enumerate(phrases):
            node = 0
            for tok in seq:
                key = _key(node, tok)
                it = self._edges.find(key)
                if it == self._edges.end():
                    nxt = <int> self._terminal.size()
                    self._edges[key] = nxt
                    self._terminal.push_back(-1)
                else:
                    nxt = deref(it).second
                node = nxt
            self._terminal[node] = pid

    def __len__(self):
        return <int> self._terminal.size()

    def contains(self, seq):
        cdef int node = 0
        cdef int tok
        cdef long long key
        for tok in seq:
            key = _key(node, tok)
            it = self._edges.find(key)
            if it == self._edges.end():
                return False
            node = deref(it).second
        return self._terminal[node] >= 0

    def scan(self, ids):
        cdef vector[int] stream
        cdef int tok
        for tok in ids:
            stream.push_back(tok)
        cdef list out = []
        cdef int n = <int> stream.size()
        cdef int i = 0, j, node, nxt, best_pid, best_len
        cdef long long key
        while i < n:
            node = 0
            best_pid = -1
            best_len = 0
            j = i
            while j < n:
                key = _key(node, stream[j])
                it = self._edges.find(key)
                if it == self._edges.end():
                    break
                node = deref(it).second
                j += 1
                if self._terminal[node] >= 0:
                    best_pid = self._terminal[node]
                    best_len = j - i
            if best_pid >= 0:
                out.append((i, best_pid, best_len))
                i += best_len
            else:
                i += 1
        return out
