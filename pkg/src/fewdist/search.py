"""Exact A_2(n, D) for small n by maximum-clique search.

XOR with a fixed word preserves every distance, so an optimal code may be
assumed to contain the zero word.  The remaining words then have weight in
``D`` and are pairwise at distances in ``D``: a clique in the compatibility
graph on ``{w : wt(w) in D}``.  ``A_2(n, D) = 1 + omega``.

The clique search is branch and bound with a greedy colouring bound
(Tomita-style MCQ) on bitsets held in Python ints; vertex ``i`` of the
candidate list is bit ``i``.  Candidates are ordered by (weight, word).
"""

from __future__ import annotations

import multiprocessing as mp
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

import numpy as np

from .core import Code, DistanceSet, InvalidInputError, ResourceLimitError, Word

DEFAULT_MAX_LENGTH = 20


@dataclass(frozen=True)
class SearchResult:
    value: int
    witness: Code
    complete: bool
    nodes: int
    elapsed: float  # milliseconds


class _Timeout(Exception):
    pass


def candidate_words(n: int, D: DistanceSet) -> list[int]:
    """All words with weight in ``D``, ordered by (weight, value)."""
    out = []
    for d in D:
        for support in combinations(range(n), d):
            bits = 0
            for j in support:
                bits |= 1 << (n - 1 - j)
            out.append(bits)
    return sorted(out, key=lambda w: (w.bit_count(), w))


def compatibility_graph(n: int, words: Sequence[int], D: DistanceSet,
                        deadline: Optional[float] = None) -> list[int]:
    """Adjacency bit rows: ``adj[i]`` has bit ``j`` set iff d(w_i, w_j) is in ``D``."""
    arr = np.asarray(words, dtype=np.uint32 if n <= 32 else np.uint64)
    allowed = np.zeros(n + 1, dtype=bool)
    allowed[list(D)] = True
    adj = []
    for i, w in enumerate(words):
        if deadline is not None and time.perf_counter() > deadline:
            raise _Timeout
        row = allowed[np.bitwise_count(arr ^ arr.dtype.type(w))]
        row[i] = False
        adj.append(int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little"))
    return adj


def color_sort(adj: Sequence[int], P: int) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring of the vertex set ``P``.

    Returns vertices grouped by colour class and, parallel to it, the colour
    number of each; a clique inside the first ``i + 1`` vertices has at most
    ``colors[i]`` members.
    """
    order: list[int] = []
    colors: list[int] = []
    k = 0
    Q = P
    while Q:
        k += 1
        avail = Q
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~adj[v] & ~low
            Q &= ~low
            order.append(v)
            colors.append(k)
    return order, colors


class _CliqueSearch:
    def __init__(self, adj: Sequence[int], deadline: Optional[float], shared=None):
        self.adj = adj
        self.deadline = deadline
        self.shared = shared
        self.best: list[int] = []
        self.nodes = 0

    def bound(self) -> int:
        if self.shared is not None:
            return max(len(self.best), self.shared.value)
        return len(self.best)

    def record(self, clique: list[int]) -> None:
        self.best = list(clique)
        if self.shared is not None:
            with self.shared.get_lock():
                if len(clique) > self.shared.value:
                    self.shared.value = len(clique)

    def expand(self, R: list[int], P: int) -> None:
        self.nodes += 1
        if self.deadline is not None and time.perf_counter() > self.deadline:
            raise _Timeout
        adj = self.adj
        order, colors = color_sort(adj, P)
        for i in range(len(order) - 1, -1, -1):
            if len(R) + colors[i] <= self.bound():
                return
            v = order[i]
            R.append(v)
            NP = P & adj[v]
            if NP:
                self.expand(R, NP)
            elif len(R) > self.bound():
                self.record(R)
            R.pop()
            P &= ~(1 << v)


# Worker state for multi-process search; set by _init_worker.
_W: dict = {}


def _init_worker(adj, shared, deadline):
    _W.update(adj=adj, shared=shared, deadline=deadline)


def _branch(v: int, P: int, color_bound: int):
    search = _CliqueSearch(_W["adj"], _W["deadline"], _W["shared"])
    if color_bound <= search.bound():
        return [], 0, True
    complete = True
    try:
        R = [v]
        if P:
            search.expand(R, P)
        elif 1 > search.bound():
            search.record(R)
    except _Timeout:
        complete = False
    return search.best, search.nodes, complete


def _parallel_clique(adj: list[int], deadline: Optional[float], threads: int):
    P = (1 << len(adj)) - 1
    order, colors = color_sort(adj, P)
    tasks = []
    for i in range(len(order) - 1, -1, -1):
        v = order[i]
        tasks.append((v, P & adj[v], colors[i]))
        P &= ~(1 << v)
    ctx = mp.get_context("fork")
    shared = ctx.Value("i", 0)
    best: list[int] = []
    nodes, complete = 1, True
    with ProcessPoolExecutor(max_workers=threads, mp_context=ctx, initializer=_init_worker,
                             initargs=(adj, shared, deadline)) as pool:
        for clique, k, done in pool.map(_branch, *zip(*tasks)) if tasks else []:
            nodes += k
            complete &= done
            if len(clique) > len(best):
                best = clique
    return best, nodes, complete


def max_code(n: int, D: DistanceSet, time_limit: Optional[float] = None, threads: int = 1,
             max_length: int = DEFAULT_MAX_LENGTH) -> SearchResult:
    """Largest code of length ``n`` with all distances in ``D``.

    ``time_limit`` is in seconds.  On expiry the best code found so far is
    returned with ``complete=False``.
    """
    D.check_length(n)
    if n > max_length:
        raise ResourceLimitError(f"n={n} exceeds the configured maximum {max_length}")
    if threads < 1:
        raise InvalidInputError(f"threads must be positive, got {threads}")
    start = time.perf_counter()
    deadline = None if time_limit is None else start + time_limit
    words = candidate_words(n, D)
    best: list[int] = []
    nodes = 0
    complete = True
    try:
        adj = compatibility_graph(n, words, D, deadline)
    except _Timeout:
        adj = None
        complete = False
    if adj is not None:
        if threads == 1:
            search = _CliqueSearch(adj, deadline)
            try:
                search.expand([], (1 << len(adj)) - 1) if adj else None
            except _Timeout:
                complete = False
            best, nodes = search.best, search.nodes
        else:
            best, nodes, complete = _parallel_clique(adj, deadline, threads)
    witness = Code(n, frozenset([Word.zero(n)] + [Word(n, words[i]) for i in best]))
    elapsed = (time.perf_counter() - start) * 1000.0
    return SearchResult(len(witness), witness, complete, nodes, elapsed)


def verify_witness(result: SearchResult, n: int, D: DistanceSet) -> bool:
    """Recheck a result's witness from its string form, independent of the search."""
    code = result.witness
    if code.n != n or len(code) != result.value:
        return False
    strings = [str(w) for w in code.words]
    if len(set(strings)) != len(strings) or any(len(s) != n for s in strings):
        return False
    allowed = set(D)
    for a, b in combinations(strings, 2):
        if sum(x != y for x, y in zip(a, b)) not in allowed:
            return False
    return True
