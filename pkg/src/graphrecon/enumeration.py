"""Enumeration of all graphs on n <= 7 vertices up to isomorphism.

Labeled graphs are coded as integers whose bits, read most significant
first, are the graph6 edge bits. The labeled space is scanned in increasing
code order; the first unseen code of each isomorphism class is its least
element, and its whole orbit under the symmetric group is marked at once
with a vectorized permutation table. Each representative is then
certificate-stamped and the class list is sorted by certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Optional

import numpy as np

from .canon import certificate
from .errors import SearchBoundExceededError
from .graph import Graph

ENUM_MAX_N = 7


@dataclass(frozen=True)
class EnumerationRange:
    n: int
    edge_count_filter: Optional[int] = None
    shard: Optional[tuple[int, int]] = None

    def __post_init__(self) -> None:
        if not 1 <= self.n <= ENUM_MAX_N:
            raise SearchBoundExceededError(f"enumeration needs 1 <= n <= {ENUM_MAX_N}, got {self.n}")
        if self.shard is not None:
            index, total = self.shard
            if not 0 <= index < total:
                raise ValueError(f"bad shard {index}/{total}")

    @property
    def code_range(self) -> tuple[int, int]:
        size = 1 << edge_slots(self.n)
        if self.shard is None:
            return 0, size
        index, total = self.shard
        return index * size // total, (index + 1) * size // total


def edge_slots(n: int) -> int:
    return n * (n - 1) // 2


def graph_from_code(n: int, code: int) -> Graph:
    m = edge_slots(n)
    rows = [0] * n
    e = 0
    for j in range(1, n):
        for i in range(j):
            if code >> (m - 1 - e) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            e += 1
    return Graph(n, tuple(rows))


def code_of(g: Graph) -> int:
    code = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            code = code << 1 | (row >> i & 1)
    return code


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    for code in range(1 << edge_slots(n)):
        yield graph_from_code(n, code)


@lru_cache(maxsize=None)
def _orbit_weights(n: int) -> np.ndarray:
    """``weights[p, e]``: code bit that edge slot ``e`` lands on under permutation ``p``."""
    m = edge_slots(n)
    slot = {}
    e = 0
    for j in range(1, n):
        for i in range(j):
            slot[i, j] = e
            e += 1
    pairs = sorted(slot, key=slot.get)
    perms = list(permutations(range(n)))
    weights = np.zeros((len(perms), m), dtype=np.int64)
    for p, perm in enumerate(perms):
        for e, (i, j) in enumerate(pairs):
            a, b = sorted((perm[i], perm[j]))
            weights[p, e] = 1 << (m - 1 - slot[a, b])
    return weights


@lru_cache(maxsize=None)
def _classes(n: int, lo: int, hi: int) -> tuple[Graph, ...]:
    m = edge_slots(n)
    weights = _orbit_weights(n)
    seen = np.zeros(1 << m, dtype=bool)
    reps = []
    for code in range(lo, hi):
        if seen[code]:
            continue
        present = [e for e in range(m) if code >> (m - 1 - e) & 1]
        orbit = weights[:, present].sum(axis=1)
        seen[orbit] = True
        # A smaller orbit member lies before lo and belongs to an earlier shard.
        if int(orbit.min()) == code:
            reps.append(graph_from_code(n, code))
    reps.sort(key=certificate)
    return tuple(reps)


def enumerate_graphs(rng: EnumerationRange) -> Iterator[Graph]:
    """Yield one representative per isomorphism class, in certificate order."""
    lo, hi = rng.code_range
    for g in _classes(rng.n, lo, hi):
        if rng.edge_count_filter is None or g.num_edges() == rng.edge_count_filter:
            yield g
