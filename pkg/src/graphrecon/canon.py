"""Canonical certificates and isomorphism search.

The canonical form is computed by individualization-refinement: refine the
unit partition to an equitable ordered partition, branch on the vertices of
a target cell, and take the lexicographically smallest graph6 encoding over
all discrete leaves. Automorphisms discovered at leaves (and the
transpositions of twin vertices, which are always automorphisms) prune
branches that lie in the same orbit of the pointwise stabilizer of the
current individualization prefix.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Optional, Sequence

from .graph import Graph, encode_graph6


@total_ordering
@dataclass(frozen=True)
class Certificate:
    """graph6 encoding of the canonical relabeling; equal iff isomorphic."""

    canonical_bytes: bytes

    def __lt__(self, other: Certificate) -> bool:
        return (len(self.canonical_bytes), self.canonical_bytes) < (
            len(other.canonical_bytes),
            other.canonical_bytes,
        )

    def graph(self) -> Graph:
        return Graph.from_graph6(self.canonical_bytes)

    def __str__(self) -> str:
        return self.canonical_bytes.decode("ascii")


@dataclass(frozen=True)
class IsoMap:
    """Vertex bijection ``mapping[v]`` from a graph ``g`` onto a graph ``h``."""

    mapping: tuple[int, ...]

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.mapping)

    def inverse(self) -> IsoMap:
        inv = [0] * len(self.mapping)
        for v, w in enumerate(self.mapping):
            inv[w] = v
        return IsoMap(tuple(inv))

    def is_isomorphism(self, g: Graph, h: Graph) -> bool:
        return is_isomorphism(g, h, self.mapping)


def is_isomorphism(g: Graph, h: Graph, mapping: Sequence[int]) -> bool:
    """Direct check that ``mapping`` is an edge-preserving bijection in both directions."""
    if g.n != h.n or len(mapping) != g.n or sorted(mapping) != list(range(g.n)):
        return False
    for u in range(g.n):
        image = 0
        row = g.adj[u]
        for w in range(g.n):
            if row >> w & 1:
                image |= 1 << mapping[w]
        if image != h.adj[mapping[u]]:
            return False
    return True


def _mask(cell: Sequence[int]) -> int:
    m = 0
    for v in cell:
        m |= 1 << v
    return m


def _refine(adj: tuple[int, ...], cells: list[list[int]], queue: deque[int]) -> list[list[int]]:
    """Refine ``cells`` to an equitable ordered partition.

    ``queue`` holds splitter masks; every cell whose uniformity is in doubt
    must be reachable from it. Fragments of a split cell are ordered by
    neighbor count into the splitter, so the result depends only on the
    ordered partition and never on vertex names.
    """
    queued = set(queue)
    while queue:
        splitter = queue.popleft()
        queued.discard(splitter)
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & splitter).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            cmask = _mask(cell)
            if cmask in queued:
                queue.remove(cmask)
                queued.discard(cmask)
            for count in sorted(groups):
                piece = groups[count]
                out.append(piece)
                pmask = _mask(piece)
                queue.append(pmask)
                queued.add(pmask)
        cells = out
    return cells


def _twin_transpositions(adj: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    gens = []
    for u in range(n):
        for v in range(u + 1, n):
            strip = ~(1 << u | 1 << v)
            if adj[u] & strip == adj[v] & strip:
                perm = list(range(n))
                perm[u], perm[v] = v, u
                gens.append(tuple(perm))
    return gens


def _orbit_roots(gens: list[tuple[int, ...]], prefix: list[int], n: int) -> list[int]:
    """Union-find orbit representatives under the generators fixing ``prefix`` pointwise."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gamma in gens:
        if any(gamma[p] != p for p in prefix):
            continue
        for v in range(n):
            a, b = find(v), find(gamma[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(n)]


def _leaf_key(adj: tuple[int, ...], order: list[int]) -> int:
    # Integer whose bits read MSB-first are the graph6 edge bits of the relabeled graph.
    key = 0
    for j in range(1, len(order)):
        row = adj[order[j]]
        for i in range(j):
            key = key << 1 | (row >> order[i] & 1)
    return key


class _Search:
    def __init__(self, g: Graph) -> None:
        self.adj = g.adj
        self.n = g.n
        self.gens = _twin_transpositions(g.adj, g.n)
        self.best_key: Optional[int] = None
        self.best_order: list[int] = []
        self.first_key: Optional[int] = None
        self.first_order: list[int] = []

    def run(self) -> list[int]:
        n = self.n
        cells = _refine(self.adj, [list(range(n))], deque([(1 << n) - 1]))
        self._descend(cells, [])
        return self.best_order

    def _record_automorphism(self, order_a: list[int], order_b: list[int]) -> None:
        gamma = [0] * self.n
        for a, b in zip(order_a, order_b):
            gamma[a] = b
        if any(gamma[v] != v for v in range(self.n)):
            self.gens.append(tuple(gamma))

    def _leaf(self, cells: list[list[int]]) -> None:
        order = [cell[0] for cell in cells]
        key = _leaf_key(self.adj, order)
        if self.first_key is None:
            self.first_key, self.first_order = key, order
            self.best_key, self.best_order = key, order
            return
        if key == self.first_key:
            self._record_automorphism(self.first_order, order)
        if key == self.best_key:
            if self.best_order != self.first_order:
                self._record_automorphism(self.best_order, order)
        elif key < self.best_key:
            self.best_key, self.best_order = key, order

    def _descend(self, cells: list[list[int]], prefix: list[int]) -> None:
        if len(cells) == self.n:
            self._leaf(cells)
            return
        t = min(
            (i for i, c in enumerate(cells) if len(c) > 1),
            key=lambda i: (len(cells[i]), i),
        )
        target = cells[t]
        explored: list[int] = []
        for w in target:
            if explored:
                roots = _orbit_roots(self.gens, prefix, self.n)
                if any(roots[w] == roots[x] for x in explored):
                    continue
            explored.append(w)
            child = cells[:t] + [[w], [x for x in target if x != w]] + cells[t + 1 :]
            self._descend(_refine(self.adj, child, deque([1 << w])), prefix + [w])


@lru_cache(maxsize=1 << 16)
def canonical_labeling(g: Graph) -> tuple[Certificate, tuple[int, ...]]:
    """Return ``(certificate, perm)`` with ``g.relabel(perm)`` the canonical graph."""
    order = _Search(g).run()
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    canon = g.relabel(perm)
    return Certificate(encode_graph6(canon)), tuple(perm)


def certificate(g: Graph) -> Certificate:
    return canonical_labeling(g)[0]


def find_isomorphism(g: Graph, h: Graph) -> Optional[IsoMap]:
    """Return an isomorphism ``g -> h`` or ``None`` if the graphs are not isomorphic."""
    if g.n != h.n or g.degree_multiset() != h.degree_multiset():
        return None
    cert_g, perm_g = canonical_labeling(g)
    cert_h, perm_h = canonical_labeling(h)
    if cert_g != cert_h:
        return None
    inv_h = [0] * h.n
    for v, p in enumerate(perm_h):
        inv_h[p] = v
    mapping = tuple(inv_h[perm_g[v]] for v in range(g.n))
    if not is_isomorphism(g, h, mapping):
        raise RuntimeError(f"canonical maps disagree for {g} and {h}")
    return IsoMap(mapping)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
