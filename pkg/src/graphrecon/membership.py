"""Membership in the class of graphs with a special vertex set.

A special set is a vertex ``v1`` plus a nonempty set of other vertices such
that (i) their closed neighborhoods cover the graph, (ii) every member's
degree differs by more than one from the degree of every other vertex, and
(iii) the closed neighborhood of ``v1`` misses the closed neighborhoods of
all the other members. Graphs admitting one are reconstructible from their
deck.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import Graph, VertexSet, bits_of


@dataclass(frozen=True, order=True)
class SpecialSet:
    v1: int
    others: tuple[int, ...]

    @property
    def k(self) -> int:
        return 1 + len(self.others)

    @property
    def members(self) -> tuple[int, ...]:
        return (self.v1, *self.others)

    @property
    def others_mask(self) -> int:
        return VertexSet.of(self.others).bits

    def mapped(self, perm: tuple[int, ...] | list[int]) -> SpecialSet:
        return SpecialSet(perm[self.v1], tuple(sorted(perm[u] for u in self.others)))

    def __str__(self) -> str:
        return f"v1={self.v1} others={{{','.join(map(str, self.others))}}} k={self.k}"


def gap_isolated_vertices(g: Graph) -> VertexSet:
    """Vertices whose degree is more than 1 away from every other vertex's degree."""
    degs = g.degrees()
    count: dict[int, int] = {}
    for d in degs:
        count[d] = count.get(d, 0) + 1
    mask = 0
    for v, d in enumerate(degs):
        if count[d] == 1 and d - 1 not in count and d + 1 not in count:
            mask |= 1 << v
    return VertexSet(mask)


def _closed(g: Graph, v: int) -> int:
    return g.adj[v] | 1 << v


def iter_special_sets(g: Graph) -> Iterator[SpecialSet]:
    """Yield every special set, ordered by ``v1`` then by the bit mask of ``others``.

    Condition (ii) for a set holds exactly when each member is individually
    gap-isolated, so only gap-isolated vertices are considered; for a fixed
    ``v1`` the separation condition further restricts ``others`` to
    gap-isolated vertices whose closed neighborhood misses ``N[v1]``.
    """
    iso = gap_isolated_vertices(g).bits
    full = g.vertex_mask
    for v1 in bits_of(iso):
        n1 = _closed(g, v1)
        cands = [u for u in bits_of(iso & ~(1 << v1)) if not _closed(g, u) & n1]
        reach = n1
        for u in cands:
            reach |= _closed(g, u)
        if reach != full:
            continue
        for sub in range(1, 1 << len(cands)):
            chosen = [cands[i] for i in range(len(cands)) if sub >> i & 1]
            if 1 + len(chosen) >= g.n:
                continue
            cover = n1
            for u in chosen:
                cover |= _closed(g, u)
            if cover == full:
                yield SpecialSet(v1, tuple(chosen))


def find_special_sets(g: Graph) -> list[SpecialSet]:
    return sorted(iter_special_sets(g), key=lambda s: (s.v1, s.others_mask))


def is_class_member(g: Graph) -> bool:
    return next(iter_special_sets(g), None) is not None


def satisfies_conditions(g: Graph, v1: int, others: Iterable[int]) -> bool:
    """Check conditions (i)-(iii) and ``1 < k < n`` literally for a proposed witness."""
    others = list(others)
    members = [v1, *others]
    if len(set(members)) != len(members) or not 1 < len(members) < g.n:
        return False
    cover = 0
    for u in members:
        cover |= _closed(g, u)
    if cover != g.vertex_mask:
        return False
    degs = g.degrees()
    for i in members:
        if any(abs(degs[i] - degs[j]) <= 1 for j in range(g.n) if j != i):
            return False
    rest = 0
    for u in others:
        rest |= _closed(g, u)
    return not _closed(g, v1) & rest
