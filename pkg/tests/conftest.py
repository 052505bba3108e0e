from __future__ import annotations

import random
from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from graphrecon.graph import Graph, disjoint_union, star, wheel

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")


# Independent oracles. These work on plain Python sets/tuples and never touch
# the package's bit-row internals or canonical labeling.

def edge_set(g: Graph) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) for u in range(g.n) for v in range(u + 1, g.n) if g.adj[u] >> v & 1)


def relabeled_edge_set(edges, perm) -> frozenset[tuple[int, int]]:
    return frozenset(tuple(sorted((perm[u], perm[v]))) for u, v in edges)


def brute_orbit(g: Graph) -> set[frozenset]:
    """Edge sets of all n! relabelings of ``g``."""
    edges = edge_set(g)
    return {relabeled_edge_set(edges, p) for p in permutations(range(g.n))}


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n:
        return False
    return edge_set(h) in brute_orbit(g)


def brute_class_key(g: Graph) -> tuple:
    """Smallest sorted edge list over all relabelings."""
    edges = edge_set(g)
    return min(tuple(sorted(relabeled_edge_set(edges, p))) for p in permutations(range(g.n)))


def naive_special_sets(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    """Every (v1, S) meeting conditions (i)-(iii) and 1 < k < n, straight from the definitions."""
    n = g.n
    nbr = {v: {u for u in range(n) if g.adj[v] >> u & 1} for v in range(n)}
    closed = {v: nbr[v] | {v} for v in range(n)}
    deg = {v: len(nbr[v]) for v in range(n)}
    found = []
    for v1 in range(n):
        rest = [u for u in range(n) if u != v1]
        for size in range(1, n):
            for S in combinations(rest, size):
                k = 1 + len(S)
                if not 1 < k < n:
                    continue
                members = (v1,) + S
                cover = set().union(*(closed[v] for v in members))
                if cover != set(range(n)):
                    continue
                if any(abs(deg[i] - deg[j]) <= 1 for i in members for j in range(n) if j != i):
                    continue
                if closed[v1] & set().union(*(closed[v] for v in S)):
                    continue
                found.append((v1, tuple(sorted(S))))
    return sorted(found)


def graph6_reference(edges, n: int) -> bytes:
    """Textbook graph6 writer working on a bit string."""
    bits = "".join("1" if (i, j) in edges else "0" for j in range(1, n) for i in range(j))
    bits += "0" * (-len(bits) % 6)
    return bytes([63 + n] + [63 + int(bits[i : i + 6], 2) for i in range(0, len(bits), 6)])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.random()
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def random_perm(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_perm(draw, min_n: int = 1, max_n: int = 10):
    g = draw(graphs(min_n, max_n))
    perm = draw(st.permutations(list(range(g.n))))
    return g, list(perm)


# Named graphs. K1 + W5: vertex 0 isolated, vertex 1 the hub, 2..6 the rim.
@pytest.fixture
def k1_w5() -> Graph:
    return disjoint_union(Graph.empty(1), wheel(5))


@pytest.fixture
def stars_3_5() -> Graph:
    """K_{1,3} + K_{1,5}; centers are vertices 0 and 4."""
    return disjoint_union(star(3), star(5))
