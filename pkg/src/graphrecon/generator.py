"""Randomized construction of class members for tests at larger n."""

from __future__ import annotations

import random
from typing import Optional

from .graph import Graph
from .membership import gap_isolated_vertices, is_class_member

MIN_GENERATOR_N = 5
DEFAULT_ATTEMPTS = 400
REPAIR_ROUNDS = 30


def _conflicts(rows: list[int], specials: list[int], n: int) -> list[int]:
    """Vertices (non-special ones first) whose degree spoils the gap around a special."""
    degs = [r.bit_count() for r in rows]
    bad_nonspecial = set()
    bad_special = set()
    for s in specials:
        for u in range(n):
            if u != s and abs(degs[s] - degs[u]) <= 1:
                if u in specials:
                    bad_special.update((s, u))
                else:
                    bad_nonspecial.add(u)
    return sorted(bad_nonspecial) + sorted(bad_special)


def _attempt(n: int, rng: random.Random) -> Optional[Graph]:
    k = rng.choice([2, 2, 2, 3, 3, 4])
    k = min(k, max(2, n // 3))
    specials = list(range(k))
    rest = list(range(k, n))
    rows = [0] * n

    def link(a: int, b: int) -> None:
        rows[a] |= 1 << b
        rows[b] |= 1 << a

    def unlink(a: int, b: int) -> None:
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)

    # Block of v1 (vertex 0) is disjoint from the closed neighborhoods of the other specials.
    share = 0.0 if rng.random() < 0.3 else rng.uniform(0.15, 0.6)
    for u in rest:
        if rng.random() < share:
            link(0, u)
        else:
            owners = [s for s in specials[1:] if rng.random() < 0.5] or [rng.choice(specials[1:])]
            for s in owners:
                link(s, u)
    for a in specials[1:]:
        for b in specials[1:]:
            if a < b and rng.random() < 0.4:
                link(a, b)
    p = rng.uniform(0.0, 0.45)
    for i, a in enumerate(rest):
        for b in rest[i + 1 :]:
            if rng.random() < p:
                link(a, b)

    # Repair: flip edges between non-special vertices until the gaps open up.
    for _ in range(REPAIR_ROUNDS):
        bad = _conflicts(rows, specials, n)
        if not bad:
            break
        u = bad[0]
        if u in specials:
            return None
        partners = [w for w in rest if w != u]
        w = rng.choice(partners)
        if rows[u] >> w & 1:
            unlink(u, w)
        else:
            link(u, w)
    g = Graph(n, tuple(rows))
    if gap_isolated_vertices(g).bits & ((1 << k) - 1) != (1 << k) - 1:
        return None
    perm = list(range(n))
    rng.shuffle(perm)
    return g.relabel(perm)


def generate_class_member(n: int, seed: int, attempts: int = DEFAULT_ATTEMPTS) -> Optional[Graph]:
    """Build a random class member on ``n`` vertices, or ``None`` if the budget runs out.

    The membership checker is the source of truth: every candidate is
    re-checked before it is returned.
    """
    if n < MIN_GENERATOR_N:
        raise ValueError(f"generator needs n >= {MIN_GENERATOR_N}, got {n}")
    rng = random.Random(seed)
    for _ in range(attempts):
        g = _attempt(n, rng)
        if g is not None and is_class_member(g):
            return g
    return None
