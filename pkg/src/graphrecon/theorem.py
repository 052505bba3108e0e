"""Exhaustive small-n check that every class member is reconstructible."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .canon import certificate
from .deck import deck_of, hypomorphic_mates
from .enumeration import ENUM_MAX_N, EnumerationRange, enumerate_graphs
from .errors import SearchBoundExceededError
from .membership import is_class_member
from .reconstruction import reconstruct_from_deck

VERIFY_MIN_N = 3


@dataclass
class VerificationSummary:
    n: int
    graphs_scanned: int = 0
    class_members_found: int = 0
    members_with_unique_mate: int = 0
    counterexamples: list[str] = field(default_factory=list)
    members: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: VerificationSummary) -> VerificationSummary:
        if other.n != self.n:
            raise ValueError(f"cannot merge summaries for n={self.n} and n={other.n}")
        return VerificationSummary(
            self.n,
            self.graphs_scanned + other.graphs_scanned,
            self.class_members_found + other.class_members_found,
            self.members_with_unique_mate + other.members_with_unique_mate,
            self.counterexamples + other.counterexamples,
            self.members + other.members,
        )

    def render(self) -> str:
        lines = [
            f"n: {self.n}",
            f"graphs_scanned: {self.graphs_scanned}",
            f"class_members_found: {self.class_members_found}",
            f"members_with_unique_mate: {self.members_with_unique_mate}",
            f"counterexamples: {len(self.counterexamples)}",
        ]
        lines += [f"counterexample: {c}" for c in self.counterexamples]
        return "\n".join(lines) + "\n"


def _scan(n: int, shard: Optional[tuple[int, int]]) -> VerificationSummary:
    summary = VerificationSummary(n)
    for g in enumerate_graphs(EnumerationRange(n, shard=shard)):
        summary.graphs_scanned += 1
        if not is_class_member(g):
            continue
        summary.class_members_found += 1
        summary.members.append(str(g))
        cert = certificate(g)
        deck = deck_of(g)
        mates = hypomorphic_mates(deck, n)
        survivors = reconstruct_from_deck(deck).survivors
        if mates == {cert} and survivors == {cert}:
            summary.members_with_unique_mate += 1
        else:
            summary.counterexamples.append(
                f"{g} mates={sorted(map(str, mates))} reconstructed={sorted(map(str, survivors))}"
            )
    return summary


def verify_theorem_exhaustive(
    n: int,
    shard: Optional[tuple[int, int]] = None,
    jobs: int = 1,
) -> VerificationSummary:
    """Scan every graph on ``n`` vertices (or one shard of them).

    A class member counts as confirmed when its deck has exactly one
    hypomorphic mate up to isomorphism (itself) and deck reconstruction
    returns exactly that graph.
    """
    if not VERIFY_MIN_N <= n <= ENUM_MAX_N:
        raise SearchBoundExceededError(
            f"exhaustive verification needs {VERIFY_MIN_N} <= n <= {ENUM_MAX_N}, got {n}"
        )
    if jobs <= 1:
        return _scan(n, shard)
    index, total = shard if shard is not None else (0, 1)
    subshards = [(index * jobs + s, total * jobs) for s in range(jobs)]
    summary = VerificationSummary(n)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_scan, [n] * jobs, subshards):
            summary = summary.merge(part)
    return summary
