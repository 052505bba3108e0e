"""Decks of vertex-deleted subgraphs, hypomorphism and degree recovery."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .canon import Certificate, certificate
from .errors import DeckUndefinedError, Graph6ParseError, IllegitimateDeckError, SearchBoundExceededError
from .graph import Graph, decode_graph6

MATE_SEARCH_MAX_N = 7


@dataclass(frozen=True)
class Deck:
    """Unlabeled multiset of ``n`` cards, each on ``n - 1`` vertices.

    ``cards[c]`` and ``certificates[c]`` describe the same card; card order
    carries no meaning (``deck_of`` happens to list ``G - v`` at position ``v``).
    """

    n: int
    cards: tuple[Graph, ...]
    certificates: tuple[Certificate, ...] = field(repr=False)

    @classmethod
    def from_cards(cls, cards: Iterable[Graph]) -> Deck:
        cards = tuple(cards)
        n = len(cards)
        if n < 3:
            raise IllegitimateDeckError(f"a deck needs at least 3 cards, got {n}")
        for c, card in enumerate(cards):
            if card.n != n - 1:
                raise IllegitimateDeckError(
                    f"card {c} has {card.n} vertices, expected {n - 1} for a {n}-card deck"
                )
        return cls(n, cards, tuple(certificate(card) for card in cards))

    @property
    def signature(self) -> tuple[Certificate, ...]:
        return tuple(sorted(self.certificates))

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class DegreeRecovery:
    total_edges: int
    deleted_degrees: tuple[int, ...]

    @property
    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.deleted_degrees))


def deck_of(g: Graph) -> Deck:
    if g.n < 3:
        raise DeckUndefinedError(f"deck is only defined for n >= 3, got n={g.n}")
    return Deck.from_cards(g.delete_vertex(v) for v in range(g.n))


def decks_equal(a: Deck, b: Deck) -> bool:
    return a.n == b.n and Counter(a.certificates) == Counter(b.certificates)


def has_deck(g: Graph, d: Deck) -> bool:
    """``decks_equal(deck_of(g), d)``, stopping at the first card that does not match."""
    if g.n != d.n:
        return False
    remaining = Counter(d.certificates)
    for v in range(g.n):
        cert = certificate(g.delete_vertex(v))
        if not remaining[cert]:
            return False
        remaining[cert] -= 1
    return True


def recover_degrees(d: Deck) -> DegreeRecovery:
    """Recover ``|E(G)|`` and the degree of each card's deleted vertex."""
    if d.n < 3:
        raise DeckUndefinedError(f"deck is only defined for n >= 3, got n={d.n}")
    card_edges = [card.num_edges() for card in d.cards]
    total, rem = divmod(sum(card_edges), d.n - 2)
    if rem:
        raise IllegitimateDeckError(
            f"card edge total {sum(card_edges)} is not divisible by n-2={d.n - 2}"
        )
    deleted = tuple(total - e for e in card_edges)
    for c, deg in enumerate(deleted):
        if not 0 <= deg <= d.n - 1:
            raise IllegitimateDeckError(
                f"card {c} implies deleted degree {deg}, outside 0..{d.n - 1}"
            )
    return DegreeRecovery(total, deleted)


def hypomorphic_mates(d: Deck, search_n_max: int = MATE_SEARCH_MAX_N) -> frozenset[Certificate]:
    """Certificates of every graph whose deck equals ``d``, by exhaustive search."""
    from .enumeration import EnumerationRange, enumerate_graphs

    if not d.n <= search_n_max <= MATE_SEARCH_MAX_N:
        raise SearchBoundExceededError(
            f"mate search needs n={d.n} <= search_n_max={search_n_max} <= {MATE_SEARCH_MAX_N}"
        )
    rec = recover_degrees(d)
    target = rec.degree_multiset
    return frozenset(
        certificate(h)
        for h in enumerate_graphs(EnumerationRange(d.n, edge_count_filter=rec.total_edges))
        if h.degree_multiset() == target and has_deck(h, d)
    )


def format_deck(d: Deck) -> str:
    """Deck file text: one canonical graph6 card per line, certificate-sorted."""
    return "".join(f"{cert}\n" for cert in d.signature)


def parse_deck(text: str) -> Deck:
    cards = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        try:
            cards.append(decode_graph6(line))
        except Graph6ParseError as exc:
            raise Graph6ParseError(f"line {lineno}: {exc.reason}", exc.offset) from None
    return Deck.from_cards(cards)
