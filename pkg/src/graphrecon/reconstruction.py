"""Reconstruction of class members from their deck, and labeled proof-step checks.

If ``(v1, others)`` is a special set of ``G`` then inside the card ``G - v1``
the neighbors of ``v1`` are exactly the vertices not covered by the closed
neighborhoods of ``others``. Reconstruction therefore tries every card as
``G - v1`` and every candidate set of specials within it, attaches a new
vertex to the uncovered remainder and keeps the result only if its deck
matches the input deck.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .canon import Certificate, IsoMap, certificate, find_isomorphism, is_isomorphism
from .deck import Deck, has_deck, recover_degrees
from .errors import InvalidTrialError, TheoremViolationError, TooManySpecialsError
from .graph import Graph, bits_of
from .membership import SpecialSet, find_special_sets, satisfies_conditions

MAX_SPECIALS = 20


# Index translation between a graph and its card G - removed.
def to_card(v: int, removed: int) -> int:
    if v == removed:
        raise ValueError(f"vertex {v} is the deleted vertex")
    return v if v < removed else v - 1


def from_card(c: int, removed: int) -> int:
    return c if c < removed else c + 1


def attachment_mask(card: Graph, specials: list[int] | tuple[int, ...]) -> int:
    """Vertices of ``card`` outside every closed neighborhood of ``specials``."""
    covered = 0
    for u in specials:
        covered |= card.adj[u] | 1 << u
    return card.vertex_mask & ~covered


@dataclass(frozen=True)
class ReconstructionReport:
    candidates_tried: int
    survivors: frozenset[Certificate]

    @property
    def unique(self) -> bool:
        return len(self.survivors) == 1

    def sorted_survivors(self) -> list[Certificate]:
        return sorted(self.survivors)


def gap_isolated_values(degrees: tuple[int, ...]) -> set[int]:
    present: dict[int, int] = {}
    for d in degrees:
        present[d] = present.get(d, 0) + 1
    return {d for d, c in present.items() if c == 1 and d - 1 not in present and d + 1 not in present}


def reconstruct_from_deck(d: Deck, max_specials: int = MAX_SPECIALS) -> ReconstructionReport:
    rec = recover_degrees(d)
    degree_multiset = rec.degree_multiset
    iso_values = gap_isolated_values(degree_multiset)
    survivors: set[Certificate] = set()
    examined: set[Certificate] = set()
    done_cards: set[Certificate] = set()
    tried = 0
    for c, card in enumerate(d.cards):
        if d.certificates[c] in done_cards:
            continue
        done_cards.add(d.certificates[c])
        wanted = rec.deleted_degrees[c]
        special = [u for u in range(card.n) if card.degree(u) in iso_values]
        if len(special) > max_specials:
            raise TooManySpecialsError(
                f"card {c} has {len(special)} candidate specials (cap {max_specials})"
            )
        for sub in range(1, 1 << len(special)):
            tried += 1
            chosen = [special[i] for i in range(len(special)) if sub >> i & 1]
            attach = attachment_mask(card, chosen)
            if attach.bit_count() != wanted:
                continue
            h = card.add_vertex(attach)
            if h.degree_multiset() != degree_multiset:
                continue
            cert = certificate(h)
            if cert in examined:
                continue
            examined.add(cert)
            if has_deck(h, d):
                survivors.add(cert)
    return ReconstructionReport(tried, frozenset(survivors))


@dataclass(frozen=True)
class LabeledMateTrial:
    """A graph ``g``, a relabeled copy ``gprime`` and isomorphisms between matching cards.

    ``f_maps[j]`` maps the card ``g - j`` onto ``gprime - pi[j]``, both in
    compacted card indices.
    """

    g: Graph
    pi: tuple[int, ...]
    gprime: Graph
    f_maps: tuple[IsoMap, ...] = field(repr=False)


def make_trial(g: Graph, pi: tuple[int, ...] | list[int]) -> LabeledMateTrial:
    pi = tuple(pi)
    gprime = g.relabel(pi)
    f_maps = []
    for j in range(g.n):
        f = find_isomorphism(g.delete_vertex(j), gprime.delete_vertex(pi[j]))
        if f is None:
            raise TheoremViolationError(f"card {j} of {g} has no match in its relabeled copy")
        f_maps.append(f)
    return LabeledMateTrial(g, pi, gprime, tuple(f_maps))


def random_trial(g: Graph, rng: random.Random) -> LabeledMateTrial:
    pi = list(range(g.n))
    rng.shuffle(pi)
    return make_trial(g, pi)


def _validate(trial: LabeledMateTrial, special: SpecialSet) -> None:
    g, pi = trial.g, trial.pi
    if len(pi) != g.n or sorted(pi) != list(range(g.n)):
        raise InvalidTrialError("pi is not a permutation of the vertices")
    if trial.gprime != g.relabel(pi):
        raise InvalidTrialError("gprime is not g relabeled by pi")
    if len(trial.f_maps) != g.n:
        raise InvalidTrialError(f"expected {g.n} card maps, got {len(trial.f_maps)}")
    for j, f in enumerate(trial.f_maps):
        if not is_isomorphism(g.delete_vertex(j), trial.gprime.delete_vertex(pi[j]), f.mapping):
            raise InvalidTrialError(f"f_maps[{j}] is not an isomorphism between the cards")
    if not satisfies_conditions(g, special.v1, special.others):
        raise InvalidTrialError(f"{special} is not a special set of g")


def verify_lemma1(trial: LabeledMateTrial, special: SpecialSet) -> bool:
    """Each card map fixes the specials, and edges at specials match between g and gprime."""
    _validate(trial, special)
    g, gp, pi = trial.g, trial.gprime, trial.pi
    for i in special.members:
        for j in range(g.n):
            if j == i:
                continue
            image = from_card(trial.f_maps[j][to_card(i, j)], pi[j])
            if image != pi[i]:
                return False
            if g.has_edge(i, j) != gp.has_edge(pi[i], pi[j]):
                return False
    return True


def verify_lemma2(trial: LabeledMateTrial, special: SpecialSet) -> bool:
    """The image of the special set satisfies all three conditions in gprime."""
    _validate(trial, special)
    image = special.mapped(trial.pi)
    return satisfies_conditions(trial.gprime, image.v1, image.others)


def extend_f1(trial: LabeledMateTrial, special: SpecialSet) -> IsoMap:
    """Extend the card map at ``v1`` by ``v1 -> pi[v1]`` to a full isomorphism."""
    _validate(trial, special)
    g, gp, pi = trial.g, trial.gprime, trial.pi
    v1 = special.v1
    target = pi[v1]
    f1 = trial.f_maps[v1]
    f = [0] * g.n
    f[v1] = target
    for u in range(g.n):
        if u != v1:
            f[u] = from_card(f1[to_card(u, v1)], target)
    image_nbhd = 0
    for u in bits_of(g.adj[v1]):
        image_nbhd |= 1 << f[u]
    if image_nbhd != gp.adj[target]:
        raise TheoremViolationError(f"f1 does not carry N(v1) onto N(v1') for {special} in {g}")
    if not is_isomorphism(g, gp, f):
        raise TheoremViolationError(f"extension of f1 is not an isomorphism for {special} in {g}")
    return IsoMap(tuple(f))


@dataclass
class LemmaSuiteResult:
    trials: int = 0
    checks: int = 0
    lemma1_failures: int = 0
    lemma2_failures: int = 0
    extension_failures: int = 0
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.lemma1_failures or self.lemma2_failures or self.extension_failures)


def run_lemma_suite(
    g: Graph,
    trials: int,
    seed: int,
    specials: Optional[list[SpecialSet]] = None,
) -> LemmaSuiteResult:
    """Run ``trials`` random relabeling trials against every witness of ``g``."""
    if specials is None:
        specials = find_special_sets(g)
    if not specials:
        raise InvalidTrialError(f"{g} is not a class member")
    rng = random.Random(seed)
    result = LemmaSuiteResult()
    for _ in range(trials):
        trial = random_trial(g, rng)
        result.trials += 1
        for special in specials:
            result.checks += 1
            if not verify_lemma1(trial, special):
                result.lemma1_failures += 1
                result.messages.append(f"lemma1 failed: pi={trial.pi} {special}")
            if not verify_lemma2(trial, special):
                result.lemma2_failures += 1
                result.messages.append(f"lemma2 failed: pi={trial.pi} {special}")
            try:
                f = extend_f1(trial, special)
                if find_isomorphism(g, trial.gprime) is None or not f.is_isomorphism(g, trial.gprime):
                    raise TheoremViolationError("extension not verified")
            except TheoremViolationError as exc:
                result.extension_failures += 1
                result.messages.append(f"extension failed: pi={trial.pi} {special}: {exc}")
    return result
