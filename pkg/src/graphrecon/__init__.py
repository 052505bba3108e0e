"""Reconstruction toolkit for graphs with a special vertex set.

Graphs with a set of vertices whose closed neighborhoods cover the graph,
whose degrees stand apart from all others, and whose first member's closed
neighborhood is disjoint from the rest are determined by their deck of
vertex-deleted subgraphs. This package checks that condition, builds and
compares decks, reconstructs such graphs from an unlabeled deck, and
verifies the claim exhaustively for small graphs.
"""

from .canon import Certificate, IsoMap, are_isomorphic, canonical_labeling, certificate, find_isomorphism
from .deck import Deck, DegreeRecovery, deck_of, decks_equal, hypomorphic_mates, recover_degrees
from .enumeration import EnumerationRange, enumerate_graphs
from .generator import generate_class_member
from .graph import Graph, VertexSet, decode_graph6, encode_graph6
from .membership import SpecialSet, find_special_sets, gap_isolated_vertices, is_class_member
from .reconstruction import (
    LabeledMateTrial,
    ReconstructionReport,
    extend_f1,
    make_trial,
    reconstruct_from_deck,
    verify_lemma1,
    verify_lemma2,
)
from .theorem import VerificationSummary, verify_theorem_exhaustive

__all__ = [
    "Certificate",
    "Deck",
    "DegreeRecovery",
    "EnumerationRange",
    "Graph",
    "IsoMap",
    "LabeledMateTrial",
    "ReconstructionReport",
    "SpecialSet",
    "VerificationSummary",
    "VertexSet",
    "are_isomorphic",
    "canonical_labeling",
    "certificate",
    "deck_of",
    "decks_equal",
    "decode_graph6",
    "encode_graph6",
    "enumerate_graphs",
    "extend_f1",
    "find_isomorphism",
    "find_special_sets",
    "gap_isolated_vertices",
    "generate_class_member",
    "hypomorphic_mates",
    "is_class_member",
    "make_trial",
    "reconstruct_from_deck",
    "recover_degrees",
    "verify_lemma1",
    "verify_lemma2",
    "verify_theorem_exhaustive",
]
