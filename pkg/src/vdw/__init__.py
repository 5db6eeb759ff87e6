"""Constructive lower bounds for van der Waerden numbers."""

from .constructor import BlockAssignment, blow_up, construct_chain, default_assignment
from .core import (
    APWitness,
    BlockTuple,
    Coloring,
    Parameters,
    allowed_block_indices,
    block_tuple,
    excluded_block_indices,
    is_prime,
    largest_prime_leq,
)
from .searcher import SearchOutcome, incremental_ktmap_at, search_max_valid
from .verifier import VerifyReport, find_first_ktmap_brute, find_first_ktmap_fast, lemma1_holds, verify

__version__ = "0.1.0"

__all__ = [
    "APWitness",
    "BlockAssignment",
    "BlockTuple",
    "Coloring",
    "Parameters",
    "SearchOutcome",
    "VerifyReport",
    "allowed_block_indices",
    "block_tuple",
    "blow_up",
    "construct_chain",
    "default_assignment",
    "excluded_block_indices",
    "find_first_ktmap_brute",
    "find_first_ktmap_fast",
    "incremental_ktmap_at",
    "is_prime",
    "largest_prime_leq",
    "lemma1_holds",
    "search_max_valid",
    "verify",
]
