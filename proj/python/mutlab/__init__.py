"""Exact Y-seed mutation, c-vectors and quasi-Cartan companions.

Matrices are lists of rows and indices are 1-based, as in the JSON formats.
"""

from ._core import (
    BudgetExceeded,
    IntegerOverflow,
    ValidationError,
    apply_word,
    bfs_explore,
    cartan_from_acyclic,
    check_companion_conditions,
    companion_mutation,
    enumerate_admissible_companions,
    enumerate_cycles,
    exists_admissible_companion,
    explicit_companion,
    figure1_matrix,
    find_symmetrizer,
    mutate_matrix,
    mutate_seed,
    pairing_companion,
    positive_edges,
    random_walks,
    real_roots_up_to_height,
    sign_equivalent,
    to_dot,
)

__all__ = [name for name in dir() if not name.startswith("_")]
