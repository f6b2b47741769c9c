"""Shared fixtures and independent oracles for the test suite.

The oracle helpers deliberately avoid the library's fast paths: the naive
transform builds the full character matrix, and the brute-force closure
grows element sets by repeated pairwise addition.  Tests compare library
results against these slow references.
"""

from __future__ import annotations

import numpy as np
import pytest

from hsplearn import (
    Group,
    GroupElement,
    StateVector,
    Subgroup,
    TrainingSet,
    chi_eval,
    coset_table,
    subgroup_from_generators,
    training_set,
)


@pytest.fixture
def z12() -> Group:
    return Group([12])


@pytest.fixture
def even_z12(z12: Group) -> Subgroup:
    return subgroup_from_generators(z12, [2])


@pytest.fixture
def t3_training(z12: Group, even_z12: Subgroup) -> TrainingSet:
    """Three-sample set: coset 0+H sampled at {0, 2}, coset 3+H at {3}."""
    return training_set(z12, [(0, "cyan"), (2, "cyan"), (3, "lime")], hidden=even_z12)


def naive_character_matrix(group: Group, inverse: bool = False) -> np.ndarray:
    """Dense transform matrix built directly from character values.

    Forward rows are conjugated characters over sqrt(N), so the transform of
    a uniform subgroup state concentrates on the subgroup's annihilator.
    """
    n = group.order
    mat = np.empty((n, n), dtype=np.complex128)
    for y in range(n):
        label = group.element_at(y)
        for g in range(n):
            mat[y, g] = chi_eval(label, group.element_at(g))
    if not inverse:
        mat = np.conj(mat)
    return mat / np.sqrt(n)


def naive_qft(state: StateVector, inverse: bool = False) -> np.ndarray:
    return naive_character_matrix(state.group, inverse) @ state.amplitudes


def brute_force_closure(group: Group, generators: list) -> set:
    """Subgroup closure by saturating pairwise sums, without the kernels module."""
    gens = {
        g if isinstance(g, GroupElement) else group.element_at(int(g))
        for g in generators
    }
    current = {group.identity()} | gens
    while True:
        grown = set(current)
        for a in current:
            for b in current:
                grown.add(a + b)
        if len(grown) == len(current):
            return {e.index for e in current}
        current = grown


def complete_training(group: Group, hidden: Subgroup) -> TrainingSet:
    """Every group element, labeled by the flat index of its coset representative."""
    table = coset_table(hidden)
    pairs = [(g, table.representative_of(g).index) for g in range(group.order)]
    return training_set(group, pairs, hidden=hidden)
