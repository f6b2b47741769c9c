"""Leakage diagnostics: how much Fourier-sampling mass survives partial data.

With only part of each coset sampled, the annihilator labels of the hidden
subgroup keep only a fraction of the measurement mass; the rest leaks to
spurious labels.  These diagnostics quantify the surviving mass, its
signal-to-noise ratio, and the mass captured by competing candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .groups import (
    GroupMismatchError,
    Group,
    Subgroup,
    annihilator,
    coset_table,
    enumerate_subgroups,
    subgroup_from_generators,
)
from .states import TrainingSet, fourier_sampling_distribution, partial_coset_mixture

__all__ = [
    "FalseSignalRow",
    "LeakageReport",
    "annihilator_mass",
    "snr",
    "false_signal_mass",
    "leakage_report",
]


def _resolve_hidden(training: TrainingSet, hidden: Optional[Subgroup]) -> Subgroup:
    if hidden is None:
        hidden = training.hidden
    if hidden is None:
        raise ValueError("leakage diagnostics need the hidden subgroup")
    if hidden.group != training.group:
        raise GroupMismatchError("hidden subgroup belongs to a different group")
    if training.hidden != hidden:
        table = coset_table(hidden)
        for label in training.labels():
            members = training.class_members(label)
            first = table.coset_index[members[0][0].index]
            for x, _ in members[1:]:
                if table.coset_index[x.index] != first:
                    raise ValueError(
                        f"label {label!r} spans multiple cosets of the given subgroup"
                    )
    return hidden


def _class_root_weights(training: TrainingSet) -> List[float]:
    """Per class, the squared sum of root multiplicities (|X_r|^2 for plain sets)."""
    out = []
    for label in training.labels():
        acc = sum(math.sqrt(m) for _, m in training.class_members(label))
        out.append(acc * acc)
    return out


def annihilator_mass(training: TrainingSet, hidden: Optional[Subgroup] = None) -> float:
    """Fourier mass on the hidden subgroup's annihilator labels.

    Closed form sum_r (sum_{x in X_r} sqrt(n_x))^2 / (N |H|), valid because
    characters that annihilate H are constant on each label class.  Equals 1
    exactly at complete data.
    """
    hidden = _resolve_hidden(training, hidden)
    total = training.total_count
    return sum(_class_root_weights(training)) / (total * hidden.order)


def snr(training: TrainingSet, hidden: Optional[Subgroup] = None) -> float:
    """Signal-to-noise ratio p/(1-p) of the annihilator mass (inf at p = 1)."""
    p = annihilator_mass(training, hidden)
    if 1.0 - p < 1e-12:
        return math.inf
    return p / (1.0 - p)


class FalseSignalRow(NamedTuple):
    """Mass a competing candidate's annihilator captures, exact and approximate."""

    candidate: Subgroup
    exact: float
    approx: float


def false_signal_mass(
    training: TrainingSet,
    candidate: Subgroup,
    hidden: Optional[Subgroup] = None,
) -> FalseSignalRow:
    """Fourier mass on a candidate's annihilator labels.

    ``exact`` sums the true sampling distribution; ``approx`` combines the
    coherent mass on the joint annihilator with a uniform estimate for the
    remaining labels: 1/|K| - 1/|H+K| + W/(N |H+K|) where W is the squared
    root-multiplicity class weight.
    """
    hidden = _resolve_hidden(training, hidden)
    group = training.group
    if candidate.group != group:
        raise GroupMismatchError("candidate subgroup belongs to a different group")
    dist = fourier_sampling_distribution(partial_coset_mixture(training))
    ann = annihilator(candidate)
    exact = float(dist[np.array(ann.elements, dtype=np.int64)].sum())

    join = subgroup_from_generators(
        group, list(hidden.elements) + list(candidate.elements)
    )
    w = sum(_class_root_weights(training))
    approx = (
        1.0 / candidate.order
        - 1.0 / join.order
        + w / (training.total_count * join.order)
    )
    return FalseSignalRow(candidate=candidate, exact=exact, approx=approx)


@dataclass(frozen=True)
class LeakageReport:
    """Leakage summary of one training set against its hidden subgroup."""

    group: Group
    hidden: Subgroup
    total_count: int
    class_weights: Tuple[float, ...]
    p_true: float
    snr: float
    rows: Tuple[FalseSignalRow, ...]


def leakage_report(
    training: TrainingSet,
    hidden: Optional[Subgroup] = None,
    candidates: Optional[Sequence[Subgroup]] = None,
) -> LeakageReport:
    """Annihilator mass, SNR, and per-candidate false-signal rows."""
    hidden = _resolve_hidden(training, hidden)
    if candidates is None:
        candidates = enumerate_subgroups(training.group)
    rows = tuple(
        false_signal_mass(training, cand, hidden) for cand in candidates
    )
    return LeakageReport(
        group=training.group,
        hidden=hidden,
        total_count=training.total_count,
        class_weights=tuple(_class_root_weights(training)),
        p_true=annihilator_mass(training, hidden),
        snr=snr(training, hidden),
        rows=rows,
    )
