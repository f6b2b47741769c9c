"""State vectors, training sets, and the partial coset ensembles they induce.

A labeled training set T = {(x, label)} over a group G induces the bipartite
state sum_x sqrt(w_x) |x>|label(x)>; tracing out the label register leaves a
mixture of one pure component per label class.  Fourier sampling of that
mixture is what every downstream diagnostic consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import (
    Hashable,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from . import kernels
from .groups import (
    Group,
    GroupElement,
    GroupMismatchError,
    Subgroup,
    coset_table,
)

__all__ = [
    "StateVector",
    "TrainingSet",
    "TrainingState",
    "MixtureComponent",
    "PartialCosetMixture",
    "SwapEstimate",
    "qft_apply",
    "uniform_superposition",
    "coset_state",
    "training_set",
    "training_set_with_replacement",
    "training_state",
    "partial_coset_mixture",
    "fourier_sampling_distribution",
    "sample_measurement",
    "fidelity_mixture",
    "swap_test_estimate",
]

_NORM_TOL = 1e-9

Label = Hashable


class StateVector:
    """Normalized pure state over the elements of a group, in flat-index order."""

    __slots__ = ("group", "amplitudes")

    def __init__(self, group: Group, amplitudes: np.ndarray):
        amps = np.asarray(amplitudes, dtype=np.complex128)
        if amps.shape != (group.order,):
            raise ValueError(
                f"amplitude vector has shape {amps.shape}, expected ({group.order},)"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"state vector norm {norm} deviates from 1 beyond {_NORM_TOL}")
        amps = amps.copy()
        amps.setflags(write=False)
        self.group = group
        self.amplitudes = amps

    def inner(self, other: "StateVector") -> complex:
        """<self|other> with the left argument conjugated."""
        if self.group != other.group:
            raise GroupMismatchError("states live on different groups")
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def __repr__(self) -> str:
        return f"StateVector(group={self.group!r})"


def qft_apply(state: StateVector, inverse: bool = False) -> StateVector:
    """Fourier transform of a state; forward then inverse is the identity."""
    out = kernels.mixed_radix_qft(state.amplitudes, state.group.factors, inverse)
    return StateVector(state.group, out)


def _coerce_element(group: Group, x: Union[GroupElement, Sequence[int], int]) -> GroupElement:
    if isinstance(x, GroupElement):
        if x.group != group:
            raise GroupMismatchError(f"element {x!r} belongs to a different group")
        return x
    if isinstance(x, int):
        return group.element_at(x)
    return group.element(x)


def uniform_superposition(
    group: Group, support: Iterable[Union[GroupElement, Sequence[int], int]]
) -> StateVector:
    """Equal-amplitude state over a nonempty set of elements (duplicates merged)."""
    indices = sorted({_coerce_element(group, x).index for x in support})
    if not indices:
        raise ValueError("support of a uniform superposition must be nonempty")
    amps = np.zeros(group.order, dtype=np.complex128)
    amps[indices] = 1.0 / math.sqrt(len(indices))
    return StateVector(group, amps)


def coset_state(rep: GroupElement, subgroup: Subgroup) -> StateVector:
    """Uniform superposition over the coset rep + H."""
    if rep.group != subgroup.group:
        raise GroupMismatchError("coset representative belongs to a different group")
    members = [rep + h for h in subgroup.element_list()]
    return uniform_superposition(rep.group, members)


class TrainingSet:
    """Labeled samples (x, label) with positive multiplicities.

    Distinct rows always carry distinct inputs; repeated draws of the same
    input are folded into the multiplicity.  When the hidden subgroup is
    known it is stored and the labeling is checked to be constant on its
    cosets and separating across them.
    """

    __slots__ = ("group", "samples", "multiplicities", "hidden")

    def __init__(
        self,
        group: Group,
        samples: Tuple[Tuple[GroupElement, Label], ...],
        multiplicities: Tuple[int, ...],
        hidden: Optional[Subgroup] = None,
    ):
        if not samples:
            raise ValueError("training set is empty")
        if len(samples) != len(multiplicities):
            raise ValueError("samples and multiplicities differ in length")
        seen = set()
        for (x, _), m in zip(samples, multiplicities):
            if m < 1:
                raise ValueError(f"multiplicity {m} is not a positive integer")
            if x.index in seen:
                raise ValueError(f"duplicate input element {x!r} in training set")
            seen.add(x.index)
        self.group = group
        self.samples = samples
        self.multiplicities = multiplicities
        self.hidden = hidden
        if hidden is not None:
            self._check_hidden(hidden)

    def _check_hidden(self, hidden: Subgroup) -> None:
        if hidden.group != self.group:
            raise GroupMismatchError("hidden subgroup belongs to a different group")
        table = coset_table(hidden)
        label_to_coset = {}
        coset_to_label = {}
        for x, label in self.samples:
            c = table.coset_index[x.index]
            if label_to_coset.setdefault(label, c) != c:
                raise ValueError(f"label {label!r} spans multiple cosets of the hidden subgroup")
            other = coset_to_label.setdefault(c, label)
            if other != label:
                raise ValueError(
                    f"labels {other!r} and {label!r} both name coset {c} of the hidden subgroup"
                )

    @property
    def total_count(self) -> int:
        """Number of drawn samples, multiplicities included."""
        return sum(self.multiplicities)

    @property
    def n_distinct(self) -> int:
        return len(self.samples)

    def labels(self) -> Tuple[Label, ...]:
        """Distinct labels in order of first appearance."""
        out: List[Label] = []
        for _, label in self.samples:
            if label not in out:
                out.append(label)
        return tuple(out)

    def class_members(self, label: Label) -> List[Tuple[GroupElement, int]]:
        """(element, multiplicity) pairs carrying the given label, in sample order."""
        return [
            (x, m)
            for (x, lab), m in zip(self.samples, self.multiplicities)
            if lab == label
        ]

    def __repr__(self) -> str:
        return (
            f"TrainingSet(group={self.group!r}, n_distinct={self.n_distinct}, "
            f"total={self.total_count}, labels={list(self.labels())})"
        )


def training_set(
    group: Group,
    pairs: Iterable[Tuple[Union[GroupElement, Sequence[int], int], Label]],
    hidden: Optional[Subgroup] = None,
) -> TrainingSet:
    """Training set of distinct inputs; a repeated input raises ValueError."""
    samples = tuple((_coerce_element(group, x), label) for x, label in pairs)
    return TrainingSet(group, samples, (1,) * len(samples), hidden)


def training_set_with_replacement(
    group: Group,
    pairs: Iterable[Tuple[Union[GroupElement, Sequence[int], int], Label]],
    hidden: Optional[Subgroup] = None,
) -> TrainingSet:
    """Training set from draws with replacement; repeats fold into multiplicities."""
    order: List[Tuple[GroupElement, Label]] = []
    counts: dict = {}
    labels_by_input: dict = {}
    for x, label in pairs:
        g = _coerce_element(group, x)
        prior = labels_by_input.setdefault(g.index, label)
        if prior != label:
            raise ValueError(f"input {g!r} drawn with conflicting labels {prior!r} and {label!r}")
        key = (g.index, label)
        if key not in counts:
            order.append((g, label))
            counts[key] = 0
        counts[key] += 1
    samples = tuple(order)
    mults = tuple(counts[(g.index, label)] for g, label in samples)
    return TrainingSet(group, samples, mults, hidden)


@dataclass(frozen=True)
class MixtureComponent:
    """One label class of a partial coset mixture."""

    label: Label
    weight: float
    support: Tuple[int, ...]
    state: StateVector


class PartialCosetMixture:
    """Mixture of one pure component per label class, weights summing to 1."""

    __slots__ = ("group", "components")

    def __init__(self, group: Group, components: Tuple[MixtureComponent, ...]):
        if not components:
            raise ValueError("mixture needs at least one component")
        total = sum(c.weight for c in components)
        if abs(total - 1.0) > _NORM_TOL:
            raise ValueError(f"component weights sum to {total}, expected 1")
        self.group = group
        self.components = components

    def labels(self) -> Tuple[Label, ...]:
        return tuple(c.label for c in self.components)

    def __repr__(self) -> str:
        return f"PartialCosetMixture(group={self.group!r}, n_components={len(self.components)})"


def partial_coset_mixture(training: TrainingSet) -> PartialCosetMixture:
    """Reduced state of the training bipartite state after tracing out labels.

    Component r carries weight (sum of class multiplicities)/N and amplitude
    proportional to sqrt(multiplicity) on each of its inputs.
    """
    group = training.group
    total = training.total_count
    components = []
    for label in training.labels():
        members = training.class_members(label)
        class_count = sum(m for _, m in members)
        amps = np.zeros(group.order, dtype=np.complex128)
        for x, m in members:
            amps[x.index] = math.sqrt(m / class_count)
        components.append(
            MixtureComponent(
                label=label,
                weight=class_count / total,
                support=tuple(x.index for x, _ in members),
                state=StateVector(group, amps),
            )
        )
    return PartialCosetMixture(group, tuple(components))


class TrainingState:
    """Bipartite state sum_x sqrt(w_x)|x>|label(x)> over group x label registers."""

    __slots__ = ("group", "labels", "amplitudes")

    def __init__(self, group: Group, labels: Tuple[Label, ...], amplitudes: np.ndarray):
        amps = np.asarray(amplitudes, dtype=np.complex128)
        if amps.shape != (group.order, len(labels)):
            raise ValueError(
                f"amplitude matrix has shape {amps.shape}, expected"
                f" ({group.order}, {len(labels)})"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > _NORM_TOL:
            raise ValueError(f"training state norm {norm} deviates from 1")
        amps = amps.copy()
        amps.setflags(write=False)
        self.group = group
        self.labels = labels
        self.amplitudes = amps

    def trace_out_labels(self) -> PartialCosetMixture:
        """Partial trace over the label register (zero-weight classes dropped)."""
        components = []
        for j, label in enumerate(self.labels):
            col = self.amplitudes[:, j]
            weight = float(np.vdot(col, col).real)
            if weight < 1e-15:
                continue
            state = StateVector(self.group, col / math.sqrt(weight))
            support = tuple(int(i) for i in np.flatnonzero(np.abs(col) > 0))
            components.append(
                MixtureComponent(label=label, weight=weight, support=support, state=state)
            )
        return PartialCosetMixture(self.group, tuple(components))


def training_state(
    training: TrainingSet, weights: Optional[Sequence[float]] = None
) -> TrainingState:
    """Training bipartite state; ``weights`` aligns with ``training.samples``.

    Default weights are multiplicity/total.  Explicit weights must be
    nonnegative and sum to 1.
    """
    group = training.group
    labels = training.labels()
    label_pos = {label: j for j, label in enumerate(labels)}
    if weights is None:
        total = training.total_count
        w = [m / total for m in training.multiplicities]
    else:
        w = [float(v) for v in weights]
        if len(w) != len(training.samples):
            raise ValueError(
                f"got {len(w)} weights for {len(training.samples)} samples"
            )
        if any(v < 0 for v in w):
            raise ValueError("weights must be nonnegative")
        if abs(sum(w) - 1.0) > _NORM_TOL:
            raise ValueError(f"weights sum to {sum(w)}, expected 1")
    amps = np.zeros((group.order, len(labels)), dtype=np.complex128)
    for (x, label), v in zip(training.samples, w):
        amps[x.index, label_pos[label]] = math.sqrt(v)
    return TrainingState(group, labels, amps)


MeasurableState = Union[StateVector, PartialCosetMixture, TrainingState]


def fourier_sampling_distribution(state: MeasurableState) -> np.ndarray:
    """Probability of each Fourier label under measurement after the transform."""
    if isinstance(state, TrainingState):
        state = state.trace_out_labels()
    if isinstance(state, StateVector):
        return qft_apply(state).probabilities()
    dist = np.zeros(state.group.order, dtype=np.float64)
    for comp in state.components:
        dist += comp.weight * qft_apply(comp.state).probabilities()
    return dist


def sample_measurement(
    state: Union[MeasurableState, np.ndarray],
    rng: np.random.Generator,
    shots: int = 1,
) -> np.ndarray:
    """Draw flat label indices from the Fourier sampling distribution."""
    if isinstance(state, np.ndarray):
        dist = np.asarray(state, dtype=np.float64)
    else:
        dist = fourier_sampling_distribution(state)
    dist = dist / dist.sum()
    return rng.choice(len(dist), size=int(shots), p=dist).astype(np.int64)


def fidelity_mixture(mixture: PartialCosetMixture, target: StateVector) -> float:
    """<target| rho |target> for the mixture's density operator rho."""
    if mixture.group != target.group:
        raise GroupMismatchError("mixture and target live on different groups")
    total = 0.0
    for comp in mixture.components:
        total += comp.weight * abs(comp.state.inner(target)) ** 2
    return float(total)


class SwapEstimate(NamedTuple):
    estimate: float
    stderr: float


def swap_test_estimate(
    mixture: Union[PartialCosetMixture, StateVector],
    target: StateVector,
    rng: np.random.Generator,
    shots: int,
) -> SwapEstimate:
    """Monte Carlo fidelity estimate from simulated SWAP-test outcomes.

    Each shot reports 1 with probability (1 - F)/2; the estimator is
    1 - 2*p_hat with the binomial standard error propagated through.
    """
    if shots < 1:
        raise ValueError("swap test needs at least one shot")
    if isinstance(mixture, StateVector):
        fid = abs(mixture.inner(target)) ** 2
    else:
        fid = fidelity_mixture(mixture, target)
    p_one = (1.0 - fid) / 2.0
    ones = int(rng.binomial(shots, p_one))
    p_hat = ones / shots
    estimate = 1.0 - 2.0 * p_hat
    stderr = 2.0 * math.sqrt(p_hat * (1.0 - p_hat) / shots)
    return SwapEstimate(estimate=estimate, stderr=stderr)
