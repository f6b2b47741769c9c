"""Data-annihilator overlap: subgroup inference from labeled training data.

For a candidate subgroup K the reference state is the uniform superposition
over K (equivalently, the Fourier transform of the uniform superposition
over K's annihilator labels).  Each label class contributes the overlap
beta_r = sqrt(p_r) <psi_r|ref>; the squared norm of beta is the fidelity of
the training mixture against the reference, and the inference cost trades
that fidelity against a size penalty on the candidate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .groups import (
    Group,
    GroupElement,
    GroupMismatchError,
    Subgroup,
    annihilator,
    enumerate_subgroups,
    subgroup_from_generators,
    subgroup_intersection,
)
from .states import (
    PartialCosetMixture,
    StateVector,
    TrainingSet,
    partial_coset_mixture,
    qft_apply,
    uniform_superposition,
)

__all__ = [
    "DaoReport",
    "BiasTerms",
    "InferenceResult",
    "SweepPoint",
    "annihilator_state",
    "dao_vector",
    "dao_cost",
    "complete_data_overlap",
    "bias_terms",
    "infer_subgroup",
    "sweep_lambda",
    "lambda_window",
    "default_penalty",
]

_METHODS = ("dense", "closed_form")


def annihilator_state(candidate: Subgroup) -> StateVector:
    """Reference state of a candidate: QFT of the uniform state on its annihilator.

    In the computational basis this equals the uniform superposition over the
    candidate itself.
    """
    group = candidate.group
    ann = annihilator(candidate)
    return qft_apply(uniform_superposition(group, ann.elements))


@dataclass(frozen=True)
class DaoReport:
    """Overlap vector of one candidate against a training mixture.

    ``beta[r]`` is the contribution of label class r (in mixture component
    order); ``cost`` is populated only when a penalty weight was supplied.
    """

    candidate: Subgroup
    labels: Tuple[object, ...]
    beta: np.ndarray
    beta_norm: float
    annihilator_size: int
    lam: Optional[float] = None
    cost: Optional[float] = None

    def sort_key(self) -> Tuple[float, int, Tuple[int, ...]]:
        """Ranking key: cost, then smaller annihilator, then element order."""
        primary = self.cost if self.cost is not None else -self.beta_norm
        return (primary, self.annihilator_size, self.candidate.elements)


def _beta_dense(mixture: PartialCosetMixture, candidate: Subgroup) -> np.ndarray:
    ref = annihilator_state(candidate)
    beta = np.empty(len(mixture.components), dtype=np.complex128)
    for i, comp in enumerate(mixture.components):
        beta[i] = math.sqrt(comp.weight) * comp.state.inner(ref)
    return beta


def _beta_closed_form(training: TrainingSet, candidate: Subgroup) -> np.ndarray:
    """beta_r = sum_{x in X_r ∩ K} sqrt(n_x) / sqrt(N |K|), all in exact counts."""
    total = training.total_count
    members = candidate.member_set
    scale = 1.0 / math.sqrt(total * candidate.order)
    out = []
    for label in training.labels():
        acc = 0.0
        for x, m in training.class_members(label):
            if x.index in members:
                acc += math.sqrt(m)
        out.append(acc * scale)
    return np.array(out, dtype=np.complex128)


def dao_vector(
    training: TrainingSet, candidate: Subgroup, method: str = "dense"
) -> DaoReport:
    """Overlap vector and norm of a candidate subgroup against a training set."""
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {_METHODS}")
    if candidate.group != training.group:
        raise GroupMismatchError("candidate subgroup belongs to a different group")
    if method == "dense":
        mixture = partial_coset_mixture(training)
        beta = _beta_dense(mixture, candidate)
    else:
        beta = _beta_closed_form(training, candidate)
    return DaoReport(
        candidate=candidate,
        labels=training.labels(),
        beta=beta,
        beta_norm=float(np.linalg.norm(beta)),
        annihilator_size=annihilator(candidate).order,
    )


def default_penalty(group: Group) -> float:
    """Default size-penalty weight, small enough to act only as a tiebreaker."""
    return 1e-2 / group.order


def dao_cost(
    training: TrainingSet,
    candidate: Subgroup,
    lam: float,
    method: str = "dense",
) -> DaoReport:
    """Overlap report with cost -|beta| + lam * |candidate| attached.

    The penalty grows with the candidate's order, so among candidates with
    equal overlap norm the smallest subgroup wins.
    """
    if lam < 0:
        raise ValueError("penalty weight lam must be nonnegative")
    base = dao_vector(training, candidate, method)
    cost = -base.beta_norm + lam * candidate.order
    return DaoReport(
        candidate=base.candidate,
        labels=base.labels,
        beta=base.beta,
        beta_norm=base.beta_norm,
        annihilator_size=base.annihilator_size,
        lam=lam,
        cost=cost,
    )


def complete_data_overlap(hidden: Subgroup, candidate: Subgroup) -> float:
    """Squared overlap norm |beta|^2 when every coset of ``hidden`` is fully sampled.

    Closed form |H+K| * |H∩K|^2 / (|H| * |G| * |K|); every candidate that
    contains the hidden subgroup ties at 1/[G:H].
    """
    if hidden.group != candidate.group:
        raise GroupMismatchError("subgroups belong to different groups")
    group = hidden.group
    join = subgroup_from_generators(
        group, list(hidden.elements) + list(candidate.elements)
    )
    meet = subgroup_intersection(hidden, candidate)
    return (join.order * meet.order**2) / (hidden.order * group.order * candidate.order)


class BiasTerms(NamedTuple):
    """Coherent contribution of fully-covered cosets, and everything else."""

    alpha_one: float
    residual: float


def bias_terms(
    training: TrainingSet,
    candidate: Subgroup,
    hidden: Optional[Subgroup] = None,
) -> BiasTerms:
    """Split |beta|^2 into the label-aligned term and the sampling residual.

    The first term counts, per label class, the weight the class places on
    the join of the candidate and the hidden subgroup, scaled by the
    candidate's annihilator overlap with the hidden one; at full data it
    equals |beta|^2 exactly and the residual vanishes.
    """
    if hidden is None:
        hidden = training.hidden
    if hidden is None:
        raise ValueError("bias terms need the hidden subgroup (none stored on the training set)")
    if hidden.group != training.group:
        raise GroupMismatchError("hidden subgroup belongs to a different group")
    group = training.group
    ann_candidate = annihilator(candidate)
    ann_hidden = annihilator(hidden)
    ann_joint = subgroup_intersection(ann_candidate, ann_hidden)
    join = annihilator(ann_joint)  # equals hidden + candidate
    total = training.total_count

    alpha = 0.0
    for label in training.labels():
        members = training.class_members(label)
        rep = members[0][0]  # membership in join is constant on hidden cosets
        if rep.index not in join.member_set:
            continue
        weight = sum(math.sqrt(m) for _, m in members)
        alpha += (weight * ann_joint.order) ** 2
    alpha /= total * group.order * ann_candidate.order

    dense = dao_vector(training, candidate, method="dense")
    return BiasTerms(alpha_one=alpha, residual=dense.beta_norm**2 - alpha)


@dataclass(frozen=True)
class InferenceResult:
    """Ranked candidate reports; the winner is the first report's candidate."""

    winner: Subgroup
    reports: Tuple[DaoReport, ...]
    lam: float
    method: str


def infer_subgroup(
    training: TrainingSet,
    lam: Optional[float] = None,
    candidates: Optional[Sequence[Subgroup]] = None,
    method: str = "dense",
) -> InferenceResult:
    """Rank candidate subgroups by penalized overlap cost and pick the winner.

    Ties on cost break toward the smaller annihilator, then the canonical
    element order.  Candidates default to every subgroup of the group.
    """
    group = training.group
    if lam is None:
        lam = default_penalty(group)
    if candidates is None:
        candidates = enumerate_subgroups(group)
    if not candidates:
        raise ValueError("candidate list is empty")
    reports = sorted(
        (dao_cost(training, cand, lam, method) for cand in candidates),
        key=DaoReport.sort_key,
    )
    return InferenceResult(
        winner=reports[0].candidate,
        reports=tuple(reports),
        lam=lam,
        method=method,
    )


class SweepPoint(NamedTuple):
    lam: float
    result: InferenceResult


def sweep_lambda(
    training: TrainingSet,
    lambdas: Optional[Sequence[float]] = None,
    candidates: Optional[Sequence[Subgroup]] = None,
    method: str = "closed_form",
) -> List[SweepPoint]:
    """Inference outcome across a penalty grid, reusing one overlap pass.

    The overlap vector of each candidate does not depend on the penalty, so
    it is computed once and only the costs are rebuilt per grid point.
    """
    group = training.group
    if lambdas is None:
        lambdas = np.logspace(-6.0, 0.0, 25)
    if candidates is None:
        candidates = enumerate_subgroups(group)
    bases = [dao_vector(training, cand, method) for cand in candidates]
    points = []
    for lam in lambdas:
        lam = float(lam)
        reports = sorted(
            (
                DaoReport(
                    candidate=b.candidate,
                    labels=b.labels,
                    beta=b.beta,
                    beta_norm=b.beta_norm,
                    annihilator_size=b.annihilator_size,
                    lam=lam,
                    cost=-b.beta_norm + lam * b.candidate.order,
                )
                for b in bases
            ),
            key=DaoReport.sort_key,
        )
        points.append(
            SweepPoint(
                lam=lam,
                result=InferenceResult(
                    winner=reports[0].candidate,
                    reports=tuple(reports),
                    lam=lam,
                    method=method,
                ),
            )
        )
    return points


def lambda_window(
    sweep: Sequence[SweepPoint], target: Subgroup
) -> Optional[Tuple[float, float]]:
    """Smallest and largest swept penalty at which the target wins, if any."""
    hits = [p.lam for p in sweep if p.result.winner == target]
    if not hits:
        return None
    return (min(hits), max(hits))
