"""Standard hidden-subgroup solver: Fourier sampling plus kernel intersection.

Each measured label y constrains the hidden subgroup to the character kernel
K_y; intersecting kernels over successive draws shrinks to the hidden
subgroup itself.  The stopping rule declares convergence after the running
intersection survives ``c`` consecutive draws without shrinking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple

import numpy as np

from .groups import (
    Group,
    GroupElement,
    GroupMismatchError,
    Subgroup,
    annihilator,
    character_kernel,
)
from .states import coset_state, qft_apply

__all__ = [
    "SolverRun",
    "FourierSampler",
    "fourier_sample_label",
    "kernel_intersection_solve",
    "solve_hsp",
    "recommended_samples",
]

LabelSampler = Callable[[np.random.Generator], GroupElement]

# Per-group memo of label -> kernel bitmask; pure function of the group.
_KERNEL_MASKS: Dict[Tuple[int, ...], Dict[int, int]] = {}


def _kernel_mask(group: Group, label: int) -> int:
    masks = _KERNEL_MASKS.setdefault(group.factors, {})
    if label not in masks:
        mask = 0
        for idx in character_kernel(group, label).elements:
            mask |= 1 << idx
        masks[label] = mask
    return masks[label]


def _mask_to_subgroup(group: Group, mask: int) -> Subgroup:
    elements = []
    idx = 0
    while mask:
        if mask & 1:
            elements.append(idx)
        mask >>= 1
        idx += 1
    return Subgroup(group, tuple(elements))


class FourierSampler:
    """Draws Fourier-measurement labels from the coset-state ensemble of a subgroup.

    ``method="direct"`` samples the known uniform distribution on the
    annihilator; ``method="simulate"`` prepares a random coset state, applies
    the transform, and measures.  The two agree in distribution.
    """

    def __init__(self, hidden: Subgroup, method: str = "direct"):
        if method not in ("direct", "simulate"):
            raise ValueError(f"unknown sampling method {method!r}")
        self.hidden = hidden
        self.group = hidden.group
        self.method = method
        self._ann_elements = annihilator(hidden).elements

    def __call__(self, rng: np.random.Generator) -> GroupElement:
        return self.group.element_at(self.sample_index(rng))

    def sample_index(self, rng: np.random.Generator) -> int:
        if self.method == "direct":
            return int(self._ann_elements[rng.integers(len(self._ann_elements))])
        rep = self.group.element_at(int(rng.integers(self.group.order)))
        state = qft_apply(coset_state(rep, self.hidden))
        dist = state.probabilities()
        return int(rng.choice(self.group.order, p=dist / dist.sum()))


def fourier_sample_label(
    hidden: Subgroup, rng: np.random.Generator, method: str = "direct"
) -> GroupElement:
    """One Fourier-measurement label for the given hidden subgroup."""
    return FourierSampler(hidden, method)(rng)


@dataclass(frozen=True)
class SolverRun:
    """Trajectory and verdict of one kernel-intersection run.

    ``kernels`` holds the running intersection after each draw when step
    recording is on; ``success`` is None when no ground truth was supplied.
    """

    group: Group
    result: Subgroup
    stabilized: bool
    steps: int
    samples: Tuple[GroupElement, ...] = field(default=())
    kernels: Tuple[Subgroup, ...] = field(default=())
    success: Optional[bool] = None


def kernel_intersection_solve(
    group: Group,
    sampler: LabelSampler,
    rng: np.random.Generator,
    c: int = 8,
    max_steps: int = 256,
    truth: Optional[Subgroup] = None,
    record_steps: bool = True,
) -> SolverRun:
    """Intersect character kernels of sampled labels until stable for c draws.

    The stability counter resets whenever the intersection strictly shrinks.
    ``record_steps=False`` skips storing the per-step trajectory, which makes
    large failure-rate sweeps cheap without changing any decision logic.
    """
    if c < 1:
        raise ValueError("stabilization threshold c must be at least 1")
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    if truth is not None and truth.group != group:
        raise GroupMismatchError("ground-truth subgroup belongs to a different group")

    full_mask = (1 << group.order) - 1
    current = full_mask
    streak = 0
    steps = 0
    samples = []
    trail = []
    stabilized = False
    while steps < max_steps:
        label = sampler(rng)
        if label.group != group:
            raise GroupMismatchError("sampler returned a label from a different group")
        steps += 1
        reduced = current & _kernel_mask(group, label.index)
        if reduced != current:
            current = reduced
            streak = 1
        else:
            streak += 1
        if record_steps:
            samples.append(label)
            trail.append(_mask_to_subgroup(group, current))
        if streak >= c:
            stabilized = True
            break
    result = trail[-1] if trail else _mask_to_subgroup(group, current)
    return SolverRun(
        group=group,
        result=result,
        stabilized=stabilized,
        steps=steps,
        samples=tuple(samples),
        kernels=tuple(trail),
        success=None if truth is None else result == truth,
    )


def solve_hsp(
    group: Group,
    hidden: Subgroup,
    rng: np.random.Generator,
    c: int = 8,
    max_steps: int = 256,
    method: str = "direct",
    record_steps: bool = True,
) -> SolverRun:
    """Run the standard solver against a known hidden subgroup."""
    if hidden.group != group:
        raise GroupMismatchError("hidden subgroup belongs to a different group")
    sampler = FourierSampler(hidden, method)
    return kernel_intersection_solve(
        group,
        sampler,
        rng,
        c=c,
        max_steps=max_steps,
        truth=hidden,
        record_steps=record_steps,
    )


def recommended_samples(order: int, delta: float) -> int:
    """Draw count sufficient for failure probability at most delta.

    Uses ceil(log2 order) * t + t with t = ceil(log2(1/delta)): each of the
    at most log2(order) strict shrink levels is allotted t draws, plus t
    confirmation draws.  Always at least 1.
    """
    if order < 1:
        raise ValueError("group order must be positive")
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    t = math.ceil(math.log2(1.0 / delta))
    levels = math.ceil(math.log2(order)) if order > 1 else 0
    return max(levels * t + t, 1)
