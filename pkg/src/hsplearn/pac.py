"""PAC-learning view: binary coset examples, VC dimension, shattering searches.

The concept class is the family of coset-equivalence relations indexed by
subgroups; a pair (x, x') is a positive example when x - x' lies in the
subgroup.  A pair set is shattered exactly when the multiset of pairwise
differences is independent: no difference lies in the closure of the others.
The closed-form dimension counts the prime-power cyclic summands of the
group; the brute-force searches here exist to audit that formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import kernels
from .groups import (
    Group,
    GroupElement,
    GroupMismatchError,
    Subgroup,
    decompose_prime_power,
    enumerate_subgroups,
    iter_abelian_factorizations,
)
from .states import TrainingSet

__all__ = [
    "BinaryExample",
    "VcReport",
    "AuditRow",
    "SampleComplexity",
    "binary_examples",
    "vc_dimension",
    "independent_elements",
    "shattering_check",
    "max_shattered_size",
    "vc_report",
    "conjecture_audit",
    "sample_complexity",
]


class BinaryExample(NamedTuple):
    """Unordered labeled-sample pair; positive when both carry the same label."""

    first: GroupElement
    second: GroupElement
    same_coset: bool


def binary_examples(training: TrainingSet) -> List[BinaryExample]:
    """All unordered pairs of distinct training inputs, in sample order.

    A training set with N distinct inputs yields N(N-1)/2 pairs; the binary
    label compares the stored class labels, so the hidden subgroup itself is
    not consulted.
    """
    rows = training.samples
    out = []
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            (x, lx), (y, ly) = rows[i], rows[j]
            out.append(BinaryExample(first=x, second=y, same_coset=lx == ly))
    return out


def vc_dimension(group: Group) -> int:
    """Number of prime-power cyclic summands of the group."""
    return len(decompose_prime_power(group))


def independent_elements(group: Group, elements: Sequence[int]) -> bool:
    """Whether no element lies in the closure of the remaining ones.

    Takes flat indices; a repeated index or the identity makes the multiset
    dependent.
    """
    items = [int(e) for e in elements]
    for i, target in enumerate(items):
        rest = items[:i] + items[i + 1 :]
        if not rest:
            if target == 0:
                return False
            continue
        if kernels.closure_contains(group.factors, rest[:-1], rest[-1], target):
            return False
    return True


def shattering_check(
    group: Group,
    pairs: Sequence[Tuple[GroupElement, GroupElement]],
    max_pairs: int = 20,
) -> bool:
    """Whether the pair set is shattered by the subgroup relation family.

    Runs the exhaustive search over all subgroups and cross-checks it against
    independence of the difference multiset; a disagreement would be an
    internal error and raises RuntimeError.
    """
    if len(pairs) > max_pairs:
        raise ValueError(f"{len(pairs)} pairs exceed the shattering search cap {max_pairs}")
    diffs = []
    for a, b in pairs:
        if a.group != group or b.group != group:
            raise GroupMismatchError("pair elements belong to a different group")
        diffs.append((b - a).index)
    if not diffs:
        return True
    patterns = set()
    for sub in enumerate_subgroups(group):
        members = sub.member_set
        patterns.add(sum(1 << i for i, d in enumerate(diffs) if d in members))
    brute = len(patterns) == 2 ** len(diffs)
    indep = independent_elements(group, diffs)
    if brute != indep:
        raise RuntimeError(
            f"shattering search ({brute}) disagrees with independence test ({indep}) "
            f"for differences {diffs} in {group!r}"
        )
    return brute


def _canonical_independent_set(group: Group) -> List[int]:
    """One element per prime-power summand: a guaranteed independent seed."""
    seed = []
    for pos, n in enumerate(group.factors):
        rem = n
        d = 2
        while d * d <= rem:
            if rem % d == 0:
                q = 1
                while rem % d == 0:
                    rem //= d
                    q *= d
                residues = [0] * len(group.factors)
                residues[pos] = n // q  # order-q element in coordinate pos
                seed.append(group.flat_index(residues))
            d += 1
        if rem > 1:
            residues = [0] * len(group.factors)
            residues[pos] = n // rem
            seed.append(group.flat_index(residues))
    return seed


def max_shattered_size(group: Group) -> int:
    """Size of the largest shatterable pair set, by exhaustive independence search.

    Depth-first search over independent difference sets in increasing flat
    index, pruned by the Lagrange bound: a set of size m plus its remaining
    doubling capacity log2(|G| / |closure|) cannot beat the incumbent.  The
    incumbent starts at the canonical one-element-per-summand seed.  Runtime
    is exponential in the 2-rank; the compiled kernel backend is recommended
    for the larger audits.
    """
    if group.order == 1:
        return 0
    factors = group.factors
    n = group.order
    seed = _canonical_independent_set(group)
    if not independent_elements(group, seed):
        raise RuntimeError(f"canonical seed {seed} unexpectedly dependent in {group!r}")
    best = len(seed)

    closure = kernels.closure_from_generators
    extend = kernels.extension_check

    def walk(chosen: List[int], closed: set, closed_size: int) -> None:
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        # Every independent extension at least doubles the closure, so the
        # branch tops out at depth + remaining doubling capacity.
        headroom = n // (2 * closed_size)
        if headroom == 0 or len(chosen) + 1 + (headroom.bit_length() - 1) <= best:
            return
        start = (chosen[-1] + 1) if chosen else 1
        for g in range(start, n):
            if g in closed:
                continue
            size = extend(factors, chosen, g, 2 * closed_size)
            if size == 0:
                continue  # dependent, or some collision collapsed the closure
            potential = len(chosen) + 1 + ((n // size).bit_length() - 1)
            if potential <= best:
                continue
            grown = closure(factors, chosen + [g])
            walk(chosen + [g], set(int(e) for e in grown), size)

    walk([], {0}, 1)
    return best


@dataclass(frozen=True)
class VcReport:
    """Closed-form dimension next to its brute-force audit value."""

    group: Group
    closed_form: int
    decomposition: Tuple[Tuple[int, int], ...]
    brute_force: Optional[int] = None
    agree: Optional[bool] = None


def vc_report(group: Group, brute_force: bool = False) -> VcReport:
    closed = vc_dimension(group)
    if not brute_force:
        return VcReport(
            group=group, closed_form=closed, decomposition=decompose_prime_power(group)
        )
    brute = max_shattered_size(group)
    return VcReport(
        group=group,
        closed_form=closed,
        decomposition=decompose_prime_power(group),
        brute_force=brute,
        agree=brute == closed,
    )


@dataclass(frozen=True)
class AuditRow:
    """One audit line: does the closed form survive brute force, and is it additive."""

    factors: Tuple[int, ...]
    closed_form: int
    brute_force: int
    agree: bool
    cyclic_part_sum: int
    additive: bool


def conjecture_audit(max_order: int = 72) -> List[AuditRow]:
    """Brute-force audit of the dimension formula over all groups up to max_order.

    For every abelian group (up to isomorphism) the exhaustive shattering
    maximum is compared against the closed form, and against the sum over
    the group's cyclic factors, which probes additivity across direct sums.
    Rows are reported, not asserted, so callers decide what failure means.
    """
    cyclic_cache: Dict[int, int] = {}

    def cyclic_mu(n: int) -> int:
        if n not in cyclic_cache:
            cyclic_cache[n] = max_shattered_size(Group([n]))
        return cyclic_cache[n]

    rows = []
    for factors in iter_abelian_factorizations(max_order):
        group = Group(factors)
        closed = vc_dimension(group)
        brute = max_shattered_size(group)
        part_sum = sum(cyclic_mu(n) for n in factors)
        rows.append(
            AuditRow(
                factors=factors,
                closed_form=closed,
                brute_force=brute,
                agree=brute == closed,
                cyclic_part_sum=part_sum,
                additive=brute == part_sum,
            )
        )
    return rows


class SampleComplexity(NamedTuple):
    n_binary: int
    n_labeled: int


def sample_complexity(
    group: Group, epsilon: float, delta: float, constant: float = 1.0
) -> SampleComplexity:
    """Binary-example budget for (epsilon, delta) PAC learning, and the
    labeled-sample count whose pair expansion reaches it.

    n_binary = ceil(constant * (d + ln(1/delta)) / epsilon) with d the
    closed-form dimension; n_labeled = ceil(sqrt(2 * n_binary)) inverts the
    pair count N(N-1)/2 asymptotically.  The conversion treats pairs as
    independent, which they are not, so it is an estimate rather than a
    per-instance guarantee; one extra labeled sample always covers the budget.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    if not 0 < delta < 1:
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    if constant <= 0:
        raise ValueError(f"constant must be positive, got {constant}")
    d = vc_dimension(group)
    n_binary = math.ceil(constant * (d + math.log(1.0 / delta)) / epsilon)
    n_labeled = math.ceil(math.sqrt(2.0 * n_binary))
    return SampleComplexity(n_binary=n_binary, n_labeled=n_labeled)
