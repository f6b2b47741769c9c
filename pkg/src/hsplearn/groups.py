"""Finite abelian groups presented as direct sums of cyclic factors.

A group Z_{n1} + ... + Z_{nk} stores its factor list; elements are residue
tuples indexed by a row-major mixed-radix flat index, so every element of a
group of order N has a unique index in [0, N).  Subgroups are canonicalized
as sorted tuples of flat indices, which makes equality, hashing, and
serialization stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import kernels

__all__ = [
    "Group",
    "GroupElement",
    "Subgroup",
    "CosetTable",
    "GroupMismatchError",
    "EnumerationBoundError",
    "element_order",
    "subgroup_from_generators",
    "trivial_subgroup",
    "full_subgroup",
    "enumerate_subgroups",
    "coset_table",
    "subgroup_intersection",
    "annihilator",
    "character_kernel",
    "decompose_prime_power",
    "iter_abelian_factorizations",
]


class GroupMismatchError(ValueError):
    """Raised when elements or subgroups of different parent groups are mixed."""


class EnumerationBoundError(ValueError):
    """Raised when a group is too large for exhaustive enumeration."""


class Group:
    """Direct sum of cyclic groups with mixed-radix element indexing.

    Factors equal to 1 are dropped on construction; an empty factor list
    yields the trivial group, whose single element is the empty tuple.
    """

    __slots__ = ("factors", "order", "strides", "_residue_table", "_exponent")

    def __init__(self, factors: Iterable[int] = ()):
        cleaned: List[int] = []
        for raw in factors:
            n = int(raw)
            if n != raw:
                raise ValueError(f"factor {raw!r} is not an integer")
            if n <= 0:
                raise ValueError(f"factor {n} is not a positive integer")
            if n > 1:
                cleaned.append(n)
        self.factors: Tuple[int, ...] = tuple(cleaned)
        self.order: int = math.prod(self.factors)
        strides = []
        acc = 1
        for n in reversed(self.factors):
            strides.append(acc)
            acc *= n
        self.strides: Tuple[int, ...] = tuple(reversed(strides))
        self._residue_table: Optional[np.ndarray] = None
        self._exponent: Optional[int] = None

    @property
    def exponent(self) -> int:
        """Least common multiple of the cyclic factor orders (1 for the trivial group)."""
        if self._exponent is None:
            self._exponent = math.lcm(*self.factors) if self.factors else 1
        return self._exponent

    def residue_table(self) -> np.ndarray:
        """(order, k) int64 array whose row i holds the residues of flat index i."""
        if self._residue_table is None:
            k = len(self.factors)
            table = np.zeros((self.order, k), dtype=np.int64)
            idx = np.arange(self.order, dtype=np.int64)
            for axis in range(k):
                table[:, axis] = (idx // self.strides[axis]) % self.factors[axis]
            table.setflags(write=False)
            self._residue_table = table
        return self._residue_table

    def identity(self) -> "GroupElement":
        return GroupElement(self, (0,) * len(self.factors))

    def element(self, residues: Sequence[int]) -> "GroupElement":
        """Element with the given residues, reduced modulo each factor."""
        if len(residues) != len(self.factors):
            raise ValueError(
                f"expected {len(self.factors)} residues, got {len(residues)}"
            )
        reduced = tuple(int(r) % n for r, n in zip(residues, self.factors))
        return GroupElement(self, reduced)

    def element_at(self, index: int) -> "GroupElement":
        """Element with the given flat index."""
        index = int(index)
        if not 0 <= index < self.order:
            raise ValueError(f"flat index {index} outside [0, {self.order})")
        residues = []
        for n, s in zip(self.factors, self.strides):
            residues.append((index // s) % n)
        return GroupElement(self, tuple(residues))

    def flat_index(self, residues: Sequence[int]) -> int:
        return sum((int(r) % n) * s for r, n, s in zip(residues, self.factors, self.strides))

    def __iter__(self) -> Iterator["GroupElement"]:
        for i in range(self.order):
            yield self.element_at(i)

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Group) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(("Group", self.factors))

    def __repr__(self) -> str:
        return f"Group({list(self.factors)})"


class GroupElement:
    """Element of a :class:`Group`, stored as a reduced residue tuple."""

    __slots__ = ("group", "residues", "_index")

    def __init__(self, group: Group, residues: Tuple[int, ...]):
        self.group = group
        self.residues = residues
        self._index: Optional[int] = None

    @property
    def index(self) -> int:
        """Row-major mixed-radix flat index."""
        if self._index is None:
            self._index = sum(r * s for r, s in zip(self.residues, self.group.strides))
        return self._index

    def _check_group(self, other: "GroupElement") -> None:
        if self.group != other.group:
            raise GroupMismatchError(
                f"elements of {self.group!r} and {other.group!r} cannot be combined"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        self._check_group(other)
        res = tuple(
            (a + b) % n
            for a, b, n in zip(self.residues, other.residues, self.group.factors)
        )
        return GroupElement(self.group, res)

    def __neg__(self) -> "GroupElement":
        res = tuple((-a) % n for a, n in zip(self.residues, self.group.factors))
        return GroupElement(self.group, res)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int) -> "GroupElement":
        if not isinstance(k, int):
            return NotImplemented
        res = tuple((a * k) % n for a, n in zip(self.residues, self.group.factors))
        return GroupElement(self.group, res)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.group == other.group
            and self.residues == other.residues
        )

    def __hash__(self) -> int:
        return hash((self.group.factors, self.residues))

    def __repr__(self) -> str:
        return f"GroupElement{self.residues}"


def element_order(g: GroupElement) -> int:
    """Multiplicative order of g under repeated addition."""
    result = 1
    for r, n in zip(g.residues, g.group.factors):
        result = math.lcm(result, n // math.gcd(n, r))
    return result


class Subgroup:
    """Subgroup stored as a sorted tuple of flat element indices.

    Canonical form: two subgroups are equal exactly when their parent factors
    and element tuples agree.  A generating set is derived lazily when not
    supplied, so constructing a subgroup from a known-closed element set is
    cheap.
    """

    __slots__ = ("group", "elements", "_generators", "_member_set")

    def __init__(
        self,
        group: Group,
        elements: Tuple[int, ...],
        generators: Optional[Tuple[GroupElement, ...]] = None,
    ):
        self.group = group
        self.elements = elements
        self._generators = generators
        self._member_set: Optional[frozenset] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def member_set(self) -> frozenset:
        if self._member_set is None:
            self._member_set = frozenset(self.elements)
        return self._member_set

    @property
    def generators(self) -> Tuple[GroupElement, ...]:
        """A generating set whose closure equals the element set."""
        if self._generators is None:
            self._generators = tuple(
                self.group.element_at(i)
                for i in _greedy_generators(self.group, self.elements)
            )
        return self._generators

    def contains(self, x: Union[GroupElement, int]) -> bool:
        idx = x.index if isinstance(x, GroupElement) else int(x)
        return idx in self.member_set

    __contains__ = contains

    def element_list(self) -> List[GroupElement]:
        return [self.group.element_at(i) for i in self.elements]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Subgroup)
            and self.group == other.group
            and self.elements == other.elements
        )

    def __hash__(self) -> int:
        return hash((self.group.factors, self.elements))

    def __repr__(self) -> str:
        if self.order <= 12:
            return f"Subgroup(order={self.order}, elements={list(self.elements)})"
        return f"Subgroup(order={self.order}, group={self.group!r})"


def _greedy_generators(group: Group, elements: Sequence[int]) -> List[int]:
    """Small generating set for a closed element set, via greedy extension."""
    gens: List[int] = []
    have = {0}
    for e in elements:
        if e not in have:
            gens.append(e)
            have = set(
                int(i)
                for i in kernels.closure_from_generators(group.factors, gens)
            )
    return gens


def _coerce_flat(group: Group, item: Union[GroupElement, Sequence[int], int]) -> int:
    if isinstance(item, GroupElement):
        if item.group != group:
            raise GroupMismatchError(f"generator {item!r} belongs to a different group")
        return item.index
    if isinstance(item, int):
        if not 0 <= item < group.order:
            raise ValueError(f"flat index {item} outside [0, {group.order})")
        return item
    return group.element(item).index


def subgroup_from_generators(
    group: Group, generators: Iterable[Union[GroupElement, Sequence[int], int]]
) -> Subgroup:
    """Closure of the given generators (elements, residue tuples, or flat indices)."""
    gen_list = [_coerce_flat(group, g) for g in generators]
    closed = kernels.closure_from_generators(group.factors, gen_list)
    elements = tuple(int(i) for i in closed)
    gens = tuple(group.element_at(i) for i in dict.fromkeys(gen_list))
    return Subgroup(group, elements, gens)


def trivial_subgroup(group: Group) -> Subgroup:
    return Subgroup(group, (0,), ())


def full_subgroup(group: Group) -> Subgroup:
    gens = tuple(
        group.element_at(s) for s in group.strides
    )  # one generator per cyclic factor
    return Subgroup(group, tuple(range(group.order)), gens)


def enumerate_subgroups(group: Group, bound: int = 5000) -> List[Subgroup]:
    """All subgroups, sorted by (order, element tuple).

    Raises EnumerationBoundError when the group order exceeds ``bound``.
    Cyclic groups take a divisor-based fast path; the general case grows
    subgroups by closing each found subgroup with each outside element.
    """
    if group.order > bound:
        raise EnumerationBoundError(
            f"group order {group.order} exceeds enumeration bound {bound}"
        )
    if group.order == 1:
        return [trivial_subgroup(group)]
    if len(group.factors) == 1:
        n = group.order
        subs = []
        for d in sorted(_divisors(n)):
            gen = n // d  # cyclic subgroup of order d
            elements = tuple(sorted((gen * j) % n for j in range(d)))
            subs.append(Subgroup(group, elements, (group.element_at(gen % n),)))
        return subs

    found = {(0,): trivial_subgroup(group)}
    worklist = [(0,)]
    while worklist:
        base_key = worklist.pop()
        base = found[base_key]
        base_members = base.member_set
        base_gens = [g.index for g in base.generators]
        for g in range(1, group.order):
            if g in base_members:
                continue
            closed = kernels.closure_from_generators(group.factors, base_gens + [g])
            key = tuple(int(i) for i in closed)
            if key not in found:
                gens = base.generators + (group.element_at(g),)
                found[key] = Subgroup(group, key, gens)
                worklist.append(key)
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def _divisors(n: int) -> List[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return out


@dataclass(frozen=True)
class CosetTable:
    """Coset decomposition of a group by a subgroup.

    ``representatives`` holds the minimal-flat-index element of each coset in
    ascending order; ``coset_index`` maps every flat index to the position of
    its coset's representative.
    """

    subgroup: Subgroup
    representatives: Tuple[GroupElement, ...]
    coset_index: Tuple[int, ...]

    def representative_of(self, x: Union[GroupElement, int]) -> GroupElement:
        idx = x.index if isinstance(x, GroupElement) else int(x)
        return self.representatives[self.coset_index[idx]]


def coset_table(subgroup: Subgroup) -> CosetTable:
    """Partition of the parent group into cosets of ``subgroup``."""
    group = subgroup.group
    n = group.order
    res = group.residue_table()
    h_res = res[np.array(subgroup.elements, dtype=np.int64)]
    strides = np.array(group.strides, dtype=np.int64)
    factors = np.array(group.factors, dtype=np.int64)
    coset_of = np.full(n, -1, dtype=np.int64)
    reps: List[int] = []
    for g in range(n):
        if coset_of[g] >= 0:
            continue
        members = ((res[g] + h_res) % factors) @ strides if len(group.factors) else np.array([0])
        coset_of[members] = len(reps)
        reps.append(g)
    return CosetTable(
        subgroup=subgroup,
        representatives=tuple(group.element_at(r) for r in reps),
        coset_index=tuple(int(c) for c in coset_of),
    )


def subgroup_intersection(a: Subgroup, b: Subgroup) -> Subgroup:
    """Intersection of two subgroups of the same group."""
    if a.group != b.group:
        raise GroupMismatchError("cannot intersect subgroups of different groups")
    elements = tuple(sorted(a.member_set & b.member_set))
    return Subgroup(a.group, elements)


def _phase_numerators(group: Group, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """Integer phase numerators sum_i y_i * g_i * (L / n_i) mod L.

    chi_y(g) equals 1 exactly when the numerator vanishes, so annihilator
    and kernel computations stay in exact integer arithmetic.
    """
    if not group.factors:
        return np.zeros((len(rows), len(cols)), dtype=np.int64)
    L = group.exponent
    weights = np.array([L // n for n in group.factors], dtype=np.int64)
    res = group.residue_table()
    lhs = res[rows] * weights
    return (lhs @ res[cols].T) % L


def annihilator(subgroup: Subgroup) -> Subgroup:
    """Labels y with chi_y(h) = 1 for every h in the subgroup.

    The label set is itself a subgroup of the parent group under the
    componentwise identification of the dual group.
    """
    group = subgroup.group
    if group.order == 1:
        return trivial_subgroup(group)
    all_rows = np.arange(group.order, dtype=np.int64)
    cols = np.array(subgroup.elements, dtype=np.int64)
    phases = _phase_numerators(group, all_rows, cols)
    mask = (phases == 0).all(axis=1)
    elements = tuple(int(i) for i in np.flatnonzero(mask))
    return Subgroup(group, elements)


def character_kernel(group: Group, label: Union[GroupElement, int]) -> Subgroup:
    """Subgroup K_y = {g : chi_y(g) = 1} for the character labeled y."""
    y = label.index if isinstance(label, GroupElement) else int(label)
    if group.order == 1:
        return trivial_subgroup(group)
    rows = np.array([y], dtype=np.int64)
    cols = np.arange(group.order, dtype=np.int64)
    phases = _phase_numerators(group, rows, cols)[0]
    elements = tuple(int(i) for i in np.flatnonzero(phases == 0))
    return Subgroup(group, elements)


def decompose_prime_power(group: Group) -> Tuple[Tuple[int, int], ...]:
    """Cyclic factors of prime-power order as (prime, exponent) pairs.

    Each factor Z_n splits into one pair per prime dividing n; the result is
    sorted and keeps multiplicity, so its length is the total number of
    prime-power cyclic summands.
    """
    parts: List[Tuple[int, int]] = []
    for n in group.factors:
        for p, e in _factorize(n):
            parts.append((p, e))
    return tuple(sorted(parts))


def _factorize(n: int) -> List[Tuple[int, int]]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def iter_abelian_factorizations(max_order: int) -> Iterator[Tuple[int, ...]]:
    """Factor lists of every abelian group of order 2..max_order, up to isomorphism.

    For each order the prime-exponent partitions are combined, yielding one
    canonical factor tuple (prime-power factors, descending) per isomorphism
    class, in ascending group order.
    """
    for n in range(2, max_order + 1):
        choices: List[List[Tuple[int, ...]]] = []
        for p, e in _factorize(n):
            choices.append([tuple(p**part for part in parts) for parts in _partitions(e)])
        for combo in _product(choices):
            factors = tuple(sorted((f for fs in combo for f in fs), reverse=True))
            yield factors


def _partitions(n: int) -> List[Tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, acc: List[int]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            rec(remaining - part, part, acc + [part])

    rec(n, n, [])
    return out


def _product(choices: List[List[Tuple[int, ...]]]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    if not choices:
        yield ()
        return
    for head in choices[0]:
        for rest in _product(choices[1:]):
            yield (head,) + rest
