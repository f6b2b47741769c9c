"""Characters of finite abelian groups.

A label y (itself a group element) names the character
chi_y(g) = exp(2*pi*i * sum_i y_i g_i / n_i).  Phase numerators are held as
exact integers modulo the group exponent, so orthogonality and kernel
membership never rely on floating-point comparisons.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .groups import Group, GroupElement, GroupMismatchError, Subgroup

__all__ = ["Character", "chi_eval", "char_sum"]


def _phase_numerator(y: GroupElement, g: GroupElement) -> int:
    group = y.group
    L = group.exponent
    total = 0
    for yi, gi, n in zip(y.residues, g.residues, group.factors):
        total += yi * gi * (L // n)
    return total % L


def chi_eval(y: GroupElement, g: GroupElement) -> complex:
    """Value of the character labeled y at g (a root of unity)."""
    if y.group != g.group:
        raise GroupMismatchError("character label and argument belong to different groups")
    group = y.group
    if not group.factors:
        return 1.0 + 0.0j
    num = _phase_numerator(y, g)
    return cmath.exp(2j * cmath.pi * num / group.exponent)


@dataclass(frozen=True)
class Character:
    """Callable character chi_label; symmetric in label and argument."""

    label: GroupElement

    @property
    def group(self) -> Group:
        return self.label.group

    def __call__(self, g: GroupElement) -> complex:
        return chi_eval(self.label, g)

    def values(self) -> np.ndarray:
        """Character values over the whole group in flat-index order."""
        group = self.group
        return np.array([chi_eval(self.label, g) for g in group], dtype=np.complex128)


def char_sum(y: GroupElement, elements: Union[Subgroup, Iterable[GroupElement]]) -> complex:
    """Sum of chi_y over a nonempty collection of group elements.

    Summing over a subgroup gives |H| when y annihilates it and 0 otherwise.
    """
    group = y.group
    if isinstance(elements, Subgroup):
        if elements.group != group:
            raise GroupMismatchError("subgroup belongs to a different group")
        items = [group.element_at(i) for i in elements.elements]
    else:
        items = list(elements)
    if not items:
        raise ValueError("char_sum over an empty collection is undefined")
    total = 0.0 + 0.0j
    for g in items:
        total += chi_eval(y, g)
    return total
