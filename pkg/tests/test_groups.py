"""Group structure, subgroup enumeration, cosets, and annihilators."""

from __future__ import annotations

import numpy as np
import pytest

from hsplearn import (
    EnumerationBoundError,
    Group,
    GroupMismatchError,
    annihilator,
    character_kernel,
    chi_eval,
    coset_table,
    decompose_prime_power,
    element_order,
    enumerate_subgroups,
    full_subgroup,
    iter_abelian_factorizations,
    subgroup_from_generators,
    subgroup_intersection,
    trivial_subgroup,
)

from conftest import brute_force_closure

GRID = [(2,), (12,), (2, 2), (4, 2), (3, 3), (2, 2, 3), (6, 6)]

# Independently counted: subgroup lattices of small abelian groups.
SUBGROUP_COUNTS = {
    (12,): 6,
    (2, 2): 5,
    (4, 2): 8,
    (2, 2, 2): 16,
    (2, 2, 2, 2): 67,
    (6, 6): 30,
}


class TestGroup:
    def test_mixed_radix_round_trip(self) -> None:
        group = Group([4, 3, 2])
        for idx in range(group.order):
            element = group.element_at(idx)
            assert element.index == idx
            assert group.flat_index(element.residues) == idx

    def test_row_major_stride_order(self) -> None:
        group = Group([4, 3, 2])
        assert group.element((1, 0, 0)).index == 6
        assert group.element((0, 1, 0)).index == 2
        assert group.element((0, 0, 1)).index == 1

    def test_unit_factors_dropped(self) -> None:
        assert Group([1, 6, 1, 2]).factors == (6, 2)
        trivial = Group([1, 1])
        assert trivial.factors == ()
        assert trivial.order == 1
        assert trivial.identity().index == 0

    def test_invalid_factors_rejected(self) -> None:
        with pytest.raises(ValueError):
            Group([0, 3])
        with pytest.raises(ValueError):
            Group([-2])
        with pytest.raises(ValueError):
            Group([2.5])  # type: ignore[list-item]

    def test_exponent_is_lcm(self) -> None:
        assert Group([4, 6]).exponent == 12
        assert Group([2, 2, 2]).exponent == 2
        assert Group([1]).exponent == 1

    def test_element_reduces_modulo_factors(self) -> None:
        group = Group([4, 3])
        assert group.element((5, -1)).residues == (1, 2)
        with pytest.raises(ValueError):
            group.element((1, 2, 3))
        with pytest.raises(ValueError):
            group.element_at(12)

    def test_equality_and_hash(self) -> None:
        assert Group([6, 2]) == Group([6, 2])
        assert Group([6, 2]) != Group([12])
        assert hash(Group([6, 2])) == hash(Group([1, 6, 2]))
        assert repr(Group([6, 2])) == "Group([6, 2])"


class TestGroupElement:
    def test_arithmetic_identities(self) -> None:
        group = Group([4, 3, 2])
        rng = np.random.default_rng(7)
        for _ in range(50):
            a = group.element_at(int(rng.integers(group.order)))
            b = group.element_at(int(rng.integers(group.order)))
            assert (a + b) - b == a
            assert a + (-a) == group.identity()
            assert 3 * a == a + a + a
            assert 0 * a == group.identity()

    def test_mixed_group_arithmetic_rejected(self) -> None:
        a = Group([12]).element_at(3)
        b = Group([6, 2]).element_at(3)
        with pytest.raises(GroupMismatchError):
            _ = a + b

    def test_scalar_multiple_requires_int(self) -> None:
        a = Group([12]).element_at(3)
        with pytest.raises(TypeError):
            _ = 1.5 * a  # type: ignore[operator]

    def test_element_order_values(self) -> None:
        group = Group([12])
        orders = [element_order(group.element_at(i)) for i in range(12)]
        assert orders == [1, 12, 6, 4, 3, 12, 2, 12, 3, 4, 6, 12]

    def test_element_order_divides_exponent(self) -> None:
        group = Group([4, 6])
        for g in group:
            assert group.exponent % element_order(g) == 0


class TestSubgroups:
    def test_generated_subgroup_matches_brute_force(self) -> None:
        rng = np.random.default_rng(11)
        for factors in GRID:
            group = Group(factors)
            for _ in range(10):
                gens = [int(g) for g in rng.integers(group.order, size=2)]
                sub = subgroup_from_generators(group, gens)
                assert set(sub.elements) == brute_force_closure(group, gens)

    def test_generator_coercion(self) -> None:
        group = Group([4, 3])
        by_index = subgroup_from_generators(group, [3])
        by_residues = subgroup_from_generators(group, [(1, 0)])
        by_element = subgroup_from_generators(group, [group.element_at(3)])
        assert by_index.elements == by_residues.elements == by_element.elements
        with pytest.raises(ValueError):
            subgroup_from_generators(group, [12])

    def test_closure_property(self) -> None:
        group = Group([6, 6])
        sub = subgroup_from_generators(group, [7])
        members = [group.element_at(i) for i in sub.elements]
        for a in members:
            for b in members:
                assert (a + b).index in sub.member_set
                assert (-a).index in sub.member_set

    def test_trivial_and_full(self) -> None:
        group = Group([4, 3])
        assert trivial_subgroup(group).elements == (0,)
        full = full_subgroup(group)
        assert full.order == group.order
        regenerated = subgroup_from_generators(group, full.generators)
        assert regenerated.order == group.order

    def test_enumeration_counts(self) -> None:
        for factors, count in SUBGROUP_COUNTS.items():
            subs = enumerate_subgroups(Group(factors))
            assert len(subs) == count

    def test_enumeration_is_sorted_and_closed(self) -> None:
        group = Group([6, 2])
        subs = enumerate_subgroups(group)
        keys = [(s.order, s.elements) for s in subs]
        assert keys == sorted(keys)
        for sub in subs:
            assert group.order % sub.order == 0
            assert set(sub.elements) == brute_force_closure(group, list(sub.generators))

    def test_cyclic_subgroup_count_is_divisor_count(self) -> None:
        for n in (2, 9, 12, 30, 36):
            subs = enumerate_subgroups(Group([n]))
            divisors = [d for d in range(1, n + 1) if n % d == 0]
            assert len(subs) == len(divisors)
            assert sorted(s.order for s in subs) == divisors

    def test_enumeration_bound(self) -> None:
        with pytest.raises(EnumerationBoundError):
            enumerate_subgroups(Group([5003]))

    def test_intersection(self) -> None:
        group = Group([12])
        a = subgroup_from_generators(group, [2])
        b = subgroup_from_generators(group, [3])
        both = subgroup_intersection(a, b)
        assert both.elements == (0, 6)
        with pytest.raises(GroupMismatchError):
            subgroup_intersection(a, trivial_subgroup(Group([6, 2])))


class TestCosets:
    def test_representatives_are_minimal_and_consistent(self) -> None:
        for factors in GRID:
            group = Group(factors)
            for sub in enumerate_subgroups(group, bound=200):
                table = coset_table(sub)
                assert len(table.representatives) == group.order // sub.order
                for g in group:
                    rep = table.representative_of(g)
                    assert (g - rep).index in sub.member_set
                    assert rep.index <= g.index

    def test_coset_index_partition(self) -> None:
        group = Group([12])
        sub = subgroup_from_generators(group, [4])
        table = coset_table(sub)
        buckets: dict = {}
        for g in range(group.order):
            buckets.setdefault(table.coset_index[g], []).append(g)
        assert sorted(len(v) for v in buckets.values()) == [3, 3, 3, 3]


class TestAnnihilator:
    def test_z12_annihilators(self, z12) -> None:
        cases = {2: (0, 6), 4: (0, 3, 6, 9), 3: (0, 4, 8)}
        for gen, expected in cases.items():
            sub = subgroup_from_generators(z12, [gen])
            assert annihilator(sub).elements == expected

    def test_annihilator_characters_fix_subgroup(self) -> None:
        group = Group([6, 2])
        for sub in enumerate_subgroups(group):
            ann = annihilator(sub)
            for y in ann.elements:
                label = group.element_at(y)
                for h in sub.elements:
                    value = chi_eval(label, group.element_at(h))
                    assert value == pytest.approx(1.0)

    def test_order_product_and_duality(self) -> None:
        for factors in GRID:
            group = Group(factors)
            for sub in enumerate_subgroups(group, bound=200):
                ann = annihilator(sub)
                assert sub.order * ann.order == group.order
                assert annihilator(ann).elements == sub.elements

    def test_character_kernel(self) -> None:
        group = Group([12])
        kernel = character_kernel(group, group.element_at(6))
        assert kernel.elements == (0, 2, 4, 6, 8, 10)
        sub = subgroup_from_generators(group, [2])
        for y in annihilator(sub).elements:
            bigger = character_kernel(group, group.element_at(y))
            assert set(sub.elements) <= set(bigger.elements)


class TestDecomposition:
    def test_prime_power_decomposition(self) -> None:
        assert decompose_prime_power(Group([12])) == ((2, 2), (3, 1))
        assert decompose_prime_power(Group([6, 6])) == ((2, 1), (2, 1), (3, 1), (3, 1))
        assert decompose_prime_power(Group([8, 9])) == ((2, 3), (3, 2))
        assert decompose_prime_power(Group([1])) == ()

    def test_factorization_catalogue(self) -> None:
        classes = list(iter_abelian_factorizations(16))
        by_order: dict = {}
        for factors in classes:
            by_order.setdefault(int(np.prod(factors)), []).append(factors)
        # Partition counts: one class per multiset of prime-power factors.
        assert len(by_order[8]) == 3
        assert len(by_order[12]) == 2
        assert len(by_order[16]) == 5
        for factors in classes:
            assert tuple(sorted(factors, reverse=True)) == factors

    def test_catalogue_is_exhaustive_to_72(self) -> None:
        classes = list(iter_abelian_factorizations(72))
        assert len(classes) == 130
        assert len(set(classes)) == 130
