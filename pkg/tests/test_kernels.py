"""Backend parity: the compiled closure/transform kernels must match the
pure-Python implementations exactly, and both must match slow references."""

from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from hsplearn import Group, kernels
from hsplearn import _kernels_py as pure

from conftest import brute_force_closure, naive_character_matrix

compiled = pytest.importorskip(
    "hsplearn._kernels", reason="compiled backend not built"
)

GRIDS = [(2,), (12,), (2, 2), (4, 3), (2, 2, 2), (3, 3, 2), (6, 6), (4, 2, 2, 2)]


def random_cases(factors, rng, count=60):
    order = int(np.prod(factors)) if factors else 1
    for _ in range(count):
        n_gens = int(rng.integers(0, 4))
        yield [int(g) for g in rng.integers(order, size=n_gens)]


class TestClosureParity:
    def test_closure_matches_pure_and_brute_force(self) -> None:
        rng = np.random.default_rng(17)
        for factors in GRIDS:
            group = Group(factors)
            for gens in random_cases(factors, rng):
                fast = compiled.closure_from_generators(factors, gens)
                slow = pure.closure_from_generators(factors, gens)
                assert list(fast) == list(slow)
                assert set(int(e) for e in fast) == brute_force_closure(group, gens)

    def test_closure_is_sorted_and_contains_identity(self) -> None:
        rng = np.random.default_rng(23)
        for factors in GRIDS:
            for gens in random_cases(factors, rng, count=20):
                out = compiled.closure_from_generators(factors, gens)
                assert out[0] == 0
                assert list(out) == sorted(int(e) for e in out)

    def test_trivial_factors(self) -> None:
        for backend in (compiled, pure):
            assert list(backend.closure_from_generators((), [])) == [0]


class TestContainsParity:
    def test_contains_matches_membership(self) -> None:
        rng = np.random.default_rng(29)
        for factors in GRIDS:
            order = int(np.prod(factors))
            for gens in random_cases(factors, rng, count=30):
                if not gens:
                    continue
                closure = set(
                    int(e) for e in pure.closure_from_generators(factors, gens)
                )
                for target in rng.integers(order, size=8):
                    expected = int(target) in closure
                    got_fast = compiled.closure_contains(
                        factors, gens[:-1], gens[-1], int(target)
                    )
                    got_slow = pure.closure_contains(
                        factors, gens[:-1], gens[-1], int(target)
                    )
                    assert bool(got_fast) == bool(got_slow) == expected


class TestExtensionCheckParity:
    def oracle(self, factors, base, extra, min_size) -> int:
        """Independence of the extended multiset, decided by leave-one-out closures."""
        gens = list(base) + [extra]
        closure = set(int(e) for e in pure.closure_from_generators(factors, gens))
        if len(closure) < min_size:
            return 0
        for pos in range(len(gens)):
            rest = gens[:pos] + gens[pos + 1 :]
            rest_closure = set(
                int(e) for e in pure.closure_from_generators(factors, rest)
            )
            if gens[pos] in rest_closure:
                return 0
        return len(closure)

    def test_matches_oracle_on_random_cases(self) -> None:
        rng = np.random.default_rng(31)
        for factors in GRIDS:
            order = int(np.prod(factors))
            for base in random_cases(factors, rng, count=40):
                extra = int(rng.integers(order))
                min_size = int(rng.choice([0, 2, 4, order]))
                expected = self.oracle(factors, base, extra, min_size)
                assert compiled.extension_check(factors, base, extra, min_size) == expected
                assert pure.extension_check(factors, base, extra, min_size) == expected

    def test_duplicate_generator_is_dependent(self) -> None:
        factors = (2, 2)
        for backend in (compiled, pure):
            assert backend.extension_check(factors, [1], 1, 0) == 0

    def test_identity_extra_is_dependent(self) -> None:
        for backend in (compiled, pure):
            assert backend.extension_check((12,), [], 0, 0) == 0

    def test_min_size_floor(self) -> None:
        # [1] generates all of Z12; floor above 12 suppresses the result.
        for backend in (compiled, pure):
            assert backend.extension_check((12,), [], 1, 12) == 12
            assert backend.extension_check((12,), [], 1, 13) == 0


class TestQftParity:
    def test_matches_pure_and_naive_matrix(self) -> None:
        rng = np.random.default_rng(37)
        for factors in GRIDS:
            group = Group(factors)
            mat = naive_character_matrix(group)
            for _ in range(10):
                vec = rng.normal(size=group.order) + 1j * rng.normal(size=group.order)
                vec /= np.linalg.norm(vec)
                fast = compiled.mixed_radix_qft(vec, factors)
                slow = pure.mixed_radix_qft(vec, factors)
                np.testing.assert_allclose(fast, slow, atol=1e-12)
                np.testing.assert_allclose(fast, mat @ vec, atol=1e-10)

    def test_inverse_round_trip(self) -> None:
        rng = np.random.default_rng(41)
        for backend in (compiled, pure):
            for factors in GRIDS:
                order = int(np.prod(factors))
                vec = rng.normal(size=order) + 1j * rng.normal(size=order)
                vec /= np.linalg.norm(vec)
                forward = backend.mixed_radix_qft(vec, factors)
                back = backend.mixed_radix_qft(forward, factors, inverse=True)
                np.testing.assert_allclose(back, vec, atol=1e-12)


class TestDispatch:
    @pytest.mark.skipif(
        os.environ.get("HSPLEARN_PURE") == "1", reason="pure backend forced"
    )
    def test_default_backend_is_compiled_here(self) -> None:
        assert kernels.BACKEND == "compiled"
        assert kernels.closure_from_generators is compiled.closure_from_generators

    def test_pure_fallback_env_switch(self) -> None:
        code = (
            "from hsplearn import kernels, KERNEL_BACKEND\n"
            "assert kernels.BACKEND == 'pure', kernels.BACKEND\n"
            "assert KERNEL_BACKEND == 'pure'\n"
            "print(kernels.BACKEND)\n"
        )
        env = dict(os.environ, HSPLEARN_PURE="1")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == "pure"
