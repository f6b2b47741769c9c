"""Pure NumPy implementations of the computational kernels.

These mirror the compiled versions in ``_kernels.pyx`` exactly; the
dispatcher in ``kernels`` selects whichever backend is available.  All
functions take flat element indices under the row-major mixed-radix
convention of :mod:`hsplearn.groups`.
"""

from __future__ import annotations

import math
from typing import Dict, Sequence, Tuple

import numpy as np

__all__ = [
    "closure_from_generators",
    "closure_contains",
    "extension_check",
    "mixed_radix_qft",
]


def _residues(factors: Tuple[int, ...], idx: np.ndarray) -> np.ndarray:
    k = len(factors)
    out = np.empty((len(idx), k), dtype=np.int64)
    stride = 1
    for axis in range(k - 1, -1, -1):
        out[:, axis] = (idx // stride) % factors[axis]
        stride *= factors[axis]
    return out


def _closure_rounds(factors: Tuple[int, ...], generators: Sequence[int]):
    """Grow the closure of the generators by repeated translation.

    Yields the current sorted element-index array after each round, stopping
    once the set is stable.
    """
    factors = tuple(int(n) for n in factors)
    gens = np.unique(np.asarray(list(generators), dtype=np.int64)) if generators else np.empty(0, np.int64)
    if not factors:
        yield np.zeros(1, dtype=np.int64)
        return
    current = np.unique(np.concatenate([[0], gens])).astype(np.int64)
    fac = np.array(factors, dtype=np.int64)
    strides = np.cumprod(np.concatenate([[1], fac[::-1][:-1]]))[::-1]
    gen_res = _residues(factors, gens)
    while True:
        yield current
        if len(gens) == 0:
            return
        cur_res = _residues(factors, current)
        summed = (cur_res[:, None, :] + gen_res[None, :, :]) % fac
        flat = (summed.reshape(-1, len(factors)) @ strides).astype(np.int64)
        grown = np.unique(np.concatenate([current, flat]))
        if len(grown) == len(current):
            return
        current = grown


def closure_from_generators(factors: Sequence[int], generators: Sequence[int]) -> np.ndarray:
    """Sorted flat indices of the subgroup generated by the given elements."""
    result = None
    for result in _closure_rounds(tuple(factors), list(generators)):
        pass
    return result


def closure_contains(
    factors: Sequence[int], base: Sequence[int], extra: int, target: int
) -> bool:
    """Whether ``target`` lies in the closure of ``base`` plus one extra element.

    Checks after every growth round, so membership refutations in
    independence testing usually stop before the full closure is built.
    """
    gens = list(base) + [int(extra)]
    target = int(target)
    for current in _closure_rounds(tuple(factors), gens):
        pos = int(np.searchsorted(current, target))
        if pos < len(current) and current[pos] == target:
            return True
    return False


def extension_check(
    factors: Sequence[int], base: Sequence[int], extra: int, min_size: int
) -> int:
    """Closure size of ``base`` plus ``extra`` if the multiset is independent.

    Returns 0 when the closure is smaller than ``min_size`` or when any
    element of the extended multiset lies in the closure of the others.
    Fusing the two tests into one call keeps search loops off the slow path.
    """
    gens = [int(g) for g in base] + [int(extra)]
    size = len(closure_from_generators(factors, gens))
    if size < min_size:
        return 0
    for pos, target in enumerate(gens):
        rest = gens[:pos] + gens[pos + 1 :]
        if not rest:
            if target == 0:
                return 0
            continue
        if closure_contains(factors, rest[:-1], rest[-1], target):
            return 0
    return size


_DFT_CACHE: Dict[Tuple[int, bool], np.ndarray] = {}


def _dft_matrix(n: int, inverse: bool) -> np.ndarray:
    """Unitary DFT matrix of size n; forward kernel exp(-2*pi*i*a*b/n)/sqrt(n)."""
    key = (n, inverse)
    if key not in _DFT_CACHE:
        a = np.arange(n, dtype=np.int64)
        phase = np.outer(a, a) % n
        sign = 2.0j if inverse else -2.0j
        _DFT_CACHE[key] = np.exp(sign * np.pi * phase / n) / math.sqrt(n)
    return _DFT_CACHE[key]


def mixed_radix_qft(
    amps: np.ndarray, factors: Sequence[int], inverse: bool = False
) -> np.ndarray:
    """Apply the dense per-axis DFT to a flat amplitude vector.

    The vector is viewed as a tensor of shape ``factors`` (row-major) and a
    unitary DFT is applied along each axis.  Returns a new array.
    """
    factors = tuple(int(n) for n in factors)
    order = math.prod(factors) if factors else 1
    amps = np.asarray(amps, dtype=np.complex128)
    if amps.shape != (order,):
        raise ValueError(f"amplitude vector has shape {amps.shape}, expected ({order},)")
    if not factors:
        return amps.copy()
    tensor = amps.reshape(factors)
    for axis, n in enumerate(factors):
        w = _dft_matrix(n, inverse)
        tensor = np.moveaxis(np.tensordot(w, tensor, axes=([1], [axis])), 0, axis)
    return np.ascontiguousarray(tensor.reshape(order))
