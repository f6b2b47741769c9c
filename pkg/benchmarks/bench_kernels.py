"""Compare the compiled and pure-Python kernel backends on the hot paths.

Times subgroup closure, fused independence checking, and the mixed-radix
transform on representative workloads, then prints per-kernel medians and
the compiled-over-pure speedup.  Exits nonzero if any backend pair disagrees
on its outputs, so the benchmark doubles as a smoke test.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats 5] [--csv out.csv]
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import timeit
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from hsplearn import _kernels_py as pure

try:
    from hsplearn import _kernels as compiled
except ImportError:
    compiled = None

CLOSURE_CASES: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = [
    ((12,), (2,)),
    ((6, 6), (7, 11)),
    ((2, 2, 2, 2), (5, 10, 3)),
    ((4, 4, 4), (21, 14)),
    ((2, 96), (3, 97)),
]

EXTENSION_CASES: List[Tuple[Tuple[int, ...], Tuple[int, ...], int, int]] = [
    ((2, 2, 2, 2), (8, 4), 2, 8),
    ((6, 6), (6,), 1, 12),
    ((4, 4, 4), (16,), 4, 16),
    ((12, 12), (13,), 26, 24),
]

QFT_ORDERS: List[Tuple[int, ...]] = [(12,), (6, 6), (144,), (12, 12), (8, 4, 9)]


def _bench(fn: Callable[[], Any], repeats: int) -> float:
    """Median seconds per call, with the call count auto-scaled per repeat."""
    number, _ = timeit.Timer(fn).autorange()
    times = timeit.repeat(fn, number=number, repeat=repeats)
    return statistics.median(t / number for t in times)


def _closure_row(backend, repeats: int) -> float:
    def run() -> None:
        for factors, gens in CLOSURE_CASES:
            backend.closure_from_generators(factors, gens)

    return _bench(run, repeats)


def _extension_row(backend, repeats: int) -> float:
    def run() -> None:
        for factors, base, extra, min_size in EXTENSION_CASES:
            backend.extension_check(factors, base, extra, min_size)

    return _bench(run, repeats)


def _qft_row(backend, repeats: int) -> float:
    rng = np.random.default_rng(0)
    states = []
    for factors in QFT_ORDERS:
        order = int(np.prod(factors))
        vec = rng.normal(size=order) + 1j * rng.normal(size=order)
        states.append((vec / np.linalg.norm(vec), factors))

    def run() -> None:
        for vec, factors in states:
            backend.mixed_radix_qft(vec, factors)

    return _bench(run, repeats)


def _check_parity() -> None:
    """Backends must agree exactly before their timings mean anything."""
    for factors, gens in CLOSURE_CASES:
        a = pure.closure_from_generators(factors, gens)
        b = compiled.closure_from_generators(factors, gens)
        if not np.array_equal(a, b):
            sys.exit(f"closure mismatch on {factors} {gens}")
    for factors, base, extra, min_size in EXTENSION_CASES:
        a = pure.extension_check(factors, base, extra, min_size)
        b = compiled.extension_check(factors, base, extra, min_size)
        if a != b:
            sys.exit(f"extension_check mismatch on {factors} {base} {extra}")
    rng = np.random.default_rng(1)
    for factors in QFT_ORDERS:
        order = int(np.prod(factors))
        vec = rng.normal(size=order) + 1j * rng.normal(size=order)
        if not np.allclose(
            pure.mixed_radix_qft(vec, factors),
            compiled.mixed_radix_qft(vec, factors),
            atol=1e-12,
        ):
            sys.exit(f"mixed_radix_qft mismatch on {factors}")


KERNELS: Dict[str, Callable[[Any, int], float]] = {
    "closure_from_generators": _closure_row,
    "extension_check": _extension_row,
    "mixed_radix_qft": _qft_row,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats")
    parser.add_argument("--csv", type=str, default=None, help="write results as CSV")
    args = parser.parse_args(argv)

    if compiled is None:
        print("compiled backend unavailable; timing the pure backend only")
    else:
        _check_parity()

    rows: List[List[Any]] = []
    width = max(len(name) for name in KERNELS)
    for name, runner in KERNELS.items():
        t_pure = runner(pure, args.repeats)
        if compiled is None:
            print(f"{name:<{width}}  pure {t_pure * 1e6:9.1f} us/call")
            rows.append([name, repr(t_pure), "", ""])
            continue
        t_comp = runner(compiled, args.repeats)
        ratio = t_pure / t_comp
        print(
            f"{name:<{width}}  pure {t_pure * 1e6:9.1f} us/call"
            f"  compiled {t_comp * 1e6:9.1f} us/call  speedup {ratio:6.1f}x"
        )
        rows.append([name, repr(t_pure), repr(t_comp), repr(ratio)])

    if args.csv:
        with open(args.csv, "w", newline="") as handle:
            writer = csv.writer(handle)
            writer.writerow(["kernel", "pure_s", "compiled_s", "speedup"])
            writer.writerows(rows)
        print(f"wrote {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
