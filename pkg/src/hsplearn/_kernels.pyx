# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled kernels: subgroup closure and the mixed-radix Fourier transform.

Semantics match ``_kernels_py`` exactly; see that module for the reference
implementations.  Flat indices follow the row-major mixed-radix convention.
Closure calls reuse per-group scratch buffers (including a cached addition
table for small groups), so the module is not thread-safe.
"""

import math

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt
from libc.string cimport memset

cnp.import_array()

cdef double TWO_PI = 6.283185307179586476925287

# Orders up to this bound get a dense addition table (order**2 int32 entries).
cdef long TABLE_MAX_ORDER = 1024

__all__ = [
    "closure_from_generators",
    "closure_contains",
    "extension_check",
    "mixed_radix_qft",
]


cdef inline long _add_flat(long a, long b, long k, long* fac, long* strides) nogil:
    cdef long out = 0
    cdef long i, ra, rb
    for i in range(k):
        ra = (a // strides[i]) % fac[i]
        rb = (b // strides[i]) % fac[i]
        out += ((ra + rb) % fac[i]) * strides[i]
    return out


cdef long _closure_fill(
    long k, long order, long* fac, long* strides, int* add,
    long n_gens, long* gens, long skip,
    unsigned char* seen, long* queue, long target,
) nogil:
    """BFS closure into ``seen``; returns closure size, or -1 on early target hit.

    ``skip`` drops one generator position (-1 keeps all), so independence
    passes iterate over leave-one-out subsets without copying.  ``add`` is
    the dense addition table, or NULL to fall back to digitwise arithmetic.
    """
    cdef long head = 0, tail = 0
    cdef long x, y, i
    memset(seen, 0, order)
    seen[0] = 1
    queue[tail] = 0
    tail += 1
    if target == 0:
        return -1
    while head < tail:
        x = queue[head]
        head += 1
        for i in range(n_gens):
            if i == skip:
                continue
            if add != NULL:
                y = add[x * order + gens[i]]
            else:
                y = _add_flat(x, gens[i], k, fac, strides)
            if not seen[y]:
                seen[y] = 1
                if y == target:
                    return -1
                queue[tail] = y
                tail += 1
    return tail


cdef class _Scratch:
    cdef long k, order, cap
    cdef bint has_table
    cdef long[::1] fac
    cdef long[::1] strides
    cdef unsigned char[::1] seen
    cdef long[::1] queue
    cdef long[::1] gens
    cdef int[:, ::1] add

    def __init__(self, factors):
        cdef long i, a, b
        self.k = len(factors)
        self.fac = np.asarray(factors, dtype=np.int64)
        self.order = 1
        for i in range(self.k):
            self.order *= self.fac[i]
        strides = np.ones(self.k, dtype=np.int64)
        for i in range(self.k - 2, -1, -1):
            strides[i] = strides[i + 1] * self.fac[i + 1]
        self.strides = strides
        self.seen = np.zeros(self.order, dtype=np.uint8)
        self.queue = np.zeros(self.order, dtype=np.int64)
        self.cap = self.order if self.order > 16 else 16
        self.gens = np.zeros(self.cap, dtype=np.int64)
        self.has_table = self.order <= TABLE_MAX_ORDER
        if self.has_table:
            self.add = np.zeros((self.order, self.order), dtype=np.int32)
            with nogil:
                for a in range(self.order):
                    for b in range(a, self.order):
                        self.add[a, b] = <int> _add_flat(
                            a, b, self.k, &self.fac[0], &self.strides[0]
                        )
                        self.add[b, a] = self.add[a, b]
        else:
            self.add = np.zeros((1, 1), dtype=np.int32)

    cdef void ensure(self, long m):
        if m > self.cap:
            self.cap = 2 * m
            self.gens = np.zeros(self.cap, dtype=np.int64)

    cdef int* table(self):
        return &self.add[0, 0] if self.has_table else <int*> NULL


_SCRATCH = {}


cdef _Scratch _scratch_for(factors):
    if type(factors) is not tuple:
        factors = tuple(int(n) for n in factors)
    s = _SCRATCH.get(factors)
    if s is None:
        s = _Scratch(factors)
        _SCRATCH[factors] = s
    return <_Scratch> s


cdef long _load_gens(_Scratch s, object items, long extra) except -2:
    """Copy generator indices plus an optional trailing element into scratch."""
    cdef long m = 0
    for v in items:
        s.ensure(m + 1)
        s.gens[m] = v
        m += 1
    if extra >= 0:
        s.ensure(m + 1)
        s.gens[m] = extra
        m += 1
    return m


def closure_from_generators(factors, generators):
    """Sorted flat indices of the subgroup generated by the given elements."""
    if len(factors) == 0:
        return np.zeros(1, dtype=np.int64)
    cdef _Scratch s = _scratch_for(factors)
    cdef long m = _load_gens(s, generators, -1)
    cdef int* tab = s.table()
    cdef long size
    with nogil:
        size = _closure_fill(
            s.k, s.order, &s.fac[0], &s.strides[0], tab,
            m, &s.gens[0], -1, &s.seen[0], &s.queue[0], -1,
        )
    out = np.asarray(s.queue[:size]).copy()
    out.sort()
    return out


def closure_contains(factors, base, extra, target):
    """Whether ``target`` lies in the closure of ``base`` plus one extra element."""
    if len(factors) == 0:
        return int(target) == 0
    cdef _Scratch s = _scratch_for(factors)
    cdef long m = _load_gens(s, base, int(extra))
    cdef int* tab = s.table()
    cdef long tgt = int(target)
    cdef long size
    with nogil:
        size = _closure_fill(
            s.k, s.order, &s.fac[0], &s.strides[0], tab,
            m, &s.gens[0], -1, &s.seen[0], &s.queue[0], tgt,
        )
    return size == -1


def extension_check(factors, base, extra, min_size):
    """Closure size of ``base`` plus ``extra`` if the multiset is independent.

    Returns 0 when the closure is smaller than ``min_size`` or when any
    element of the extended multiset lies in the closure of the others.
    One call replaces a closure build plus one membership test per element.
    """
    if len(factors) == 0:
        return 0
    cdef _Scratch s = _scratch_for(factors)
    cdef long m = _load_gens(s, base, int(extra))
    cdef int* tab = s.table()
    cdef long floor = int(min_size)
    cdef long size, found, pos
    with nogil:
        size = _closure_fill(
            s.k, s.order, &s.fac[0], &s.strides[0], tab,
            m, &s.gens[0], -1, &s.seen[0], &s.queue[0], -1,
        )
        if size < floor:
            size = 0
        else:
            for pos in range(m):
                found = _closure_fill(
                    s.k, s.order, &s.fac[0], &s.strides[0], tab,
                    m, &s.gens[0], pos, &s.seen[0], &s.queue[0], s.gens[pos],
                )
                if found == -1:
                    size = 0
                    break
    return size


# Per-axis DFT matrices, keyed by (n, inverse); identical across calls.
_TWIDDLE_CACHE = {}


def _twiddle(n, inverse):
    key = (n, inverse)
    mat = _TWIDDLE_CACHE.get(key)
    if mat is None:
        idx = np.arange(n)
        sign = 2.0j if inverse else -2.0j
        mat = np.exp(sign * np.pi * (np.outer(idx, idx) % n) / n)
        mat /= math.sqrt(n)
        _TWIDDLE_CACHE[key] = mat
    return mat


def mixed_radix_qft(amps, factors, inverse=False):
    """Apply the dense per-axis DFT to a flat amplitude vector (new array)."""
    factors = tuple(int(n) for n in factors)
    order = math.prod(factors) if factors else 1
    data = np.array(amps, dtype=np.complex128, copy=True)
    if data.shape != (order,):
        raise ValueError(f"amplitude vector has shape {data.shape}, expected ({order},)")
    if not factors:
        return data
    cdef double complex[::1] buf = data
    cdef long n, stride, blocks, blk, inner, a, b, base
    cdef long total = order
    cdef double complex acc
    col_arr = np.zeros(max(factors), dtype=np.complex128)
    out_arr = np.zeros(max(factors), dtype=np.complex128)
    cdef double complex[::1] col = col_arr
    cdef double complex[::1] out = out_arr
    cdef double complex[:, ::1] w
    stride = 1
    # Process axes from last to first; stride doubles as the axis stride.
    for axis in range(len(factors) - 1, -1, -1):
        n = factors[axis]
        w = _twiddle(n, bool(inverse))
        blocks = total // (n * stride)
        with nogil:
            for blk in range(blocks):
                for inner in range(stride):
                    base = blk * n * stride + inner
                    for a in range(n):
                        col[a] = buf[base + a * stride]
                    for a in range(n):
                        acc = 0
                        for b in range(n):
                            acc = acc + w[a, b] * col[b]
                        out[a] = acc
                    for a in range(n):
                        buf[base + a * stride] = out[a]
        stride *= n
    return data
