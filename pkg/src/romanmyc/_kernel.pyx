# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernels for graphs with at most 64 vertices.

Step-for-step mirror of ``_kernel_py``.  Branching order and bound
arithmetic (IEEE doubles summed in the same order) match exactly, so both
kernels return identical results down to the node count.
"""

import time

from libc.math cimport ceil
from libc.stdint cimport uint64_t

from ._kernel_py import SolverTimeout

MAX_N = 64

cdef double EPS = 1e-9
cdef long CHECK_EVERY = 1024


cdef extern from * nogil:
    int popcount "__builtin_popcountll"(unsigned long long)
    int ctz "__builtin_ctzll"(unsigned long long)


cdef struct Ctx:
    int n
    uint64_t cn[64]
    long nodes
    double deadline
    bint has_deadline
    # optimisation
    int best
    uint64_t best_s
    int lower
    bint stop
    # enumeration
    int target
    long limit
    bint no_isolated


cdef int tick(Ctx* c) except -1:
    c.nodes += 1
    if c.has_deadline and c.nodes % CHECK_EVERY == 0:
        if time.monotonic() > c.deadline:
            raise SolverTimeout(f"search exceeded its time limit after {c.nodes} nodes")
    return 0


cdef inline uint64_t forced_mask(Ctx* c, uint64_t U, uint64_t A):
    cdef uint64_t forced = 0, m = U
    cdef int v
    while m:
        v = ctz(m)
        m &= m - 1
        if not (c.cn[v] & A):
            forced |= (<uint64_t>1) << v
    return forced


cdef int scan(Ctx* c, uint64_t U, uint64_t A, bint roman, double* lb_out) nogil:
    """Fractional covering bound into ``lb_out``; returns the branch vertex or -1."""
    cdef int cov[64]
    cdef uint64_t m = A, opts, o
    cdef int w, v, k, cmax, bv = -1, best_k = c.n + 1
    cdef double lb = 0.0
    while m:
        w = ctz(m)
        m &= m - 1
        cov[w] = popcount(c.cn[w] & U)
    m = U
    while m:
        v = ctz(m)
        m &= m - 1
        opts = c.cn[v] & A
        k = popcount(opts)
        if k == 0:
            lb_out[0] = 0.0
            return -1
        cmax = 0
        o = opts
        while o:
            w = ctz(o)
            o &= o - 1
            if cov[w] > cmax:
                cmax = cov[w]
        if roman:
            if cmax <= 2:
                lb += 1.0
            else:
                lb += 2.0 / cmax
        else:
            lb += 1.0 / cmax
        if k < best_k:
            best_k = k
            bv = v
    lb_out[0] = lb
    return bv


cdef int roman_min_rec(Ctx* c, uint64_t U, uint64_t A, uint64_t S, int cost) except -1:
    cdef uint64_t forced, opts, A2, bit
    cdef int bv, w
    cdef double lb
    tick(c)
    forced = forced_mask(c, U, A)
    if forced:
        U &= ~forced
        cost += popcount(forced)
    if cost >= c.best:
        return 0
    if not U:
        c.best = cost
        c.best_s = S
        if cost <= c.lower:
            c.stop = True
        return 0
    bv = scan(c, U, A, True, &lb)
    if cost + <int>ceil(lb - EPS) >= c.best:
        return 0
    opts = c.cn[bv] & A
    A2 = A
    while opts:
        w = ctz(opts)
        opts &= opts - 1
        bit = (<uint64_t>1) << w
        A2 &= ~bit
        roman_min_rec(c, U & ~c.cn[w], A2, S | bit, cost + 2)
        if c.stop:
            return 0
    roman_min_rec(c, U & ~((<uint64_t>1) << bv), A2, S, cost + 1)
    return 0


cdef int roman_enum_rec(Ctx* c, uint64_t U, uint64_t A, uint64_t S, int cost, list found) except -1:
    cdef uint64_t forced, opts, A2, bit
    cdef int bv, w
    cdef double lb
    tick(c)
    forced = forced_mask(c, U, A)
    if forced:
        U &= ~forced
        cost += popcount(forced)
    if cost > c.target:
        return 0
    if not U:
        if cost == c.target:
            found.append(S)
            if len(found) >= c.limit:
                c.stop = True
        return 0
    bv = scan(c, U, A, True, &lb)
    if cost + <int>ceil(lb - EPS) > c.target:
        return 0
    opts = c.cn[bv] & A
    A2 = A
    while opts:
        w = ctz(opts)
        opts &= opts - 1
        bit = (<uint64_t>1) << w
        A2 &= ~bit
        roman_enum_rec(c, U & ~c.cn[w], A2, S | bit, cost + 2, found)
        if c.stop:
            return 0
    roman_enum_rec(c, U & ~((<uint64_t>1) << bv), A2, S, cost + 1, found)
    return 0


cdef int dom_min_rec(Ctx* c, uint64_t U, uint64_t A, uint64_t S, int size) except -1:
    cdef uint64_t opts, A2, bit
    cdef int bv, w
    cdef double lb
    tick(c)
    if not U:
        if size < c.best:
            c.best = size
            c.best_s = S
            if size <= c.lower:
                c.stop = True
        return 0
    if size + 1 >= c.best:
        return 0
    bv = scan(c, U, A, False, &lb)
    if bv < 0 or size + <int>ceil(lb - EPS) >= c.best:
        return 0
    opts = c.cn[bv] & A
    A2 = A
    while opts:
        w = ctz(opts)
        opts &= opts - 1
        bit = (<uint64_t>1) << w
        A2 &= ~bit
        dom_min_rec(c, U & ~c.cn[w], A2, S | bit, size + 1)
        if c.stop:
            return 0
    return 0


cdef bint dom_accept(Ctx* c, uint64_t S):
    cdef uint64_t m = S
    cdef int s
    if not c.no_isolated:
        return True
    while m:
        s = ctz(m)
        m &= m - 1
        if not (c.cn[s] & S & ~((<uint64_t>1) << s)):
            return False
    return True


cdef int dom_enum_rec(Ctx* c, uint64_t U, uint64_t A, uint64_t S, int size, list found) except -1:
    cdef uint64_t opts, A2, bit
    cdef int bv, w
    cdef double lb
    tick(c)
    if not U:
        if size == c.target and dom_accept(c, S):
            found.append(S)
            if len(found) >= c.limit:
                c.stop = True
        return 0
    if size >= c.target:
        return 0
    bv = scan(c, U, A, False, &lb)
    if bv < 0 or size + <int>ceil(lb - EPS) > c.target:
        return 0
    opts = c.cn[bv] & A
    A2 = A
    while opts:
        w = ctz(opts)
        opts &= opts - 1
        bit = (<uint64_t>1) << w
        A2 &= ~bit
        dom_enum_rec(c, U & ~c.cn[w], A2, S | bit, size + 1, found)
        if c.stop:
            return 0
    return 0


cdef void init(Ctx* c, cn, deadline) except *:
    cdef int i
    c.n = len(cn)
    if c.n > MAX_N:
        raise ValueError(f"compiled kernel handles at most {MAX_N} vertices, got {c.n}")
    for i in range(c.n):
        c.cn[i] = <uint64_t>cn[i]
    c.nodes = 0
    c.has_deadline = deadline is not None
    c.deadline = deadline if deadline is not None else 0.0
    c.stop = False
    c.no_isolated = False


cdef uint64_t full_mask(int n):
    if n == 64:
        return ~(<uint64_t>0)
    return ((<uint64_t>1) << n) - 1


def roman_min(cn, int best, best_s, int lower, deadline=None):
    cdef Ctx c
    init(&c, cn, deadline)
    c.best = best
    c.best_s = <uint64_t>best_s
    c.lower = lower
    if best > lower:
        roman_min_rec(&c, full_mask(c.n), full_mask(c.n), 0, 0)
    return c.best, int(c.best_s), c.nodes


def roman_enum(cn, int target, long limit, deadline=None):
    cdef Ctx c
    cdef list found = []
    init(&c, cn, deadline)
    c.target = target
    c.limit = limit
    roman_enum_rec(&c, full_mask(c.n), full_mask(c.n), 0, 0, found)
    return [int(s) for s in found], c.nodes


def dom_min(cn, int best, best_s, int lower, deadline=None):
    cdef Ctx c
    init(&c, cn, deadline)
    c.best = best
    c.best_s = <uint64_t>best_s
    c.lower = lower
    if best > lower:
        dom_min_rec(&c, full_mask(c.n), full_mask(c.n), 0, 0)
    return c.best, int(c.best_s), c.nodes


def dom_enum(cn, int size, long limit, bint no_isolated=False, deadline=None):
    cdef Ctx c
    cdef list found = []
    init(&c, cn, deadline)
    c.target = size
    c.limit = limit
    c.no_isolated = no_isolated
    dom_enum_rec(&c, full_mask(c.n), full_mask(c.n), 0, 0, found)
    return [int(s) for s in found], c.nodes
