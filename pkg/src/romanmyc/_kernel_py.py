"""Pure-Python branch-and-bound kernels (reference and fallback backend).

All routines take closed-neighbourhood bit masks ``cn`` of a graph whose
vertices are already numbered in branching preference order, so walking
set bits from low to high visits candidates in that order.  The compiled
backend in ``_kernel.pyx`` implements exactly the same steps; both must
return identical results.

Roman search state: ``U`` undefended vertices, ``A`` vertices still allowed
to receive label 2, ``S`` the vertices labelled 2 so far.  At each node the
most constrained undefended vertex ``v`` is resolved: either its first
allowed dominator (in preference order) joins ``S`` -- earlier candidates
are then excluded, which makes the branches disjoint -- or ``v`` takes
label 1 and its whole closed neighbourhood is excluded from ``S``.
"""

from __future__ import annotations

import math
import time

EPS = 1e-9
CHECK_EVERY = 1024


class SolverTimeout(RuntimeError):
    pass


class _Stop(Exception):
    pass


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Search:
    def __init__(self, cn, deadline):
        self.cn = cn
        self.n = len(cn)
        self.deadline = deadline
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.deadline is not None and self.nodes % CHECK_EVERY == 0:
            if time.monotonic() > self.deadline:
                raise SolverTimeout(f"search exceeded its time limit after {self.nodes} nodes")

    def scan(self, U, A, roman):
        """Fractional covering bound and branch vertex over undefended ``U``.

        Returns ``(bound, branch_vertex)``; branch_vertex is -1 when some
        vertex has no allowed dominator (only possible for domination).
        """
        cn = self.cn
        cov = {}
        for w in _bits(A):
            c = (cn[w] & U).bit_count()
            if c:
                cov[w] = c
        lb = 0.0
        bv = -1
        best_k = self.n + 1
        for v in _bits(U):
            opts = cn[v] & A
            k = opts.bit_count()
            if k == 0:
                return 0.0, -1
            c = 0
            for w in _bits(opts):
                if cov[w] > c:
                    c = cov[w]
            if roman:
                lb += 1.0 if c <= 2 else 2.0 / c
            else:
                lb += 1.0 / c
            if k < best_k:
                best_k = k
                bv = v
        return lb, bv


class _RomanMin(_Search):
    def __init__(self, cn, best, best_s, lower, deadline):
        super().__init__(cn, deadline)
        self.best = best
        self.best_s = best_s
        self.lower = lower

    def run(self, U, A):
        try:
            if self.best > self.lower:
                self.rec(U, A, 0, 0)
        except _Stop:
            pass

    def rec(self, U, A, S, cost):
        self.tick()
        cn = self.cn
        forced = 0
        for v in _bits(U):
            if not cn[v] & A:
                forced |= 1 << v
        if forced:
            U &= ~forced
            cost += forced.bit_count()
        if cost >= self.best:
            return
        if not U:
            self.best = cost
            self.best_s = S
            if cost <= self.lower:
                raise _Stop
            return
        lb, bv = self.scan(U, A, True)
        if cost + math.ceil(lb - EPS) >= self.best:
            return
        opts = cn[bv] & A
        A2 = A
        for w in _bits(opts):
            bit = 1 << w
            A2 &= ~bit
            self.rec(U & ~cn[w], A2, S | bit, cost + 2)
        self.rec(U & ~(1 << bv), A2, S, cost + 1)


class _RomanEnum(_Search):
    def __init__(self, cn, target, limit, deadline):
        super().__init__(cn, deadline)
        self.target = target
        self.limit = limit
        self.found = []

    def run(self, U, A):
        try:
            self.rec(U, A, 0, 0)
        except _Stop:
            pass

    def rec(self, U, A, S, cost):
        self.tick()
        cn = self.cn
        forced = 0
        for v in _bits(U):
            if not cn[v] & A:
                forced |= 1 << v
        if forced:
            U &= ~forced
            cost += forced.bit_count()
        if cost > self.target:
            return
        if not U:
            if cost == self.target:
                self.found.append(S)
                if len(self.found) >= self.limit:
                    raise _Stop
            return
        lb, bv = self.scan(U, A, True)
        if cost + math.ceil(lb - EPS) > self.target:
            return
        opts = cn[bv] & A
        A2 = A
        for w in _bits(opts):
            bit = 1 << w
            A2 &= ~bit
            self.rec(U & ~cn[w], A2, S | bit, cost + 2)
        self.rec(U & ~(1 << bv), A2, S, cost + 1)


class _DomMin(_Search):
    def __init__(self, cn, best, best_s, lower, deadline):
        super().__init__(cn, deadline)
        self.best = best
        self.best_s = best_s
        self.lower = lower

    def run(self, U, A):
        try:
            if self.best > self.lower:
                self.rec(U, A, 0, 0)
        except _Stop:
            pass

    def rec(self, U, A, S, size):
        self.tick()
        if not U:
            if size < self.best:
                self.best = size
                self.best_s = S
                if size <= self.lower:
                    raise _Stop
            return
        if size + 1 >= self.best:
            return
        lb, bv = self.scan(U, A, False)
        if bv < 0 or size + math.ceil(lb - EPS) >= self.best:
            return
        cn = self.cn
        A2 = A
        for w in _bits(cn[bv] & A):
            bit = 1 << w
            A2 &= ~bit
            self.rec(U & ~cn[w], A2, S | bit, size + 1)


class _DomEnum(_Search):
    def __init__(self, cn, size, limit, no_isolated, deadline):
        super().__init__(cn, deadline)
        self.size = size
        self.limit = limit
        self.no_isolated = no_isolated
        self.found = []

    def run(self, U, A):
        try:
            self.rec(U, A, 0, 0)
        except _Stop:
            pass

    def accept(self, S):
        if not self.no_isolated:
            return True
        cn = self.cn
        for s in _bits(S):
            if not cn[s] & S & ~(1 << s):
                return False
        return True

    def rec(self, U, A, S, size):
        self.tick()
        if not U:
            if size == self.size and self.accept(S):
                self.found.append(S)
                if len(self.found) >= self.limit:
                    raise _Stop
            return
        if size >= self.size:
            return
        lb, bv = self.scan(U, A, False)
        if bv < 0 or size + math.ceil(lb - EPS) > self.size:
            return
        cn = self.cn
        A2 = A
        for w in _bits(cn[bv] & A):
            bit = 1 << w
            A2 &= ~bit
            self.rec(U & ~cn[w], A2, S | bit, size + 1)


def _full(cn):
    return (1 << len(cn)) - 1


def roman_min(cn, best, best_s, lower, deadline=None):
    """Improve on incumbent ``(best, best_s)``; returns ``(value, S, nodes)``."""
    s = _RomanMin(list(cn), best, best_s, lower, deadline)
    s.run(_full(cn), _full(cn))
    return s.best, s.best_s, s.nodes


def roman_enum(cn, target, limit, deadline=None):
    """All ``S`` with ``2|S| + |V - N[S]| == target``, at most ``limit``."""
    s = _RomanEnum(list(cn), target, limit, deadline)
    s.run(_full(cn), _full(cn))
    return s.found, s.nodes


def dom_min(cn, best, best_s, lower, deadline=None):
    s = _DomMin(list(cn), best, best_s, lower, deadline)
    s.run(_full(cn), _full(cn))
    return s.best, s.best_s, s.nodes


def dom_enum(cn, size, limit, no_isolated=False, deadline=None):
    """Dominating sets of exactly ``size`` vertices (``size`` should be minimum)."""
    s = _DomEnum(list(cn), size, limit, no_isolated, deadline)
    s.run(_full(cn), _full(cn))
    return s.found, s.nodes


MAX_N = None
