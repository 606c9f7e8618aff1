# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel; same semantics as ``_pysearch`` (see its module
docstring), including branching order, propagation, and node counting.
Limited to n <= 62 so a vertex set fits one machine word; ``_backend``
routes larger inputs to the pure kernel."""

import time

from cpython.mem cimport PyMem_Free, PyMem_Malloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long)

STATUS_NO = 0
STATUS_YES = 1
STATUS_BUDGET = 2

DEF TICK_INTERVAL = 2048

ctypedef unsigned long long u64


cdef class _Solver:
    cdef int n, m, d
    cdef u64 full
    cdef u64* out
    cdef u64* inn
    cdef u64* und
    cdef int* ep
    cdef int* eq
    cdef int* assigned
    cdef int* trail
    cdef int trail_len
    cdef long long nodes, max_nodes
    cdef double deadline
    cdef bint has_deadline
    cdef bint budget_hit

    def __cinit__(self, int n, list edges, int d, long long max_nodes, time_limit):
        cdef int i, p, q
        self.n = n
        self.m = len(edges)
        self.d = d
        self.full = (<u64>1 << n) - 1 if n < 64 else <u64>0xFFFFFFFFFFFFFFFF
        self.max_nodes = max_nodes
        self.nodes = 0
        self.trail_len = 0
        self.budget_hit = False
        if time_limit is not None:
            self.deadline = time.monotonic() + <double>time_limit
            self.has_deadline = True
        else:
            self.deadline = 0.0
            self.has_deadline = False
        self.out = <u64*>PyMem_Malloc(n * sizeof(u64))
        self.inn = <u64*>PyMem_Malloc(n * sizeof(u64))
        self.und = <u64*>PyMem_Malloc(n * sizeof(u64))
        self.ep = <int*>PyMem_Malloc(self.m * sizeof(int))
        self.eq = <int*>PyMem_Malloc(self.m * sizeof(int))
        self.assigned = <int*>PyMem_Malloc(self.m * sizeof(int))
        self.trail = <int*>PyMem_Malloc((self.m + 1) * sizeof(int))
        for i in range(n):
            self.out[i] = 0
            self.inn[i] = 0
            self.und[i] = 0
        for i in range(self.m):
            p, q = edges[i]
            self.ep[i] = p
            self.eq[i] = q
            self.und[p] |= <u64>1 << q
            self.und[q] |= <u64>1 << p
            self.assigned[i] = -1

    def __dealloc__(self):
        PyMem_Free(self.out)
        PyMem_Free(self.inn)
        PyMem_Free(self.und)
        PyMem_Free(self.ep)
        PyMem_Free(self.eq)
        PyMem_Free(self.assigned)
        PyMem_Free(self.trail)

    cdef void tick(self):
        self.nodes += 1
        if self.nodes > self.max_nodes:
            self.budget_hit = True
        elif self.has_deadline and self.nodes % TICK_INTERVAL == 0:
            if time.monotonic() > self.deadline:
                self.budget_hit = True

    cdef bint reach_ok(self, int src):
        cdef u64 r = <u64>1 << src
        cdef u64 nxt, mask
        cdef int v, step
        for step in range(self.d):
            nxt = r
            mask = r
            while mask:
                v = __builtin_ctzll(mask)
                mask &= mask - 1
                nxt |= self.out[v] | self.und[v]
            if nxt == r:
                break
            r = nxt
            if r == self.full:
                return True
        return r == self.full

    cdef bint feasible_all(self):
        cdef int u
        for u in range(self.n):
            if not self.reach_ok(u):
                return False
        return True

    cdef bint feasible_around(self, int head):
        cdef u64 r = <u64>1 << head
        cdef u64 nxt, mask
        cdef int v, step
        for step in range(self.d - 1):
            nxt = r
            mask = r
            while mask:
                v = __builtin_ctzll(mask)
                mask &= mask - 1
                nxt |= self.inn[v] | self.und[v]
            if nxt == r:
                break
            r = nxt
        mask = r
        while mask:
            v = __builtin_ctzll(mask)
            mask &= mask - 1
            if not self.reach_ok(v):
                return False
        return True

    cdef int set_arc(self, int i, int direction):
        cdef int p = self.ep[i]
        cdef int q = self.eq[i]
        cdef int t
        if direction:
            t = p
            p = q
            q = t
        self.out[p] |= <u64>1 << q
        self.inn[q] |= <u64>1 << p
        self.und[p] &= ~(<u64>1 << q)
        self.und[q] &= ~(<u64>1 << p)
        self.assigned[i] = direction
        return q

    cdef void unset_arc(self, int i):
        cdef int p = self.ep[i]
        cdef int q = self.eq[i]
        cdef int t
        if self.assigned[i]:
            t = p
            p = q
            q = t
        self.out[p] &= ~(<u64>1 << q)
        self.inn[q] &= ~(<u64>1 << p)
        self.und[self.ep[i]] |= <u64>1 << self.eq[i]
        self.und[self.eq[i]] |= <u64>1 << self.ep[i]
        self.assigned[i] = -1

    cdef void undo_to(self, int mark):
        while self.trail_len > mark:
            self.trail_len -= 1
            self.unset_arc(self.trail[self.trail_len])

    cdef bint propagate(self):
        cdef int i, forced, forced_dir, head0, head1
        cdef bint ok0, ok1
        while True:
            forced = -1
            forced_dir = 0
            for i in range(self.m):
                if self.assigned[i] >= 0:
                    continue
                head0 = self.set_arc(i, 0)
                ok0 = self.feasible_around(head0)
                self.unset_arc(i)
                head1 = self.set_arc(i, 1)
                ok1 = self.feasible_around(head1)
                self.unset_arc(i)
                if (not ok0) and (not ok1):
                    return False
                if ok0 != ok1:
                    forced = i
                    forced_dir = 0 if ok0 else 1
                    break
            if forced < 0:
                return True
            self.set_arc(forced, forced_dir)
            self.trail[self.trail_len] = forced
            self.trail_len += 1
            self.tick()
            if self.budget_hit:
                return False

    cdef bint search(self):
        cdef int mark = self.trail_len
        cdef int branch, i, head, direction, submark
        if not self.propagate():
            self.undo_to(mark)
            return False
        if self.budget_hit:
            self.undo_to(mark)
            return False
        branch = -1
        for i in range(self.m):
            if self.assigned[i] < 0:
                branch = i
                break
        if branch < 0:
            return True
        for direction in range(2):
            submark = self.trail_len
            head = self.set_arc(branch, direction)
            self.trail[self.trail_len] = branch
            self.trail_len += 1
            self.tick()
            if self.budget_hit:
                self.undo_to(submark)
                self.undo_to(mark)
                return False
            if self.feasible_around(head) and self.search():
                return True
            self.undo_to(submark)
            if self.budget_hit:
                self.undo_to(mark)
                return False
        self.undo_to(mark)
        return False

    def run(self):
        cdef int head
        if not self.feasible_all():
            return (STATUS_NO, None, self.nodes)
        if self.m == 0:
            return (STATUS_YES, [], self.nodes)
        # reversal symmetry: fixing the first edge's direction loses nothing
        head = self.set_arc(0, 0)
        self.trail[self.trail_len] = 0
        self.trail_len += 1
        self.tick()
        if not self.budget_hit and self.feasible_around(head) and self.search():
            return (STATUS_YES, [self.assigned[i] for i in range(self.m)], self.nodes)
        if self.budget_hit:
            return (STATUS_BUDGET, None, self.nodes)
        return (STATUS_NO, None, self.nodes)


def solve(int n, list edges, int d, max_nodes, time_limit=None):
    """Same contract as ``_pysearch.solve``; requires n <= 62."""
    if n > 62:
        raise ValueError("compiled kernel supports at most 62 vertices")
    solver = _Solver(n, edges, d, <long long>max_nodes, time_limit)
    return solver.run()


def naive_min_diameter(int n, list edges):
    """Same contract as ``_pysearch.naive_min_diameter``; requires n <= 62."""
    cdef int m = len(edges)
    if n > 62:
        raise ValueError("compiled kernel supports at most 62 vertices")
    if m > 40:
        raise ValueError("brute-force enumeration limited to 40 edges")
    if n <= 1:
        return 0
    cdef u64 full = (<u64>1 << n) - 1
    cdef u64 total = <u64>1 << m
    cdef u64 mask, bit
    cdef u64* out = <u64*>PyMem_Malloc(n * sizeof(u64))
    cdef int* ep = <int*>PyMem_Malloc(max(m, 1) * sizeof(int))
    cdef int* eq = <int*>PyMem_Malloc(max(m, 1) * sizeof(int))
    cdef int i, p, q, src, v, steps, worst, best
    cdef u64 seen, frontier, nxt, w
    cdef bint infinite
    for i in range(m):
        p, q = edges[i]
        ep[i] = p
        eq[i] = q
    best = -1
    try:
        mask = 0
        while mask < total:
            for v in range(n):
                out[v] = 0
            for i in range(m):
                if mask >> i & 1:
                    out[eq[i]] |= <u64>1 << ep[i]
                else:
                    out[ep[i]] |= <u64>1 << eq[i]
            worst = 0
            infinite = False
            for src in range(n):
                seen = <u64>1 << src
                frontier = seen
                steps = 0
                while seen != full:
                    nxt = 0
                    w = frontier
                    while w:
                        v = __builtin_ctzll(w)
                        w &= w - 1
                        nxt |= out[v]
                    nxt &= ~seen
                    if nxt == 0:
                        infinite = True
                        break
                    seen |= nxt
                    frontier = nxt
                    steps += 1
                if infinite:
                    break
                if steps > worst:
                    worst = steps
            if not infinite and (best < 0 or worst < best):
                best = worst
            mask += 1
    finally:
        PyMem_Free(out)
        PyMem_Free(ep)
        PyMem_Free(eq)
    return best
