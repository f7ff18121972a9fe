# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see `pure` for the reference implementation.

Both backends must agree cell for cell: the differential tests compare
their outputs, so any change here needs the same change there.
"""

from libc.stdlib cimport free, malloc

BACKEND_NAME = "compiled"


cdef int _axiom1_witness(const int *t, int n, int *wx, int *wy, int *wz) noexcept nogil:
    cdef int x, y, z, a, c
    for x in range(n):
        for y in range(n):
            a = t[x * n + y]
            for z in range(n):
                c = t[a * n + t[x * n + z]]
                if t[c * n + t[z * n + y]] != 0:
                    wx[0] = x
                    wy[0] = y
                    wz[0] = z
                    return 1
    return 0


cdef int _is_bck_c(const int *t, int n) noexcept nogil:
    cdef int x, y, wx, wy, wz
    for x in range(n):
        if t[x] != 0 or t[x * n + x] != 0:
            return 0
        for y in range(n):
            if t[t[x * n + t[x * n + y]] * n + y] != 0:
                return 0
            if x != y and t[x * n + y] == 0 and t[y * n + x] == 0:
                return 0
    if _axiom1_witness(t, n, &wx, &wy, &wz):
        return 0
    return 1


def axiom_witnesses(flat, int n):
    """First violation of each axiom, or None per axiom when it holds."""
    cdef int *t = <int *> malloc(n * n * sizeof(int))
    if t is NULL:
        raise MemoryError
    cdef int i, x, y, wx, wy, wz
    try:
        for i in range(n * n):
            t[i] = flat[i]

        w1 = w2 = w3 = w4 = w5 = None
        with nogil:
            wx = -1
            _axiom1_witness(t, n, &wx, &wy, &wz)
        if wx >= 0:
            w1 = (wx, wy, wz)

        for x in range(n):
            if w2 is not None:
                break
            for y in range(n):
                if t[t[x * n + t[x * n + y]] * n + y] != 0:
                    w2 = (x, y)
                    break

        for x in range(n):
            if t[x * n + x] != 0:
                w3 = (x,)
                break

        for x in range(n):
            if w4 is not None:
                break
            for y in range(n):
                if x != y and t[x * n + y] == 0 and t[y * n + x] == 0:
                    w4 = (x, y)
                    break

        for x in range(n):
            if t[x] != 0:
                w5 = (x,)
                break

        return (w1, w2, w3, w4, w5)
    finally:
        free(t)


def table_is_bck(flat, int n):
    cdef int *t = <int *> malloc(n * n * sizeof(int))
    if t is NULL:
        raise MemoryError
    cdef int i, ok
    try:
        for i in range(n * n):
            t[i] = flat[i]
        with nogil:
            ok = _is_bck_c(t, n)
        return ok != 0
    finally:
        free(t)


cdef int _violates(const int *t, int n, int x, int y) noexcept nogil:
    cdef int v, p, z, b, c, d
    v = t[x * n + y]
    if v == 0 and t[y * n + x] == 0:
        return 1
    p = t[x * n + v]
    if p >= 0 and t[p * n + y] > 0:
        return 1
    for z in range(n):
        b = t[x * n + z]
        if b < 0:
            continue
        c = t[v * n + b]
        if c >= 0:
            d = t[z * n + y]
            if d >= 0 and t[c * n + d] > 0:
                return 1
        c = t[b * n + v]
        if c >= 0:
            d = t[y * n + z]
            if d >= 0 and t[c * n + d] > 0:
                return 1
    return 0


cdef class _TableSearch:
    """Iterator over valid tables; the DFS state survives between yields."""

    cdef int *t
    cdef int *cell_x
    cdef int *cell_y
    cdef int *trial
    cdef int n, ncells, depth

    def __cinit__(self, int n):
        cdef int i, x, y
        self.n = n
        self.t = <int *> malloc(n * n * sizeof(int))
        self.cell_x = <int *> malloc(n * n * sizeof(int))
        self.cell_y = <int *> malloc(n * n * sizeof(int))
        self.trial = <int *> malloc((n * n + 1) * sizeof(int))
        if (self.t is NULL or self.cell_x is NULL
                or self.cell_y is NULL or self.trial is NULL):
            raise MemoryError
        for i in range(n * n):
            self.t[i] = -1
        for x in range(n):
            self.t[x] = 0
            self.t[x * n] = x
            self.t[x * n + x] = 0
        self.ncells = 0
        for x in range(1, n):
            for y in range(1, n):
                if x != y:
                    self.cell_x[self.ncells] = x
                    self.cell_y[self.ncells] = y
                    self.ncells += 1
        self.depth = 0
        self.trial[0] = 0

    def __dealloc__(self):
        free(self.t)
        free(self.cell_x)
        free(self.cell_y)
        free(self.trial)

    cdef int _advance(self) noexcept nogil:
        # Resume the DFS; on 1 the next full table sits in self.t and
        # depth already points back at the parent cell, so the following
        # call picks up where this one stopped.
        cdef int x, y, idx, v, found
        while self.depth >= 0:
            if self.depth == self.ncells:
                found = _is_bck_c(self.t, self.n)
                self.depth -= 1
                if found:
                    return 1
                continue
            x = self.cell_x[self.depth]
            y = self.cell_y[self.depth]
            idx = x * self.n + y
            v = self.trial[self.depth]
            if v >= self.n:
                self.t[idx] = -1
                self.depth -= 1
                continue
            self.trial[self.depth] = v + 1
            self.t[idx] = v
            if not _violates(self.t, self.n, x, y):
                self.depth += 1
                self.trial[self.depth] = 0
        return 0

    def __iter__(self):
        return self

    def __next__(self):
        cdef int found, x, y, n = self.n
        with nogil:
            found = self._advance()
        if not found:
            raise StopIteration
        return tuple(
            tuple(self.t[x * n + y] for y in range(n)) for x in range(n)
        )


def bck_candidates(int n):
    """Yield order-n tables satisfying the five axioms, depth-first order."""
    if n < 1 or n > 8:
        raise ValueError("compiled enumerator supports orders 1..8")
    return _TableSearch(n)
