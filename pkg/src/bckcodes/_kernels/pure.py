"""Pure Python kernels.

Same contract as the compiled module `_fast`: `axiom_witnesses` scans a
flattened Cayley table for the first violation of each of the five BCK
axioms, and `bck_candidates` enumerates every Cayley table of a given
order that satisfies all five axioms, in a fixed depth-first order.

The axiom-1 scan is cubic in the order, so for larger tables it switches
to a vectorised numpy walk; witnesses stay lexicographically first in
(x, y, z) either way.
"""

from __future__ import annotations

from typing import Iterator, Sequence

import numpy as np

_NUMPY_MIN_ORDER = 32

BACKEND_NAME = "pure"


def _axiom1_witness_loops(t: Sequence[int], n: int):
    for x in range(n):
        row = x * n
        for y in range(n):
            a = t[row + y]
            for z in range(n):
                c = t[a * n + t[row + z]]
                if t[c * n + t[z * n + y]] != 0:
                    return (x, y, z)
    return None


def _axiom1_witness_numpy(t: Sequence[int], n: int):
    T = np.asarray(t, dtype=np.intp).reshape(n, n)
    for x in range(n):
        a = T[x][:, None]
        b = T[x][None, :]
        inner = T[a, b]
        out = T[inner, T.T]
        bad = np.argwhere(out != 0)
        if bad.size:
            y, z = bad[0]
            return (x, int(y), int(z))
    return None


def axiom_witnesses(flat: Sequence[int], n: int):
    """First violation of each axiom, or None per axiom when it holds.

    Returns a 5-tuple ordered axiom 1 through 5; entries are index
    tuples shaped (x, y, z), (x, y), (x,), (x, y), (x,).
    """
    t = flat
    if n >= _NUMPY_MIN_ORDER:
        w1 = _axiom1_witness_numpy(t, n)
    else:
        w1 = _axiom1_witness_loops(t, n)

    w2 = None
    for x in range(n):
        row = x * n
        for y in range(n):
            if t[t[row + t[row + y]] * n + y] != 0:
                w2 = (x, y)
                break
        if w2 is not None:
            break

    w3 = None
    for x in range(n):
        if t[x * n + x] != 0:
            w3 = (x,)
            break

    w4 = None
    for x in range(n):
        row = x * n
        for y in range(n):
            if x != y and t[row + y] == 0 and t[y * n + x] == 0:
                w4 = (x, y)
                break
        if w4 is not None:
            break

    w5 = None
    for x in range(n):
        if t[x] != 0:
            w5 = (x,)
            break

    return (w1, w2, w3, w4, w5)


def table_is_bck(flat: Sequence[int], n: int) -> bool:
    return all(w is None for w in axiom_witnesses(flat, n))


def bck_candidates(n: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every order-n Cayley table satisfying the five axioms.

    Cells (0, y), (x, 0) and (x, x) are pinned to 0, x and 0; the
    remaining cells are filled depth-first in row-major order with
    values tried in ascending order, pruning on axiom instances that
    the partial assignment already determines.  Unassigned cells hold
    -1 during the search, so value lookups guard with `>= 0`.  Tables
    are yielded as they are found, so taking the first few is cheap
    even at orders where the full sweep is slow.
    """
    t = [-1] * (n * n)
    for x in range(n):
        t[x] = 0
        t[x * n] = x
        t[x * n + x] = 0

    cells = [(x, y) for x in range(1, n) for y in range(1, n) if x != y]

    def violates(x: int, y: int) -> bool:
        v = t[x * n + y]
        if v == 0 and t[y * n + x] == 0:
            return True
        p = t[x * n + v]
        if p >= 0 and t[p * n + y] > 0:
            return True
        for z in range(n):
            b = t[x * n + z]
            if b < 0:
                continue
            c = t[v * n + b]
            if c >= 0:
                d = t[z * n + y]
                if d >= 0 and t[c * n + d] > 0:
                    return True
            c = t[b * n + v]
            if c >= 0:
                d = t[y * n + z]
                if d >= 0 and t[c * n + d] > 0:
                    return True
        return False

    def fill(depth: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if depth == len(cells):
            if table_is_bck(t, n):
                yield tuple(tuple(t[x * n : x * n + n]) for x in range(n))
            return
        x, y = cells[depth]
        idx = x * n + y
        for v in range(n):
            t[idx] = v
            if not violates(x, y):
                yield from fill(depth + 1)
        t[idx] = -1

    return fill(0)
