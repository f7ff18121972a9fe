"""Finite algebras of type (2, 0): Cayley tables, axioms, induced order.

Element 0 always plays the role of the distinguished constant, written 0
throughout.  The five defining axioms checked here are, in the order the
reports use them:

  1. ((x*y)*(x*z))*(z*y) = 0
  2. (x*(x*y))*y = 0
  3. x*x = 0
  4. x*y = 0 and y*x = 0 imply x = y
  5. 0*x = 0

A table satisfying 1-4 is a BCI-algebra; adding 5 makes it BCK.  All
types in this module are immutable and all functions are pure.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from . import _kernels
from .errors import InputError, InternalInvariantError, NotBckError


@dataclass(frozen=True)
class CayleyAlgebra:
    """A finite groupoid with distinguished element 0, given by its table.

    ``table[x][y]`` is the product x*y.  Optional ``names`` are display
    labels only; they never affect equality or hashing.
    """

    table: tuple[tuple[int, ...], ...]
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n == 0:
            raise InputError("empty Cayley table")
        for row in rows:
            if len(row) != n:
                raise InputError("Cayley table must be square")
            for v in row:
                if not 0 <= v < n:
                    raise InputError(f"table entry {v} outside 0..{n - 1}")
        object.__setattr__(self, "table", rows)
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != n:
                raise InputError("need exactly one name per element")
            object.__setattr__(self, "names", names)

    @property
    def order(self) -> int:
        return len(self.table)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def element_name(self, x: int) -> str:
        if self.names is not None:
            return self.names[x]
        return str(x)

    def flat(self) -> list[int]:
        return [v for row in self.table for v in row]


@dataclass(frozen=True)
class AxiomCheck:
    """Outcome for one axiom.

    ``witness`` is the lexicographically first violating index tuple in
    (x, y, z) scan order, or None when the axiom holds.  ``evaluation``
    is the value the violated identity produced instead of 0; axiom 4 is
    an implication rather than an identity, so there it stays None.
    """

    axiom: int
    holds: bool
    witness: tuple[int, ...] | None = None
    evaluation: int | None = None


@dataclass(frozen=True)
class AxiomReport:
    checks: tuple[AxiomCheck, ...]

    def check(self, axiom: int) -> AxiomCheck:
        return self.checks[axiom - 1]

    @property
    def is_bci(self) -> bool:
        return all(c.holds for c in self.checks[:4])

    @property
    def is_bck(self) -> bool:
        return all(c.holds for c in self.checks)


@dataclass(frozen=True)
class PropertyCheck:
    """A yes/no property with the first counterexample when it fails."""

    holds: bool
    witness: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class Poset:
    """A finite partial order on 0..n-1 as a boolean relation matrix.

    Construction validates reflexivity, antisymmetry and transitivity.
    ``minimum`` is detected automatically; passing it explicitly just
    asserts the detected value.
    """

    leq: tuple[tuple[bool, ...], ...]
    minimum: int | None = None

    def __post_init__(self):
        rows = tuple(tuple(bool(v) for v in row) for row in self.leq)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise InputError("relation matrix must be square and non-empty")
        object.__setattr__(self, "leq", rows)

        m = np.array(rows, dtype=bool)
        if not m.diagonal().all():
            raise InputError("relation is not reflexive")
        both = m & m.T
        np.fill_diagonal(both, False)
        if both.any():
            x, y = np.argwhere(both)[0]
            raise InputError(f"relation is not antisymmetric at ({x}, {y})")
        f = m.astype(np.float32)
        reach2 = (f @ f) > 0.5
        if (reach2 & ~m).any():
            x, y = np.argwhere(reach2 & ~m)[0]
            raise InputError(f"relation is not transitive at ({x}, {y})")

        detected = None
        full_rows = np.flatnonzero(m.all(axis=1))
        if full_rows.size:
            detected = int(full_rows[0])
        if self.minimum is not None and self.minimum != detected:
            raise InputError(
                f"element {self.minimum} is not the minimum of the relation"
            )
        object.__setattr__(self, "minimum", detected)

    @property
    def order(self) -> int:
        return len(self.leq)

    def le(self, x: int, y: int) -> bool:
        return self.leq[x][y]


@functools.lru_cache(maxsize=None)
def check_axioms(alg: CayleyAlgebra) -> AxiomReport:
    """Scan the whole table for violations of the five axioms."""
    n = alg.order
    t = alg.table
    w1, w2, w3, w4, w5 = _kernels.axiom_witnesses(alg.flat(), n)

    def ax1_eval(w):
        x, y, z = w
        return t[t[t[x][y]][t[x][z]]][t[z][y]]

    def ax2_eval(w):
        x, y = w
        return t[t[x][t[x][y]]][y]

    checks = (
        AxiomCheck(1, w1 is None, w1, ax1_eval(w1) if w1 else None),
        AxiomCheck(2, w2 is None, w2, ax2_eval(w2) if w2 else None),
        AxiomCheck(3, w3 is None, w3, t[w3[0]][w3[0]] if w3 else None),
        AxiomCheck(4, w4 is None, w4, None),
        AxiomCheck(5, w5 is None, w5, t[0][w5[0]] if w5 else None),
    )
    return AxiomReport(checks)


def _require_bck(alg: CayleyAlgebra, what: str) -> None:
    if not check_axioms(alg).is_bck:
        raise NotBckError(f"{what} requires a BCK-algebra")


def is_commutative(alg: CayleyAlgebra) -> PropertyCheck:
    """Does x*(x*y) = y*(y*x) hold everywhere?  Needs a BCK input."""
    _require_bck(alg, "is_commutative")
    t = alg.table
    for x in range(alg.order):
        for y in range(alg.order):
            if t[x][t[x][y]] != t[y][t[y][x]]:
                return PropertyCheck(False, (x, y))
    return PropertyCheck(True)


def is_implicative(alg: CayleyAlgebra) -> PropertyCheck:
    """Does x*(y*x) = x hold everywhere?  Needs a BCK input."""
    _require_bck(alg, "is_implicative")
    t = alg.table
    for x in range(alg.order):
        for y in range(alg.order):
            if t[x][t[y][x]] != x:
                return PropertyCheck(False, (x, y))
    return PropertyCheck(True)


def induced_order(alg: CayleyAlgebra) -> Poset:
    """The relation x <= y iff x*y = 0, validated as a partial order.

    On a BCK-algebra this is always a partial order with minimum 0; if
    validation fails the input was not BCK, which callers were supposed
    to guarantee, so the failure surfaces as an internal invariant
    breach rather than an input error.
    """
    t = alg.table
    leq = tuple(
        tuple(t[x][y] == 0 for y in range(alg.order)) for x in range(alg.order)
    )
    try:
        poset = Poset(leq)
    except InputError as exc:
        raise InternalInvariantError(
            f"induced relation is not a partial order ({exc}); input not BCK?"
        ) from exc
    if poset.minimum != 0:
        raise InternalInvariantError(
            "induced order has no minimum at element 0; input not BCK?"
        )
    return poset


def are_isomorphic(a: CayleyAlgebra, b: CayleyAlgebra) -> tuple[int, ...] | None:
    """Search for a table isomorphism, returned as the image map h.

    h fixes 0 (any isomorphism must, since 0 = x*x); candidates are
    tried in lexicographic order over the images of 1..n-1, so the
    result is deterministic.  Returns None when no isomorphism exists.
    Cost grows factorially with the order; intended for small tables.
    """
    n = a.order
    if n != b.order:
        return None
    ta, tb = a.table, b.table
    rng = range(n)
    for tail in permutations(range(1, n)):
        h = (0,) + tail
        if all(h[ta[x][y]] == tb[h[x]][h[y]] for x in rng for y in rng):
            return h
    return None


def pointwise_function_algebra(k: int, *, max_bits: int = 10) -> CayleyAlgebra:
    """The algebra of all {0,1}-valued tuples of length k.

    Elements are the 2**k bit strings in ascending binary order; bit i
    of the product f*g is 1 exactly when f has bit i and g does not
    (pointwise truncated difference).  The result is always a BCK table
    and always implicative.
    """
    if not 1 <= k <= max_bits:
        raise InputError(f"k must be within 1..{max_bits}")
    size = 1 << k
    table = tuple(tuple(f & ~g for g in range(size)) for f in range(size))
    names = tuple(format(f, f"0{k}b") for f in range(size))
    return CayleyAlgebra(table, names)
