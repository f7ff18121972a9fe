"""Embedding arbitrary codes into the triangular family, and the
algebra carried by the whole family of a given order.

`embed_matrix` widens an n x m code matrix A into the square block
matrix [[I_n, A], [0, I_m]], which is always unit upper triangular with
distinct, lex-descending rows.  `ensure_all_ones` completes such a
matrix with an all-ones first row when needed, and `lift_code` chains
the two, rebuilds the algebra of the completed matrix, and reads the
original code back off the columns that carried A.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import CayleyAlgebra, Poset
from .codes import (
    BlockCode,
    CodeMatrix,
    lex_sort_desc,
    staircase_code,
)
from .construct import algebra_from_poset, construct_from_code
from .encode import BckFunction, canonical_code, generate_code
from .errors import InputError, InternalInvariantError


def embed_matrix(m: CodeMatrix) -> CodeMatrix:
    """Square embedding [[I, A], [0, I]] of a lex-descending matrix."""
    for i in range(m.rows - 1):
        if m.entries[i] < m.entries[i + 1]:
            raise InputError("matrix rows must be in descending lexicographic order")
    n, w = m.rows, m.cols
    top = [
        tuple(1 if j == i else 0 for j in range(n)) + m.entries[i] for i in range(n)
    ]
    bottom = [
        tuple(0 for _ in range(n)) + tuple(1 if j == i else 0 for j in range(w))
        for i in range(w)
    ]
    return CodeMatrix(tuple(top + bottom))


def ensure_all_ones(b: CodeMatrix) -> CodeMatrix:
    """Prepend an all-ones row (and matching zero column) when missing."""
    if not b.is_square or not b.is_upper_triangular or not b.has_unit_diagonal:
        raise InputError("expected a square unit upper-triangular matrix")
    if all(v == 1 for v in b.entries[0]):
        return b
    q = b.rows
    rows = [tuple(1 for _ in range(q + 1))]
    rows.extend((0,) + row for row in b.entries)
    return CodeMatrix(tuple(rows))


@dataclass(frozen=True)
class LiftResult:
    """Outcome of lifting a code into the triangular family.

    ``column_map[j]`` is the ambient algebra element standing for
    column j of the sorted input; ``domain`` holds those elements'
    labels in the same order.  ``lifted_code`` always contains every
    word of the sorted input.
    """

    algebra: CayleyAlgebra
    domain: tuple[str, ...]
    function: BckFunction
    lifted_code: BlockCode
    column_map: tuple[int, ...]
    source_code: BlockCode
    embedded: CodeMatrix
    ambient: CodeMatrix


def lift_code(v: BlockCode) -> LiftResult:
    sorted_v = lex_sort_desc(v)
    m = CodeMatrix.from_code(sorted_v)
    embedded = embed_matrix(m)
    ambient = ensure_all_ones(embedded)
    shift = ambient.rows - embedded.rows

    result = construct_from_code(ambient.to_code())
    column_map = tuple(shift + m.rows + j for j in range(m.cols))
    names = result.algebra.names
    domain = tuple(names[e] for e in column_map)
    function = BckFunction(domain, result.algebra, column_map)
    lifted = generate_code(function)

    missing = set(sorted_v.words) - set(lifted.words)
    if missing:
        raise InternalInvariantError(
            f"lifted code lost {len(missing)} input codeword(s)"
        )
    return LiftResult(
        algebra=result.algebra,
        domain=domain,
        function=function,
        lifted_code=lifted,
        column_map=column_map,
        source_code=sorted_v,
        embedded=embedded,
        ambient=ambient,
    )


def family_algebra(n: int) -> tuple[CayleyAlgebra, BlockCode]:
    """The BCK-algebra carried by all triangular-family codes of order n.

    Members are sorted descending by their matrices, so the staircase
    code is element 0; x*y = 0 exactly when x's matrix precedes y's in
    the row-by-row word order.  Returns the algebra together with its
    canonical code (one word per member).  Bounded at n = 6, where the
    family already has 1024 members.
    """
    from .codes import enumerate_triangular_codes

    if not 1 <= n <= 6:
        raise InputError("family_algebra supports 1 <= n <= 6")

    members = [lex_sort_desc(c) for c in enumerate_triangular_codes(n)]
    members.sort(key=lambda c: tuple(w.bits for w in c.words), reverse=True)
    if members[0] != staircase_code(n):
        raise InternalInvariantError("family maximum is not the staircase code")

    # Rows packed as integers: word order a <= b becomes b & ~a == 0.
    packed = [
        tuple(int("".join(map(str, w.bits)), 2) for w in c.words) for c in members
    ]
    size = len(members)

    def le(i: int, j: int) -> bool:
        for a, b in zip(packed[i], packed[j]):
            if a != b:
                return b & ~a == 0
        return True

    leq = tuple(tuple(le(i, j) for j in range(size)) for i in range(size))
    poset = Poset(leq)
    if poset.minimum != 0:
        raise InternalInvariantError("staircase code is not the order minimum")
    algebra = algebra_from_poset(poset)
    return algebra, canonical_code(algebra)
