from functools import lru_cache
from itertools import permutations, product

import pytest

import bckcodes as bc
from bckcodes import _kernels

# census re-enumerates on every call; cache so the two parametrized
# sweeps below share one order-5 run
_census = lru_cache(maxsize=None)(bc.census)

# Total table counts and isomorphism-class counts for orders 1..5,
# cross-checked against a pruning-free brute force below (n <= 3) and
# against each other through the partition-validity test.
EXPECTED_TOTALS = {1: 1, 2: 1, 3: 5, 4: 67, 5: 1735}
EXPECTED_ISO = {1: 1, 2: 1, 3: 3, 4: 14, 5: 88}
EXPECTED_SIMILARITY = {1: 1, 2: 1, 3: 3, 4: 19, 5: 219}
EXPECTED_LABEL_CANONICAL = {1: 1, 2: 1, 3: 2, 4: 5, 5: 16}


def _brute_force_tables(n):
    """Every order-n table passing the axiom check, no pruning at all."""
    found = []
    for cells in product(range(n), repeat=n * n):
        if _kernels.table_is_bck(cells, n):
            found.append(tuple(tuple(cells[i * n : i * n + n]) for i in range(n)))
    return found


@pytest.mark.parametrize("n", [1, 2, 3])
def test_enumeration_matches_unpruned_brute_force(n):
    pruned = {a.table for a in bc.enumerate_bck_algebras(n)}
    brute = set(_brute_force_tables(n))
    assert pruned == brute


def test_enumerated_tables_restore_left_unit_column():
    # x * 0 = x is a consequence of the axioms, not an input constraint,
    # so it must hold on everything the enumerator emits.
    for alg in bc.enumerate_bck_algebras(4):
        assert all(alg.table[x][0] == x for x in range(4))


@pytest.mark.parametrize("n", sorted(EXPECTED_TOTALS))
def test_census_frozen_counts(n):
    report = _census(n)
    assert report.order == n
    assert report.total_tables == EXPECTED_TOTALS[n]
    assert report.iso_classes == EXPECTED_ISO[n]
    assert report.similarity_classes == EXPECTED_SIMILARITY[n]
    assert report.label_canonical_classes == EXPECTED_LABEL_CANONICAL[n]
    assert report.bound == 2 ** ((n - 1) * (n - 2) // 2)
    assert report.bound_check
    assert report.code_varies_within_iso_class == (n >= 3)


@pytest.mark.parametrize("n", sorted(EXPECTED_TOTALS))
def test_census_counting_chains(n):
    report = _census(n)
    assert report.label_canonical_classes <= report.iso_classes
    assert report.iso_classes <= report.total_tables
    assert report.similarity_classes <= report.total_tables
    assert report.iso_classes >= report.bound
    assert sum(entry.size for entry in report.class_inventory) == report.total_tables
    assert len(report.class_inventory) == report.iso_classes


def test_iso_partition_is_valid_at_order_3():
    algebras = list(bc.enumerate_bck_algebras(3))
    reps = [entry.representative for entry in _census(3).class_inventory]
    for a, b in zip(reps, reps[1:]):
        assert bc.are_isomorphic(a, b) is None
    for alg in algebras:
        matches = [r for r in reps if bc.are_isomorphic(alg, r) is not None]
        assert len(matches) == 1


def test_label_canonical_code_is_an_iso_invariant():
    algebras = list(bc.enumerate_bck_algebras(4))
    alg = algebras[17]
    base = bc.label_canonical_code(alg)
    for tail in permutations(range(1, 4)):
        h = (0,) + tail
        hinv = [0] * 4
        for x, hx in enumerate(h):
            hinv[hx] = x
        relabeled = bc.CayleyAlgebra(
            tuple(
                tuple(h[alg.table[hinv[a]][hinv[b]]] for b in range(4))
                for a in range(4)
            )
        )
        assert bc.label_canonical_code(relabeled) == base


def test_plain_canonical_code_is_label_sensitive():
    # Two isomorphic order-3 tables with different plain canonical codes
    # must exist, otherwise similarity classes could not exceed
    # label-canonical classes the way the counts above show.
    algebras = list(bc.enumerate_bck_algebras(3))
    witness = False
    for i, a in enumerate(algebras):
        for b in algebras[i + 1 :]:
            if bc.are_isomorphic(a, b) is not None:
                if bc.canonical_code(a) != bc.canonical_code(b):
                    witness = True
    assert witness


def test_quotient_classes_order_3():
    groups = bc.quotient_classes(bc.enumerate_bck_algebras(3))
    assert [(g[0].strings(), len(g[1])) for g in groups] == [
        (("111", "011", "010"), 2),
        (("111", "011", "001"), 2),
        (("111", "010", "001"), 1),
    ]
    for code, members in groups:
        for alg in members:
            assert bc.canonical_code(alg) == code
    for alg in groups[0][1]:
        assert bc.code_similar(groups[0][1][0], alg)


def test_quotient_classes_rejects_mixed_orders():
    a2 = next(bc.enumerate_bck_algebras(2))
    a3 = next(bc.enumerate_bck_algebras(3))
    with pytest.raises(bc.InputError):
        bc.quotient_classes([a2, a3])


def test_quotient_classes_rejects_non_bck():
    bad = bc.CayleyAlgebra(((0, 0), (1, 1)))
    with pytest.raises(bc.NotBckError):
        bc.quotient_classes([bad])
    assert bc.quotient_classes([]) == ()


def test_enumeration_bounds():
    with pytest.raises(bc.InputError):
        next(bc.enumerate_bck_algebras(0))
    with pytest.raises(bc.InputError):
        next(bc.enumerate_bck_algebras(6))
    with pytest.raises(bc.InputError):
        next(bc.enumerate_bck_algebras(7, allow_large=True))
    first = next(bc.enumerate_bck_algebras(6, allow_large=True))
    assert bc.check_axioms(first).is_bck
