from random import Random

import pytest

from lcsideals.freealg import Poly, bracket
from lcsideals.linalg import (
    GradedSubspace,
    contains,
    extension_dim,
    insert,
    is_subspace,
    poly_to_introw,
    rank_word,
    word_rank,
)

from helpers import random_homogeneous


def test_rank_round_trip():
    for n in (2, 3):
        for d in (0, 1, 3):
            for r in range(n**d):
                assert word_rank(rank_word(r, n, d), n) == r


def test_insert_examples():
    w = bracket(Poly.gen(2, 1), Poly.gen(2, 2))
    S = GradedSubspace(2, 2)
    insert(S, w)
    assert S.dim == 1
    insert(S, w)
    assert S.dim == 1  # idempotent
    insert(S, Poly.zero(2))
    assert S.dim == 1


def test_insert_degree_mismatch():
    S = GradedSubspace(2, 2)
    with pytest.raises(ValueError):
        S.insert(Poly.gen(2, 1))


def test_contains_examples():
    w = bracket(Poly.gen(2, 1), Poly.gen(2, 2))
    S = GradedSubspace(2, 2).insert(w).freeze()
    assert contains(S, w.scale(2))
    assert not contains(S, Poly.monomial(2, (1, 2)))
    assert contains(S, Poly.zero(2))


def test_contains_sum_of_rows():
    rng = Random(11)
    S = GradedSubspace(2, 3)
    for _ in range(4):
        S.insert(random_homogeneous(rng, 2, 3))
    S.freeze()
    rows = S.row_polys()
    if len(rows) >= 2:
        assert S.contains(rows[0] + rows[1])


def test_is_subspace_examples():
    w = bracket(Poly.gen(2, 1), Poly.gen(2, 2))
    S = GradedSubspace(2, 2).insert(w).freeze()
    T = GradedSubspace(2, 2).insert(Poly.monomial(2, (1, 2))).freeze()
    empty = GradedSubspace(2, 2).freeze()
    assert is_subspace(S, S)
    assert is_subspace(empty, T)
    assert not is_subspace(T, S)


def test_dim_growth_and_membership_agree():
    rng = Random(12)
    for _ in range(5):
        S = GradedSubspace(2, 4)
        polys = [random_homogeneous(rng, 2, 4) for _ in range(8)]
        for p in polys:
            before = S.dim
            was_member = S.contains(p)
            S.insert(p)
            assert S.dim in (before, before + 1)
            assert (S.dim == before) == was_member


def test_frozen_is_reduced_echelon():
    rng = Random(13)
    S = GradedSubspace(2, 4)
    for _ in range(10):
        S.insert(random_homogeneous(rng, 2, 4, terms=6))
    S.freeze()
    pivots = {word_rank(w, 2) for w in S.pivot_words()}
    for row in S.int_rows():
        lead = max(row)
        assert lead in pivots
        # no other pivot appears in any row
        assert all(k == lead or k not in pivots for k in row)
    with pytest.raises(RuntimeError):
        S.insert(Poly.monomial(2, (1, 1, 1, 1)))


def test_row_polys_have_unit_leading_coefficient():
    rng = Random(14)
    S = GradedSubspace(2, 3)
    for _ in range(5):
        S.insert(random_homogeneous(rng, 2, 3, terms=5).scale(3))
    S.freeze()
    for p, w in zip(S.row_polys(), S.pivot_words()):
        assert p.coefficient(w) == 1


def test_mutual_subspace_means_equal_dim():
    rng = Random(15)
    A = GradedSubspace(2, 3)
    B = GradedSubspace(2, 3)
    shared = [random_homogeneous(rng, 2, 3) for _ in range(4)]
    for p in shared:
        A.insert(p)
        B.insert(p)
    A.freeze()
    B.freeze()
    assert is_subspace(A, B) and is_subspace(B, A)
    assert A.dim == B.dim


def test_extension_dim():
    w = bracket(Poly.gen(2, 1), Poly.gen(2, 2))
    S = GradedSubspace(2, 2).insert(w).freeze()
    assert extension_dim(S, [w]) == 0
    assert extension_dim(S, [Poly.monomial(2, (1, 2))]) == 1
    assert (
        extension_dim(S, [Poly.monomial(2, (1, 2)), Poly.monomial(2, (2, 1))]) == 1
    )


def test_poly_to_introw_clears_denominators():
    from fractions import Fraction

    p = Poly(2, {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 3)})
    row = poly_to_introw(p, 2, 2)
    assert sorted(row.values()) == [2, 3]
