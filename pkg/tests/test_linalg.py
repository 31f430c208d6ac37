"""Rank computation: exact, modular, and cross-checks against a naive
Fraction elimination oracle."""

import random
from fractions import Fraction

import pytest

from weight11.linalg import (
    SparseMatrix, RankMode, EXACT, MODULAR, RankDisagreement,
    rank, rank_exact, rank_mod_p, rank_info,
)


def naive_rank(dense):
    """Plain Gaussian elimination over Q; the independent oracle."""
    m = [[Fraction(x) for x in row] for row in dense]
    rank = 0
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def from_dense(dense):
    rows, cols = len(dense), len(dense[0]) if dense else 0
    return SparseMatrix.from_entries(
        rows, cols, {(i, j): v for i, row in enumerate(dense)
                     for j, v in enumerate(row) if v})


def test_identity_rank():
    assert rank(from_dense([[1, 0], [0, 1]]), EXACT) == 2
    assert rank(from_dense([[1, 0], [0, 1]]), MODULAR) == 2


def test_one_by_one():
    assert rank(from_dense([[1]]), EXACT) == 1


def test_zero_matrix():
    m = SparseMatrix.from_entries(3, 4, {})
    assert rank(m, EXACT) == 0
    assert rank(m, MODULAR) == 0


def test_random_matrices_match_oracle():
    rng = random.Random(11)
    for trial in range(40):
        rows = rng.randint(1, 8)
        cols = rng.randint(1, 8)
        dense = [[rng.choice([0, 0, 0, 1, -1, 2, Fraction(1, 3)])
                  for _ in range(cols)] for _ in range(rows)]
        m = from_dense(dense)
        want = naive_rank(dense)
        assert rank_exact(m) == want
        assert rank(m, MODULAR) == want


def test_rank_transpose_and_bounds():
    rng = random.Random(5)
    for _ in range(20):
        rows, cols = rng.randint(1, 7), rng.randint(1, 7)
        dense = [[rng.randint(-2, 2) for _ in range(cols)]
                 for _ in range(rows)]
        m = from_dense(dense)
        r = rank(m, EXACT)
        assert r == rank(m.transpose(), EXACT)
        assert r <= min(rows, cols)


def test_rank_permutation_invariance():
    rng = random.Random(23)
    dense = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(5)]
    m = from_dense(dense)
    base = rank(m, EXACT)
    for _ in range(5):
        rp = list(range(5))
        cp = list(range(6))
        rng.shuffle(rp)
        rng.shuffle(cp)
        assert rank(m.permuted(rp, cp), EXACT) == base


def test_modular_mode_validation():
    with pytest.raises(ValueError):
        RankMode("modular", primes=(3, 5))
    with pytest.raises(ValueError):
        RankMode("modular", primes=(2147483647,))


def test_rank_info_reports_method():
    m = from_dense([[1, 2], [2, 4]])
    r, how = rank_info(m, MODULAR)
    assert (r, how) == (1, "modular")
    r, how = rank_info(m, EXACT)
    assert (r, how) == (1, "exact")


def test_compose():
    a = from_dense([[1, 2], [0, 1]])
    b = from_dense([[1, 0], [-1, 1]])
    ab = a.compose(b)
    assert dict(((r, c), v) for r, c, v in ab.triples) == {
        (0, 0): -1, (0, 1): 2, (1, 0): -1, (1, 1): 1}
