import random

from hypothesis import given, settings, strategies as st

from locconst.snf import IntMatrix, abelian_invariants, invariant_factors, smith_normal_form


def _check(rows, ncols):
    M = IntMatrix.from_rows(rows, ncols)
    U, S, V = smith_normal_form(M)
    assert (U @ M @ V).tolist() == S.tolist()
    assert abs(U.det()) == 1 and abs(V.det()) == 1
    d = [x for x in S.diagonal() if x]
    assert all(b % a == 0 for a, b in zip(d, d[1:]))
    for i, row in enumerate(S.tolist()):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0


def test_small_diagonal():
    M = IntMatrix.from_rows([[2, 0], [0, 3]], 2)
    _, S, _ = smith_normal_form(M)
    assert S.diagonal() == [1, 6]


def test_zero_and_empty():
    _check([[0, 0], [0, 0]], 2)
    _check([], 3)
    assert abelian_invariants([], 2) == [0, 0]


def test_abelian_invariants():
    assert abelian_invariants([[2, 0], [0, 3]], 2) == [6]
    assert abelian_invariants([[4, 6]], 2) == [2, 0]


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.integers(0, 10**6))
def test_random_matrices(m, n, seed):
    rng = random.Random(seed)
    rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
    _check(rows, n)


def test_invariant_factors_gcd_chain():
    M = IntMatrix.from_rows([[6, 4], [4, 6]], 2)
    assert invariant_factors(M) == [2, 10]
