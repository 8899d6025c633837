import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from dp1.exactnum import field_make
from dp1.linalg import det, nullspace, rank, rref

from conftest import FIELDS, rng_for

fields = st.sampled_from(FIELDS).map(field_make)


def _matrix(F, rng, r, c):
    return [[F.random(rng) for _ in range(c)] for _ in range(r)]


@given(fields, st.integers(1, 6), st.integers(1, 7), st.integers(0, 2**32))
def test_nullspace_kernel_and_rank_nullity(F, r, c, seed):
    M = _matrix(F, rng_for(seed), r, c)
    ns = nullspace(F, M, c)
    for v in ns:
        assert all(F.is_zero(F.dot(row, v)) for row in M)
    assert rank(F, M) + len(ns) == c


@given(fields, st.integers(1, 5), st.integers(0, 2**32))
def test_det_multiplicative(F, n, seed):
    rng = rng_for(seed)
    A, B = _matrix(F, rng, n, n), _matrix(F, rng, n, n)
    AB = [[F.dot(A[i], [B[k][j] for k in range(n)]) for j in range(n)] for i in range(n)]
    assert det(F, AB) == F.mul(det(F, A), det(F, B))


@given(fields, st.integers(1, 5), st.integers(0, 2**32))
def test_det_zero_iff_singular(F, n, seed):
    A = _matrix(F, rng_for(seed), n, n)
    assert F.is_zero(det(F, A)) == (rank(F, A) < n)


@given(st.integers(1, 5), st.integers(0, 2**32))
def test_rational_det_agrees_with_numpy(n, seed):
    Q = field_make("QQ")
    rng = rng_for(seed)
    A = [[Q.from_int(rng.randint(-9, 9)) for _ in range(n)] for _ in range(n)]
    ref = np.linalg.det(np.array(A, dtype=float))
    assert abs(float(det(Q, A)) - ref) < 1e-6 * max(1.0, abs(ref))


def test_rref_pivots():
    F = field_make("q:7")
    R, piv = rref(F, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert piv == [0, 1]
    assert len([r for r in R if any(r)]) == 2
