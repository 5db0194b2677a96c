import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crcodes import MatrixGF, MonomialMap, VectorGF, gf, kernel_basis, kron, rref
from crcodes.errors import FieldMismatch, LengthMismatch
from crcodes.linalg import (distance, inverse, matmul, normalize_columns, row_basis,
                            same_row_space, weight)

from brute import parity_kernel, span

F2, F3, F4 = gf(2), gf(3), gf(4)


def M(spec, rows, cols=None):
    return MatrixGF(spec, rows, cols=cols)


def test_rref_identity():
    R, piv, rank = rref(MatrixGF.identity(F2, 3))
    assert R.tolist() == np.eye(3, dtype=int).tolist()
    assert piv == [0, 1, 2] and rank == 3


def test_rref_duplicate_rows():
    R, piv, rank = rref(M(F2, [[1, 1], [1, 1]]))
    assert R.tolist() == [[1, 1], [0, 0]]
    assert piv == [0] and rank == 1


def test_rref_row_swap():
    R, piv, rank = rref(M(F2, [[0, 1, 1], [1, 0, 1]]))
    assert R.tolist() == [[1, 0, 1], [0, 1, 1]]
    assert piv == [0, 1] and rank == 2


def test_kernel_examples():
    K = kernel_basis(M(F2, [[1, 1, 1]]))
    assert span(F2, K.tolist()) == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}
    assert K.rows == 2
    assert kernel_basis(MatrixGF.identity(F3, 4)).shape == (0, 4)
    assert kernel_basis(M(F2, [[1, 0, 1], [0, 1, 1]])).tolist() == [[1, 1, 1]]


def test_kron_examples():
    B = M(F2, [[1, 0, 1], [0, 1, 1]])
    assert kron(M(F2, [[1, 1]]), B).tolist() == [[1, 0, 1, 1, 0, 1], [0, 1, 1, 0, 1, 1]]
    assert kron(M(F2, [[1]]), B) == B
    assert kron(M(F3, [[1, 2]]), M(F3, [[1, 1]])).tolist() == [[1, 1, 2, 2]]


def test_kron_field_mismatch():
    with pytest.raises(FieldMismatch):
        kron(M(F2, [[1]]), M(F3, [[1]]))


def test_monomial_examples():
    v = np.array([1, 0])
    assert MonomialMap.identity(F2, 2)(v).tolist() == [1, 0]
    assert MonomialMap(F2, (1, 0), (1, 1))(v).tolist() == [0, 1]
    assert MonomialMap(F3, (0, 1), (2, 1))(np.array([1, 1])).tolist() == [2, 1]


def test_monomial_validation():
    with pytest.raises(ValueError):
        MonomialMap(F3, (0, 0), (1, 1))
    with pytest.raises(ValueError):
        MonomialMap(F3, (0, 1), (0, 1))
    with pytest.raises(LengthMismatch):
        MonomialMap(F3, (0, 1), (1,))
    with pytest.raises(LengthMismatch):
        MonomialMap.identity(F2, 3)(np.array([1, 0]))


def test_vector_weight_and_support():
    v = VectorGF(F4, [0, 3, 0, 2])
    assert v.weight() == 2 and v.support() == {1, 3}
    assert weight([1, 0, 2]) == 2
    assert distance([1, 2, 0], [1, 0, 0]) == 1


def test_matrix_inverse_and_product():
    A = M(F3, [[1, 2, 0], [0, 1, 1], [2, 0, 1]])
    Ai = inverse(A)
    assert (A @ Ai) == MatrixGF.identity(F3, 3)
    with pytest.raises(ValueError):
        inverse(M(F2, [[1, 1], [1, 1]]))


def test_normalize_columns():
    cols, leads = normalize_columns(F3, np.array([[0, 2, 1], [2, 1, 0]]))
    assert cols.tolist() == [[0, 1, 1], [1, 2, 0]]
    assert leads.tolist() == [2, 2, 1]


@st.composite
def matrices(draw, fields=(2, 3, 4, 5, 8, 9)):
    q = draw(st.sampled_from(fields))
    r = draw(st.integers(1, 4))
    c = draw(st.integers(1, 5))
    data = draw(st.lists(st.integers(0, q - 1), min_size=r * c, max_size=r * c))
    return M(gf(q), np.array(data).reshape(r, c))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity_and_kernel_against_enumeration(A):
    K = kernel_basis(A)
    assert A.rank() + K.rows == A.cols
    if A.spec.q ** A.cols <= 4096:
        expected = parity_kernel(A.spec, A.tolist(), A.cols)
        got = span(A.spec, K.tolist()) if K.rows else {(0,) * A.cols}
        assert got == expected


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_preserves_row_space(A):
    R, piv, rank = rref(A)
    assert same_row_space(R, A)
    assert rank == len(piv) == row_basis(A).rows
    for i, p in enumerate(piv):
        assert R.data[i, p] == 1
        assert not np.delete(R.data[:, p], i).any()


@settings(max_examples=40, deadline=None)
@given(matrices(fields=(2, 3, 4)), matrices(fields=(2, 3, 4)))
def test_kron_rank_is_multiplicative(A, B):
    if A.spec != B.spec:
        return
    assert kron(A, B).rank() == A.rank() * B.rank()


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 7, 9]), st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_monomial_group_laws(q, n, seed):
    F = gf(q)
    rng = np.random.default_rng(seed)
    a = MonomialMap.random(F, n, rng)
    b = MonomialMap.random(F, n, rng)
    v = rng.integers(0, q, size=(5, n))
    assert np.array_equal(a.compose(b).apply_array(v), a.apply_array(b.apply_array(v)))
    assert a.inverse().compose(a).is_identity()
    assert weight(a.apply_array(v[0])) == weight(v[0])
    assert distance(a.apply_array(v[0]), a.apply_array(v[1])) == distance(v[0], v[1])
    assert np.array_equal(a.apply_array(v), matmul(F, v, a.matrix().data))
    assert MonomialMap.from_json(F, a.to_json()) == a


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 4]), st.integers(0, 2**32 - 1))
def test_transform_parity_check_annihilates_image(q, seed):
    F = gf(q)
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 7))
    H = M(F, rng.integers(0, q, size=(2, n)))
    sigma = MonomialMap.random(F, n, rng)
    G = kernel_basis(H)
    if not G.rows:
        return
    H2 = sigma.transform_parity_check(H)
    images = sigma.apply_array(G.data)
    assert not matmul(F, images, H2.data.T).any()


def test_extension_field_matmul_matches_scalar_loop():
    rng = np.random.default_rng(7)
    for q in (4, 8, 9, 16):
        F = gf(q)
        a = rng.integers(0, q, size=(6, 5))
        b = rng.integers(0, q, size=(5, 4))
        ref = np.zeros((6, 4), dtype=np.int64)
        for i in range(6):
            for j in range(4):
                s = 0
                for t in range(5):
                    s = F.add(s, F.mul(int(a[i, t]), int(b[t, j])))
                ref[i, j] = s
        assert np.array_equal(matmul(F, a, b), ref)
