"""Builders for the code families: Hamming, repetition, q-repeat, direct
and Kronecker-product codes."""

from __future__ import annotations

import itertools

import numpy as np

from .code import LinearCode, code_from_generator, code_from_parity_check
from .errors import ZeroVector
from .gf import FieldSpec
from .linalg import MatrixGF, VectorGF, kron


def projective_points(spec: FieldSpec, m: int) -> np.ndarray:
    """Normalized representatives of PG(m-1, q) as columns of an ``m x n_b`` array.

    Each column has its first nonzero entry (lowest row) equal to 1; columns
    are sorted by ``sum(b[i] * q**i)``.
    """
    q = spec.q
    pts = []
    for idx in range(1, q**m):
        col = [(idx // q**i) % q for i in range(m)]
        if next(c for c in col if c) == 1:
            pts.append(col)
    return np.array(pts, dtype=np.int64).T.reshape(m, -1)


def hamming_parity_check(spec: FieldSpec, m_b: int) -> MatrixGF:
    if m_b < 2:
        raise ValueError("Hamming redundancy m_b must be >= 2")
    return MatrixGF(spec, projective_points(spec, m_b))


def hamming_length(q: int, m_b: int) -> int:
    return (q**m_b - 1) // (q - 1)


def hamming(spec: FieldSpec, m_b: int) -> LinearCode:
    """The ``[(q^m_b - 1)/(q - 1), n_b - m_b, 3]_q`` Hamming code."""
    return code_from_parity_check(spec, hamming_parity_check(spec, m_b))


def repetition(spec: FieldSpec, n_a: int) -> LinearCode:
    if n_a < 1:
        raise ValueError("repetition length must be >= 1")
    return code_from_generator(spec, MatrixGF(spec, np.ones((1, n_a), dtype=np.int64)))


def q_repeat(C: LinearCode) -> LinearCode:
    """Prepend a free coordinate: ``{(c0, x) : c0 in F_q, x in C}``."""
    G = np.zeros((C.k + 1, C.n + 1), dtype=np.int64)
    G[0, 0] = 1
    G[1:, 1:] = C.gen.data
    return code_from_generator(C.spec, MatrixGF(C.spec, G))


def q_repeat_times(C: LinearCode, times: int) -> LinearCode:
    for _ in range(times):
        C = q_repeat(C)
    return C


def direct(spec: FieldSpec, h) -> LinearCode:
    """The ``[m+1, m]`` code generated by ``[I | h]``."""
    h = np.asarray(h.data if isinstance(h, VectorGF) else h, dtype=np.int64).reshape(-1)
    if not h.any():
        raise ZeroVector("h must be nonzero")
    m = len(h)
    G = np.concatenate([np.eye(m, dtype=np.int64), h[:, None]], axis=1)
    return code_from_generator(spec, MatrixGF(spec, G))


def kron_parity_check(spec: FieldSpec, n_a: int, m_b: int) -> MatrixGF:
    """``A (x) B`` with ``A`` the all-ones row of length ``n_a``: ``[B B ... B]``."""
    if n_a < 1:
        raise ValueError("n_a must be >= 1")
    A = MatrixGF(spec, np.ones((1, n_a), dtype=np.int64))
    return kron(A, hamming_parity_check(spec, m_b))


def kron_code(spec: FieldSpec, n_a: int, m_b: int) -> LinearCode:
    return code_from_parity_check(spec, kron_parity_check(spec, n_a, m_b))


def direct_vectors(spec: FieldSpec, m: int, weight: int):
    """Every ``h`` in F_q^m of the given weight, in lexicographic order."""
    for supp in itertools.combinations(range(m), weight):
        for vals in itertools.product(range(1, spec.q), repeat=weight):
            h = [0] * m
            for i, v in zip(supp, vals):
                h[i] = v
            yield h
