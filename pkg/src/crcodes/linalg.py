"""Dense linear algebra over GF(q).

Matrices and vectors are immutable wrappers around read-only ``uint8``
numpy arrays holding field-element encodings. Free functions in this module
also accept raw arrays where that is more convenient for bulk work.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import FieldMismatch, LengthMismatch
from .gf import FieldSpec


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=np.uint8, copy=True)
    arr.flags.writeable = False
    return arr


class VectorGF:
    __slots__ = ("spec", "data")

    def __init__(self, spec: FieldSpec, entries):
        data = np.asarray(entries, dtype=np.int64).reshape(-1)
        if data.size and (data.min() < 0 or data.max() >= spec.q):
            raise ValueError(f"entries out of range for GF({spec.q})")
        self.spec = spec
        self.data = _frozen(data)

    def __len__(self):
        return len(self.data)

    def __iter__(self):
        return iter(int(x) for x in self.data)

    def __getitem__(self, i):
        return int(self.data[i])

    def __eq__(self, other):
        return (isinstance(other, VectorGF) and self.spec == other.spec
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.spec, self.data.tobytes()))

    def __repr__(self):
        return f"VectorGF({self.data.tolist()})"

    def weight(self) -> int:
        return int(np.count_nonzero(self.data))

    def support(self) -> set[int]:
        return {int(i) for i in np.flatnonzero(self.data)}

    def tolist(self) -> list[int]:
        return self.data.tolist()


class MatrixGF:
    __slots__ = ("spec", "data")

    def __init__(self, spec: FieldSpec, entries, cols: int | None = None):
        data = np.asarray(entries, dtype=np.int64)
        if data.ndim == 1:
            data = data.reshape(1, -1) if data.size or cols is None else data.reshape(0, cols)
        if data.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if data.size and (data.min() < 0 or data.max() >= spec.q):
            raise ValueError(f"entries out of range for GF({spec.q})")
        self.spec = spec
        self.data = _frozen(data)

    @classmethod
    def identity(cls, spec, n):
        return cls(spec, np.eye(n, dtype=np.int64))

    @classmethod
    def zeros(cls, spec, rows, cols):
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self):
        return self.data.shape

    def __eq__(self, other):
        return (isinstance(other, MatrixGF) and self.spec == other.spec
                and self.data.shape == other.data.shape
                and np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.spec, self.data.shape, self.data.tobytes()))

    def __repr__(self):
        return f"MatrixGF(GF({self.spec.q}), {self.data.tolist()})"

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def row(self, i) -> VectorGF:
        return VectorGF(self.spec, self.data[i])

    def column(self, j) -> VectorGF:
        return VectorGF(self.spec, self.data[:, j])

    def submatrix(self, cols) -> MatrixGF:
        return MatrixGF(self.spec, self.data[:, list(cols)], cols=len(cols))

    def __matmul__(self, other):
        if isinstance(other, MatrixGF):
            _same_field(self.spec, other.spec)
            return MatrixGF(self.spec, matmul(self.spec, self.data, other.data), cols=other.cols)
        return NotImplemented

    @property
    def T(self) -> MatrixGF:
        return MatrixGF(self.spec, self.data.T, cols=self.rows)

    def rank(self) -> int:
        return rref(self)[2]


def _same_field(a: FieldSpec, b: FieldSpec):
    if a != b:
        raise FieldMismatch(f"{a} vs {b}")


def matmul(spec: FieldSpec, a, b) -> np.ndarray:
    """Product of two integer arrays over GF(q); returns an int64 array."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if spec.m == 1:
        return (a @ b) % spec.p
    a8 = a.astype(np.uint8)
    b8 = b.astype(np.uint8)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.uint8)
    for t in range(a.shape[1]):
        term = spec.mul_table[a8[:, t, None], b8[None, t, :]]
        if spec.p == 2:
            out ^= term  # characteristic 2: addition is xor of digit strings
        else:
            out = spec.add_table[out, term]
    return out.astype(np.int64)


def rref(M: MatrixGF) -> tuple[MatrixGF, list[int], int]:
    """Reduced row echelon form, zero rows kept at the bottom."""
    spec = M.spec
    A = M.data.astype(np.int64)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if not nz.size:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = spec.mul_table[spec.inv_table[A[r, c]], A[r]]
        for i in range(rows):
            if i != r and A[i, c]:
                f = A[i, c]
                A[i] = spec.sub_table[A[i], spec.mul_table[f, A[r]]]
        pivots.append(c)
        r += 1
    return MatrixGF(spec, A, cols=cols), pivots, r


def row_basis(M: MatrixGF) -> MatrixGF:
    """RREF with zero rows dropped: the canonical basis of the row space."""
    R, _, rank = rref(M)
    return MatrixGF(M.spec, R.data[:rank], cols=M.cols)


def same_row_space(A: MatrixGF, B: MatrixGF) -> bool:
    _same_field(A.spec, B.spec)
    return A.cols == B.cols and row_basis(A) == row_basis(B)


def kernel_basis(M: MatrixGF) -> MatrixGF:
    """Basis (in RREF) of ``{v : M v^T = 0}``."""
    spec = M.spec
    R, pivots, rank = rref(M)
    cols = M.cols
    free = [c for c in range(cols) if c not in set(pivots)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for i, pc in enumerate(pivots):
            K[t, pc] = spec.neg_table[R.data[i, f]]
    return row_basis(MatrixGF(spec, K, cols=cols)) if len(free) else MatrixGF(spec, K, cols=cols)


def kron(A: MatrixGF, B: MatrixGF) -> MatrixGF:
    """Kronecker product: block ``(r, s)`` is ``a[r, s] * B``."""
    _same_field(A.spec, B.spec)
    spec = A.spec
    a = A.data.astype(np.int64)
    b = B.data.astype(np.int64)
    blocks = spec.mul_table[a[:, None, :, None], b[None, :, None, :]]
    out = blocks.reshape(A.rows * B.rows, A.cols * B.cols)
    return MatrixGF(spec, out, cols=A.cols * B.cols)


def weight(v) -> int:
    return int(np.count_nonzero(np.asarray(v.data if isinstance(v, VectorGF) else v)))


def distance(u, v) -> int:
    a = u.data if isinstance(u, VectorGF) else np.asarray(u)
    b = v.data if isinstance(v, VectorGF) else np.asarray(v)
    if a.shape != b.shape:
        raise LengthMismatch(f"{a.shape} vs {b.shape}")
    return int(np.count_nonzero(a != b))


@dataclass(frozen=True)
class MonomialMap:
    """Coordinate permutation with per-coordinate nonzero scaling.

    Acting on ``v`` it produces ``w`` with ``w[perm[i]] = scales[i] * v[i]``.
    """

    spec: FieldSpec
    perm: tuple[int, ...]
    scales: tuple[int, ...]

    def __post_init__(self):
        perm = tuple(int(x) for x in self.perm)
        scales = tuple(int(x) for x in self.scales)
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "scales", scales)
        if sorted(perm) != list(range(len(perm))):
            raise ValueError(f"not a permutation: {perm}")
        if len(scales) != len(perm):
            raise LengthMismatch("perm and scales differ in length")
        if any(not 0 < s < self.spec.q for s in scales):
            raise ValueError("scales must be nonzero field elements")

    @classmethod
    def identity(cls, spec, n):
        return cls(spec, tuple(range(n)), (1,) * n)

    @classmethod
    def permutation(cls, spec, perm):
        return cls(spec, tuple(perm), (1,) * len(perm))

    @classmethod
    def transposition(cls, spec, n, i, j):
        perm = list(range(n))
        perm[i], perm[j] = j, i
        return cls.permutation(spec, perm)

    @classmethod
    def scalar(cls, spec, n, c):
        return cls(spec, tuple(range(n)), (c,) * n)

    @classmethod
    def random(cls, spec, n, rng) -> MonomialMap:
        perm = rng.permutation(n)
        scales = rng.integers(1, spec.q, size=n)
        return cls(spec, tuple(perm), tuple(scales))

    def __len__(self):
        return len(self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self))) and all(s == 1 for s in self.scales)

    def apply_array(self, V) -> np.ndarray:
        """Apply to a vector or to each row of a 2-D array."""
        V = np.asarray(V, dtype=np.int64)
        if V.shape[-1] != len(self.perm):
            raise LengthMismatch(f"map of length {len(self.perm)} applied to length {V.shape[-1]}")
        out = np.empty_like(V)
        out[..., list(self.perm)] = self.spec.mul_table[np.array(self.scales), V]
        return out

    def apply(self, v):
        if isinstance(v, VectorGF):
            _same_field(self.spec, v.spec)
            return VectorGF(self.spec, self.apply_array(v.data))
        if isinstance(v, MatrixGF):
            _same_field(self.spec, v.spec)
            return MatrixGF(self.spec, self.apply_array(v.data), cols=v.cols)
        return self.apply_array(v)

    __call__ = apply

    def transform_parity_check(self, H: MatrixGF) -> MatrixGF:
        """Parity-check matrix of ``sigma(C)`` given one of ``C``.

        Column ``i`` of ``H`` divided by ``scales[i]`` moves to ``perm[i]``.
        """
        if H.cols != len(self.perm):
            raise LengthMismatch("parity check width does not match map length")
        spec = self.spec
        inv_s = spec.inv_table[np.array(self.scales)]
        out = np.empty(H.data.shape, dtype=np.int64)
        out[:, list(self.perm)] = spec.mul_table[inv_s[None, :], H.data]
        return MatrixGF(spec, out, cols=H.cols)

    def compose(self, other: MonomialMap) -> MonomialMap:
        """``self after other``: ``(self.compose(other))(v) == self(other(v))``."""
        if len(other) != len(self):
            raise LengthMismatch("maps differ in length")
        _same_field(self.spec, other.spec)
        perm = tuple(self.perm[other.perm[i]] for i in range(len(self)))
        scales = tuple(self.spec.mul(self.scales[other.perm[i]], other.scales[i])
                       for i in range(len(self)))
        return MonomialMap(self.spec, perm, scales)

    def inverse(self) -> MonomialMap:
        n = len(self.perm)
        perm = [0] * n
        scales = [1] * n
        for i, (p, s) in enumerate(zip(self.perm, self.scales)):
            perm[p] = i
            scales[p] = self.spec.inv(s)
        return MonomialMap(self.spec, tuple(perm), tuple(scales))

    def matrix(self) -> MatrixGF:
        """Monomial matrix ``M`` with ``v M == sigma(v)``."""
        n = len(self.perm)
        M = np.zeros((n, n), dtype=np.int64)
        for i, (p, s) in enumerate(zip(self.perm, self.scales)):
            M[i, p] = s
        return MatrixGF(self.spec, M)

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "scales": list(self.scales)}

    @classmethod
    def from_json(cls, spec, obj) -> MonomialMap:
        return cls(spec, tuple(obj["perm"]), tuple(obj["scales"]))


def apply_monomial(sigma: MonomialMap, v):
    return sigma.apply(v)


def inverse(M: MatrixGF) -> MatrixGF:
    """Inverse of a square matrix via row reduction of ``[M | I]``."""
    n = M.rows
    if M.cols != n:
        raise ValueError("only square matrices are invertible")
    aug = MatrixGF(M.spec, np.concatenate([M.data, np.eye(n, dtype=np.uint8)], axis=1))
    R, pivots, _ = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return MatrixGF(M.spec, R.data[:, n:], cols=n)


def normalize_columns(spec: FieldSpec, H) -> tuple[np.ndarray, np.ndarray]:
    """Scale each nonzero column so its first nonzero entry is 1.

    Returns ``(normalized, leads)`` where ``leads[j]`` is the first nonzero
    entry of column ``j`` (0 for a zero column, which is left as is).
    """
    H = np.asarray(H.data if isinstance(H, MatrixGF) else H, dtype=np.int64)
    nz = H != 0
    first = np.argmax(nz, axis=0)
    leads = H[first, np.arange(H.shape[1])] * nz.any(axis=0)
    inv = np.where(leads > 0, spec.inv_table[leads], 0)
    return spec.mul_table[inv[None, :], H].astype(np.int64), leads
