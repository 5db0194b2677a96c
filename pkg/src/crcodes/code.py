"""Linear codes and their exact analytics.

Two independent routes are provided for most quantities:

* plain enumeration of the ``q^k`` codewords (mixed-radix counter over the
  message space), and
* dynamic programs over the ``q^(n-k)`` syndromes, which add one coordinate
  at a time and never touch individual codewords.

The syndrome route is what makes long codes with small redundancy (the
Kronecker family) tractable; the enumeration route is kept as the oracle.

Syndromes ``s = H v^T`` are indexed by ``sum(s[i] * q**i)``. Because field
elements are themselves base-``p`` digit strings, field addition of two
syndromes is digit-wise addition mod ``p`` of their indices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import config
from .errors import FullSpace, LengthMismatch, ZeroCode
from .gf import FieldSpec
from .linalg import MatrixGF, kernel_basis, matmul, row_basis

_CHUNK = 1 << 16


class SyndromeSpace:
    """Index arithmetic on F_q^r, with F_q^r encoded as ``0 .. q^r - 1``."""

    def __init__(self, spec: FieldSpec, r: int):
        self.spec = spec
        self.r = r
        self.size = spec.q**r
        p = spec.p
        nd = r * spec.m
        idx = np.arange(self.size, dtype=np.int64)
        self._pw = p ** np.arange(nd, dtype=np.int64)
        self.digits = (idx[:, None] // self._pw[None, :]) % p if nd else np.zeros((1, 0), np.int64)

    def index(self, s) -> int:
        s = np.asarray(s, dtype=np.int64)
        return int((s * self.spec.q ** np.arange(self.r, dtype=np.int64)).sum())

    def indices(self, S) -> np.ndarray:
        """Row-wise :meth:`index` for a 2-D array of syndromes."""
        S = np.asarray(S, dtype=np.int64)
        return S @ (self.spec.q ** np.arange(self.r, dtype=np.int64))

    def vector(self, idx: int) -> np.ndarray:
        return (idx // self.spec.q ** np.arange(self.r, dtype=np.int64)) % self.spec.q

    def shift(self, t: int) -> np.ndarray:
        """Permutation ``s -> s + t`` on all indices."""
        return ((self.digits + self.digits[t]) % self.spec.p) @ self._pw

    def neg(self, t: int) -> int:
        return int(((-self.digits[t]) % self.spec.p) @ self._pw)


@dataclass(frozen=True, eq=False)
class CosetTable:
    """Per-syndrome leader, leader weight and full weight distribution.

    Row ``s`` of every array refers to the coset with syndrome index ``s``.
    """

    leaders: np.ndarray
    leader_weights: np.ndarray
    distributions: np.ndarray

    def __len__(self):
        return len(self.leader_weights)

    @property
    def rho(self) -> int:
        return int(self.leader_weights.max())

    def classes(self) -> dict[int, np.ndarray]:
        """Syndrome indices grouped by leader weight."""
        return {int(t): np.flatnonzero(self.leader_weights == t)
                for t in np.unique(self.leader_weights)}


class LinearCode:
    """A linear ``[n, k]_q`` code fixed by its RREF generator matrix.

    Equality and hashing use ``(spec, gen)`` only; analytics are memoized
    lazily on the instance.
    """

    def __init__(self, spec: FieldSpec, gen: MatrixGF):
        self.spec = spec
        self.gen = gen
        self._memo = {}

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    @property
    def size(self) -> int:
        return self.spec.q**self.k

    def __eq__(self, other):
        return isinstance(other, LinearCode) and self.spec == other.spec and self.gen == other.gen

    def __hash__(self):
        return hash((self.spec, self.gen))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.spec.q})"

    def _cached(self, key, fn):
        try:
            return self._memo[key]
        except KeyError:
            val = self._memo[key] = fn()
            return val

    # -- structure ------------------------------------------------------------

    @property
    def parity_check(self) -> MatrixGF:
        return self._cached("H", lambda: kernel_basis(self.gen))

    @property
    def syndromes(self) -> SyndromeSpace:
        return self._cached("syn", lambda: SyndromeSpace(self.spec, self.redundancy))

    def column_syndromes(self) -> np.ndarray:
        """Syndrome index of ``a * e_j`` for every column ``j`` and scalar ``a``."""
        def build():
            H = self.parity_check.data.astype(np.int64)
            spec = self.spec
            out = np.zeros((self.n, spec.q), dtype=np.int64)
            for a in range(spec.q):
                out[:, a] = self.syndromes.indices(spec.mul_table[a, H].T)
            return out
        return self._cached("colsyn", build)

    def syndrome(self, v) -> int:
        v = np.asarray(v, dtype=np.int64).reshape(1, -1)
        if v.shape[1] != self.n:
            raise LengthMismatch(f"vector of length {v.shape[1]} for a code of length {self.n}")
        s = matmul(self.spec, self.parity_check.data, v.T).T
        return int(self.syndromes.indices(s)[0])

    def syndrome_indices(self, V) -> np.ndarray:
        V = np.asarray(V, dtype=np.int64)
        if V.shape[-1] != self.n:
            raise LengthMismatch(f"vectors of length {V.shape[-1]} for a code of length {self.n}")
        s = matmul(self.spec, V, self.parity_check.data.T)
        return self.syndromes.indices(s)

    def contains(self, v) -> bool:
        return self.syndrome(v) == 0

    def is_whole_space(self) -> bool:
        return self.k == self.n

    # -- enumeration route ------------------------------------------------------

    def iter_codewords(self, chunk: int = _CHUNK):
        """Yield codewords in blocks, message counter order (digit 0 fastest)."""
        config.check("codewords", self.size, f"enumerating {self.size} codewords")
        q, k = self.spec.q, self.k
        pw = q ** np.arange(k, dtype=np.int64)
        G = self.gen.data.astype(np.int64)
        for start in range(0, self.size, chunk):
            t = np.arange(start, min(start + chunk, self.size), dtype=np.int64)
            msgs = (t[:, None] // pw[None, :]) % q
            yield matmul(self.spec, msgs, G)

    def codewords(self) -> np.ndarray:
        return np.concatenate(list(self.iter_codewords()), axis=0)

    def _enum_weight_distribution(self) -> np.ndarray:
        dist = np.zeros(self.n + 1, dtype=np.int64)
        for block in self.iter_codewords():
            dist += np.bincount(np.count_nonzero(block, axis=1), minlength=self.n + 1)
        return dist

    # -- syndrome route ------------------------------------------------------------

    def _suffix_min_weights(self) -> np.ndarray:
        """``out[j, s]`` = least weight of a vector on columns ``j..n-1`` with syndrome ``s``."""
        def build():
            Q = self.syndromes.size
            config.check("cosets", Q, f"{Q} syndromes")
            n, q = self.n, self.spec.q
            big = n + 1
            out = np.full((n + 1, Q), big, dtype=np.int16)
            out[n, 0] = 0
            cs = self.column_syndromes()
            for j in range(n - 1, -1, -1):
                nxt = out[j + 1]
                best = nxt.copy()
                for a in range(1, q):
                    # s = a*h_j + rest  =>  rest = s - a*h_j
                    pre = self.syndromes.shift(self.syndromes.neg(cs[j, a]))
                    best = np.minimum(best, nxt[pre] + 1)
                out[j] = best
            return out
        return self._cached("sufmin", build)

    def leader_weights(self) -> np.ndarray:
        return self._suffix_min_weights()[0].astype(np.int64)

    def leaders(self) -> np.ndarray:
        """Lexicographically least minimum-weight member of every coset.

        Vectors are compared as tuples of element encodings, coordinate 0
        first. Built greedily for all syndromes at once using the suffix
        minimum-weight table as a feasibility test.
        """
        def build():
            suf = self._suffix_min_weights()
            n, q = self.n, self.spec.q
            Q = self.syndromes.size
            cs = self.column_syndromes()
            rem = np.arange(Q, dtype=np.int64)
            budget = suf[0].astype(np.int64)
            out = np.zeros((Q, n), dtype=np.int64)
            for j in range(n):
                done = np.zeros(Q, dtype=bool)
                for a in range(q):
                    cost = 1 if a else 0
                    nxt = self.syndromes.shift(self.syndromes.neg(cs[j, a]))[rem]
                    ok = ~done & (suf[j + 1][nxt] + cost <= budget)
                    out[ok, j] = a
                    rem = np.where(ok, nxt, rem)
                    budget = np.where(ok, budget - cost, budget)
                    done |= ok
                assert done.all()
            return out
        return self._cached("leaders", build)

    def coset_distributions(self) -> np.ndarray:
        """``out[s, i]`` = number of weight-``i`` vectors with syndrome ``s``."""
        def build():
            Q = self.syndromes.size
            config.check("cosets", Q, f"{Q} syndromes")
            n, q = self.n, self.spec.q
            dtype = np.int64 if q**n < 2**62 else object
            counts = np.zeros((n + 1, Q), dtype=dtype)
            counts[0, 0] = 1
            cs = self.column_syndromes()
            for j in range(n):
                new = counts.copy()
                for a in range(1, q):
                    pre = self.syndromes.shift(self.syndromes.neg(cs[j, a]))
                    new[1:] += counts[:-1][:, pre]
                counts = new
            return np.ascontiguousarray(counts.T)
        return self._cached("cosetdist", build)

    def _syndrome_min_distance(self) -> int:
        suf = self._suffix_min_weights()
        cs = self.column_syndromes()
        best = self.n + 1
        for j in range(self.n):
            # first nonzero coordinate j, scaled to 1
            target = self.syndromes.neg(cs[j, 1])
            best = min(best, 1 + int(suf[j + 1][target]))
        return best


# -- constructors -------------------------------------------------------------------


def code_from_generator(spec: FieldSpec, rows) -> LinearCode:
    if not isinstance(rows, MatrixGF):
        rows = MatrixGF(spec, rows)
    if rows.rows == 0:
        raise ZeroCode("no generator rows")
    basis = row_basis(rows)
    if basis.rows == 0:
        raise ZeroCode("generator matrix has rank 0")
    return LinearCode(spec, basis)


def code_from_parity_check(spec: FieldSpec, H) -> LinearCode:
    if not isinstance(H, MatrixGF):
        H = MatrixGF(spec, H)
    basis = row_basis(H)
    if basis.rows == 0:
        raise FullSpace("parity-check matrix has rank 0")
    G = kernel_basis(basis)
    if G.rows == 0:
        raise ZeroCode("parity-check matrix has full column rank; the code is {0}")
    code = LinearCode(spec, G)
    code._memo["H"] = basis
    return code


def whole_space(spec: FieldSpec, n: int) -> LinearCode:
    return LinearCode(spec, MatrixGF.identity(spec, n))


# -- analytics ------------------------------------------------------------------------


def weight_distribution(C: LinearCode, method: str = "auto") -> np.ndarray:
    """Codeword count per weight, length ``n + 1``."""
    if method == "auto":
        method = "enumerate" if C.size <= config.current().codewords else "syndrome"
    if method == "enumerate":
        return C._cached("wd", C._enum_weight_distribution).copy()
    if method == "syndrome":
        return np.array(C.coset_distributions()[0], dtype=np.int64)
    raise ValueError(f"unknown method {method!r}")


def min_distance(C: LinearCode, method: str = "auto") -> int:
    """Minimum nonzero codeword weight.

    ``enumerate`` walks all codewords; ``syndrome`` finds the lightest
    nonzero vector of syndrome 0 with the suffix minimum-weight table.
    ``auto`` picks whichever search space is smaller.
    """
    if method == "auto":
        method = "enumerate" if C.size <= C.syndromes.size else "syndrome"
    if method == "enumerate":
        def enum():
            dist = weight_distribution(C, "enumerate")
            return int(np.flatnonzero(dist[1:])[0]) + 1
        return C._cached("d_enum", enum)
    if method == "syndrome":
        return C._cached("d_syn", C._syndrome_min_distance)
    raise ValueError(f"unknown method {method!r}")


def packing_radius(C: LinearCode) -> int:
    return (min_distance(C) - 1) // 2


def covering_radius(C: LinearCode) -> int:
    return int(C.leader_weights().max())


def coset_table(C: LinearCode) -> CosetTable:
    def build():
        table = CosetTable(C.leaders(), C.leader_weights(), C.coset_distributions())
        for arr in (table.leaders, table.leader_weights, table.distributions):
            arr.flags.writeable = False
        return table
    return C._cached("cosets", build)


def dual(C: LinearCode) -> LinearCode:
    if C.is_whole_space():
        raise ZeroCode("dual of the whole space is {0}")
    D = LinearCode(C.spec, C.parity_check)
    D._memo["H"] = C.gen
    return D


# -- serialization ----------------------------------------------------------------------


def code_to_json(C: LinearCode) -> dict:
    return {"field": C.spec.to_json(), "n": C.n, "k": C.k, "generator": C.gen.tolist()}


def code_from_json(obj: dict) -> LinearCode:
    spec = FieldSpec.from_json(obj["field"])
    code = code_from_generator(spec, MatrixGF(spec, obj["generator"]))
    if "n" in obj and obj["n"] != code.n:
        raise ValueError(f"declared n={obj['n']} but generator has {code.n} columns")
    if "k" in obj and obj["k"] != code.k:
        raise ValueError(f"declared k={obj['k']} but generator has rank {code.k}")
    return code


def monomial_image(C: LinearCode, sigma) -> LinearCode:
    """The code ``sigma(C)``."""
    return code_from_generator(C.spec, MatrixGF(C.spec, sigma.apply_array(C.gen.data)))
