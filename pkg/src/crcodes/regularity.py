"""Complete regularity and complete transitivity.

:func:`is_completely_regular` reads intersection numbers off the coset table
of a linear code. :func:`cr_oracle_set` is the definition-level check for an
arbitrary vector set and never uses linearity; the two are expected to agree
on every linear code small enough for the oracle.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import config
from .code import LinearCode, coset_table, covering_radius
from .errors import Indeterminate, LengthMismatch, NotARepeat
from .gf import FieldSpec
from .linalg import MatrixGF, MonomialMap, row_basis


@dataclass(frozen=True)
class RegularityProfile:
    """Intersection numbers of a completely regular code.

    ``alpha[t][i]`` is the number of codewords at distance ``i`` from any
    vector at distance ``t`` from the code, for ``0 <= t <= rho``.
    """

    rho: int
    alpha: dict = field(repr=False)

    @property
    def n_a(self) -> int | None:
        """Codewords at distance one from any vector outside the code."""
        return int(self.alpha[1][1]) if self.rho >= 1 else None

    def intersection(self, t: int, i: int) -> int:
        if t < 0 or t > self.rho:
            raise KeyError(t)
        if i < 0 or i >= len(self.alpha[t]):
            return 0
        return int(self.alpha[t][i])

    def to_json(self) -> dict:
        out = {"rho": self.rho,
               "alpha": {str(t): [int(x) for x in self.alpha[t]] for t in sorted(self.alpha)}}
        if self.rho >= 1:
            out["n_a"] = self.n_a
        return out


class CodeSet:
    """An explicit set of vectors in F_q^n; need not be linear."""

    def __init__(self, spec: FieldSpec, n: int, members):
        if n:
            arr = np.asarray(members, dtype=np.int64).reshape(-1, n)
        else:
            arr = np.zeros((1, 0), np.int64)
        if arr.shape[0] == 0:
            raise ValueError("a code must be nonempty")
        if arr.size and (arr.min() < 0 or arr.max() >= spec.q):
            raise ValueError(f"entries out of range for GF({spec.q})")
        arr = _unique_rows(arr, spec.q)
        arr.flags.writeable = False
        self.spec = spec
        self.n = n
        self.members = arr

    @classmethod
    def from_code(cls, C: LinearCode) -> CodeSet:
        return cls(C.spec, C.n, C.codewords())

    def __len__(self):
        return self.members.shape[0]

    def __contains__(self, v):
        v = np.asarray(v, dtype=np.int64)
        return bool(np.any(np.all(self.members == v, axis=1)))

    def __eq__(self, other):
        return (isinstance(other, CodeSet) and self.spec == other.spec and self.n == other.n
                and np.array_equal(self.members, other.members))

    def __repr__(self):
        return f"CodeSet(n={self.n}, q={self.spec.q}, size={len(self)})"

    def min_distance(self) -> int:
        """Least distance between two distinct members (0 if a singleton)."""
        M = self.members
        if len(M) < 2:
            return 0
        best = self.n
        for i in range(len(M) - 1):
            d = np.count_nonzero(M[i + 1:] != M[i], axis=1).min()
            best = min(best, int(d))
        return best

    def to_json(self) -> dict:
        return {"field": self.spec.to_json(), "n": self.n, "members": self.members.tolist()}

    @classmethod
    def from_json(cls, obj) -> CodeSet:
        spec = FieldSpec.from_json(obj["field"])
        return cls(spec, obj["n"], obj["members"])


def _unique_rows(arr: np.ndarray, q: int) -> np.ndarray:
    """Distinct rows in lexicographic order."""
    n = arr.shape[1]
    if n == 0 or q**n >= 2**62:
        return np.unique(arr, axis=0)
    weights = q ** np.arange(n - 1, -1, -1, dtype=np.int64)
    keys = np.unique(arr @ weights)
    return (keys[:, None] // weights[None, :]) % q


# -- whole-space enumeration helpers -------------------------------------------------


def all_vectors(spec: FieldSpec, n: int) -> np.ndarray:
    """Every vector of F_q^n; row ``x`` has ``x = sum(v[i] * q**(n-1-i))``."""
    config.check("oracle", spec.q**n, f"enumerating {spec.q}^{n} vectors")
    return np.array(list(itertools.product(range(spec.q), repeat=n)), dtype=np.int64).reshape(-1, n)


def distance_distributions(S: CodeSet) -> np.ndarray:
    """``out[x, i]`` = number of members of ``S`` at distance ``i`` from vector ``x``.

    Rows follow :func:`all_vectors` order. The count factorizes over
    coordinates, so it is built one axis at a time: at coordinate ``j`` a
    member agreeing with ``x`` keeps its distance and every other member
    gains one.
    """
    q, n = S.spec.q, S.n
    config.check("oracle", q**n, f"oracle over {q}^{n} vectors")
    dtype = np.uint16 if len(S) < 2**16 else np.int64
    # distance axis first keeps the shifted slices contiguous
    T = np.zeros((n + 1,) + (q,) * n, dtype=dtype)
    T[(0,) + tuple(S.members.T)] = 1
    T = T.reshape(n + 1, q**n)
    for j in range(n):
        V = T.reshape(n + 1, q**j, q, q ** (n - j - 1))
        total = V[:-1, :, 0].copy()
        for a in range(1, q):
            total += V[:-1, :, a]
        V[1:] += total[:, :, None, :] - V[:-1]
    return np.ascontiguousarray(T.T)


def cr_oracle_set(S: CodeSet) -> bool:
    """Definition-level complete-regularity test for any vector set.

    Every vector of F_q^n is bucketed by its distance to ``S``; the set is
    completely regular iff all vectors in a bucket see identical distance
    distributions.
    """
    D = distance_distributions(S)
    dist = np.argmax(D > 0, axis=1)
    # first vector at each distance serves as that bucket's reference row
    first = np.full(S.n + 1, -1, dtype=np.int64)
    first[dist[::-1]] = np.arange(len(dist) - 1, -1, -1)
    return bool((D == D[first[dist]]).all())


def oracle_profile(S: CodeSet) -> RegularityProfile | None:
    D = distance_distributions(S)
    dist = np.argmax(D > 0, axis=1)
    alpha = {}
    for t in np.unique(dist):
        rows = D[dist == t]
        if not (rows == rows[0]).all():
            return None
        alpha[int(t)] = rows[0].astype(np.int64)
    return RegularityProfile(int(dist.max()), alpha)


# -- linear codes ---------------------------------------------------------------------


def is_completely_regular(C: LinearCode):
    """Return ``(True, profile)`` if every coset's weight distribution depends
    only on its leader weight, else ``(False, None)``.

    For a linear code the distance distribution from ``x`` to ``C`` is the
    weight distribution of the coset ``x + C``, so comparing coset rows is
    the same as comparing all vectors.
    """
    table = coset_table(C)
    alpha = {}
    for t, syndromes in table.classes().items():
        rows = table.distributions[syndromes]
        if not (rows == rows[0]).all():
            return False, None
        alpha[t] = np.array(rows[0], dtype=np.int64)
    return True, RegularityProfile(table.rho, alpha)


def covering_set(C: LinearCode) -> CodeSet:
    """All vectors at distance exactly ``rho`` from ``C``."""
    V = all_vectors(C.spec, C.n)
    w = C.leader_weights()[C.syndrome_indices(V)]
    return CodeSet(C.spec, C.n, V[w == w.max()])


def _is_q_repeat(C: LinearCode, Cr: LinearCode) -> bool:
    if Cr.spec != C.spec or Cr.n != C.n + 1:
        return False
    q_gen = np.zeros((C.k + 1, C.n + 1), dtype=np.int64)
    q_gen[0, 0] = 1
    q_gen[1:, 1:] = C.gen.data
    return row_basis(MatrixGF(C.spec, q_gen)) == Cr.gen


def repeat_recurrence_check(C: LinearCode, Cr: LinearCode, samples: int | None = None,
                            rng=None) -> bool:
    """Check ``count_{C'}(x', i) = count_C(x, i) + (q-1) count_C(x, i-1)``.

    ``x'`` ranges over all extensions of ``x``; the top term is
    ``count_{C'}(x', n+1) = (q-1) count_C(x, n)``. Exhaustive when
    ``samples`` is ``None``, otherwise ``samples`` random ``x'`` are checked
    by direct counting.
    """
    if not _is_q_repeat(C, Cr):
        raise NotARepeat("second code is not the q-repeat of the first")
    q, n = C.spec.q, C.n
    if samples is None:
        D = distance_distributions(CodeSet.from_code(C))
        Dr = distance_distributions(CodeSet.from_code(Cr)).reshape(q, q**n, n + 2)
        expected = np.zeros((q**n, n + 2), dtype=np.int64)
        expected[:, :n + 1] += D
        expected[:, 1:] += (q - 1) * D
        return bool((Dr == expected[None]).all())
    rng = np.random.default_rng(rng)
    words = C.codewords()
    words_r = Cr.codewords()
    for _ in range(samples):
        xr = rng.integers(0, q, size=n + 1)
        x = xr[1:]
        a = np.bincount(np.count_nonzero(words != x, axis=1), minlength=n + 1)
        ar = np.bincount(np.count_nonzero(words_r != xr, axis=1), minlength=n + 2)
        expected = np.zeros(n + 2, dtype=np.int64)
        expected[:n + 1] += a
        expected[1:] += (q - 1) * a
        if not np.array_equal(ar, expected):
            return False
    return True


# -- complete transitivity -------------------------------------------------------------


def fixes_code(sigma: MonomialMap, C: LinearCode) -> bool:
    """True iff ``sigma(C) == C``."""
    if len(sigma) != C.n:
        raise LengthMismatch("map length differs from code length")
    images = sigma.apply_array(C.gen.data)
    return not C.syndrome_indices(images).any()


def coset_orbits(C: LinearCode, maps) -> int:
    """Number of orbits of the group generated by ``maps`` on the cosets of ``C``."""
    leaders = C.leaders()
    Q = len(leaders)
    src = [np.arange(Q)]
    dst = [np.arange(Q)]
    for g in maps:
        src.append(np.arange(Q))
        dst.append(C.syndrome_indices(g.apply_array(leaders)))
    src = np.concatenate(src)
    dst = np.concatenate(dst)
    graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(Q, Q))
    count, _ = connected_components(graph, directed=True, connection="weak")
    return int(count)


def weight_one_orbits(spec: FieldSpec, n: int, maps) -> int:
    """Orbits of the generated group on the ``(q-1) n`` weight-one vectors."""
    q = spec.q
    ids = np.arange(n * (q - 1))
    pos, val = ids // (q - 1), ids % (q - 1) + 1
    src, dst = [ids], [ids]
    for g in maps:
        perm = np.array(g.perm)
        scales = np.array(g.scales)
        new_val = spec.mul_table[scales[pos], val].astype(np.int64)
        src.append(ids)
        dst.append(perm[pos] * (q - 1) + new_val - 1)
    graph = coo_matrix((np.ones(len(ids) * len(src), dtype=np.int8),
                        (np.concatenate(src), np.concatenate(dst))), shape=(len(ids),) * 2)
    return int(connected_components(graph, directed=True, connection="weak")[0])


def monomial_automorphisms(C: LinearCode):
    """Every monomial map fixing ``C``, by exhaustive search."""
    q, n = C.spec.q, C.n
    config.check("monomials", math.factorial(n) * (q - 1) ** n,
                 f"{n}! * {q - 1}^{n} monomial maps")
    spec = C.spec
    found = []
    for perm in itertools.permutations(range(n)):
        for scales in itertools.product(range(1, q), repeat=n):
            g = MonomialMap(spec, perm, scales)
            if fixes_code(g, C):
                found.append(g)
    return found


def is_completely_transitive(C: LinearCode, strategy: str = "exhaustive", generators=None):
    """Return ``(is_ct, orbit_count)`` for the action on cosets.

    ``exhaustive`` searches the whole monomial group. ``generated`` uses the
    given automorphisms; since a subgroup can only have more orbits than the
    full group, reaching ``rho + 1`` orbits proves complete transitivity,
    and anything more raises :class:`Indeterminate`.
    """
    rho = covering_radius(C)
    if strategy == "exhaustive":
        orbits = coset_orbits(C, monomial_automorphisms(C))
        return orbits == rho + 1, orbits
    if strategy == "generated":
        if generators is None:
            raise ValueError("the generated strategy needs a list of automorphisms")
        generators = list(generators)
        for g in generators:
            if not fixes_code(g, C):
                raise ValueError(f"map {g.to_json()} is not an automorphism of the code")
        orbits = coset_orbits(C, generators)
        if orbits == rho + 1:
            return True, orbits
        raise Indeterminate(orbits, rho + 1)
    raise ValueError(f"unknown strategy {strategy!r}")


def sphere_identity_holds(C: LinearCode, profile: RegularityProfile) -> bool:
    """Sphere-counting identity ``(q-1) n = (q^(n-k) - 1) n_a``."""
    q = C.spec.q
    return (q - 1) * C.n == (q**C.redundancy - 1) * profile.n_a

