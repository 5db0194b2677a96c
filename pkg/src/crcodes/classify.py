"""Classification of linear completely regular codes with covering radius 1.

Given any linear code, :func:`classify` decides which structural case
applies, recovers the parameters ``(n_a, m_b)`` and returns a monomial map
onto a canonical representative. Every map is checked (parity-check row
space equality) before a certificate is returned.

Canonical forms:

* ``D3_HAMMING``      the Hamming code with parity check ``B``;
* ``D2_FULLPART``     the ``[n, n-1, 2]`` code with all-ones parity check;
* ``D2_KRONECKER``    the code with parity check ``[B B ... B]``;
* ``D1_REPEATED``     the q-repeat (applied ``peel_count`` times) of the
  canonical form of the peeled base code, free coordinates first.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .code import (LinearCode, code_from_parity_check, code_to_json, covering_radius,
                   min_distance)
from .constructions import (direct, hamming_length, hamming_parity_check, kron_code,
                            q_repeat_times)
from .errors import (InternalContradiction, MinDistanceNotOne, NotClassified,
                     PreconditionViolated, WholeSpace, ZeroCode)
from .linalg import MatrixGF, MonomialMap, inverse, normalize_columns, same_row_space
from .regularity import fixes_code, is_completely_regular


class Case(str, enum.Enum):
    D1_REPEATED = "D1_REPEATED"
    D2_FULLPART = "D2_FULLPART"
    D2_KRONECKER = "D2_KRONECKER"
    D3_HAMMING = "D3_HAMMING"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass
class ClassificationCertificate:
    case: Case
    code: LinearCode = field(repr=False)
    peel_count: int = 0
    n_a: int | None = None
    n_b: int | None = None
    m_b: int | None = None
    partition: list[list[int]] = field(default_factory=list)
    peeled: list[int] = field(default_factory=list)
    equivalence: MonomialMap | None = field(default=None, repr=False)
    canonical: LinearCode | None = field(default=None, repr=False)
    base: ClassificationCertificate | None = field(default=None, repr=False)
    reason: str | None = None
    verified: bool = False

    @property
    def applicable(self) -> bool:
        return self.case is not Case.NOT_APPLICABLE

    def to_json(self) -> dict:
        if not self.applicable:
            return {"case": self.case.value, "reason": self.reason, "verified": False}
        out = {
            "case": self.case.value,
            "n_a": self.n_a,
            "n_b": self.n_b,
            "m_b": self.m_b,
            "peel_count": self.peel_count,
            "partition": [list(b) for b in self.partition],
            "equivalence": self.equivalence.to_json(),
            "canonical": code_to_json(self.canonical),
            "verified": self.verified,
        }
        if self.peeled:
            out["peeled"] = list(self.peeled)
        if self.base is not None:
            out["base_case"] = self.base.case.value
        return out


def _not_applicable(C, reason):
    return ClassificationCertificate(Case.NOT_APPLICABLE, C, reason=reason)


# -- structural steps ------------------------------------------------------------------


def peel_repeats(C: LinearCode) -> tuple[LinearCode, list[int]]:
    """Undo q-repeats: drop every coordinate that carries a weight-one codeword.

    Those are exactly the zero columns of the parity-check matrix, and
    ``C`` is the product of the free coordinates with the returned code.
    Returns the reduced code and the removed coordinates.
    """
    if C.is_whole_space():
        raise WholeSpace("the whole space cannot be peeled")
    H = C.parity_check.data
    removed = [int(j) for j in np.flatnonzero(~H.any(axis=0))]
    if not removed:
        raise MinDistanceNotOne(f"minimum distance is {min_distance(C)}, not 1")
    keep = [j for j in range(C.n) if j not in set(removed)]
    D = code_from_parity_check(C.spec, MatrixGF(C.spec, H[:, keep]))
    return D, removed


def _point_classes(C: LinearCode):
    """Normalized parity-check columns and leading scalars."""
    return normalize_columns(C.spec, C.parity_check)


def weight2_partition(C: LinearCode) -> list[list[int]]:
    """Connected components of the graph joining coordinates ``i, j`` whenever
    some weight-2 codeword has support ``{i, j}``.

    A weight-2 codeword on ``{i, j}`` exists iff columns ``i`` and ``j`` of
    the parity-check matrix are proportional, so components are the classes
    of equal normalized columns. All components must have the same size.
    """
    if C.k >= C.n - 1:
        raise PreconditionViolated("needs k < n - 1")
    if min_distance(C) != 2:
        raise PreconditionViolated(f"needs minimum distance 2, got {min_distance(C)}")
    cols, _ = _point_classes(C)
    classes: dict[tuple, list[int]] = {}
    for j in range(C.n):
        classes.setdefault(tuple(cols[:, j]), []).append(j)
    blocks = sorted(classes.values(), key=lambda b: b[0])
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1:
        raise PreconditionViolated(f"weight-2 components have unequal sizes {sorted(sizes)}")
    return blocks


def _shorten(C: LinearCode, coords) -> LinearCode:
    """Codewords supported inside ``coords``, punctured to ``coords``."""
    H = C.parity_check.data[:, list(coords)]
    return code_from_parity_check(C.spec, MatrixGF(C.spec, H, cols=len(coords)))


def extract_block_codes(C: LinearCode, partition) -> list[LinearCode]:
    """The block codes ``D_i``; each must be a ``[n_a, n_a - 1, 2]`` CR code
    generated by ``[I | h]`` with ``wt(h) = n_a - 1``."""
    blocks = []
    for X in partition:
        n_a = len(X)
        try:
            D = _shorten(C, X)
        except (ZeroCode, ValueError) as exc:
            raise PreconditionViolated(f"block {X}: {exc}") from exc
        if D.k != n_a - 1 or min_distance(D) != 2:
            raise PreconditionViolated(f"block {X} is [{D.n},{D.k},{min_distance(D)}], "
                                       f"expected [{n_a},{n_a - 1},2]")
        G = D.gen.data
        if not np.array_equal(G[:, :n_a - 1], np.eye(n_a - 1, dtype=np.uint8)):
            raise PreconditionViolated(f"block {X} generator is not of the form [I | h]")
        if np.count_nonzero(G[:, -1]) != n_a - 1:
            raise PreconditionViolated(f"block {X}: h has weight below n_a - 1")
        if not is_completely_regular(D)[0] or covering_radius(D) != 1:
            raise PreconditionViolated(f"block {X} is not completely regular with rho = 1")
        blocks.append(D)
    return blocks


def extract_hamming_core(C: LinearCode, partition, representatives=None) -> LinearCode:
    """Codewords supported on one coordinate per block, punctured there.

    Defaults to the smallest coordinate of each block. The result must be a
    Hamming code of length ``n / n_a >= 3``.
    """
    if representatives is None:
        representatives = [min(X) for X in partition]
    representatives = list(representatives)
    if len(representatives) != len(partition) or any(
            r not in X for r, X in zip(representatives, partition)):
        raise PreconditionViolated("need exactly one representative inside each block")
    n_b = len(representatives)
    if n_b < 3:
        raise PreconditionViolated(f"core length {n_b} < 3")
    try:
        D = _shorten(C, representatives)
    except (ZeroCode, ValueError) as exc:
        raise PreconditionViolated(f"core code: {exc}") from exc
    m = D.redundancy
    q = C.spec.q
    if m < 2 or hamming_length(q, m) != n_b:
        raise PreconditionViolated(f"core [{D.n},{D.k}] does not have Hamming length")
    if min_distance(D) != 3 or covering_radius(D) != 1:
        raise PreconditionViolated("core is not a perfect single-error-correcting code")
    return D


# -- canonical alignment ------------------------------------------------------------------


def _projective_alignment(C: LinearCode, n_a: int, m_b: int) -> MonomialMap:
    """Scale every coordinate so its parity-check column becomes the
    normalized projective point, then send the ``t``-th coordinate carrying
    point ``p`` to position ``t * n_b + p`` of ``[B B ... B]``."""
    spec = C.spec
    B = hamming_parity_check(spec, m_b).data if m_b >= 2 else np.ones((1, 1), np.uint8)
    n_b = B.shape[1]
    point_index = {tuple(int(x) for x in B[:, p]): p for p in range(n_b)}
    H = C.parity_check
    if H.rows != B.shape[0]:
        raise InternalContradiction(f"parity check has {H.rows} rows, expected {B.shape[0]}")
    cols, leads = normalize_columns(spec, H)
    seen = [0] * n_b
    perm = []
    for j in range(C.n):
        p = point_index.get(tuple(int(x) for x in cols[:, j]))
        if p is None or seen[p] >= n_a:
            raise InternalContradiction(f"column {j} does not fit [B ... B]")
        perm.append(seen[p] * n_b + p)
        seen[p] += 1
    return MonomialMap(spec, tuple(perm), tuple(int(x) for x in leads))


def _verify(C: LinearCode, sigma: MonomialMap, canonical: LinearCode) -> None:
    image = sigma.transform_parity_check(C.parity_check)
    if not same_row_space(image, canonical.parity_check):
        raise InternalContradiction(
            "equivalence map does not carry the code onto its canonical form")


def codewords_equal(C: LinearCode, sigma: MonomialMap, canonical: LinearCode) -> bool:
    """Debug oracle: compare ``sigma(C)`` and ``canonical`` as codeword sets."""
    if C.k != canonical.k or C.n != canonical.n:
        return False
    a = _sorted_rows(sigma.apply_array(C.codewords()))
    b = _sorted_rows(canonical.codewords())
    return bool((a == b).all())


def _sorted_rows(words: np.ndarray) -> np.ndarray:
    rows = np.ascontiguousarray(words.astype(np.uint8))
    return np.sort(rows.view(np.dtype((np.void, rows.shape[1]))).ravel())


def _fullpart_canonical(spec, n):
    return direct(spec, [spec.neg(1)] * (n - 1))


# -- main entry ---------------------------------------------------------------------------


def classify(C: LinearCode) -> ClassificationCertificate:
    """Decide the structural case of a linear code and certify it."""
    spec = C.spec
    q = spec.q
    rho = covering_radius(C)
    if rho != 1:
        return _not_applicable(C, f"covering radius {rho}")
    cr, profile = is_completely_regular(C)
    if not cr:
        return _not_applicable(C, "not completely regular")
    d = min_distance(C)

    if d == 1:
        try:
            D, removed = peel_repeats(C)
        except ZeroCode:
            return _not_applicable(C, "q-repeat peeling reaches the zero code")
        base = classify(D)
        if not base.applicable:
            raise InternalContradiction(f"peeled code not classifiable: {base.reason}")
        k = len(removed)
        kept = [j for j in range(C.n) if j not in set(removed)]
        perm = [0] * C.n
        scales = [1] * C.n
        for t, j in enumerate(removed):
            perm[j] = t
        for i, j in enumerate(kept):
            perm[j] = k + base.equivalence.perm[i]
            scales[j] = base.equivalence.scales[i]
        sigma = MonomialMap(spec, tuple(perm), tuple(scales))
        canonical = q_repeat_times(base.canonical, k)
        _verify(C, sigma, canonical)
        return ClassificationCertificate(
            Case.D1_REPEATED, C, peel_count=k,
            n_a=base.n_a, n_b=base.n_b, m_b=base.m_b,
            partition=[[kept[i] for i in X] for X in base.partition],
            peeled=removed, equivalence=sigma, canonical=canonical, base=base,
            verified=True)

    if d == 3:
        m_b = C.redundancy
        if m_b < 2 or hamming_length(q, m_b) != C.n:
            raise InternalContradiction(f"perfect code [{C.n},{C.k},3] lacks Hamming length")
        sigma = _projective_alignment(C, 1, m_b)
        canonical = kron_code(spec, 1, m_b)
        _verify(C, sigma, canonical)
        return ClassificationCertificate(
            Case.D3_HAMMING, C, n_a=1, n_b=C.n, m_b=m_b,
            partition=[[j] for j in range(C.n)], equivalence=sigma,
            canonical=canonical, verified=True)

    if d != 2:
        raise InternalContradiction(f"covering radius 1 with minimum distance {d}")

    n_a = profile.n_a
    if (q - 1) * C.n != (q**C.redundancy - 1) * n_a:
        raise InternalContradiction("sphere-counting identity fails")

    if C.k == C.n - 1:
        if n_a != C.n:
            raise InternalContradiction(f"k = n - 1 but n_a = {n_a} != n")
        sigma = _projective_alignment(C, C.n, 1)
        canonical = _fullpart_canonical(spec, C.n)
        _verify(C, sigma, canonical)
        return ClassificationCertificate(
            Case.D2_FULLPART, C, n_a=C.n, n_b=1, m_b=1,
            partition=[list(range(C.n))], equivalence=sigma,
            canonical=canonical, verified=True)

    partition = weight2_partition(C)
    if len(partition[0]) != n_a:
        raise InternalContradiction(f"partition blocks of size {len(partition[0])}, n_a = {n_a}")
    extract_block_codes(C, partition)
    core = extract_hamming_core(C, partition)
    m_b = core.redundancy
    n_b = core.n
    # dimension bookkeeping: blocks contribute n_b (n_a - 1), the core n_b - m_b
    if n_b * (n_a - 1) + n_b - C.redundancy != C.k:
        raise InternalContradiction("block and core dimensions do not add up to k")
    sigma = _projective_alignment(C, n_a, m_b)
    canonical = kron_code(spec, n_a, m_b)
    _verify(C, sigma, canonical)
    return ClassificationCertificate(
        Case.D2_KRONECKER, C, n_a=n_a, n_b=n_b, m_b=m_b, partition=partition,
        equivalence=sigma, canonical=canonical, verified=True)


# -- automorphisms --------------------------------------------------------------------------


def _hamming_automorphisms(spec, m_b: int) -> list[MonomialMap]:
    """Monomial maps fixing the canonical Hamming code, one per target column.

    For column ``j`` pick an invertible ``K`` sending column 0 of ``B`` to
    column ``j`` (both extended to bases with unit vectors), then read the
    monomial ``M`` with ``K B = B M^t`` off the normalized columns of ``KB``.
    """
    B = hamming_parity_check(spec, m_b)
    n_b = B.cols
    point_index = {tuple(int(x) for x in B.data[:, p]): p for p in range(n_b)}
    maps = []
    for j in range(1, n_b):
        U = _extend_to_basis(spec, B.data[:, 0])
        V = _extend_to_basis(spec, B.data[:, j])
        K = V @ inverse(U)
        KB = (K @ B).data
        cols, leads = normalize_columns(spec, KB)
        perm = [point_index[tuple(int(x) for x in cols[:, i])] for i in range(n_b)]
        maps.append(MonomialMap(spec, tuple(perm), tuple(int(x) for x in leads)))
    return maps


def _extend_to_basis(spec, u) -> MatrixGF:
    """Square matrix whose first column is ``u`` and the rest unit vectors."""
    m = len(u)
    cols = [np.asarray(u, dtype=np.int64)]
    for i in range(m):
        e = np.zeros(m, dtype=np.int64)
        e[i] = 1
        trial = MatrixGF(spec, np.stack(cols + [e], axis=1))
        if trial.rank() == len(cols) + 1:
            cols.append(e)
        if len(cols) == m:
            break
    return MatrixGF(spec, np.stack(cols, axis=1))


def _kron_generators(spec, n_a: int, m_b: int) -> list[MonomialMap]:
    n_b = hamming_length(spec.q, m_b)
    n = n_a * n_b
    gens = []
    for t in range(1, n_a):
        for p in range(n_b):
            gens.append(MonomialMap.transposition(spec, n, p, t * n_b + p))
    for h in _hamming_automorphisms(spec, m_b):
        perm = [t * n_b + h.perm[p] for t in range(n_a) for p in range(n_b)]
        gens.append(MonomialMap(spec, tuple(perm), h.scales * n_a))
    return gens


def _canonical_generators(cert: ClassificationCertificate) -> list[MonomialMap]:
    spec = cert.canonical.spec
    n = cert.canonical.n
    if cert.case is Case.D1_REPEATED:
        k = n - cert.base.canonical.n
        gens = []
        for g in _canonical_generators(cert.base):
            perm = tuple(range(k)) + tuple(k + p for p in g.perm)
            gens.append(MonomialMap(spec, perm, (1,) * k + g.scales))
        for t in range(k - 1):
            gens.append(MonomialMap.transposition(spec, n, t, t + 1))
        if spec.q > 2 and k:
            scales = [1] * n
            scales[0] = spec.primitive
            gens.append(MonomialMap(spec, tuple(range(n)), tuple(scales)))
    elif cert.case is Case.D2_FULLPART:
        gens = [MonomialMap.transposition(spec, n, i, i + 1) for i in range(n - 1)]
    elif cert.case in (Case.D2_KRONECKER, Case.D3_HAMMING):
        gens = _kron_generators(spec, cert.n_a, cert.m_b)
    else:
        raise NotClassified(f"no automorphisms for case {cert.case.value}")
    if spec.q > 2:
        gens.append(MonomialMap.scalar(spec, n, spec.primitive))
    return [MonomialMap.identity(spec, n)] + gens


def build_automorphisms(cert: ClassificationCertificate, target: str = "canonical"):
    """Generators of a subgroup of ``Aut`` acting transitively on weight-one vectors.

    ``target="canonical"`` returns maps fixing the canonical code;
    ``target="input"`` conjugates them by the certificate's equivalence so
    they fix the classified input code. Every map is checked before return.
    """
    if not cert.applicable:
        raise NotClassified(cert.reason)
    gens = _canonical_generators(cert)
    if target == "canonical":
        code = cert.canonical
    elif target == "input":
        sigma = cert.equivalence
        sigma_inv = sigma.inverse()
        gens = [sigma_inv.compose(g).compose(sigma) for g in gens]
        code = cert.code
    else:
        raise ValueError(f"unknown target {target!r}")
    for g in gens:
        if not fixes_code(g, code):
            raise InternalContradiction(f"generator {g.to_json()} does not fix the code")
    return gens
