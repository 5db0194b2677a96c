import json

import numpy as np
import pytest

from crcodes import (Case, MatrixGF, MonomialMap, build_automorphisms, classify,
                     code_from_generator, code_from_parity_check, direct, extract_block_codes,
                     extract_hamming_core, gf, hamming, is_completely_transitive, kron_code,
                     monomial_image, peel_repeats, q_repeat, repetition, weight2_partition)
from crcodes.classify import codewords_equal
from crcodes.code import whole_space
from crcodes.constructions import q_repeat_times
from crcodes.errors import (MinDistanceNotOne, NotClassified, PreconditionViolated,
                            WholeSpace)
from crcodes.regularity import fixes_code, weight_one_orbits

F2, F3, F4 = gf(2), gf(3), gf(4)


def words(C):
    return {tuple(w) for w in C.codewords().tolist()}


def scrambled(spec, na, mb, seed):
    K = kron_code(spec, na, mb)
    rng = np.random.default_rng(seed)
    return monomial_image(K, MonomialMap.random(spec, K.n, rng))


def test_partition_example():
    assert weight2_partition(kron_code(F2, 2, 2)) == [[0, 3], [1, 4], [2, 5]]


def test_partition_preconditions():
    with pytest.raises(PreconditionViolated):
        weight2_partition(direct(F2, [1, 1]))
    with pytest.raises(PreconditionViolated):
        weight2_partition(hamming(F2, 3))
    # columns (1,0),(1,0),(0,1),(0,1),(1,1): component sizes 2,2,1
    C = code_from_parity_check(F2, MatrixGF(F2, [[1, 1, 0, 0, 1], [0, 0, 1, 1, 1]]))
    with pytest.raises(PreconditionViolated):
        weight2_partition(C)


def test_partition_follows_scramble():
    K = kron_code(F3, 2, 2)
    sigma = MonomialMap.random(F3, K.n, np.random.default_rng(11))
    part = weight2_partition(monomial_image(K, sigma))
    expected = sorted(sorted(sigma.perm[i] for i in X) for X in weight2_partition(K))
    assert sorted(part) == expected
    assert all(len(X) == 2 for X in part)


def test_block_codes():
    K = kron_code(F2, 2, 2)
    blocks = extract_block_codes(K, weight2_partition(K))
    assert len(blocks) == 3
    assert all(words(D) == {(0, 0), (1, 1)} for D in blocks)
    K3 = kron_code(F3, 2, 2)
    blocks3 = extract_block_codes(K3, weight2_partition(K3))
    assert len(blocks3) == 4
    assert all((D.n, D.k) == (2, 1) for D in blocks3)
    with pytest.raises(PreconditionViolated):
        extract_block_codes(K, [[0, 1], [2, 3], [4, 5]])


def test_hamming_core():
    K = kron_code(F2, 2, 2)
    part = weight2_partition(K)
    core = extract_hamming_core(K, part)
    assert words(core) == {(0, 0, 0), (1, 1, 1)}
    other = extract_hamming_core(K, part, representatives=[3, 4, 2])
    assert (other.n, other.k) == (3, 1) and words(other) == {(0, 0, 0), (1, 1, 1)}
    with pytest.raises(PreconditionViolated):
        extract_hamming_core(K, part, representatives=[0, 1])
    with pytest.raises(PreconditionViolated):
        extract_hamming_core(K, part, representatives=[0, 3, 2])


def test_peeling_examples():
    even = direct(F2, [1, 1])
    base, removed = peel_repeats(q_repeat(even))
    assert base == even and removed == [0]
    K = kron_code(F2, 2, 2)
    base, removed = peel_repeats(q_repeat_times(K, 2))
    assert base == K and removed == [0, 1]
    with pytest.raises(MinDistanceNotOne):
        peel_repeats(even)
    with pytest.raises(WholeSpace):
        peel_repeats(whole_space(F2, 3))


def test_classify_examples():
    c = classify(kron_code(F2, 2, 2))
    assert (c.case, c.n_a, c.m_b) == (Case.D2_KRONECKER, 2, 2)
    assert c.verified and c.applicable
    assert classify(hamming(F2, 3)).case is Case.D3_HAMMING
    s = classify(scrambled(F3, 2, 2, 5))
    assert (s.case, s.n_a, s.m_b) == (Case.D2_KRONECKER, 2, 2)
    assert codewords_equal(s.code, s.equivalence, s.canonical)
    r = classify(code_from_generator(F2, MatrixGF(F2, [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]])))
    assert r.case is Case.NOT_APPLICABLE and r.reason == "covering radius 2"
    assert r.to_json() == {"case": "NOT_APPLICABLE", "reason": "covering radius 2",
                           "verified": False}


def test_fullpart():
    for spec, h in [(F2, [1, 1]), (F3, [2, 2, 2]), (F3, [1, 2, 1]), (F4, [2, 3])]:
        C = direct(spec, h)
        c = classify(C)
        assert c.case is Case.D2_FULLPART
        assert (c.n_a, c.n_b, c.m_b) == (C.n, 1, 1)
        assert codewords_equal(C, c.equivalence, c.canonical)


def test_not_completely_regular():
    C = code_from_parity_check(F2, MatrixGF(F2, [[1, 1, 0, 1], [0, 0, 1, 1]]))
    c = classify(C)
    assert c.case is Case.NOT_APPLICABLE and c.reason == "not completely regular"


def test_peeling_to_zero_code_is_not_applicable():
    # F_2 x {0}: the q-repeat of the zero code of length 1
    C = code_from_generator(F2, MatrixGF(F2, [[1, 0]]))
    c = classify(C)
    assert c.case is Case.NOT_APPLICABLE


@pytest.mark.parametrize("k", [1, 2, 3])
def test_repeated_certificate(k):
    K = kron_code(F3, 2, 2)
    R = q_repeat_times(K, k)
    sigma = MonomialMap.random(F3, R.n, np.random.default_rng(k))
    c = classify(monomial_image(R, sigma))
    assert c.case is Case.D1_REPEATED
    assert c.peel_count == k and len(c.peeled) == k
    assert c.base.case is Case.D2_KRONECKER
    assert (c.n_a, c.m_b) == (2, 2)
    assert codewords_equal(c.code, c.equivalence, c.canonical)


def test_repeated_hamming():
    c = classify(q_repeat(hamming(F2, 3)))
    assert c.case is Case.D1_REPEATED and c.base.case is Case.D3_HAMMING


def test_certificate_json():
    c = classify(q_repeat(kron_code(F2, 2, 2)))
    obj = json.loads(json.dumps(c.to_json()))
    assert obj["case"] == "D1_REPEATED"
    assert obj["base_case"] == "D2_KRONECKER"
    assert obj["peel_count"] == 1 and obj["peeled"] == [0]
    assert obj["verified"] is True
    assert set(obj["equivalence"]) == {"perm", "scales"}
    assert obj["canonical"]["n"] == 7


def test_automorphisms_examples():
    K = kron_code(F2, 2, 2)
    gens = build_automorphisms(classify(K))
    assert MonomialMap.transposition(F2, 6, 0, 3) in gens
    assert gens[0].is_identity()
    H = hamming(F2, 2)
    hg = build_automorphisms(classify(H))
    assert weight_one_orbits(F2, 3, hg) == 1


@pytest.mark.parametrize("q,na,mb", [(2, 2, 2), (2, 3, 2), (3, 2, 2), (2, 2, 3), (4, 2, 2),
                                     (2, 1, 3), (3, 1, 2), (4, 1, 2), (5, 2, 2)])
def test_automorphisms_give_two_orbits(q, na, mb):
    F = gf(q)
    for seed in range(3):
        c = classify(scrambled(F, na, mb, seed))
        for target in ("canonical", "input"):
            gens = build_automorphisms(c, target=target)
            code = c.canonical if target == "canonical" else c.code
            assert all(fixes_code(g, code) for g in gens)
            assert is_completely_transitive(code, "generated", gens) == (True, 2)


def test_automorphisms_for_fullpart_and_repeats():
    for C in (direct(F3, [2, 2, 2]), q_repeat_times(kron_code(F3, 2, 2), 2),
              q_repeat(direct(F4, [1, 1]))):
        c = classify(C)
        gens = build_automorphisms(c, target="input")
        assert is_completely_transitive(C, "generated", gens) == (True, 2)


def test_automorphisms_refuse_unclassified():
    c = classify(repetition(F3, 3))
    assert c.case is Case.NOT_APPLICABLE
    with pytest.raises(NotClassified):
        build_automorphisms(c)
    with pytest.raises(ValueError):
        build_automorphisms(classify(hamming(F2, 3)), target="elsewhere")


def test_exhaustive_ct_agrees_on_small_classified_codes():
    for C in (direct(F2, [1, 1]), hamming(F2, 2), q_repeat(direct(F2, [1, 1]))):
        assert classify(C).applicable
        assert is_completely_transitive(C) == (True, 2)
