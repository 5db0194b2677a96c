import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from crcodes import (CodeSet, MatrixGF, MonomialMap, budgets, code_from_generator,
                     covering_radius, covering_set, cr_oracle_set, direct, gf, hamming,
                     is_completely_regular, is_completely_transitive, kron_code,
                     monomial_image, q_repeat, repeat_recurrence_check, repetition)
from crcodes.code import whole_space
from crcodes.errors import BudgetExceeded, Indeterminate, NotARepeat
from crcodes.regularity import (all_vectors, coset_orbits, distance_distributions, fixes_code,
                                monomial_automorphisms, oracle_profile, sphere_identity_holds)

import brute

F2, F3, F4 = gf(2), gf(3), gf(4)


def gen(spec, rows):
    return code_from_generator(spec, MatrixGF(spec, rows))


def words_of(C):
    return {tuple(w) for w in C.codewords().tolist()}


def test_cr_examples():
    cr, prof = is_completely_regular(direct(F2, [1, 1]))
    assert cr and prof.rho == 1 and prof.n_a == 3
    assert prof.alpha[1].tolist() == [0, 3, 0, 1]
    cr, prof = is_completely_regular(kron_code(F2, 2, 2))
    assert cr and prof.n_a == 2
    assert is_completely_regular(gen(F2, [[1, 1, 0, 0]])) == (False, None)


def test_profile_accessors():
    _, prof = is_completely_regular(hamming(F2, 3))
    assert prof.intersection(1, 1) == 1
    assert prof.intersection(0, 3) == 7
    assert prof.intersection(1, 99) == 0
    with pytest.raises(KeyError):
        prof.intersection(2, 0)
    assert prof.to_json()["n_a"] == 1


def test_oracle_examples():
    assert cr_oracle_set(CodeSet(F2, 3, all_vectors(F2, 3)))
    assert cr_oracle_set(covering_set(hamming(F2, 3)))
    assert not cr_oracle_set(CodeSet(F2, 3, [[0, 0, 0], [1, 1, 0], [0, 1, 1]]))


def test_covering_set_examples():
    S = covering_set(repetition(F2, 3))
    assert {tuple(v) for v in S.members.tolist()} == {
        v for v in brute.space(2, 3) if 0 < sum(v) < 3}
    H = covering_set(hamming(F2, 3))
    assert len(H) == 112 and H.min_distance() == 1
    W = whole_space(F2, 3)
    assert covering_set(W) == CodeSet.from_code(W)


def test_distance_distributions_brute():
    rng = np.random.default_rng(3)
    for q, n in [(2, 4), (3, 3), (4, 3)]:
        F = gf(q)
        members = rng.integers(0, q, size=(5, n))
        S = CodeSet(F, n, members)
        D = distance_distributions(S)
        uniq = {tuple(m) for m in members.tolist()}
        for x, row in zip(brute.space(q, n), D.tolist()):
            counts = [0] * (n + 1)
            for c in uniq:
                counts[brute.dist(x, c)] += 1
            assert row == counts
        assert cr_oracle_set(S) == brute.is_cr(q, n, uniq)


LINEAR = [
    (2, [[1, 1, 0, 0]]),
    (2, [[1, 0, 1], [0, 1, 1]]),
    (2, [[1, 0, 1, 1, 0], [0, 1, 1, 0, 1]]),
    (2, [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]),
    (3, [[1, 1, 1]]),
    (3, [[1, 0, 1, 2], [0, 1, 1, 1]]),
    (3, [[1, 0, 2], [0, 1, 2]]),
    (4, [[1, 0, 1], [0, 1, 2]]),
    (2, [[1, 0, 1, 0, 1, 0], [0, 1, 1, 0, 0, 1], [0, 0, 0, 1, 1, 1]]),
]


@pytest.mark.parametrize("q,rows", LINEAR)
def test_syndrome_route_agrees_with_oracle(q, rows):
    F = gf(q)
    C = gen(F, rows)
    cr, prof = is_completely_regular(C)
    S = CodeSet.from_code(C)
    assert cr == cr_oracle_set(S) == brute.is_cr(q, C.n, words_of(C))
    if cr:
        ref = oracle_profile(S)
        assert ref.rho == prof.rho
        for t in range(prof.rho + 1):
            assert ref.alpha[t].tolist() == prof.alpha[t].tolist()


@pytest.mark.parametrize("q,rows", LINEAR)
def test_coset_distribution_equals_distance_count(q, rows):
    C = gen(gf(q), rows)
    D = distance_distributions(CodeSet.from_code(C))
    V = all_vectors(C.spec, C.n)
    T = C.coset_distributions()
    assert np.array_equal(D, T[C.syndrome_indices(V)])


def test_recurrence_examples():
    even = direct(F2, [1, 1])
    assert repeat_recurrence_check(even, q_repeat(even))
    rep = repetition(F3, 3)
    assert repeat_recurrence_check(rep, q_repeat(rep))
    assert repeat_recurrence_check(rep, q_repeat(rep), samples=40, rng=1)
    with pytest.raises(NotARepeat):
        repeat_recurrence_check(even, q_repeat(rep))
    with pytest.raises(NotARepeat):
        repeat_recurrence_check(even, kron_code(F2, 2, 2))


@pytest.mark.parametrize("q,rows", LINEAR)
def test_q_repeat_preserves_cr_and_rho(q, rows):
    C = gen(gf(q), rows)
    R = q_repeat(C)
    assert covering_radius(R) == covering_radius(C)
    assert is_completely_regular(R)[0] == is_completely_regular(C)[0]
    if q**R.n <= 2**12:
        assert repeat_recurrence_check(C, R)


def test_ct_examples():
    assert is_completely_transitive(direct(F2, [1, 1])) == (True, 2)
    assert is_completely_transitive(whole_space(F2, 3)) == (True, 1)
    assert len(monomial_automorphisms(direct(F2, [1, 1]))) == 6


def test_ct_generated_and_indeterminate():
    K = kron_code(F2, 2, 2)
    ident = MonomialMap.identity(F2, 6)
    with pytest.raises(Indeterminate) as info:
        is_completely_transitive(K, "generated", [ident])
    assert info.value.orbits == 4 and info.value.expected == 2
    swap = MonomialMap.transposition(F2, 6, 0, 3)
    assert fixes_code(swap, K)
    not_aut = MonomialMap.transposition(F2, 6, 0, 1)
    with pytest.raises(ValueError):
        is_completely_transitive(K, "generated", [not_aut])
    with pytest.raises(ValueError):
        is_completely_transitive(K, "generated")
    with pytest.raises(ValueError):
        is_completely_transitive(K, "nope")


def test_orbits_of_trivial_group_are_cosets():
    C = hamming(F3, 2)
    assert coset_orbits(C, []) == 9


def test_monomial_budget():
    with budgets(monomials=10):
        with pytest.raises(BudgetExceeded):
            monomial_automorphisms(direct(F3, [1, 1, 1]))


def test_oracle_budget():
    with budgets(oracle=100):
        with pytest.raises(BudgetExceeded):
            cr_oracle_set(CodeSet.from_code(hamming(F2, 3)))


def test_sphere_identity():
    K = kron_code(F3, 2, 2)
    _, prof = is_completely_regular(K)
    assert sphere_identity_holds(K, prof)
    assert (3 - 1) * K.n == (3**2 - 1) * prof.n_a


def test_codeset_json_round_trip():
    S = CodeSet(F3, 2, [[1, 2], [0, 0], [1, 2]])
    assert len(S) == 2
    assert CodeSet.from_json(S.to_json()) == S
    assert [1, 2] in S
    with pytest.raises(ValueError):
        CodeSet(F2, 2, [[0, 2]])


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 2**32 - 1))
def test_cr_is_monomial_invariant(q, seed):
    F = gf(q)
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 6))
    k = int(rng.integers(1, n))
    try:
        C = gen(F, rng.integers(0, q, size=(k, n)))
    except Exception:
        return
    sigma = MonomialMap.random(F, n, rng)
    D = monomial_image(C, sigma)
    a, pa = is_completely_regular(C)
    b, pb = is_completely_regular(D)
    assert a == b
    assert a == brute.is_cr(q, n, words_of(C))
    if a:
        assert pa.to_json() == pb.to_json()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(0, 2**32 - 1))
def test_random_sets_against_definition(q, seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 5 if q == 2 else 4))
    members = rng.integers(0, q, size=(int(rng.integers(1, 6)), n))
    S = CodeSet(gf(q), n, members)
    assert cr_oracle_set(S) == brute.is_cr(q, n, {tuple(m) for m in members.tolist()})
