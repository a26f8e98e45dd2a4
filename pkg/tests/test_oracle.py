import pytest

from irrcyclic import cyclotomy, oracle, weights
from irrcyclic.errors import SizeBudgetExceeded
from irrcyclic.fields import build_tower


def test_codeword_entries_and_weight():
    spec = weights.code_params(3, 1, 4, 2)
    t = build_tower(3, 1, 4)
    word = oracle.codeword(spec, t, t.one)
    assert len(word.entries) == spec.n
    assert word.weight == sum(1 for e in word.entries if not e.is_zero)
    assert all(e ** t.q == e for e in word.entries)  # entries live in GF(q)


def test_codeword_shift_property():
    # beta -> beta * theta rotates the codeword
    spec = weights.code_params(2, 2, 3, 9)
    t = build_tower(2, 2, 3)
    theta = t.alpha**spec.N
    beta = t.alpha**5
    a = oracle.codeword(spec, t, beta).entries
    b = oracle.codeword(spec, t, beta * theta).entries
    assert b == a[1:] + a[:1]


def test_codeword_scaling_keeps_weight():
    spec = weights.code_params(3, 1, 4, 4)
    t = build_tower(3, 1, 4)
    beta = t.alpha**7
    c = t.scalar(2)
    assert oracle.codeword(spec, t, beta).weight == \
        oracle.codeword(spec, t, c * beta).weight


def test_brute_matches_closed_battery():
    for args in [(3, 1, 4, 2), (3, 1, 4, 4), (2, 2, 3, 9), (2, 2, 2, 3),
                 (7, 1, 2, 12), (7, 1, 3, 6), (5, 1, 4, 16), (2, 1, 3, 7),
                 (3, 1, 5, 11)]:
        spec = weights.code_params(*args)
        closed = weights.weight_distribution(spec, "closed")
        brute = oracle.brute_weight_distribution(spec)
        assert brute.method == "brute"
        assert closed.entries == brute.entries, spec


def test_literal_matches_class_mode():
    for args in [(3, 1, 4, 2), (2, 2, 3, 9), (7, 1, 2, 12), (2, 1, 4, 15),
                 (2, 1, 3, 7), (3, 2, 2, 16)]:
        spec = weights.code_params(*args)
        fast = oracle.brute_weight_distribution(spec)
        slow = oracle.brute_weight_distribution(spec, literal=True)
        assert fast.entries == slow.entries, spec


def test_literal_parallel_matches_sequential():
    spec = weights.code_params(3, 1, 4, 4)
    one = oracle.brute_weight_distribution(spec, literal=True, threads=1)
    par = oracle.brute_weight_distribution(spec, literal=True, threads=3)
    assert one.entries == par.entries


def test_budget_guard():
    spec = weights.code_params(3, 1, 4, 2)
    with pytest.raises(SizeBudgetExceeded):
        oracle.brute_weight_distribution(spec, budget=80)


def test_count_Z_example():
    spec = weights.code_params(3, 1, 4, 2)
    t = build_tower(3, 1, 4)
    assert oracle.count_Z(spec, t, t.one) == 21
    assert oracle.count_Z(spec, t, t.zero) == spec.r
    with pytest.raises(SizeBudgetExceeded):
        oracle.count_Z(spec, t, t.one, budget=80)


def test_count_Z_matches_direct():
    spec = weights.code_params(2, 2, 3, 9)
    t = build_tower(2, 2, 3)
    for k in (0, 1, 5, 17):
        a = t.alpha**k
        direct = sum(
            1 for x in t.elements() if t.trace(a * x**spec.N, "r->q").is_zero
        )
        assert oracle.count_Z(spec, t, a) == direct


def test_count_Z_period_identity():
    # q * Z(a) = q + r - 1 + (q-1) * N1 * eta_k with k the class of a mod N1
    for args in [(3, 1, 4, 2), (3, 1, 4, 4), (2, 2, 3, 9), (5, 1, 2, 4),
                 (2, 1, 4, 5), (7, 1, 2, 12), (2, 2, 2, 5), (3, 2, 2, 8)]:
        spec = weights.code_params(*args)
        t = build_tower(spec.p, spec.s, spec.m)
        periods = cyclotomy.gaussian_periods_exact(t, spec.N1).integer_values
        for k in range(spec.N1):
            a = t.alpha**k
            z = oracle.count_Z(spec, t, a)
            assert spec.q * z == spec.q + spec.r - 1 + \
                (spec.q - 1) * spec.N1 * periods[k]


def test_oracle_weight_equals_n_minus_zeros():
    # w(c_beta) = n - (Z(beta) - 1) / N restricted to the cyclic positions:
    # each codeword entry j is Tr(beta theta^j); zero entries correspond to
    # the N-fold cover of the zero set minus the origin
    spec = weights.code_params(3, 1, 4, 4)
    t = build_tower(3, 1, 4)
    for k in (0, 1, 2, 3, 9):
        beta = t.alpha**k
        z = oracle.count_Z(spec, t, beta)
        w = oracle.codeword(spec, t, beta).weight
        assert w == spec.n - (z - 1) // spec.N
