import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from irrcyclic import closed_forms, cyclotomy
from irrcyclic.errors import NotADivisor, SizeBudgetExceeded
from irrcyclic.fields import build_tower


# -- exact root-of-unity sums


def _raw_eval(p, counts):
    z = np.exp(2j * np.pi / p)
    return sum(c * z**t for t, c in enumerate(counts))


@given(st.integers(0, 4), st.lists(st.integers(-9, 9), min_size=2, max_size=7))
def test_rous_canonical_matches_raw(seed, counts):
    p = [2, 3, 5, 7, 11][seed]
    counts = (counts + [0] * p)[:p]
    v = cyclotomy.RootOfUnitySum(p, tuple(counts))
    assert abs(v.evaluate() - _raw_eval(p, counts)) < 1e-9
    assert v.counts[p - 1] == 0  # canonical representative


def test_rous_integer_detection():
    one = cyclotomy.RootOfUnitySum(5, (3, 1, 1, 1, 1))
    # 3 + (zeta + ... + zeta^4) = 3 - 1 = 2
    assert one.is_integer and one.as_integer() == 2
    assert one == 2
    v = cyclotomy.RootOfUnitySum(5, (0, 1, 0, 0, 0))
    assert not v.is_integer


def test_rous_ring_ops():
    a = cyclotomy.RootOfUnitySum(7, (1, 2, 0, 0, 3, 0, 0))
    b = cyclotomy.RootOfUnitySum(7, (0, 0, 5, 0, 0, 1, 1))
    for x, y in ((a, b), (a, a), (b, a)):
        assert abs((x + y).evaluate() - (x.evaluate() + y.evaluate())) < 1e-9
        assert abs((x - y).evaluate() - (x.evaluate() - y.evaluate())) < 1e-9
        assert abs((x * y).evaluate() - (x.evaluate() * y.evaluate())) < 1e-9
    assert abs(a.rotate(3).evaluate() - (a.evaluate() * np.exp(6j * np.pi / 7))) < 1e-9


def test_dlog_of_minus_one():
    assert cyclotomy.dlog_of_minus_one(2, 8) == 0
    assert cyclotomy.dlog_of_minus_one(3, 9) == 4
    assert cyclotomy.dlog_of_minus_one(5, 25) == 12


# -- cyclotomic numbers


def test_cyclotomic_numbers_gf9_order2():
    t = build_tower(3, 1, 2)
    table = cyclotomy.cyclotomic_numbers(t, 2)
    assert table[0, 0] == 1
    assert table[0, 1] == table[1, 0] == table[1, 1] == 2


def test_cyclotomic_numbers_diagonal_sums():
    # sum over u of (u, u+k) is n-1 for k = 0 and n otherwise
    for p, s, m, N in [(3, 1, 2, 2), (2, 1, 4, 3), (2, 1, 4, 5), (5, 1, 2, 4),
                       (3, 1, 4, 8), (7, 1, 2, 6), (2, 1, 6, 9)]:
        t = build_tower(p, s, m)
        n = (t.r - 1) // N
        table = cyclotomy.cyclotomic_numbers(t, N)
        for k in range(N):
            diag = sum(table[u, u + k] for u in range(N))
            assert diag == (n - 1 if k == 0 else n)
        assert sum(table[i, j] for i in range(N) for j in range(N)) == t.r - 2


def test_cyclotomic_class_membership():
    t = build_tower(2, 1, 4)
    cls = list(cyclotomy.cyclotomic_class(t, 3, 1))
    assert len(cls) == 5
    assert all(t.discrete_log(x) % 3 == 1 for x in cls)


def test_subfield_scaling_multiset_law():
    # products y * C_i^(e1) for y in GF(q)* cover the coarser class
    # C_i^(g) with g = gcd((r-1)/(q-1), e1), each element hit
    # (q-1) g / e1 times
    for p, s, m, e1 in [(2, 2, 3, 9), (3, 2, 2, 8), (2, 2, 3, 21), (2, 3, 2, 7)]:
        t = build_tower(p, s, m)
        L = (t.r - 1) // (t.q - 1)
        g = math.gcd(L, e1)
        mult = (t.q - 1) * g // e1
        for i in (0, 1):
            a = np.arange((t.r - 1) // e1, dtype=np.int64)
            b = np.arange(t.q - 1, dtype=np.int64)
            prods = (i + e1 * a[:, None] + L * b[None, :]) % (t.r - 1)
            counts = np.bincount(prods.ravel(), minlength=t.r - 1)
            members = counts.nonzero()[0]
            assert (members % g == i % g).all()
            assert set(counts[members].tolist()) == {mult}
            assert len(members) == (t.r - 1) // g


# -- Gaussian periods


def test_periods_gf81_order2():
    t = build_tower(3, 1, 4)
    ps = cyclotomy.gaussian_periods_exact(t, 2)
    assert ps.integer_values == (-5, 4)
    assert ps.product_rule_checked


def test_periods_gf64_order3():
    t = build_tower(2, 1, 6)
    ps = cyclotomy.gaussian_periods_exact(t, 3)
    assert ps.integer_values == (5, -3, -3)


def test_periods_sum_rule_battery():
    for p, s, m in [(2, 1, 5), (3, 1, 3), (5, 1, 2), (7, 1, 2), (2, 2, 2)]:
        t = build_tower(p, s, m)
        for N in (d for d in range(1, t.r) if (t.r - 1) % d == 0 and d <= 16):
            ps = cyclotomy.gaussian_periods_exact(t, N)
            total = ps.values[0]
            for v in ps.values[1:]:
                total = total + v
            assert total == -1
            assert ps.product_rule_checked


def test_periods_non_integer_case():
    # order-2 periods over a field of odd degree are conjugate irrationals
    t = build_tower(3, 1, 3)
    ps = cyclotomy.gaussian_periods_exact(t, 2)
    assert ps.integer_values is None
    vals = ps.numeric()
    assert abs(vals[0] + vals[1] + 1) < 1e-9
    # quadratic: eta0 * eta1 should be rational
    prod = ps.values[0] * ps.values[1]
    assert prod.is_integer


def test_periods_invalid_order():
    t = build_tower(3, 1, 2)
    with pytest.raises(NotADivisor):
        cyclotomy.gaussian_periods_exact(t, 3)
    with pytest.raises(SizeBudgetExceeded):
        cyclotomy.gaussian_periods_exact(t, 2, budget=4)


# -- numeric bridges


def _dft_gauss_sums(ps):
    """G(psi_j) = sum_k zeta_N^(jk) eta_k from exact periods, numerically."""
    vals = ps.numeric()
    N = ps.N
    j = np.arange(N)
    zeta = np.exp(2j * np.pi * np.outer(j, j) / N)
    return zeta @ vals


def test_gauss_sum_modulus_and_dft_inversion():
    for p, s, m, N in [(3, 1, 2, 4), (2, 1, 4, 5), (5, 1, 2, 6), (2, 2, 3, 7)]:
        t = build_tower(p, s, m)
        ps = cyclotomy.gaussian_periods_exact(t, N)
        G = _dft_gauss_sums(ps)
        # nontrivial characters all have |G| = sqrt(r)
        assert np.allclose(np.abs(G[1:]), math.sqrt(t.r), atol=1e-6)
        assert abs(G[0] + 1) < 1e-6
        # inverting the transform must recover the periods
        back = (np.conj(np.exp(2j * np.pi * np.outer(np.arange(N), np.arange(N)) / N)) @ G) / N
        assert np.allclose(back, ps.numeric(), atol=1e-6)


def test_gauss_sum_numeric_matches_dft():
    for p, s, m, N in [(3, 1, 2, 4), (2, 1, 4, 3), (5, 1, 2, 3)]:
        t = build_tower(p, s, m)
        ps = cyclotomy.gaussian_periods_exact(t, N)
        G = _dft_gauss_sums(ps)
        for j in range(N):
            direct = cyclotomy.gauss_sum_numeric(t, N, j)
            assert abs(direct - G[j]) < 1e-9


def test_quadratic_char_sum_is_quadratic_gauss_sum():
    for p, s, want in [(3, 2, 3), (5, 2, -5), (7, 2, 7)]:
        t = build_tower(p, 1, s)
        total = cyclotomy.quadratic_char_sum(t, t.one, t.zero, t.zero)
        assert total.is_integer and total.as_integer() == want
        exact = closed_forms.quadratic_gauss_sum(p, s)
        assert exact.is_rational and exact.as_integer() == want


def test_quadratic_char_sum_shifts():
    # completing the square: adding a linear term only rotates the sum
    t = build_tower(5, 1, 2)
    base = cyclotomy.quadratic_char_sum(t, t.one, t.zero, t.zero)
    shifted = cyclotomy.quadratic_char_sum(t, t.one, t.scalar(2), t.scalar(1))
    assert abs(abs(shifted.evaluate()) - abs(base.evaluate())) < 1e-9
