import itertools
from collections import Counter
from math import factorial

import pytest
from alphabet import coefficient_at, m_of_xy, m_poly, mul

from steinberg.counts import sp_count, st_count
from steinberg.qalg import QPoly, QRat, TSeries
from steinberg.rootsys import gl
from steinberg.symfun import (
    BiSymFunc,
    SymFunc,
    delta_n,
    exp_side,
    exp_side_power_sum,
    gl_antidominant_weights,
    gl_order,
    h_at_one_over_one_minus_q,
    h_in_m,
    monomial_product,
    omega_series,
    p_in_m,
    partition_to_subset,
    partitions,
    pleth_h_X_over_qm1,
    pleth_h_XY_over_qm1,
    z_factor,
)

q = QPoly((0, 1))


def test_partitions():
    assert [len(partitions(n)) for n in range(1, 7)] == [1, 2, 3, 5, 7, 11]
    assert partitions(3) == ((3,), (2, 1), (1, 1, 1))
    for n in range(1, 7):
        assert sum(factorial(n) // z_factor(lam) for lam in partitions(n)) == factorial(n)


@pytest.mark.parametrize("a,b", [((1,), (1,)), ((2,), (1,)), ((1, 1), (2,)), ((2, 1), (1,)), ((1, 1), (1, 1))])
def test_monomial_product_by_expansion(a, b):
    k = sum(a) + sum(b)
    poly = mul(m_poly(a, k), m_poly(b, k))
    got = dict(monomial_product(a, b))
    for nu in partitions(k):
        assert got.get(nu, 0) == coefficient_at(poly, nu, k)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_h_and_p_by_expansion(n):
    h = h_in_m(n)
    hpoly = Counter({e: 1 for e in itertools.product(range(n + 1), repeat=n) if sum(e) == n})
    for lam in partitions(n):
        assert h[lam] == QRat(coefficient_at(hpoly, lam, n))
        ppoly = Counter({tuple(0 for _ in range(n)): 1})
        for r in lam:
            ppoly = mul(ppoly, Counter({tuple(r if i == j else 0 for j in range(n)): 1 for i in range(n)}))
        pm = dict(p_in_m(lam))
        for nu in partitions(n):
            assert pm.get(nu, 0) == coefficient_at(ppoly, nu, n)


def test_h_examples():
    assert h_in_m(2) == SymFunc(2, {(2,): 1, (1, 1): 1})
    assert h_in_m(3) == SymFunc(3, {(3,): 1, (2, 1): 1, (1, 1, 1): 1})


def test_pleth_x_over_q_minus_one():
    assert pleth_h_X_over_qm1(1) == SymFunc(1, {(1,): QRat(1, q - 1)})
    assert pleth_h_X_over_qm1(2)[(2,)] == QRat(q, (q - 1) * (q**2 - 1))
    for n in range(1, 7):
        pleth_h_X_over_qm1(n)  # two internal routes must agree


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pleth_x_matches_springer_counts(n):
    f = pleth_h_X_over_qm1(n)
    for nu in partitions(n):
        assert f[nu] == QRat(sp_count(gl(n), partition_to_subset(nu)), gl_order(n))


@pytest.mark.parametrize("n", range(1, 7))
def test_hnq(n):
    expected = QRat(1)
    for i in range(1, n + 1):
        expected = expected / (1 - q**i)
    assert h_at_one_over_one_minus_q(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pleth_xy_matches_steinberg_counts(n):
    f = pleth_h_XY_over_qm1(n)
    for a in partitions(n):
        for b in partitions(n):
            expected = QRat(st_count(gl(n), partition_to_subset(a), partition_to_subset(b)), gl_order(n))
            assert f[(a, b)] == expected
    if n == 1:
        assert f == BiSymFunc(1, {((1,), (1,)): QRat(1, q - 1)})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_delta_by_expansion(n):
    for nu in partitions(n):
        poly = m_of_xy(nu, n)
        got = delta_n(SymFunc.m(nu))
        for a in partitions(n):
            for b in partitions(n):
                key = tuple(list(a) + [0] * (n - len(a))) + tuple(list(b) + [0] * (n - len(b)))
                assert got[(a, b)] == QRat(poly.get(key, 0))


def test_delta_examples():
    assert delta_n(SymFunc.m((1,))) == BiSymFunc(1, {((1,), (1,)): 1})
    assert delta_n(SymFunc.m((2,))) == BiSymFunc(2, {((2,), (2,)): 1})


@pytest.mark.parametrize("a,b", [((1,), (1,)), ((1,), (2,)), ((1, 1), (1,)), ((2,), (2,)), ((1,), (1, 1, 1)), ((1, 1), (1, 1))])
def test_delta_is_multiplicative(a, b):
    lhs = delta_n(SymFunc.m(a) * SymFunc.m(b))
    rhs = delta_n(SymFunc.m(a)) * delta_n(SymFunc.m(b))
    assert lhs == rhs


def test_partition_to_subset():
    assert partition_to_subset((3,)) == 0b11
    assert partition_to_subset((2, 1)) == 0b01
    assert partition_to_subset((1, 2)) == 0b10
    assert partition_to_subset((1, 1, 1)) == 0


def test_antidominant_weights():
    assert gl_antidominant_weights(2, 3) == [(-3, 0), (-2, -1), (-2, 0), (-1, -1), (-1, 0), (0, 0)]
    assert gl_antidominant_weights(1, 2) == [(-2,), (-1,), (0,)]


def test_exp_side_low_degrees():
    tmax = 4
    E = exp_side(3, tmax)
    assert E[0] == BiSymFunc(0, {((), ()): TSeries.const(1, tmax)})
    assert E[1] == BiSymFunc(1, {((1,), (1,)): TSeries.geometric(tmax, c=QRat(1, q - 1))})
    for n in (1, 2, 3):
        h = pleth_h_XY_over_qm1(n)
        for key in h.keys():
            assert E[n][key][0] == h[key]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exp_side_matches_power_sum_route(n):
    assert exp_side(3, 4)[n] == exp_side_power_sum(n, 4)


def test_omega_low_degree():
    assert omega_series(1, 3)[1] == BiSymFunc(1, {((1,), (1,)): TSeries.geometric(3, c=QRat(1, q - 1))})
    o2 = omega_series(2, 2)[2]
    for a in partitions(2):
        for b in partitions(2):
            assert o2[(a, b)][0] == QRat(st_count(gl(2), partition_to_subset(a), partition_to_subset(b)), gl_order(2))


def test_to_json_shape():
    data = pleth_h_XY_over_qm1(1).to_json()
    assert data == [{"x_part": [1], "y_part": [1], "coeff": {"num": {"coeffs": [1]}, "den": {"coeffs": [-1, 1]}}}]
    series = exp_side(1, 1)[1].to_json()
    assert "t_coeffs" in series[0] and len(series[0]["t_coeffs"]) == 2
