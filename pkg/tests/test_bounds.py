from fractions import Fraction

import pytest

from dissoc.bounds import (
    InfeasiblePairError,
    phi_bound_checks,
    phi_bound_sharp,
    pow_bound_holds,
    psi_lower,
    psi_upper_subcubic,
    seq_f,
    seq_g,
)


def naive(base, k):
    # direct recursion on the defining recurrence, no caching
    if k < 3:
        return base[k]
    return naive(base, k - 1) + 2 * naive(base, k - 2) + naive(base, k - 3)


@pytest.mark.parametrize("k, expected", [(0, 1), (1, 1), (2, 3), (3, 6), (4, 13), (5, 28)])
def test_f_values(k, expected):
    assert seq_f(k) == expected == naive((1, 1, 3), k)


@pytest.mark.parametrize("k, expected", [(0, 1), (1, 2), (2, 4), (3, 9), (4, 19)])
def test_g_values(k, expected):
    assert seq_g(k) == expected == naive((1, 2, 4), k)


def test_sequences_recurrence_and_growth():
    for k in range(3, 201):
        assert seq_f(k) == seq_f(k - 1) + 2 * seq_f(k - 2) + seq_f(k - 3)
        assert seq_g(k) == seq_g(k - 1) + 2 * seq_g(k - 2) + seq_g(k - 3)
    assert all(seq_f(k + 1) > seq_f(k) for k in range(1, 200))
    assert all(seq_g(k + 1) > seq_g(k) for k in range(0, 200))
    with pytest.raises(ValueError):
        seq_f(-1)


@pytest.mark.parametrize("n, expected", [(3, 2), (6, 4), (1, 1), (4, 3), (5, 4)])
def test_psi_lower(n, expected):
    assert psi_lower(n) == expected


@pytest.mark.parametrize("n, expected", [(7, 6), (2, 2), (4, 3), (1, 1), (5, 4)])
def test_psi_upper(n, expected):
    assert psi_upper_subcubic(n) == expected


@pytest.mark.parametrize("n, psi, expected", [(6, 4, 6), (4, 3, 2), (7, 6, 1), (1, 1, 1), (2, 2, 1)])
def test_phi_bound_sharp(n, psi, expected):
    assert phi_bound_sharp(n, psi) == expected


@pytest.mark.parametrize("n, psi", [(6, 3), (6, 6), (0, 0), (10, 9)])
def test_phi_bound_sharp_infeasible(n, psi):
    with pytest.raises(InfeasiblePairError):
        phi_bound_sharp(n, psi)


def test_sharp_below_loose_bound():
    for n in range(1, 61):
        for psi in range(psi_lower(n), psi_upper_subcubic(n) + 1):
            e = 4 * n - 5 * psi + 2
            assert e >= 0
            assert Fraction(phi_bound_sharp(n, psi)) <= Fraction(1466, 1000) ** e


def test_pow_bound_holds_is_exact():
    assert pow_bound_holds(2, 1466, 1000, 3)
    assert not pow_bound_holds(4, 1466, 1000, 3)  # 1.466^3 = 3.150...
    assert pow_bound_holds(1, 1466, 1000, 0)
    assert not pow_bound_holds(2, 1466, 1000, 0)
    assert pow_bound_holds(0, 3, 2, -2)
    assert not pow_bound_holds(1, 3, 2, -1)
    # one unit either side of an exact power
    assert pow_bound_holds(129**4, 129, 1, 4) and not pow_bound_holds(129**4 + 1, 129, 1, 4)


def test_checks_examples():
    r = phi_bound_checks(4, 3, 2)
    assert r.thm32_ok and r.sharp_bound == 2 and r.sharp_attained
    r = phi_bound_checks(7, 6, 1)
    assert r.thm32_ok and r.sharp_bound == 1 and r.sharp_ok and r.sharp_attained
    r = phi_bound_checks(6, 4, 6)
    assert r.sharp_bound == 6 and r.sharp_attained and r.all_ok is False  # 1.29^7 < 6


def test_checks_out_of_range_pair():
    r = phi_bound_checks(8, 7, 1)  # the star K_{1,7}: not subcubic
    assert not r.upper_ok and r.sharp_bound is None and not r.sharp_ok


def test_order_linear_corollary_fails_on_p3():
    # P3 has 3 maximum sets but 1.29^4 = 2.769...
    r = phi_bound_checks(3, 2, 3)
    assert r.thm32_ok and r.sharp_ok and r.cor_psi_ok
    assert not r.cor_n_ok
