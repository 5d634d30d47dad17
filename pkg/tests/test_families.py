import pytest

from dissoc.bounds import InfeasiblePairError, phi_bound_sharp, psi_lower, psi_upper_subcubic, seq_f, seq_g
from dissoc.engine import psi_phi
from dissoc.families import (
    FamilyPrediction,
    FamilySpec,
    build_chain,
    build_extremal,
    build_family,
    build_T,
    build_T1,
    build_T2,
    chain_closure,
    highest_label_policy,
    seeded_policy,
)
from dissoc.oracle import brute_force
from dissoc.tree import attach_p5, canonical_code, max_degree, path, star
from dissoc.treegen import enumerate_trees


def code(t):
    return canonical_code(t)


def test_T_examples():
    t, p = build_T(1)
    assert code(t) == code(path(3)) and p == FamilyPrediction(3, 2, 3)
    t, p = build_T(2)
    assert code(t) == code(path(6)) and p == FamilyPrediction(6, 4, 6)
    assert brute_force(t).phi == 6
    assert build_T(3)[1] == FamilyPrediction(9, 6, 13)


def test_T1_examples():
    t, p = build_T1(1)
    assert code(t) == code(path(4)) and p == FamilyPrediction(4, 3, 2)
    assert build_T1(2)[1] == FamilyPrediction(7, 5, 4)
    assert build_T1(3)[1] == FamilyPrediction(10, 7, 9)


def test_T2_examples():
    t, p = build_T2(1)
    assert t.n == 5 and max_degree(t) == 3 and p == FamilyPrediction(5, 4, 1)
    r = brute_force(t)
    assert (r.psi, r.phi) == (4, 1)
    assert build_T2(2)[1] == FamilyPrediction(8, 6, 3)
    assert build_T2(3)[1] == FamilyPrediction(11, 8, 6)


@pytest.mark.parametrize("builder", [build_T, build_T1, build_T2])
def test_zero_parameter_rejected(builder):
    with pytest.raises(ValueError):
        builder(0)


@pytest.mark.parametrize("builder", [build_T, build_T1, build_T2])
def test_family_predictions(builder):
    for ell in range(1, 13):
        t, p = builder(ell)
        assert (t.n, *psi_phi(t)) == (p.n, p.psi, p.phi)
        assert max_degree(t) <= 3


def test_family_sequences_tie_to_f_and_g():
    for ell in range(1, 13):
        assert build_T(ell)[1].phi == seq_f(ell + 1)
        assert build_T1(ell)[1].phi == seq_g(ell)
        assert build_T2(ell)[1].phi == seq_f(ell)


def test_chain_examples():
    t, p = build_chain("K2", 0)
    assert t == path(2) and p == FamilyPrediction(2, 2, 1)
    t, p = build_chain("K2", 1)
    assert p == FamilyPrediction(7, 6, 1) and psi_phi(t) == (6, 1)
    t, p = build_chain("K1", 1)
    assert p == FamilyPrediction(6, 5, 1)
    r = brute_force(t)
    assert (r.psi, r.phi) == (5, 1)
    with pytest.raises(ValueError):
        build_chain("K3", 1)
    with pytest.raises(ValueError):
        build_chain("K2", -1)


@pytest.mark.parametrize("base", ["K1", "K2"])
def test_chain_predictions_policy_independent(base):
    for m in range(11):
        for policy in (None, highest_label_policy, seeded_policy(m)):
            t, p = build_chain(base, m) if policy is None else build_chain(base, m, policy)
            assert (t.n, *psi_phi(t)) == (p.n, p.psi, p.phi)
            assert max_degree(t) <= 3


def test_family_spec():
    assert build_family(FamilySpec("T", 2))[1] == FamilyPrediction(6, 4, 6)
    assert build_family(FamilySpec("K2chain", 1))[1] == FamilyPrediction(7, 6, 1)
    with pytest.raises(ValueError):
        FamilySpec("T", 0)
    with pytest.raises(ValueError):
        FamilySpec("X", 1)


def test_extremal_examples():
    (t, p), = build_extremal(6, 4)
    assert code(t) == code(path(6)) and p.phi == 6
    (t, p), = build_extremal(4, 3)
    assert code(t) == code(path(4)) and p.phi == 2
    (t, p), = build_extremal(7, 6)
    assert code(t) == code(build_chain("K2", 1)[0]) and p.phi == 1
    with pytest.raises(InfeasiblePairError):
        build_extremal(6, 6)


def test_extremal_case_variants():
    # psi even strictly between the bounds: two constructions
    assert len(build_extremal(11, 8)) == 2
    # psi = 4n/5: P5 base and the order-5 spider base
    assert len(build_extremal(10, 8)) == 2


def test_extremal_outputs_attain_sharp_bound():
    for n in range(1, 41):
        for psi in range(psi_lower(n), psi_upper_subcubic(n) + 1):
            for t, p in build_extremal(n, psi):
                assert max_degree(t) <= 3
                assert (t.n, *psi_phi(t)) == (n, psi, phi_bound_sharp(n, psi)) == (p.n, p.psi, p.phi)


def test_extremal_policy_alternatives():
    for n in range(8, 25):
        for psi in range(psi_lower(n), psi_upper_subcubic(n) + 1):
            for t, p in build_extremal(n, psi, seeded_policy(n * 100 + psi)):
                assert psi_phi(t) == (p.psi, p.phi)


def test_p5_conservation_small_with_oracle():
    for n in range(1, 9):
        for t in enumerate_trees(n, None):
            base = psi_phi(t)
            for u in range(n):
                if t.degree(u) < 3:
                    s = attach_p5(t, u)
                    r = brute_force(s)
                    assert (r.psi, r.phi) == (base[0] + 4, base[1])


def test_chain_closure():
    assert list(chain_closure("K2", 0)) == [code(path(2))]
    assert len(chain_closure("K2", 1)) == 1
    closure = chain_closure("K2", 2)
    assert code(build_chain("K2", 2)[0]) in closure
    assert code(build_chain("K2", 2, highest_label_policy)[0]) in closure
    for t in closure.values():
        assert psi_phi(t) == (10, 1)
