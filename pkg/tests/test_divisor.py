from collections import Counter

import pytest
from hypothesis import given, strategies as st

from conftest import fermat_subgroups, proof_identity_failures, takahashi_subgroups
from galois_descent import fermat, takahashi
from galois_descent.criteria import fermat_scenario, takahashi_a_scenario, takahashi_b_scenario
from galois_descent.divisor import (
    Divisor,
    coset_orbit_sum,
    induced_action,
    orbit,
    orbit_label,
    orbit_sum,
    pullback,
    pushforward,
)
from galois_descent.group import Group, closure, quotient, set_product

points = st.sampled_from("abcdefg")
divisors = st.dictionaries(points, st.integers(-5, 5)).map(Divisor)


# -- algebra ------------------------------------------------------------------


def test_divisor_basics():
    d = Divisor({"p": 2, "q": 0, "r": -1})
    assert d.support() == {"p", "r"}
    assert d["q"] == 0 and d["p"] == 2
    assert d.degree() == 1
    assert not d.is_effective()
    assert Divisor(["p", "p", "q"]) == Divisor({"p": 2, "q": 1})
    assert Divisor() == Divisor({"x": 0})
    assert Divisor.point("p", 3).items() == [("p", 3)]
    assert (Divisor({"p": 4, "q": 2}).divide(2)) == Divisor({"p": 2, "q": 1})
    with pytest.raises(ValueError):
        Divisor({"p": 3}).divide(2)
    assert Divisor({"a": 1, "b": 2}).first_difference(Divisor({"a": 1, "b": 3})) == ("b", 2, 3)
    assert Divisor({"a": 1}).first_difference(Divisor({"a": 1})) is None


@given(divisors, divisors, divisors, st.integers(-4, 4))
def test_divisor_abelian_group(a, b, c, k):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a - a == Divisor()
    assert (a + b).degree() == a.degree() + b.degree()
    assert k * (a + b) == k * a + k * b
    assert (k * a).degree() == k * a.degree()
    assert hash(a + b) == hash(b + a)
    for p in "abcdefg":
        assert (a + b)[p] == a[p] + b[p]


@given(divisors, st.integers(1, 5))
def test_divide_inverts_scaling(a, k):
    assert (k * a).divide(k) == a


# -- orbit sums on a toy action -------------------------------------------------


def test_orbit_sum_counts_elements():
    # Z/6 acting on Z/3 by translation: each point is hit twice
    from conftest import CyclicLaw

    g = closure([1], CyclicLaw(6))
    act = lambda x, p: (p + x) % 3
    assert orbit_sum(g.elements, 0, act) == Divisor({0: 2, 1: 2, 2: 2})
    assert orbit(g, 0, act) == (0, 1, 2)
    h = closure([3], CyclicLaw(6))
    assert orbit_label(h, 1, act) == (1,)
    assert pushforward(h, Divisor({0: 1, 1: 1}), act) == Divisor({(0,): 1, (1,): 1})
    assert pullback(h, Divisor({(2,): 1}), act) == Divisor({2: 2})


# -- the proof identities on concrete examples -----------------------------------


def test_pushforward_fermat_example():
    # H = K_2 in F_6, over G1 K_2: multiplicities scale by |H| = 4
    d = 6
    s = fermat_scenario(d)
    k2 = fermat.k_subgroup(d, 2)
    big = Group(s.law, set_product(s.g1, k2))
    assert big.order == 12
    push = pushforward(k2, orbit_sum(big.elements, s.base, fermat.act), fermat.act)
    assert all(k == 4 for _, k in push.items())
    q_bar = quotient(big, k2)
    assert push == 4 * coset_orbit_sum(q_bar, s.base, fermat.act)
    assert push.degree() == 12 and len(push.support()) == 3


def test_pullback_fermat_example():
    d = 6
    k2 = fermat.k_subgroup(d, 2)
    q = fermat.base_point(d)
    label = orbit_label(k2, q, fermat.act)
    pb = pullback(k2, Divisor.point(label), fermat.act)
    # direct sum over the four elements of K_2
    assert pb == Divisor(Counter(fermat.act(h, q) for h in k2.elements))
    assert pb.degree() == 4
    # diag(-1,1,1) and diag(1,-1,1) both send Q to (-eta : 1 : 0); diag(-1,-1,1) fixes Q
    assert pb == Divisor({fermat.FermatPoint(d, 2, 1): 2, fermat.FermatPoint(d, 2, 7): 2})


def test_induced_action_is_action():
    d = 6
    s = fermat_scenario(d)
    k2 = fermat.k_subgroup(d, 2)
    big = Group(s.law, set_product(s.g1, k2))
    q_bar = quotient(big, k2)
    act_bar = induced_action(k2, fermat.act)
    labels = {orbit_label(k2, p, fermat.act) for p in fermat.special_points(d)}
    for a in q_bar.cosets:
        for b in q_bar.cosets:
            ab = q_bar.law.mul(a, b)
            for lab in labels:
                assert act_bar(ab, lab) == act_bar(a, act_bar(b, lab))


@pytest.mark.parametrize("d", [4, 5, 6])
def test_proof_identities_fermat(d):
    s = fermat_scenario(d)
    for h in fermat_subgroups(d):
        assert proof_identity_failures(s, h) == []


@pytest.mark.parametrize("factory", [takahashi_a_scenario, takahashi_b_scenario], ids=["A", "B"])
@pytest.mark.parametrize("m", [3, 4])
def test_proof_identities_takahashi(factory, m):
    s = factory(m)
    for h in takahashi_subgroups(m):
        assert proof_identity_failures(s, h) == []


def test_coset_orbit_sum_takahashi_example():
    m = 4
    s = takahashi_a_scenario(m)
    k2 = takahashi.k_subgroup(m, 2)
    big = Group(s.law, set_product(s.g1, k2))
    push = pushforward(k2, orbit_sum(big.elements, s.base, s.act), s.act)
    assert push == 4 * coset_orbit_sum(quotient(big, k2), s.base, s.act)
