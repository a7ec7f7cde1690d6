import itertools

import pytest

from conftest import CyclicLaw, dihedral_group, symmetric_group
from galois_descent import fermat, takahashi
from galois_descent.group import (
    BoundExceeded,
    CayleyTable,
    Group,
    GroupError,
    closure,
    conjugate_group,
    enumerate_subgroups,
    intersection,
    is_group,
    is_normal,
    normality_witness,
    quotient,
    set_product,
    shuffled_order,
)


def cyclic(n):
    law = CyclicLaw(n)
    return closure([1], law)


def pair_generated_subgroups(g):
    """Oracle: closures of all pairs of elements (complete when every subgroup is 2-generated)."""
    return {closure([a, b], g.law).elements for a in g.elements for b in g.elements}


def join_fixpoint_subgroups(g):
    """Oracle: joins of cyclic subgroups, iterated to a fixed point (complete for any group)."""
    cyclic_subs = {closure([a], g.law).elements for a in g.elements}
    found = set(cyclic_subs)
    frontier = set(cyclic_subs)
    while frontier:
        new = set()
        for s in frontier:
            for c in cyclic_subs:
                if not c <= s:
                    j = closure(list(s | c), g.law).elements
                    if j not in found:
                        new.add(j)
        found |= new
        frontier = new
    return found


# -- closure -------------------------------------------------------------------


def test_closure_examples():
    law = CyclicLaw(6)
    assert closure([0], law).order == 1
    assert closure([], law).order == 1
    assert closure([2], law).elements == {0, 2, 4}
    m = 5
    assert closure([takahashi.sigma(m), takahashi.tau(m)], takahashi.law(m)).order == 2 * m
    for d in (4, 5, 7):
        g = closure([fermat.aut(d, 1, 0)], fermat.law(d))
        # brute-force orbit of the exponent i
        seen, i = set(), 0
        while i not in seen:
            seen.add(i)
            i = (i + 1) % d
        assert g.order == len(seen) == d


def test_closure_bound():
    with pytest.raises(BoundExceeded):
        closure([1], CyclicLaw(50), bound=10)


# -- products, predicates -----------------------------------------------------


def test_set_product_examples():
    g = cyclic(6)
    assert set_product(g, Group.trivial(g.law)) == g.elements
    d = 6
    k = set_product(fermat.galois_group_1(d), fermat.galois_group_2(d))
    assert len(k) == d * d and k == fermat.k_subgroup(d, d).elements
    for m in (3, 4, 5):
        s = set_product(takahashi.g1(m), takahashi.g2(m))
        assert len(s) == 4 * m * m
        assert is_group(takahashi.law(m), s)


def test_set_product_law_mismatch():
    with pytest.raises(GroupError):
        set_product(cyclic(3), cyclic(4))


def test_is_group_examples():
    law = fermat.law(6)
    assert is_group(law, {law.identity})
    assert is_group(law, fermat.k_subgroup(6, 6).elements)
    g = fermat.aut(6, 1, 0)
    assert not is_group(law, {law.identity, g})
    assert not is_group(law, {g})
    s3 = symmetric_group(3)
    assert not is_group(s3.law, set(list(s3.sorted_elements)[:4]))


def test_is_group_against_brute_force():
    s3 = symmetric_group(3)
    law = s3.law
    for r in range(1, 7):
        for subset in itertools.combinations(s3.sorted_elements, r):
            s = set(subset)
            brute = law.identity in s and all(law.mul(a, b) in s for a in s for b in s)
            assert is_group(law, s) == brute


def test_is_normal_examples():
    g = cyclic(12)
    for h in enumerate_subgroups(g):
        assert is_normal(h, g)
    m = 4
    aut = takahashi.full_aut(m)
    for l in (1, 2, 4):
        assert is_normal(takahashi.k_subgroup(m, l), aut)
    d6 = dihedral_group(4)
    refl = [x for x in d6.elements if d6.law.element_order(x) == 2 and x[0] == 0]
    for m_ in (3, 4, 5):
        dm = dihedral_group(m_)
        law = dm.law
        r = tuple(-k % m_ for k in range(m_))
        h = closure([r], law)
        # explicit conjugation by the rotation moves the reflection
        rot = tuple((k + 1) % m_ for k in range(m_))
        assert law.conjugate(rot, r) not in h.elements
        assert not is_normal(h, dm)
    assert refl


def test_is_normal_requires_subset():
    with pytest.raises(GroupError):
        is_normal(fermat.galois_group_1(5), fermat.galois_group_2(5))


def test_normality_witness_agrees_with_full_check():
    s4 = symmetric_group(4)
    law = s4.law
    for h in enumerate_subgroups(s4):
        full = all(law.conjugate(g, x) in h.elements for g in s4.elements for x in h.elements)
        assert (normality_witness(h, s4) is None) == full


def test_intersection_examples():
    d = 6
    g1, g2 = fermat.galois_group_1(d), fermat.galois_group_2(d)
    assert intersection(g1, g1) == g1
    assert intersection(g1, g2).is_trivial()
    k2 = fermat.k_subgroup(d, 2)
    a = Group(g1.law, set_product(g1, k2))
    b = Group(g1.law, set_product(g2, k2))
    # brute-force set intersection
    expected = {x for x in a.elements if x in b.elements}
    assert intersection(a, b).elements == expected == k2.elements
    assert intersection(a, b).order == 4


# -- quotients ----------------------------------------------------------------


def test_quotient_trivial_kernel():
    g = symmetric_group(3)
    q = quotient(g, Group.trivial(g.law))
    assert q.order == 6
    assert all(len(c) == 1 for c in q.cosets)


def test_quotient_fermat_examples():
    d = 6
    for l in (2, 3):
        kl = fermat.k_subgroup(d, l)
        g1kl = Group(kl.law, set_product(fermat.galois_group_1(d), kl))
        q = quotient(g1kl, kl)
        assert q.order == g1kl.order // (l * l) == d // l
        assert q.as_group().is_cyclic()
        qk = quotient(fermat.k_subgroup(d, d), kl).as_group()
        assert qk.order == (d // l) ** 2
        assert qk.is_abelian()
        # exponent arithmetic: K_d/K_l = (Z/(d/l))^2 has exponent d/l
        assert max(qk.law.element_order(x) for x in qk.elements) == d // l


def test_quotient_requires_normal():
    g = symmetric_group(3)
    h = closure([(1, 0, 2)], g.law)
    with pytest.raises(GroupError):
        quotient(g, h)


def _check_quotient_well_defined(g, h):
    q = quotient(g, h)
    law = g.law
    assert q.order * h.order == g.order
    for a in q.cosets:
        for b in q.cosets:
            target = q.coset(law.mul(min(a, key=law.key), min(b, key=law.key)))
            for x in a:
                for y in b:
                    assert law.mul(x, y) in target
    qg = q.as_group()
    ql = qg.law
    for x in qg.elements:
        assert ql.mul(x, ql.identity) == x
        assert ql.mul(x, ql.inv(x)) == ql.identity
        for y in qg.elements:
            for z in qg.elements:
                assert ql.mul(ql.mul(x, y), z) == ql.mul(x, ql.mul(y, z))


@pytest.mark.parametrize("m", [3, 4])
def test_quotient_well_defined_takahashi(m):
    aut = takahashi.full_aut(m)
    assert aut.order <= 144
    for l in fermat.divisors(m):
        _check_quotient_well_defined(aut, takahashi.k_subgroup(m, l))


def test_quotient_well_defined_fermat():
    d = 4
    aut = fermat.full_aut(d)
    for l in (1, 2, 4):
        _check_quotient_well_defined(aut, fermat.k_subgroup(d, l))


def test_quotient_well_defined_all_normal_subgroups_s4():
    s4 = symmetric_group(4)
    for h in enumerate_subgroups(s4):
        if is_normal(h, s4):
            _check_quotient_well_defined(s4, h)


# -- enumeration --------------------------------------------------------------


def test_enumerate_examples():
    assert len(enumerate_subgroups(cyclic(6))) == 4
    s3 = symmetric_group(3)
    subs = enumerate_subgroups(s3)
    assert len(subs) == 6
    assert {h.elements for h in subs} == pair_generated_subgroups(s3)
    assert len(enumerate_subgroups(Group.trivial(CyclicLaw(5)))) == 1


@pytest.mark.parametrize("n", [1, 2, 6, 12, 30, 36])
def test_cyclic_subgroup_count_is_divisor_count(n):
    assert len(enumerate_subgroups(cyclic(n))) == len(fermat.divisors(n))


def test_enumerate_matches_pair_oracle():
    for g in (symmetric_group(4), dihedral_group(6), takahashi.full_aut(3)):
        subs = enumerate_subgroups(g)
        assert {h.elements for h in subs} == pair_generated_subgroups(g)
    assert len(enumerate_subgroups(symmetric_group(4))) == 30


@pytest.mark.parametrize("which", ["S4", "F4", "T4"])
def test_enumerate_matches_join_oracle(which):
    g = {"S4": symmetric_group(4), "F4": fermat.full_aut(4), "T4": takahashi.full_aut(4)}[which]
    assert {h.elements for h in enumerate_subgroups(g)} == join_fixpoint_subgroups(g)


def test_enumerate_bound():
    with pytest.raises(BoundExceeded):
        enumerate_subgroups(symmetric_group(4), bound=10)


def _lattice_properties(g, subs):
    law = g.law
    keys = {h.elements for h in subs}
    assert len(keys) == len(subs)
    assert Group.trivial(law).elements in keys and g.elements in keys
    for h in subs:
        assert is_group(law, h.elements)
        assert g.order % h.order == 0
        for x in g.generators:
            assert conjugate_group(h, x).elements in keys
    for a in subs:
        for b in subs:
            assert (a.elements & b.elements) in keys


@pytest.mark.parametrize("m", [3, 4, 5, 6])
def test_lattice_properties_takahashi(m):
    from conftest import takahashi_subgroups

    _lattice_properties(takahashi.full_aut(m), takahashi_subgroups(m))


@pytest.mark.parametrize("d", [4, 5, 6])
def test_lattice_properties_fermat(d):
    from conftest import fermat_subgroups

    _lattice_properties(fermat.full_aut(d), fermat_subgroups(d))


@pytest.mark.parametrize(
    "g",
    [symmetric_group(4), takahashi.full_aut(4), fermat.full_aut(5)],
    ids=["S4", "Aut(T4)", "Aut(F5)"],
)
def test_enumeration_independent_of_element_order(g):
    base = {h.elements for h in enumerate_subgroups(g)}
    for seed in (1, 2):
        shuffled = {h.elements for h in enumerate_subgroups(g, order=shuffled_order(g, seed))}
        assert shuffled == base
    reverse = {h.elements for h in enumerate_subgroups(g, order=list(reversed(g.sorted_elements)))}
    assert reverse == base


def test_enumeration_output_deterministic():
    g = takahashi.full_aut(4)
    a = [h.sorted_elements for h in enumerate_subgroups(g)]
    b = [h.sorted_elements for h in enumerate_subgroups(g, order=shuffled_order(g, 7))]
    assert a == b


def test_cayley_table_rejects_bad_order():
    g = cyclic(4)
    with pytest.raises(GroupError):
        CayleyTable(g, order=[0, 1, 2])


def test_generators_generate():
    for h in enumerate_subgroups(symmetric_group(4)):
        assert closure(h.generators, h.law) == h


def test_from_elements_validates():
    law = CyclicLaw(6)
    assert Group.from_elements(law, {0, 3}).order == 2
    with pytest.raises(GroupError):
        Group.from_elements(law, {0, 1})


def test_group_json():
    data = cyclic(4).to_json()
    assert data == {"order": 4, "generators": ["1"], "elements": ["0", "1", "2", "3"]}
