import random

import pytest
from hypothesis import given, settings, strategies as st

from coverforge.datum import (collide_points, fiber_structure, make_datum, quotient_datum,
                              riemann_hurwitz_genus, validate_datum)
from coverforge.errors import EmptyMerge, InvalidDatum, NonAdjacentMerge, NotNormal
from coverforge.groups import cyclic, dihedral, subgroup_generated
from suite import oracle_genus, random_datum, random_suite

D3 = dihedral(3)
A, A2, B = 1, 2, 3


def test_worked_d3_datum():
    d = make_datum(D3, [B, 4, A])  # (b, a*b, a)
    assert validate_datum(d).ok
    assert riemann_hurwitz_genus(d) == 0
    d4 = make_datum(D3, [B, B, A, A2])
    assert riemann_hurwitz_genus(d4) == 2
    d6 = make_datum(D3, [B, B, B, B, A, A2])
    assert riemann_hurwitz_genus(d6) == 5


@pytest.mark.parametrize("r", [4, 6, 8, 10])
def test_hyperelliptic_family(r):
    d = make_datum(cyclic(2), [1] * r)
    assert riemann_hurwitz_genus(d) == (r - 2) // 2


def test_unramified_identity_cover():
    d = make_datum(cyclic(1), [], base_genus=1, handles=[0, 0])
    assert validate_datum(d).ok and riemann_hurwitz_genus(d) == 1


def test_validation_issue_codes():
    assert validate_datum(make_datum(D3, [B, A])).codes() == ["relation"]
    assert "surjective" in validate_datum(make_datum(D3, [A, A2])).codes()
    bad_order = make_datum(D3, [(B, 3), B, A, A2])
    assert "order" in validate_datum(bad_order).codes()
    assert "handles" in validate_datum(make_datum(D3, [B, B, A, A2], base_genus=1)).codes()
    dup = make_datum(D3, [B, B, A, A2], labels=["x", "x", "y", "z"])
    assert "label" in validate_datum(dup).codes()
    with pytest.raises(InvalidDatum):
        riemann_hurwitz_genus(make_datum(D3, [B, A]))


def test_genus_matches_euler_characteristic_oracle():
    for d in random_suite(120, seed=7):
        assert riemann_hurwitz_genus(d) == oracle_genus(d) >= 0


def test_fiber_structure_matches_rh_terms():
    for d in random_suite(60, seed=3):
        n = d.group.order
        for i, b in enumerate(d.branches):
            fr = fiber_structure(d, i)
            assert fr.fiber_size == n // b.order
            assert fr.ramification_contribution == (n // b.order) * (b.order - 1)
            assert len(fr.inertia_subgroups) <= fr.fiber_size


def test_collide_rotations_in_d3():
    d = make_datum(D3, [B, B, B, B, A, A2])
    out = collide_points(d, 4, 5)
    assert out.group == cyclic(2)
    assert [b.order for b in out.branches] == [2, 2, 2, 2]
    assert riemann_hurwitz_genus(out) == 1
    with pytest.raises(NonAdjacentMerge):
        collide_points(d, 0, 2)


def test_collide_to_nothing_is_rejected():
    with pytest.raises(EmptyMerge):
        collide_points(make_datum(cyclic(2), [1, 1]), 0, 1)


def test_collide_preserves_relation_randomly():
    rng = random.Random(11)
    for d in random_suite(80, seed=5):
        if d.r < 3 or d.base_genus:
            continue
        i = rng.randrange(d.r - 1)
        try:
            out = collide_points(d, i, i + 1)
        except EmptyMerge:
            continue
        assert validate_datum(out).ok
        assert out.group.order <= d.group.order
        assert d.group.order % out.group.order == 0


def test_quotient_by_rotations():
    d = make_datum(D3, [B, B, A, A2])
    N = subgroup_generated(D3, [A])
    q, rep = quotient_datum(d, N)
    assert q.group == cyclic(2)
    assert q.labels == ("t1", "t2") and rep.dropped == ("t3", "t4")
    assert [b.order for b in q.branches] == [2, 2]
    with pytest.raises(NotNormal):
        quotient_datum(d, subgroup_generated(D3, [B]))


def test_quotient_invariants_random():
    for d in random_suite(120, seed=9):
        G = d.group
        for g in G.elements():
            N = subgroup_generated(G, [g])
            if not N.is_normal:
                continue
            q, rep = quotient_datum(d, N)
            assert riemann_hurwitz_genus(q) <= riemann_hurwitz_genus(d)
            assert set(q.labels) <= set(d.labels)
            old = {b.label: b.order for b in d.branches}
            for b in q.branches:
                assert old[b.label] % b.order == 0
                H = subgroup_generated(G, [d.branches[d.branch_index(b.label)].monodromy]).members
                assert b.order == len(H) // len(H & N.members)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_valid_datum_has_integral_genus(seed):
    rng = random.Random(seed)
    G = rng.choice([dihedral(4), dihedral(5), cyclic(6), cyclic(3)])
    d = random_datum(G, rng)
    if d is not None:
        assert riemann_hurwitz_genus(d) == oracle_genus(d)
