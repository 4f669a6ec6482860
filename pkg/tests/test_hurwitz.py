import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from coverforge import matrix as mx
from coverforge.cyclotomic import Cyclotomic, root_of_unity
from coverforge.errors import OrbitBudgetExceeded, ShapeViolation
from coverforge.groups import conjugacy_classes, cyclic, dihedral, subgroup_generated
from coverforge.hurwitz import (HurwitzTuple, apply_word, braid_move, dehn_twist_spectrum,
                                hurwitz_orbit, infinite_monodromy_predicate)

D3 = dihedral(3)


def braid_relation_failures(G, max_len=5):
    """Count tuples where sigma_l sigma_{l+1} sigma_l != sigma_{l+1} sigma_l sigma_{l+1} or far moves fail to commute."""
    bad = 0
    for r in range(2, max_len + 1):
        for entries in itertools.product(G.elements(), repeat=r):
            t = HurwitzTuple(G, entries)
            for l in range(1, r - 1):
                if apply_word(t, [l, l + 1, l]) != apply_word(t, [l + 1, l, l + 1]):
                    bad += 1
            for l in range(1, r):
                for m in range(l + 2, r):
                    if apply_word(t, [l, m]) != apply_word(t, [m, l]):
                        bad += 1
                if apply_word(t, [l, -l]) != t or apply_word(t, [-l, l]) != t:
                    bad += 1
    return bad


@pytest.mark.parametrize("G", [D3, cyclic(4)], ids=lambda G: G.name())
def test_braid_relations_exhaustive(G):
    assert braid_relation_failures(G) == 0


def test_single_move():
    t = HurwitzTuple(D3, (3, 4, 1))  # (b, a*b, a)
    s = braid_move(t, 1)
    assert s.labels() == ("a*b", "a^2*b", "a")
    assert braid_move(s, 1, -1) == t
    with pytest.raises(IndexError):
        braid_move(t, 3)


def test_moves_preserve_product_and_span():
    G = dihedral(4)
    for entries in itertools.product(G.elements(), repeat=3):
        t = HurwitzTuple(G, entries)
        span = subgroup_generated(G, entries).members
        for l in (1, 2):
            for s in (1, -1):
                u = braid_move(t, l, s)
                assert u.product() == t.product()
                assert subgroup_generated(G, u.entries).members == span


def brute_force_class_type(G, template):
    """All product-1 generating tuples whose class multiset equals that of the template."""
    cls = {g: j for j, c in enumerate(conjugacy_classes(G)) for g in c.members}
    want = sorted(cls[g] for g in template)
    out = set()
    for entries in itertools.product(G.elements(), repeat=len(template)):
        if sorted(cls[g] for g in entries) != want:
            continue
        if G.prod(entries) != G.identity:
            continue
        if len(subgroup_generated(G, entries)) != G.order:
            continue
        out.add(entries)
    return out


def test_d3_orbit_matches_brute_force():
    t = HurwitzTuple(D3, (3, 4, 1))
    census = hurwitz_orbit(t)
    assert set(census.members) == brute_force_class_type(D3, t.entries)
    assert census.size == 18
    assert census.representative == min(census.members)
    assert census.fingerprint[1] == 0


def test_orbit_closed_and_reachable():
    t = HurwitzTuple(dihedral(4), (4, 4, 5, 5))
    census = hurwitz_orbit(t)
    members = set(census.members)
    for m in members:
        u = HurwitzTuple(t.group, m)
        for l in range(1, u.r):
            for s in (1, -1):
                assert braid_move(u, l, s).entries in members
    assert t.entries in members


def test_abelian_equal_entries_orbit_is_single():
    census = hurwitz_orbit(HurwitzTuple(cyclic(2), (1, 1, 1, 1)))
    assert census.size == 1


def test_orbit_budget():
    t = HurwitzTuple(D3, (3, 3, 3, 3, 1, 2))
    with pytest.raises(OrbitBudgetExceeded) as info:
        hurwitz_orbit(t, max_orbit=10)
    assert info.value.census.complete is False


def _twist(column, l, n):
    M = mx.identity(n)
    for i, v in column.items():
        M[i][l - 1] = Cyclotomic.from_rational(v) if not isinstance(v, Cyclotomic) else v
    return M


def test_twist_unipotent_jordan_block():
    rep = dehn_twist_spectrum(_twist({0: 1, 1: 1, 2: -2}, 2, 3), 2)
    assert rep.det == 1 and rep.is_unipotent and not rep.diagonalizable
    assert infinite_monodromy_predicate((1, 1), rep)
    assert not infinite_monodromy_predicate((2, 0), rep)
    ident = dehn_twist_spectrum(mx.identity(3), 2)
    assert ident.is_identity and ident.diagonalizable
    assert not infinite_monodromy_predicate((1, 1), ident)


def test_twist_finite_order_is_inconclusive():
    rep = dehn_twist_spectrum(_twist({1: root_of_unity(3), 0: 1}, 2, 3), 2)
    assert rep.det == root_of_unity(3) and rep.diagonalizable
    assert not infinite_monodromy_predicate((1, 1), rep)


def test_twist_shape_violations():
    M = _twist({0: 1}, 2, 4)
    M[3][1] = Cyclotomic.from_rational(5)
    with pytest.raises(ShapeViolation):
        dehn_twist_spectrum(M, 2)
    N = mx.identity(3)
    N[0][2] = Cyclotomic.from_rational(1)
    with pytest.raises(ShapeViolation):
        dehn_twist_spectrum(N, 2)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.data())
def test_twist_det_equals_diagonal(n, data):
    l = data.draw(st.integers(1, n))
    col = {}
    for i in (l - 2, l - 1, l):
        if 0 <= i < n:
            col[i] = data.draw(st.fractions(min_value=-4, max_value=4, max_denominator=3))
    M = _twist(col, l, n)
    rep = dehn_twist_spectrum(M, l)
    assert rep.det == rep.diagonal_value == Fraction(col[l - 1])
