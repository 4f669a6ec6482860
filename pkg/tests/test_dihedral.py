import pytest

from coverforge.characters import dihedral_h_range
from coverforge.datum import make_datum, validate_datum
from coverforge.dihedral import (DihedralBranchProfile, classify_branch_inertia,
                                 dihedral_multiplicity_mu_h, infinity_ramification_check,
                                 mu_h_by_count, witness_datum)
from coverforge.errors import AssumptionViolated, HOutOfRange, InvalidDatum, NotDihedral
from coverforge.groups import cyclic, dihedral
from coverforge.localsystem import chevalley_weil_multiplicity
from suite import random_suite

D3 = dihedral(3)
A, A2, B = 1, 2, 3


def rotation_multisets(n, budget):
    """Every sorted tuple of exponents in 1..n-1 with sum <= budget, with a^(sum) alongside."""
    def walk(prefix, lo, total):
        yield tuple(prefix), total
        for dd in range(lo, n):
            if total + dd > budget:
                break
            prefix.append(dd)
            yield from walk(prefix, dd, total + dd)
            prefix.pop()
    yield from walk([], 1, 0)


def exhaustive_infinity_mismatches(n_max=8, l_max=6):
    """
    Compare the predicate with the witness product (a^k b)^l a^(d_1) ... a^(d_s)
    multiplied out in the Cayley table of D_n, over every profile with l >= 1.
    Returns (number checked, list of mismatching profiles).
    """
    checked, bad = 0, []
    for n in range(2, n_max + 1):
        G = dihedral(n)
        t = G.table
        rot = {}
        for ds, _ in rotation_multisets(n, 4 * n):
            x = G.identity
            for dd in ds:
                x = t[x][dd]
            rot[ds] = x
        for l in range(1, l_max + 1):
            for k in range(n):
                refl = G.identity
                for _ in range(l):
                    refl = t[refl][k + n]
                for ds, x in rot.items():
                    p = DihedralBranchProfile(n, l, k, ds)
                    if infinity_ramification_check(p) != (t[refl][x] == G.identity):
                        bad.append(p)
                    checked += 1
    return checked, bad


def test_infinity_check_exhaustive():
    checked, bad = exhaustive_infinity_mismatches()
    assert bad == []
    assert checked == 1161360


def test_infinity_check_without_reflections():
    # no reflection: the witness lies in <a> and is never a datum for D_n
    p = DihedralBranchProfile.from_exponents(4, 0, 0, [1, 3])
    assert infinity_ramification_check(p) is False
    assert "surjective" in validate_datum(witness_datum(p)).codes()


def test_mixed_representatives_rejected():
    G = dihedral(4)
    d = make_datum(G, [4, 5, 5, 4])  # b, a*b, a*b, b
    info = classify_branch_inertia(d)
    assert info.profile.reflection_exponent is None
    assert info.profile.parity_class == "mixed"
    with pytest.raises(AssumptionViolated):
        infinity_ramification_check(info.profile)


def test_classification_tags():
    G = dihedral(4)
    d = make_datum(G, [4, 4, 2, 1, 3])
    tags = [(t.kind, t.exponent) for t in classify_branch_inertia(d).branches]
    assert tags == [("reflection", 0), ("reflection", 0), ("central", 2), ("rotation", 1), ("rotation", 3)]
    with pytest.raises(NotDihedral):
        classify_branch_inertia(make_datum(cyclic(4), [1, 3]))


def test_classification_accepts_invalid_data():
    d = make_datum(D3, [A, A2])
    assert not validate_datum(d).ok
    info = classify_branch_inertia(d)
    assert info.profile.reflection_count == 0
    with pytest.raises(InvalidDatum):
        dihedral_multiplicity_mu_h(d, 1)


def test_profile_round_trip_is_branchwise_conjugate():
    for d in random_suite(220):
        if d.group.kind != "dihedral":
            continue
        info = classify_branch_inertia(d)
        p = info.profile
        if p.reflection_count and p.reflection_exponent is None:
            continue
        G = d.group
        w = witness_datum(p)
        def classes(datum):
            return sorted(tuple(sorted({G.conj(s, b.monodromy) for s in G.elements()}))
                          for b in datum.branches)
        assert classes(d) == classes(w)


def test_worked_example_mu_h():
    d = make_datum(D3, [B, B, A, A2])
    assert dihedral_multiplicity_mu_h(d, 1) == 1
    d6 = make_datum(D3, [B, B, B, B, A, A2])
    assert dihedral_multiplicity_mu_h(d6, 1) == 2
    with pytest.raises(HOutOfRange):
        dihedral_multiplicity_mu_h(d, 2)


def test_mu_h_matches_generic_on_suite():
    checked = 0
    for d in random_suite(220):
        if d.group.kind != "dihedral":
            continue
        for h in dihedral_h_range(d.group.params):
            mu = dihedral_multiplicity_mu_h(d, h)
            assert mu == chevalley_weil_multiplicity(d, f"rho{h}")
            assert mu == mu_h_by_count(d, h)
            checked += 1
    assert checked > 100
