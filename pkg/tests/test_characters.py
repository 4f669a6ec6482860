import pytest

from coverforge import matrix as mx
from coverforge.characters import (character_table, conjugate_character, direct_sum,
                                   eigenvalue_counts, irreducible_matrices, isotypic_projectors,
                                   module_multiplicities, regular_representation)
from coverforge.cyclotomic import Cyclotomic, root_of_unity
from coverforge.errors import NonIntegerMultiplicity, UnsupportedGroupKind
from coverforge.groups import cyclic, dihedral
from suite import PERM_GROUPS, S4


CATALOG = [cyclic(n) for n in range(1, 13)] + [dihedral(n) for n in range(2, 13)]


def _as_multiset(T):
    """Rows as sets of (class member set, value) pairs: invariant under row/column permutation."""
    out = []
    for row in T.values:
        out.append(frozenset((c.members, v) for c, v in zip(T.classes, row)))
    return sorted(out, key=lambda r: sorted((sorted(m), str(v)) for m, v in r))


@pytest.mark.parametrize("G", CATALOG + list(PERM_GROUPS.values()), ids=lambda G: G.name())
def test_table_invariants(G):
    T = character_table(G)
    T.check()
    assert T.is_trivial(0)


@pytest.mark.parametrize("G", [g for g in CATALOG if g.order > 1], ids=lambda G: G.name())
def test_dixon_matches_closed_form(G):
    closed = character_table(G, "closed")
    generic = character_table(G, "dixon")
    assert generic.method == "dixon"
    assert _as_multiset(closed) == _as_multiset(generic)


def test_cyclic_two_and_values():
    T = character_table(cyclic(2))
    assert [[int(v) for v in row] for row in T.values] == [[1, 1], [1, -1]]
    T5 = character_table(cyclic(5))
    assert T5.chi("chi2", 3) == root_of_unity(5, 6)
    assert conjugate_character(T5, "chi1") == "chi4"


def test_dihedral_labels_and_h_range():
    assert character_table(dihedral(5)).labels == ("triv", "sign", "rho1", "rho2")
    assert character_table(dihedral(6)).labels == ("triv", "sign", "chi_a", "chi_ab", "rho1", "rho2")
    T = character_table(dihedral(7))
    n = 7
    for h in (1, 2, 3):
        for k in range(n):
            assert T.chi(f"rho{h}", k) == root_of_unity(n, h * k) + root_of_unity(n, -h * k)
            assert T.chi(f"rho{h}", k + n) == 0


@pytest.mark.parametrize("G", CATALOG, ids=lambda G: G.name())
def test_explicit_matrices_trace_to_table(G):
    T = character_table(G)
    for lab in T.labels:
        R = irreducible_matrices(G, lab, T)
        for g in G.elements():
            assert mx.trace(R(g)) == T.chi(lab, g)


def test_explicit_matrices_catalog_only():
    with pytest.raises(UnsupportedGroupKind):
        irreducible_matrices(S4, 0)


@pytest.mark.parametrize("G", [cyclic(2), cyclic(5), dihedral(3), dihedral(4), PERM_GROUPS["A4"]],
                         ids=lambda G: G.name())
def test_regular_representation_projectors(G):
    T = character_table(G)
    R = regular_representation(G)
    out = isotypic_projectors(R, T)
    ranks = {lab: rk for lab, _, rk in out}
    assert ranks == {lab: d * d for lab, d in zip(T.labels, T.degrees)}
    assert sum(ranks.values()) == G.order
    if G == cyclic(2):
        P = dict((lab, P) for lab, P, _ in out)["chi0"]
        half = Cyclotomic.from_rational(1) / 2
        assert mx.equal(P, [[half, half], [half, half]])


def test_module_multiplicities():
    G = dihedral(4)
    T = character_table(G)
    reg = [G.order if c.representative == 0 else 0 for c in T.classes]
    assert module_multiplicities(reg, T) == dict(zip(T.labels, T.degrees))
    V = direct_sum(irreducible_matrices(G, "rho1", T), irreducible_matrices(G, "sign", T))
    chi = [V.character()[c.representative] for c in T.classes]
    assert module_multiplicities(chi, T) == {"triv": 0, "sign": 1, "chi_a": 0, "chi_ab": 0, "rho1": 1}
    with pytest.raises(NonIntegerMultiplicity):
        module_multiplicities([1] + [0] * (len(T.classes) - 1), T)


@pytest.mark.parametrize("G", CATALOG + list(PERM_GROUPS.values()), ids=lambda G: G.name())
def test_eigenvalue_counts_reconstruct_character(G):
    T = character_table(G)
    for i in range(len(T)):
        for g in G.elements():
            counts = eigenvalue_counts(T, i, g)
            e = len(counts)
            x = G.identity
            for k in range(e):
                s = sum((n * root_of_unity(e, a * k) for a, n in enumerate(counts) if n),
                        Cyclotomic.from_rational(0))
                assert s == T.chi(i, x)
                x = G.mul(x, g)


def test_eigenvalue_counts_dihedral_reflection():
    T = character_table(dihedral(3))
    assert eigenvalue_counts(T, "rho1", 3) == (1, 1)
    assert eigenvalue_counts(T, "rho1", 1) == (0, 1, 1)
    assert eigenvalue_counts(T, "sign", 3) == (0, 1)
