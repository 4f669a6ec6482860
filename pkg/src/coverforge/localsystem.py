"""
Eigensheaf decomposition of the direct image local system f_*(C)|_U.

Each irreducible rho of G contributes a summand of rank d_rho whose local
monodromy around t_k is rho(h_k).  Multiplicities in H^0(C, Omega^1) come
from the Chevalley-Weil formula

    mu_rho = d_rho (g' - 1) + sum_i sum_alpha N_{i,alpha} <-alpha/e_i> + eps,

with N_{i,alpha} the number of eigenvalues of rho(h_i) equal to
zeta_{e_i}^alpha, <.> the fractional part and eps = 1 for trivial rho only.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import matrix as mx
from .characters import (character_table, conjugate_character, eigenvalue_counts,
                         irreducible_matrices)
from .cyclotomic import fractional_part
from .datum import require_valid, riemann_hurwitz_genus
from .errors import BaseNotRational, BranchDropped, CoverError, NonIntegralMultiplicity
from .groups import Subgroup

__all__ = [
    "Summand",
    "LocalSystemDecomposition",
    "PathBasisReport",
    "decompose_direct_image",
    "monodromy_blocks",
    "monodromy_matrix",
    "quotient_monodromy",
    "quotient_irreducible_map",
    "chevalley_weil_multiplicity",
    "eigenspace_type",
    "local_system_support",
    "path_basis_report",
    "format_blocks",
]


def _table(d, table):
    T = table or character_table(d.group)
    if T.group is not d.group and T.group != d.group:
        raise CoverError("character table belongs to a different group")
    return T


def chevalley_weil_multiplicity(d, label, table=None):
    require_valid(d)
    T = _table(d, table)
    i = T.index(label)
    mu = Fraction(T.degrees[i] * (d.base_genus - 1))
    for b in d.branches:
        counts = eigenvalue_counts(T, i, b.monodromy)
        e = len(counts)
        for alpha, n in enumerate(counts):
            if n:
                mu += n * fractional_part(Fraction(-alpha, e))
    if T.is_trivial(i):
        mu += 1
    if mu.denominator != 1 or mu < 0:
        raise NonIntegralMultiplicity(f"Chevalley-Weil value {mu} for {T.labels[i]}")
    return int(mu)


def eigenspace_type(d, label, table=None):
    """(h^{1,0}, h^{0,1}) of the rho-isotypic part of H^1(C, C)."""
    T = _table(d, table)
    i = T.index(label)
    dual = conjugate_character(T, i)
    deg = T.degrees[i]
    return (deg * chevalley_weil_multiplicity(d, i, T), deg * chevalley_weil_multiplicity(d, dual, T))


def local_system_support(d, label, table=None):
    """Labels of the branch points where rho(h_i) is not the identity."""
    require_valid(d)
    T = _table(d, table)
    i = T.index(label)
    out = []
    for b in d.branches:
        counts = eigenvalue_counts(T, i, b.monodromy)
        if any(counts[1:]):
            out.append(b.label)
    return tuple(out)


@dataclass(frozen=True)
class Summand:
    label: str
    rank: int
    support: tuple
    mu: int
    hodge_type: tuple
    conjugate: str


@dataclass(frozen=True)
class LocalSystemDecomposition:
    datum: object
    table: object
    summands: tuple
    genus: int

    def __iter__(self):
        return iter(self.summands)

    def __getitem__(self, label):
        for s in self.summands:
            if s.label == label:
                return s
        raise KeyError(label)

    def mu_vector(self):
        return tuple(s.mu for s in self.summands)

    def weighted_mu_sum(self):
        return sum(s.rank * s.mu for s in self.summands)


def decompose_direct_image(d, table=None):
    require_valid(d)
    T = _table(d, table)
    genus = riemann_hurwitz_genus(d)
    mus = [chevalley_weil_multiplicity(d, i, T) for i in range(len(T))]
    summands = []
    for i, lab in enumerate(T.labels):
        dual = T.index(conjugate_character(T, i))
        deg = T.degrees[i]
        summands.append(Summand(lab, deg, local_system_support(d, i, T), mus[i],
                                (deg * mus[i], deg * mus[dual]), T.labels[dual]))
    out = LocalSystemDecomposition(d, T, tuple(summands), genus)
    if sum(s.rank * s.rank for s in summands) != d.group.order:
        raise CoverError("ranks do not reproduce the regular representation")
    if out.weighted_mu_sum() != genus:
        raise CoverError(f"sum d_rho mu_rho = {out.weighted_mu_sum()} but genus is {genus}")
    return out


def monodromy_blocks(d, k, table=None):
    """[(label, rho(h_k))] in table order; catalog groups only."""
    require_valid(d)
    T = _table(d, table)
    h = d.branches[d.branch_index(k)].monodromy
    return [(lab, irreducible_matrices(d.group, lab, T)(h)) for lab in T.labels]


def monodromy_matrix(d, k, table=None):
    return mx.block_diag([B for _, B in monodromy_blocks(d, k, table)])


def handle_matrix(d, j, table=None):
    """Block-diagonal image of the j-th handle generator (A_1, B_1, A_2, ...)."""
    require_valid(d)
    T = _table(d, table)
    h = d.handles[j]
    return mx.block_diag([irreducible_matrices(d.group, lab, T)(h) for lab in T.labels])


def quotient_monodromy(d, N, k, table=None):
    """
    Blocks rho(h_k) for the irreducibles rho with N in their kernel, i.e. the
    monodromy of the quotient cover C/N -> Y around t_k.
    """
    require_valid(d)
    T = _table(d, table)
    members = N.members if isinstance(N, Subgroup) else frozenset(N)
    idx = d.branch_index(k)
    if d.branches[idx].monodromy in members:
        raise BranchDropped(f"branch {d.branches[idx].label} is unramified in the quotient")
    blocks = []
    for lab in T.labels:
        if members <= T.kernel(lab):
            blocks.append((lab, irreducible_matrices(d.group, lab, T)(d.branches[idx].monodromy)))
    return blocks


def quotient_irreducible_map(G, Q, projection, table=None, qtable=None):
    """Irreducibles of Q = G/N matched to the irreducibles of G they pull back to."""
    T = table or character_table(G)
    TQ = qtable or character_table(Q)
    out = {}
    for j, qlab in enumerate(TQ.labels):
        pulled = [TQ.values[j][TQ.class_of[projection[g]]] for g in G.elements()]
        for i, lab in enumerate(T.labels):
            if all(T.values[i][T.class_of[g]] == pulled[g] for g in G.elements()):
                out[qlab] = lab
                break
        else:
            raise CoverError(f"quotient irreducible {qlab} does not pull back")
    return out


@dataclass(frozen=True)
class PathBasisReport:
    label: str
    labels: tuple
    claimed_dim: int
    cw_dim: int

    @property
    def consistent(self):
        return self.claimed_dim == self.cw_dim


def path_basis_report(d, label, table=None):
    """
    Compare the path-basis count d_rho * |Delta_rho| against the
    Chevalley-Weil dimension d_rho (mu_rho + mu_conj) of H^1(C)_rho.
    """
    require_valid(d)
    if d.base_genus != 0:
        raise BaseNotRational("path basis is only defined over P^1")
    T = _table(d, table)
    i = T.index(label)
    deg = T.degrees[i]
    support = local_system_support(d, i, T)
    grid = tuple((a, k) for a in range(1, deg + 1) for k in range(1, len(support) + 1))
    h10, h01 = eigenspace_type(d, i, T)
    return PathBasisReport(T.labels[i], grid, deg * len(support), h10 + h01)


def format_blocks(blocks):
    """Block label header followed by rows of cyclotomic strings."""
    parts = []
    for lab, B in blocks:
        parts.append(f"[{lab}]")
        parts.append(mx.format_matrix(B))
    return "\n".join(parts)
