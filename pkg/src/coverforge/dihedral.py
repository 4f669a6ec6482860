"""
Dihedral covers: inertia classification, the criterion for a cover of P^1
to be unramified over infinity, and the closed-form multiplicity of the
2-dimensional irreducibles rho_h.

Elements of dihedral(n) are a^k b^e at index k + e*n.
"""

from dataclasses import dataclass
from fractions import Fraction

from .characters import character_table, dihedral_h_range
from .cyclotomic import fractional_part
from .datum import make_datum, require_valid
from .errors import AssumptionViolated, HOutOfRange, MismatchWithGenericCW, NotDihedral
from .groups import dihedral, subgroup_generated
from .localsystem import chevalley_weil_multiplicity

__all__ = [
    "BranchClass",
    "DihedralBranchProfile",
    "InertiaClassification",
    "classify_branch_inertia",
    "infinity_ramification_check",
    "witness_datum",
    "dihedral_multiplicity_mu_h",
    "mu_h_by_count",
]


@dataclass(frozen=True)
class BranchClass:
    label: str
    kind: str  # "rotation" | "reflection" | "central"
    exponent: int


@dataclass(frozen=True)
class DihedralBranchProfile:
    n: int
    reflection_count: int
    reflection_exponent: object  # common k of a^k b, or None if mixed/absent
    rotation_exponents: tuple
    parity_class: object = None  # "even" | "odd" | "mixed" | None

    @classmethod
    def from_exponents(cls, n, l, k, rotations):
        """Rotation exponents are reduced mod n; zeros (trivial monodromy) are dropped."""
        ds = tuple(sorted(d % n for d in rotations if d % n))
        parity = None
        if n % 2 == 0 and l:
            parity = "odd" if k % 2 else "even"
        return cls(n, l, k % n if l else None, ds, parity)

    @property
    def r(self):
        return self.reflection_count + len(self.rotation_exponents)


@dataclass(frozen=True)
class InertiaClassification:
    profile: DihedralBranchProfile
    branches: tuple
    reflection_exponents: tuple
    single_subgroup_checked: bool
    parity_checked: bool


def classify_branch_inertia(d):
    """
    Tag every branch as rotation, reflection or central involution.  Works on
    invalid data too (e.g. all-rotation tuples, which cannot be surjective).
    """
    G = d.group
    if G.kind != "dihedral":
        raise NotDihedral(f"expected a dihedral group, got {G.kind}")
    for b in d.branches:
        G.check(b.monodromy)
    n = G.params
    tags, refl, rots = [], [], []
    for b in d.branches:
        k, e = b.monodromy % n, b.monodromy // n
        if e:
            tags.append(BranchClass(b.label, "reflection", k))
            refl.append(k)
        else:
            kind = "central" if n % 2 == 0 and k == n // 2 else "rotation"
            tags.append(BranchClass(b.label, kind, k))
            rots.append(k)
    # inertia groups away from order 2 are constant along the fiber
    single = True
    for b in d.branches:
        if b.order != 2:
            subs = {subgroup_generated(G, [G.conj(s, b.monodromy)]).members for s in G.elements()}
            single &= len(subs) == 1
    if not single:
        raise AssertionError("inertia orbit of an order != 2 branch is not a single subgroup")
    parity_ok = True
    if n % 2 == 0:
        for b, tag in zip(d.branches, tags):
            if tag.kind != "reflection":
                continue
            ks = {G.conj(s, b.monodromy) % n for s in G.elements()}
            parity_ok &= len({x % 2 for x in ks}) == 1
    if not parity_ok:
        raise AssertionError("reflection conjugacy class mixes parities")
    common = refl[0] if refl and len(set(refl)) == 1 else None
    if n % 2 == 0 and refl:
        pars = {k % 2 for k in refl}
        parity = ("odd" if 1 in pars else "even") if len(pars) == 1 else "mixed"
    else:
        parity = None
    profile = DihedralBranchProfile(n, len(refl), common, tuple(rots), parity)
    return InertiaClassification(profile, tuple(tags), tuple(refl), single, parity_ok)


def witness_datum(profile):
    """(a^k b) repeated l times, then a^{d_1}, ..., a^{d_s} over dihedral(n)."""
    n = profile.n
    G = dihedral(n)
    k = profile.reflection_exponent or 0
    elts = [k + n] * profile.reflection_count + list(profile.rotation_exponents)
    return make_datum(G, elts)


def infinity_ramification_check(profile):
    """
    For a profile with a single reflection representative: True iff the
    reflection count l is even and >= 2 and n divides the rotation exponents'
    sum.
    """
    if profile.reflection_count and profile.reflection_exponent is None:
        raise AssumptionViolated("reflection branches use different representatives a^k b; "
                                 "check the product directly with validate_datum")
    l = profile.reflection_count
    return l >= 2 and l % 2 == 0 and sum(profile.rotation_exponents) % profile.n == 0


def _check_h(n, h):
    if h not in dihedral_h_range(n):
        raise HOutOfRange(f"h = {h} is outside the range of 2-dimensional irreducibles of D{n}")


def dihedral_multiplicity_mu_h(d, h):
    """
    mu_h = 2(g' - 1) + l/2 + sum_i (<-h k_i/n> + <h k_i/n>), summed over the
    rotation branches a^{k_i}; cross-checked against the generic formula.
    """
    require_valid(d)
    info = classify_branch_inertia(d)
    n = info.profile.n
    _check_h(n, h)
    l = info.profile.reflection_count
    mu = Fraction(2 * (d.base_genus - 1)) + Fraction(l, 2)
    for k in info.profile.rotation_exponents:
        x = Fraction(h * k, n)
        mu += fractional_part(-x) + fractional_part(x)
    assert mu.denominator == 1 and mu >= 0, f"mu_h = {mu}"
    mu = int(mu)
    generic = chevalley_weil_multiplicity(d, f"rho{h}", character_table(d.group))
    if generic != mu:
        raise MismatchWithGenericCW(f"closed form gives {mu}, generic formula gives {generic}")
    return mu


def mu_h_by_count(d, h):
    """2(g' - 1) + l/2 + u with u = #{rotation branches with n not dividing h*k_i}."""
    info = classify_branch_inertia(d)
    n = info.profile.n
    _check_h(n, h)
    u = sum(1 for k in info.profile.rotation_exponents if (h * k) % n)
    val = Fraction(2 * (d.base_genus - 1)) + Fraction(info.profile.reflection_count, 2) + u
    assert val.denominator == 1
    return int(val)
