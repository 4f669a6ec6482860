"""
Branch data of Galois covers: (orders, group, generator images).

A datum over a base curve of genus g' records the images of the handle
generators A_1, B_1, ..., A_g', B_g' and one monodromy element per branch
point.  The long relation is

    h_1 h_2 ... h_r [A_1, B_1] ... [A_g', B_g'] = 1,   [A, B] = A B A^-1 B^-1.
"""

from dataclasses import dataclass, field

from .errors import (EmptyMerge, GroupError, InvalidDatum, NegativeGenus, NonAdjacentMerge,
                     NonIntegralGenus, NotNormal)
from .groups import Subgroup, quotient_group, subgroup_as_group, subgroup_generated

__all__ = [
    "Branch",
    "BranchDatum",
    "Issue",
    "ValidationReport",
    "FiberReport",
    "DescentReport",
    "validate_datum",
    "require_valid",
    "riemann_hurwitz_genus",
    "fiber_structure",
    "collide_points",
    "quotient_datum",
    "make_datum",
]


@dataclass(frozen=True)
class Branch:
    label: str
    order: int
    monodromy: int


@dataclass(frozen=True)
class BranchDatum:
    group: object
    base_genus: int
    handles: tuple
    branches: tuple

    @property
    def r(self):
        return len(self.branches)

    @property
    def labels(self):
        return tuple(b.label for b in self.branches)

    @property
    def monodromies(self):
        return tuple(b.monodromy for b in self.branches)

    def branch_index(self, key):
        if isinstance(key, int):
            if not 0 <= key < len(self.branches):
                raise IndexError(f"branch index {key} out of range (r = {len(self.branches)})")
            return key
        try:
            return self.labels.index(key)
        except ValueError:
            raise IndexError(f"no branch labelled {key!r}") from None

    def long_relation(self):
        G = self.group
        out = G.prod(self.monodromies)
        hs = self.handles
        for j in range(0, len(hs) - 1, 2):
            out = G.mul(out, G.commutator(hs[j], hs[j + 1]))
        return out

    def describe(self):
        G = self.group
        parts = [f"({G.label(b.monodromy)},{b.order})" for b in self.branches]
        return f"{G.name()} g'={self.base_genus} " + " ".join(parts)


def make_datum(G, branches, base_genus=0, handles=(), labels=None):
    """
    Convenience constructor: ``branches`` is a list of elements (indices or
    labels); orders default to the element orders.
    """
    out = []
    for i, x in enumerate(branches):
        if isinstance(x, tuple):
            x, m = x
        else:
            m = None
        g = G.index_of(x) if isinstance(x, str) else x
        out.append(Branch(labels[i] if labels else f"t{i + 1}",
                          G.order_of(g) if m is None else m, g))
    hs = tuple(G.index_of(h) if isinstance(h, str) else h for h in handles)
    return BranchDatum(G, base_genus, hs, tuple(out))


@dataclass(frozen=True)
class Issue:
    code: str
    index: object
    message: str


@dataclass(frozen=True)
class ValidationReport:
    issues: tuple = ()

    @property
    def ok(self):
        return not self.issues

    def __bool__(self):
        return self.ok

    def codes(self):
        return [i.code for i in self.issues]


def validate_datum(d):
    """Check every datum invariant; failures are collected, never raised."""
    G = d.group
    issues = []
    n = G.order
    if d.base_genus < 0:
        issues.append(Issue("base_genus", None, f"base genus {d.base_genus} is negative"))
    if len(d.handles) != 2 * max(d.base_genus, 0):
        issues.append(Issue("handles", None,
                            f"expected {2 * d.base_genus} handle images, got {len(d.handles)}"))
    in_range = True
    for j, h in enumerate(d.handles):
        if not isinstance(h, int) or not 0 <= h < n:
            issues.append(Issue("element", f"handle {j}", f"handle image {h!r} is not in the group"))
            in_range = False
    seen = set()
    for i, b in enumerate(d.branches):
        if b.label in seen:
            issues.append(Issue("label", i, f"duplicate branch label {b.label!r}"))
        seen.add(b.label)
        if not isinstance(b.monodromy, int) or not 0 <= b.monodromy < n:
            issues.append(Issue("element", i, f"monodromy {b.monodromy!r} is not in the group"))
            in_range = False
            continue
        if b.order < 2:
            issues.append(Issue("order", i, f"branch {b.label}: order {b.order} < 2"))
        actual = G.order_of(b.monodromy)
        if actual != b.order:
            issues.append(Issue("order", i,
                                f"branch {b.label}: element {G.label(b.monodromy)} has order {actual}, not {b.order}"))
    if in_range and len(d.handles) % 2 == 0:
        rel = d.long_relation()
        if rel != G.identity:
            issues.append(Issue("relation", None, f"long relation evaluates to {G.label(rel)}, not 1"))
        span = subgroup_generated(G, list(d.handles) + list(d.monodromies))
        if len(span) != n:
            issues.append(Issue("surjective", None,
                                f"images generate a subgroup of order {len(span)}, not {n}"))
    return ValidationReport(tuple(issues))


def require_valid(d):
    report = validate_datum(d)
    if not report.ok:
        raise InvalidDatum("; ".join(i.message for i in report.issues), report)
    return d


def riemann_hurwitz_genus(d):
    """g_C from 2g_C - 2 = |G|(2g' - 2) + sum_i (|G|/m_i)(m_i - 1)."""
    require_valid(d)
    n = d.group.order
    rhs = n * (2 * d.base_genus - 2)
    for b in d.branches:
        rhs += (n // b.order) * (b.order - 1)
    if rhs % 2:
        raise NonIntegralGenus(f"2g - 2 = {rhs} is odd")
    g = rhs // 2 + 1
    if g < 0:
        raise NegativeGenus(f"genus {g} < 0")
    return g


@dataclass(frozen=True)
class FiberReport:
    label: str
    fiber_size: int
    inertia_generators: tuple
    inertia_subgroups: tuple
    cycle_type: tuple

    @property
    def ramification_contribution(self):
        # sum over the fiber of (e - 1)
        return self.fiber_size * (self.cycle_type[0] - 1) if self.cycle_type else 0


def fiber_structure(d, i):
    require_valid(d)
    G = d.group
    b = d.branches[d.branch_index(i)]
    gens = sorted({G.conj(s, b.monodromy) for s in G.elements()})
    subs = sorted({subgroup_generated(G, [h]).members for h in gens}, key=sorted)
    size = G.order // b.order
    assert all(G.order_of(h) == b.order for h in gens)
    return FiberReport(b.label, size, tuple(gens), tuple(subs), (b.order,) * size)


def _restrict(d, G, H, handles, branches):
    """Rewrite data living in subgroup H of G as a datum over H itself."""
    if len(H) == G.order:
        return BranchDatum(G, d.base_genus, tuple(handles), tuple(branches))
    K, embed = subgroup_as_group(G, H)
    back = {g: k for k, g in enumerate(embed)}
    return BranchDatum(K, d.base_genus, tuple(back[h] for h in handles),
                       tuple(Branch(b.label, b.order, back[b.monodromy]) for b in branches))


def collide_points(d, i, j):
    """
    Merge adjacent branches i and i+1 into one with monodromy h_i h_j.
    A trivial product drops the branch; the group shrinks to the subgroup
    generated by the remaining images.
    """
    require_valid(d)
    i, j = d.branch_index(i), d.branch_index(j)
    if j != i + 1:
        raise NonAdjacentMerge(f"branches {i} and {j} are not adjacent (need j = i + 1)")
    G = d.group
    bi, bj = d.branches[i], d.branches[j]
    h = G.mul(bi.monodromy, bj.monodromy)
    merged = [] if h == G.identity else [Branch(f"{bi.label}+{bj.label}", G.order_of(h), h)]
    branches = list(d.branches[:i]) + merged + list(d.branches[j + 1:])
    if not branches and d.base_genus == 0 and G.order > 1:
        raise EmptyMerge("merge leaves no branch points over P^1")
    H = subgroup_generated(G, list(d.handles) + [b.monodromy for b in branches])
    out = _restrict(d, G, H, d.handles, branches)
    require_valid(out)
    return out


@dataclass(frozen=True)
class DescentReport:
    quotient_order: int
    projection: tuple
    dropped: tuple
    order_changes: tuple  # (label, old order, new order)
    kept: tuple = field(default=())


def quotient_datum(d, N):
    """
    The datum of C/N -> Y.  Monodromies map to cosets; branches whose image is
    trivial become unramified and are dropped.
    """
    require_valid(d)
    G = d.group
    members = N.members if isinstance(N, Subgroup) else frozenset(N)
    try:
        Q, proj = quotient_group(G, members)
    except NotNormal:
        raise
    except GroupError as exc:
        raise NotNormal(str(exc)) from exc
    dropped, changes, kept, branches = [], [], [], []
    for b in d.branches:
        img = proj[b.monodromy]
        if img == Q.identity:
            dropped.append(b.label)
            continue
        H = subgroup_generated(G, [b.monodromy]).members
        m = len(H) // len(H & members)
        assert Q.order_of(img) == m
        if m != b.order:
            changes.append((b.label, b.order, m))
        kept.append(b.label)
        branches.append(Branch(b.label, m, img))
    out = BranchDatum(Q, d.base_genus, tuple(proj[h] for h in d.handles), tuple(branches))
    require_valid(out)
    assert set(out.labels) <= set(d.labels)
    return out, DescentReport(Q.order, proj, tuple(dropped), tuple(changes), tuple(kept))
