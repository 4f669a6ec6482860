"""
Braid-group action on monodromy tuples over P^1, orbit enumeration, and
spectral checks on Dehn-twist matrices.

The elementary move sigma_l (1-based) is

    (..., g_l, g_{l+1}, ...) -> (..., g_{l+1}, g_{l+1}^-1 g_l g_{l+1}, ...)

and its inverse (..., g_l g_{l+1} g_l^-1, g_l, ...).
"""

from dataclasses import dataclass, field

from . import matrix as mx
from .characters import character_table
from .datum import make_datum, riemann_hurwitz_genus, validate_datum
from .errors import GroupError, OrbitBudgetExceeded, ShapeViolation
from .groups import conjugacy_classes, subgroup_generated
from .localsystem import chevalley_weil_multiplicity

__all__ = [
    "HurwitzTuple",
    "OrbitCensus",
    "TwistReport",
    "braid_move",
    "apply_word",
    "hurwitz_orbit",
    "fingerprint",
    "dehn_twist_spectrum",
    "infinite_monodromy_predicate",
    "DEFAULT_MAX_R",
    "DEFAULT_MAX_GROUP",
    "DEFAULT_MAX_ORBIT",
]

DEFAULT_MAX_R = 8
DEFAULT_MAX_GROUP = 24
DEFAULT_MAX_ORBIT = 200_000


@dataclass(frozen=True)
class HurwitzTuple:
    group: object
    entries: tuple

    def __post_init__(self):
        for g in self.entries:
            self.group.check(g)

    @property
    def r(self):
        return len(self.entries)

    def product(self):
        return self.group.prod(self.entries)

    def generated(self):
        return subgroup_generated(self.group, self.entries).members

    def labels(self):
        return tuple(self.group.label(g) for g in self.entries)


def braid_move(t, l, direction=1):
    """Apply sigma_l (direction +1) or its inverse (direction -1); l is 1-based."""
    if not 1 <= l <= t.r - 1:
        raise IndexError(f"braid index {l} out of range for r = {t.r}")
    G = t.group
    e = list(t.entries)
    x, y = e[l - 1], e[l]
    if direction == 1:
        e[l - 1], e[l] = y, G.mul(G.mul(G.inv(y), x), y)
    elif direction == -1:
        e[l - 1], e[l] = G.mul(G.mul(x, y), G.inv(x)), x
    else:
        raise ValueError("direction must be +1 or -1")
    return HurwitzTuple(G, tuple(e))


def apply_word(t, word):
    """Apply signed generators left to right, e.g. [1, 2, -1]."""
    for s in word:
        t = braid_move(t, abs(s), 1 if s > 0 else -1)
    return t


def _class_index(G):
    out = [None] * G.order
    for j, c in enumerate(conjugacy_classes(G)):
        for g in c.members:
            out[g] = j
    return out


def fingerprint(t, table=None):
    """
    Braid-invariant data: sorted class multiset, and, for product-1 tuples
    that generate the group, the genus and the Chevalley-Weil vector.
    """
    G = t.group
    cls = _class_index(G)
    classes = tuple(sorted(cls[g] for g in t.entries))
    genus = mu = None
    nontrivial = [g for g in t.entries if g != G.identity]
    d = make_datum(G, nontrivial)
    if validate_datum(d).ok:
        T = table or character_table(G)
        genus = riemann_hurwitz_genus(d)
        mu = tuple(chevalley_weil_multiplicity(d, i, T) for i in range(len(T)))
    return (classes, genus, mu)


@dataclass
class OrbitCensus:
    size: int
    fingerprint: tuple
    representative: tuple  # lexicographically least member
    members: list = field(repr=False)
    complete: bool = True

    def labels(self, group):
        return [tuple(group.label(g) for g in m) for m in self.members]


def hurwitz_orbit(t, max_orbit=DEFAULT_MAX_ORBIT, max_r=DEFAULT_MAX_R, max_group=DEFAULT_MAX_GROUP):
    """
    Breadth-first closure of t under sigma_l^{+-1}.  Members are sorted
    lexicographically by element index; the fingerprint is asserted constant
    over the orbit.
    """
    G = t.group
    if t.r > max_r:
        raise GroupError(f"tuple length {t.r} exceeds the bound {max_r}")
    if G.order > max_group:
        raise GroupError(f"group order {G.order} exceeds the bound {max_group}")
    start = t.entries
    seen = {start}
    frontier = [start]
    complete = True
    while frontier:
        nxt = []
        for e in frontier:
            cur = HurwitzTuple(G, e)
            for l in range(1, t.r):
                for s in (1, -1):
                    f = braid_move(cur, l, s).entries
                    if f not in seen:
                        seen.add(f)
                        nxt.append(f)
            if len(seen) > max_orbit:
                complete = False
                break
        if not complete:
            break
        frontier = nxt
    members = sorted(seen)
    fp = fingerprint(t)
    census = OrbitCensus(len(members), fp, members[0], members, complete)
    if not complete:
        raise OrbitBudgetExceeded(f"orbit exceeds {max_orbit} tuples", census)
    cls = _class_index(G)
    for m in members:
        assert tuple(sorted(cls[g] for g in m)) == fp[0]
        assert G.prod(m) == G.prod(start)
    return census


# -- Dehn twists ---------------------------------------------------------------

@dataclass(frozen=True)
class TwistReport:
    matrix: tuple
    index: int
    diagonal_value: object
    det: object
    eigenvalues: tuple
    diagonalizable: bool

    @property
    def is_identity(self):
        return mx.is_identity([list(r) for r in self.matrix])

    @property
    def is_unipotent(self):
        return all(v == 1 for v in self.eigenvalues)


def dehn_twist_spectrum(M, l):
    """
    Spectral data of a twist matrix that equals the identity outside column
    l (1-based), where only rows l-1, l, l+1 may be nonzero.
    """
    M = mx.matrix(M)
    n = len(M)
    if not 1 <= l <= n or any(len(row) != n for row in M):
        raise ShapeViolation("twist matrix must be square and l in range")
    c = l - 1
    for i in range(n):
        for j in range(n):
            if j == c:
                if abs(i - c) > 1 and M[i][j]:
                    raise ShapeViolation(f"entry ({i + 1},{j + 1}) must vanish")
            elif M[i][j] != (1 if i == j else 0):
                raise ShapeViolation(f"entry ({i + 1},{j + 1}) must be {1 if i == j else 0}")
    a = M[c][c]
    det = mx.det(M)
    if det != a:
        raise ShapeViolation(f"determinant {det} differs from a_ll = {a}")
    eig = tuple([mx.ONE] * (n - 1) + [a])
    # diagonalizable iff the product over distinct eigenvalues annihilates M
    I = mx.identity(n)
    P = mx.matadd(M, mx.scale(-1, I))
    if a != 1:
        P = mx.matmul(P, mx.matadd(M, mx.scale(-a, I)))
    return TwistReport(tuple(tuple(r) for r in M), l, a, det, eig, mx.is_zero(P))


def infinite_monodromy_predicate(hodge_type, twist):
    """
    True when the eigenspace has type (1, 1) and the twist is a non-identity
    unipotent matrix of determinant 1.  False means inconclusive.
    """
    return (tuple(hodge_type) == (1, 1) and twist.det == 1
            and twist.is_unipotent and not twist.diagonalizable)
