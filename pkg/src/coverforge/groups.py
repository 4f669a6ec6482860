"""
Finite groups as multiplication tables.

Elements are plain ``int`` indices into ``G.labels``.  Three constructors
are provided: cyclic(n), dihedral(n) and permutation groups given by
generator image lists.  Dihedral elements are the normal forms a^k b^e,
stored at index k + e*n, so rotations come first.
"""

import itertools
import os
from dataclasses import dataclass, field

from .errors import GroupError, NotNormal

__all__ = [
    "FiniteGroup",
    "ConjugacyClass",
    "Subgroup",
    "make_group",
    "cyclic",
    "dihedral",
    "permutation_group",
    "group_product",
    "element_order",
    "conjugacy_classes",
    "subgroup_generated",
    "quotient_group",
    "dihedral_subgroups",
    "identify_catalog",
    "subgroup_as_group",
    "find_isomorphism",
    "DEFAULT_MAX_ORDER",
]

DEFAULT_MAX_ORDER = 10_000


def max_order():
    env = os.environ.get("COVERFORGE_MAX_GROUP")
    return int(env) if env else DEFAULT_MAX_ORDER


class FiniteGroup:
    """
    A finite group with a full Cayley table.

    ``kind`` is one of "cyclic", "dihedral", "permutation"; ``params`` holds
    n for the first two and (degree, generators) for the last.  Identity is
    always index 0.
    """

    __slots__ = ("kind", "params", "labels", "table", "inverses", "_index", "_perms", "_orders")

    def __init__(self, kind, params, labels, table, perms=None):
        self.kind = kind
        self.params = params
        self.labels = tuple(labels)
        self.table = tuple(tuple(row) for row in table)
        n = len(self.labels)
        assert len(self.table) == n and all(len(row) == n for row in self.table)
        assert all(self.table[0][g] == g == self.table[g][0] for g in range(n)), "identity must be index 0"
        inv = [None] * n
        for g in range(n):
            row = self.table[g]
            for h in range(n):
                if row[h] == 0:
                    inv[g] = h
                    break
        assert None not in inv, "table has no inverses"
        self.inverses = tuple(inv)
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._perms = perms
        self._orders = None

    def __len__(self):
        return len(self.labels)

    @property
    def order(self):
        return len(self.labels)

    @property
    def identity(self):
        return 0

    def elements(self):
        return range(len(self.labels))

    def mul(self, g, h):
        return self.table[g][h]

    def inv(self, g):
        return self.inverses[g]

    def prod(self, elts):
        out = 0
        for g in elts:
            out = self.table[out][g]
        return out

    def power(self, g, k):
        if k < 0:
            g, k = self.inverses[g], -k
        out = 0
        for _ in range(k % self.order_of(g)):
            out = self.table[out][g]
        return out

    def conj(self, s, g):
        """s g s^-1"""
        return self.table[self.table[s][g]][self.inverses[s]]

    def commutator(self, g, h):
        """g h g^-1 h^-1"""
        t = self.table
        return t[t[t[g][h]][self.inverses[g]]][self.inverses[h]]

    def order_of(self, g):
        if self._orders is None:
            orders = []
            for x in range(len(self.labels)):
                k, y = 1, x
                while y != 0:
                    y = self.table[y][x]
                    k += 1
                orders.append(k)
            self._orders = tuple(orders)
        return self._orders[g]

    @property
    def exponent(self):
        from math import lcm
        return lcm(*(self.order_of(g) for g in self.elements()))

    def is_abelian(self):
        t = self.table
        n = len(t)
        return all(t[g][h] == t[h][g] for g in range(n) for h in range(g))

    def check(self, g):
        if not isinstance(g, int) or not 0 <= g < len(self.labels):
            raise GroupError(f"element index {g!r} out of range for group of order {len(self.labels)}")
        return g

    def label(self, g):
        return self.labels[self.check(g)]

    def index_of(self, label):
        return self._index[label]

    def permutation(self, g):
        """Image tuple (0-based) of a permutation-group element."""
        if self._perms is None:
            raise GroupError(f"{self.kind} group has no permutation realization")
        return self._perms[g]

    def descriptor(self):
        if self.kind in ("cyclic", "dihedral"):
            return {"kind": self.kind, "n": self.params}
        degree, gens = self.params
        return {"kind": "permutation", "degree": degree,
                "generators": [[i + 1 for i in p] for p in gens]}

    def name(self):
        if self.kind == "cyclic":
            return f"C{self.params}"
        if self.kind == "dihedral":
            return f"D{self.params}"
        return f"Perm(deg={self.params[0]}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (self.kind, self.params, self.labels, self.table) == \
            (other.kind, other.params, other.labels, other.table)

    def __hash__(self):
        return hash((self.kind, self.params, self.labels))

    def __repr__(self):
        return f"<FiniteGroup {self.name()} order={self.order}>"

    def check_associative(self, sample=None, rng=None):
        """Full triple scan, or ``sample`` random triples."""
        t = self.table
        n = len(t)
        if sample is None:
            triples = itertools.product(range(n), repeat=3)
        else:
            import random
            rng = rng or random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(sample))
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a, b, c in triples)


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: frozenset

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Subgroup:
    """A subgroup by its member set.  Equality compares members only."""
    members: frozenset
    is_normal: bool = field(compare=False)
    generators: tuple = field(default=(), compare=False)
    tag: str = field(default=None, compare=False)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g):
        return g in self.members


# -- constructors --------------------------------------------------------------

def _rot_label(k, sym):
    if k == 0:
        return "1"
    return sym if k == 1 else f"{sym}^{k}"


def cyclic(n):
    if n < 1:
        raise GroupError("cyclic(n) requires n >= 1")
    _cap(n)
    labels = [_rot_label(k, "g") for k in range(n)]
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup("cyclic", n, labels, table)


def dihedral(n):
    if n < 2:
        raise GroupError("dihedral(n) requires n >= 2")
    _cap(2 * n)

    def label(k, e):
        if not e:
            return _rot_label(k, "a")
        return "b" if k == 0 else f"{_rot_label(k, 'a')}*b"

    def mul(x, y):
        (k1, e1), (k2, e2) = divmod_(x), divmod_(y)
        k = (k1 - k2) % n if e1 else (k1 + k2) % n
        return k + ((e1 + e2) % 2) * n

    def divmod_(x):
        return x % n, x // n

    labels = [label(x % n, x // n) for x in range(2 * n)]
    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    return FiniteGroup("dihedral", n, labels, table)


def _cap(size, cap=None):
    cap = max_order() if cap is None else cap
    if size > cap:
        raise GroupError(f"group order {size} exceeds element cap {cap}")


def _compose(p, q):
    # (p*q)(i) = p(q(i)): apply q first
    return tuple(p[i] for i in q)


def permutation_group(degree, generators, cap=None):
    """
    Closure of permutations given as 0-based image tuples.  The product
    g*h acts as "apply h, then g" (function composition).
    """
    cap = max_order() if cap is None else cap
    gens = []
    for p in generators:
        p = tuple(p)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise GroupError(f"{p} is not a permutation of {degree} points")
        gens.append(p)
    if not gens:
        raise GroupError("permutation group needs at least one generator")
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = _compose(s, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise GroupError(f"generated group exceeds element cap {cap}")
        frontier = nxt
    perms = sorted(seen)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[_compose(p, q)] for q in perms] for p in perms]
    labels = ["[" + ",".join(str(i + 1) for i in p) + "]" for p in perms]
    return FiniteGroup("permutation", (degree, tuple(gens)), labels, table, perms=tuple(perms))


def make_group(spec):
    """Build a group from a descriptor dict (permutation generators are 1-based image lists)."""
    kind = spec.get("kind")
    if kind == "cyclic":
        return cyclic(int(spec["n"]))
    if kind == "dihedral":
        return dihedral(int(spec["n"]))
    if kind == "permutation":
        degree = int(spec["degree"])
        gens = [tuple(int(i) - 1 for i in g) for g in spec["generators"]]
        return permutation_group(degree, gens)
    raise GroupError(f"unknown group kind {kind!r}")


# -- basic operations ----------------------------------------------------------

def group_product(G, g, h):
    return G.table[G.check(g)][G.check(h)]


def element_order(G, g):
    return G.order_of(G.check(g))


def conjugacy_classes(G):
    """Classes ordered by least member index; representative = least member."""
    seen = set()
    classes = []
    for g in G.elements():
        if g in seen:
            continue
        members = frozenset(G.conj(s, g) for s in G.elements())
        seen |= members
        classes.append(ConjugacyClass(g, members))
    return classes


def _closure(G, gens):
    members = {0}
    frontier = [0]
    gens = list(set(gens))
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = G.table[x][s]
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(members)


def _is_normal(G, members):
    return all(G.conj(s, h) in members for s in G.elements() for h in members)


def subgroup_generated(G, gens, tag=None):
    gens = tuple(G.check(g) for g in gens)
    members = _closure(G, gens)
    return Subgroup(members, _is_normal(G, members), gens, tag)


def quotient_group(G, N):
    """
    Coset group G/N.  Returns (Q, projection) with projection[g] the index
    of gN in Q.  Q is relabeled as a cyclic or dihedral group when it is
    isomorphic to one; otherwise it is the regular permutation realization.
    """
    members = N.members if isinstance(N, Subgroup) else frozenset(N)
    if 0 not in members or not _is_normal(G, members):
        raise NotNormal("quotient requires a normal subgroup")
    coset_of = {}
    reps = []
    for g in G.elements():
        if g in coset_of:
            continue
        cid = len(reps)
        reps.append(g)
        for n in members:
            coset_of[G.table[g][n]] = cid
    m = len(reps)
    table = [[coset_of[G.table[reps[i]][reps[j]]] for j in range(m)] for i in range(m)]
    Q0 = _abstract_group(table)
    Q, relabel = identify_catalog(Q0)
    return Q, tuple(relabel[coset_of[g]] for g in G.elements())


def _abstract_group(table):
    """Regular permutation realization of a Cayley table with identity at 0."""
    m = len(table)
    # left multiplication by x sends y -> x*y
    gens = [tuple(table[x][y] for y in range(m)) for x in range(m)]
    perms = gens
    index = {p: i for i, p in enumerate(perms)}
    tbl = [[index[_compose(p, q)] for q in perms] for p in perms]
    labels = ["[" + ",".join(str(i + 1) for i in p) + "]" for p in perms]
    # keep the element order of the source table: perms[i] is left mult by i
    return FiniteGroup("permutation", (m, tuple(perms[1:]) or (perms[0],)), labels, tbl, perms=tuple(perms))


def identify_catalog(H):
    """
    Try to relabel H as cyclic(m) or dihedral(m).  Returns (group, relabel)
    with relabel[h] the index in the returned group of H's element h.
    Falls back to (H, identity map).
    """
    m = H.order
    if m == 1:
        return cyclic(1), (0,)
    for g in H.elements():
        if H.order_of(g) == m:
            C = cyclic(m)
            relabel = [0] * m
            x = 0
            for k in range(m):
                relabel[x] = k
                x = H.table[x][g]
            return C, tuple(relabel)
    if m % 2 == 0 and m >= 4:
        n = m // 2
        for a in H.elements():
            if H.order_of(a) != n:
                continue
            rot = []
            x = 0
            for _ in range(n):
                rot.append(x)
                x = H.table[x][a]
            rotset = set(rot)
            for b in H.elements():
                if b in rotset or H.order_of(b) != 2:
                    continue
                if H.table[a][b] != H.table[b][H.inv(a)]:
                    continue
                relabel = [None] * m
                for k, r in enumerate(rot):
                    relabel[r] = k
                    relabel[H.table[r][b]] = k + n
                if None in relabel:
                    continue
                return dihedral(n), tuple(relabel)
    return H, tuple(H.elements())


def subgroup_as_group(G, H):
    """
    The subgroup H of G as a standalone group.  Returns (K, embed) where
    embed[k] is the G-index of K's element k; K is a catalog group when
    possible.
    """
    members = sorted(H.members if isinstance(H, Subgroup) else H)
    pos = {g: i for i, g in enumerate(members)}
    table = [[pos[G.table[x][y]] for y in members] for x in members]
    K0 = _abstract_group(table)
    K, relabel = identify_catalog(K0)
    embed = [None] * len(members)
    for i, g in enumerate(members):
        embed[relabel[i]] = g
    return K, tuple(embed)


def find_isomorphism(G, H):
    """
    Exhaustive generator-image search.  Returns a dict G->H or None.
    Desk scale only.
    """
    if G.order != H.order:
        return None
    if sorted(G.order_of(g) for g in G.elements()) != sorted(H.order_of(h) for h in H.elements()):
        return None
    # greedy small generating set for G
    gens = []
    span = frozenset([0])
    for g in sorted(G.elements(), key=lambda x: -G.order_of(x)):
        if g not in span:
            gens.append(g)
            span = _closure(G, gens)
            if len(span) == G.order:
                break
    candidates = [[h for h in H.elements() if H.order_of(h) == G.order_of(g)] for g in gens]
    for images in itertools.product(*candidates):
        phi = {0: 0}
        frontier = [0]
        ok = True
        while frontier and ok:
            nxt = []
            for x in frontier:
                for s, t in zip(gens, images):
                    y = G.table[x][s]
                    img = H.table[phi[x]][t]
                    if y in phi:
                        if phi[y] != img:
                            ok = False
                            break
                    else:
                        phi[y] = img
                        nxt.append(y)
                if not ok:
                    break
            frontier = nxt
        if not ok or len(set(phi.values())) != G.order:
            continue
        if all(phi[G.table[x][y]] == H.table[phi[x]][phi[y]] for x in G.elements() for y in G.elements()):
            return phi
    return None


def dihedral_subgroups(n):
    """
    All subgroups of dihedral(n) from the closed-form list: <a^i> for i|n,
    <a^i b> for 0<=i<n, and <a^j, a^i b> for j|n, j != n, 0<=i<j.
    Each is tagged "cyclic" or "dihedral".
    """
    if n < 2:
        raise GroupError("dihedral_subgroups requires n >= 2")
    G = dihedral(n)
    out = []
    divisors = [i for i in range(1, n + 1) if n % i == 0]
    for i in divisors:
        out.append(subgroup_generated(G, [i % n], tag="cyclic"))
    for i in range(n):
        out.append(subgroup_generated(G, [i + n], tag="cyclic"))
    for j in divisors:
        if j == n:
            continue
        for i in range(j):
            out.append(subgroup_generated(G, [j, i + n], tag="dihedral"))
    # for n=2, <a^j, a^i b> with j=1 is G itself; <a^i> with i=n is trivial
    uniq = []
    for S in out:
        if S not in uniq:
            uniq.append(S)
    return uniq
