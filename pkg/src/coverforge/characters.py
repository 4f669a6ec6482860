"""
Character tables, explicit irreducible matrices, isotypic projectors and
eigenvalue counts.

Closed forms are used for cyclic and dihedral groups; any other group goes
through the Burnside-Dixon routine in ``dixon``.  Tables are cached per
group.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import matrix as mx
from .cyclotomic import Cyclotomic, root_of_unity
from .dixon import dixon_character_table
from .errors import (CharacterTableError, NonIntegerCount, NonIntegerMultiplicity,
                     UnsupportedGroupKind, CoverError)
from .groups import conjugacy_classes

__all__ = [
    "CharacterTable",
    "MatrixRep",
    "character_table",
    "irreducible_matrices",
    "regular_representation",
    "direct_sum",
    "module_multiplicities",
    "isotypic_projectors",
    "eigenvalue_counts",
    "conjugate_character",
    "dihedral_h_range",
]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    group: object
    classes: tuple
    labels: tuple
    degrees: tuple
    values: tuple  # values[i][j] = chi_i(class j)
    class_of: tuple  # element index -> class index
    method: str = "closed"

    def __len__(self):
        return len(self.labels)

    def index(self, label):
        if isinstance(label, int):
            if not 0 <= label < len(self.labels):
                raise CharacterTableError(f"irreducible index {label} out of range")
            return label
        try:
            return self.labels.index(label)
        except ValueError:
            raise CharacterTableError(f"no irreducible labelled {label!r}") from None

    def degree(self, label):
        return self.degrees[self.index(label)]

    def chi(self, label, g):
        """Character value at a group element."""
        return self.values[self.index(label)][self.class_of[g]]

    def row(self, label):
        return self.values[self.index(label)]

    def is_trivial(self, label):
        return all(v == 1 for v in self.row(label))

    @property
    def class_sizes(self):
        return tuple(len(c) for c in self.classes)

    def kernel(self, label):
        """Elements g with chi(g) = chi(1)."""
        i = self.index(label)
        d = self.degrees[i]
        return frozenset(g for g in self.group.elements() if self.values[i][self.class_of[g]] == d)

    def check(self):
        """Assert every table invariant exactly; returns self."""
        G = self.group
        k = len(self.classes)
        sizes = self.class_sizes
        if len(self.labels) != k:
            raise CharacterTableError(f"{len(self.labels)} irreducibles for {k} classes")
        if sum(d * d for d in self.degrees) != G.order:
            raise CharacterTableError("sum of squared degrees differs from |G|")
        for i, row in enumerate(self.values):
            if row[self.class_of[0]] != self.degrees[i]:
                raise CharacterTableError(f"chi_{self.labels[i]}(1) != degree")
        conj = [[v.conjugate() for v in row] for row in self.values]
        for i in range(k):
            for j in range(i, k):
                acc = Cyclotomic.from_rational(0)
                for c in range(k):
                    acc = acc + sizes[c] * self.values[i][c] * conj[j][c]
                want = G.order if i == j else 0
                if acc != want:
                    raise CharacterTableError(
                        f"orthogonality fails for ({self.labels[i]}, {self.labels[j]}): {acc}")
        return self

    def records(self):
        """Structured form: class sizes, representatives, values as strings."""
        G = self.group
        return {
            "group": G.name(),
            "classes": [{"representative": G.label(c.representative), "size": len(c)}
                        for c in self.classes],
            "irreducibles": [{"label": lab, "degree": d, "values": [str(v) for v in row]}
                             for lab, d, row in zip(self.labels, self.degrees, self.values)],
        }

    def format(self):
        G = self.group
        header = ["", *(G.label(c.representative) for c in self.classes)]
        sizes = ["size", *(str(len(c)) for c in self.classes)]
        rows = [[lab, *(str(v) for v in row)] for lab, row in zip(self.labels, self.values)]
        grid = [header, sizes, *rows]
        widths = [max(len(r[c]) for r in grid) for c in range(len(header))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in grid)


def dihedral_h_range(n):
    """Indices h of the 2-dimensional irreducibles rho_h of dihedral(n)."""
    return range(1, (n - 1) // 2 + 1) if n % 2 else range(1, n // 2)


def _class_index(G, classes):
    class_of = [None] * G.order
    for j, c in enumerate(classes):
        for g in c.members:
            class_of[g] = j
    return tuple(class_of)


def _cyclic_table(G):
    n = G.params
    classes = conjugacy_classes(G)
    labels = tuple(f"chi{j}" for j in range(n))
    values = tuple(tuple(root_of_unity(n, j * c.representative) for c in classes) for j in range(n))
    return CharacterTable(G, tuple(classes), labels, (1,) * n, values, _class_index(G, classes))


def _dihedral_value(n, label, x):
    k, e = x % n, x // n
    if label == "triv":
        return Cyclotomic.from_rational(1)
    if label == "sign":
        return Cyclotomic.from_rational(-1 if e else 1)
    if label == "chi_a":
        return Cyclotomic.from_rational(-1 if k % 2 else 1)
    if label == "chi_ab":
        return Cyclotomic.from_rational(-1 if (k + e) % 2 else 1)
    h = int(label[3:])
    if e:
        return Cyclotomic.from_rational(0)
    return root_of_unity(n, h * k) + root_of_unity(n, -h * k)


def _dihedral_table(G):
    n = G.params
    classes = conjugacy_classes(G)
    one_dim = ["triv", "sign"] + (["chi_a", "chi_ab"] if n % 2 == 0 else [])
    two_dim = [f"rho{h}" for h in dihedral_h_range(n)]
    labels = tuple(one_dim + two_dim)
    degrees = tuple([1] * len(one_dim) + [2] * len(two_dim))
    values = tuple(tuple(_dihedral_value(n, lab, c.representative) for c in classes) for lab in labels)
    return CharacterTable(G, tuple(classes), labels, degrees, values, _class_index(G, classes))


def _sort_key(degree, row):
    return (degree, tuple(tuple(-c for c in v.lift(_lcm_conductor(row)).coeffs) for v in row))


def _lcm_conductor(row):
    from math import lcm
    return lcm(*(v.conductor for v in row))


def _generic_table(G):
    classes, degrees, values = dixon_character_table(G)
    order = sorted(range(len(degrees)), key=lambda i: (
        not all(v == 1 for v in values[i]), _sort_key(degrees[i], values[i])))
    labels = tuple(f"X{i + 1}" for i in range(len(order)))
    return CharacterTable(G, tuple(classes), labels, tuple(degrees[i] for i in order),
                          tuple(tuple(values[i]) for i in order), _class_index(G, classes), "dixon")


@lru_cache(maxsize=128)
def character_table(G, method="auto"):
    """
    Character table of G.  ``method`` is "auto" (closed form when available),
    "closed" or "dixon".  All invariants are checked before returning.
    """
    if method == "dixon":
        T = _generic_table(G)
    elif G.kind == "cyclic" and method in ("auto", "closed"):
        T = _cyclic_table(G)
    elif G.kind == "dihedral" and method in ("auto", "closed"):
        T = _dihedral_table(G)
    elif method == "closed":
        raise UnsupportedGroupKind(f"no closed-form table for {G.kind} groups")
    else:
        T = _generic_table(G)
    return T.check()


# -- explicit matrices ---------------------------------------------------------

class MatrixRep:
    """Images of every group element as square Cyclotomic matrices."""

    def __init__(self, group, images, label=None):
        self.group = group
        self.images = tuple(images)
        self.degree = len(self.images[0]) if self.images else 0
        self.label = label

    def __call__(self, g):
        return self.images[g]

    def character(self):
        return [mx.trace(M) for M in self.images]

    def is_multiplicative(self):
        G = self.group
        if not mx.is_identity(self.images[0]):
            return False
        return all(
            mx.equal(self.images[G.table[g][h]], mx.matmul(self.images[g], self.images[h]))
            for g in G.elements() for h in G.elements()
        )


def irreducible_matrices(G, label, table=None):
    """rho(g) for each g; only cyclic and dihedral groups are supported."""
    T = table or character_table(G)
    return _irreducible_matrices(G, T, T.index(label))


@lru_cache(maxsize=1024)
def _irreducible_matrices(G, T, i):
    label = T.labels[i]
    if G.kind == "cyclic":
        images = [[[T.values[i][T.class_of[g]]]] for g in G.elements()]
    elif G.kind == "dihedral":
        n = G.params
        if T.degrees[i] == 1:
            images = [[[T.values[i][T.class_of[g]]]] for g in G.elements()]
        else:
            h = int(label[3:])
            images = []
            zero = mx.ZERO
            for x in G.elements():
                k, e = x % n, x // n
                u, w = root_of_unity(n, h * k), root_of_unity(n, -h * k)
                images.append([[u, zero], [zero, w]] if not e else [[zero, u], [w, zero]])
    else:
        raise UnsupportedGroupKind(f"explicit irreducible matrices are not available for {G.kind} groups")
    R = MatrixRep(G, images, label)
    if not R.is_multiplicative():
        raise CoverError(f"irreducible {label} is not multiplicative")
    return R


def regular_representation(G):
    """R(g) e_h = e_{gh}."""
    n = G.order
    images = []
    for g in G.elements():
        M = mx.zeros(n)
        for h in G.elements():
            M[G.table[g][h]][h] = mx.ONE
        images.append(M)
    return MatrixRep(G, images, "regular")


def direct_sum(*reps):
    G = reps[0].group
    return MatrixRep(G, [mx.block_diag([R.images[g] for R in reps]) for g in G.elements()], "sum")


# -- decompositions ------------------------------------------------------------

def module_multiplicities(chi_V, table):
    """
    Multiplicity of each irreducible in the class function ``chi_V``
    (one value per class, in table class order).
    """
    T = table
    G = T.group
    sizes = T.class_sizes
    chi_V = [mx.as_cyclo(v) for v in chi_V]
    out = {}
    total = 0
    for i, lab in enumerate(T.labels):
        acc = Cyclotomic.from_rational(0)
        for c in range(len(sizes)):
            acc = acc + sizes[c] * chi_V[c] * T.values[i][c].conjugate()
        m = acc / G.order
        if not m.is_integer() or int(m) < 0:
            raise NonIntegerMultiplicity(f"multiplicity of {lab} is {m}; input is not a character")
        out[lab] = int(m)
        total += int(m) * T.degrees[i]
    if chi_V[T.class_of[0]] != total:
        raise NonIntegerMultiplicity("multiplicities do not reproduce chi_V(1)")
    return out


def isotypic_projectors(rep, table):
    """
    p_i = (d_i/|G|) sum_g conj(chi_i(g)) R(g) for every irreducible.  Returns a
    list of (label, matrix, rank); idempotence, orthogonality and
    completeness are asserted.
    """
    T = table
    G = T.group
    n = rep.degree
    out = []
    for i, lab in enumerate(T.labels):
        P = mx.zeros(n)
        for g in G.elements():
            c = T.values[i][T.class_of[g]].conjugate()
            if c:
                P = mx.matadd(P, mx.scale(c, rep.images[g]))
        P = mx.scale(Cyclotomic.from_rational(Fraction(T.degrees[i], G.order)), P)
        out.append((lab, P))
    for lab, P in out:
        if not mx.equal(mx.matmul(P, P), P):
            raise CoverError(f"projector for {lab} is not idempotent")
    for a in range(len(out)):
        for b in range(len(out)):
            if a != b and not mx.is_zero(mx.matmul(out[a][1], out[b][1])):
                raise CoverError(f"projectors {out[a][0]}, {out[b][0]} are not orthogonal")
    total = mx.zeros(n)
    for _, P in out:
        total = mx.matadd(total, P)
    if not mx.is_identity(total):
        raise CoverError("projectors do not sum to the identity")
    return [(lab, P, mx.rank(P)) for lab, P in out]


def eigenvalue_counts(table, label, g):
    """
    N_alpha = number of eigenvalues of rho(g) equal to zeta_e^alpha, for
    alpha = 0..e-1 with e the order of g.
    """
    return _eigenvalue_counts(table, table.index(label), g)


@lru_cache(maxsize=65536)
def _eigenvalue_counts(T, i, g):
    G = T.group
    e = G.order_of(g)
    vals = []
    x = 0
    for _ in range(e):
        vals.append(T.values[i][T.class_of[x]])
        x = G.table[x][g]
    counts = []
    for alpha in range(e):
        acc = Cyclotomic.from_rational(0)
        for k in range(e):
            acc = acc + vals[k] * root_of_unity(e, -alpha * k)
        n = acc / e
        if not n.is_integer() or int(n) < 0:
            raise NonIntegerCount(f"eigenvalue count N_{alpha} = {n} for {T.labels[i]}")
        counts.append(int(n))
    if sum(counts) != T.degrees[i]:
        raise NonIntegerCount("eigenvalue counts do not sum to the degree")
    return tuple(counts)


def conjugate_character(table, label):
    T = table
    row = [v.conjugate() for v in T.row(label)]
    for j, other in enumerate(T.values):
        if all(a == b for a, b in zip(row, other)):
            return T.labels[j]
    raise CharacterTableError(f"conjugate of {label} is missing from the table")
