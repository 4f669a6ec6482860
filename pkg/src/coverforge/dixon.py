"""
Burnside-Dixon character tables from a Cayley table.

The class-sum eigenvectors are computed over GF(p) with p = 1 mod exp(G)
and p > 2*sqrt(|G|); each character value is then lifted to Q(zeta_e) by
counting eigenvalue multiplicities mod p.
"""

import math

from .cyclotomic import Cyclotomic
from .errors import CharacterTableError
from .groups import conjugacy_classes

MAX_PRIME = 1_000_003
MAX_CLASSES = 256


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(order, exponent):
    """Least prime p with p = 1 (mod exponent) and p > 2*sqrt(order)."""
    bound = 2 * math.isqrt(order) + 1
    p = exponent + 1
    while p <= bound or not _is_prime(p):
        p += exponent
        if p > MAX_PRIME:
            raise CharacterTableError(f"no Dixon prime below {MAX_PRIME}")
    return p


def _primitive_root(p):
    phi = p - 1
    factors = []
    m = phi
    f = 2
    while f * f <= m:
        if m % f == 0:
            factors.append(f)
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        factors.append(m)
    for g in range(2, p):
        if all(pow(g, phi // q, p) != 1 for q in factors):
            return g
    return 1


def _nullspace_mod(A, p):
    """Basis (list of vectors) of {x : A x = 0} over GF(p)."""
    rows = [list(r) for r in A]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * ncols
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-rows[i][fc]) % p
        basis.append(v)
    return basis


def class_matrices(G, classes, class_of):
    """M[j][r][s] = #{x in C_j : x^-1 z_s in C_r}, z_s the representative of C_s."""
    k = len(classes)
    M = [[[0] * k for _ in range(k)] for _ in range(k)]
    for s, cls in enumerate(classes):
        z = cls.representative
        for x in G.elements():
            y = G.table[G.inverses[x]][z]
            M[class_of[x]][class_of[y]][s] += 1
    return M


def _split(spaces, M, p):
    """Refine each space by the eigenspaces of M (which leaves it invariant)."""
    k = len(M)
    out = []
    for basis in spaces:
        if len(basis) == 1:
            out.append(basis)
            continue
        dim = len(basis)
        # columns: M b_i
        MB = [[sum(M[r][s] * b[s] for s in range(k)) % p for b in basis] for r in range(k)]
        found = 0
        for lam in range(p):
            K = [[(MB[r][i] - lam * basis[i][r]) % p for i in range(dim)] for r in range(k)]
            null = _nullspace_mod(K, p)
            if not null:
                continue
            sub = [[sum(c[i] * basis[i][r] for i in range(dim)) % p for r in range(k)] for c in null]
            out.append(sub)
            found += len(sub)
            if found == dim:
                break
        if found != dim:
            raise CharacterTableError("class matrix is not diagonalizable mod p")
    return out


def dixon_character_table(G, classes=None):
    """
    Returns (classes, degrees, values) with values[i][j] the Cyclotomic
    value of the i-th irreducible on class j.  Rows are in discovery order.
    """
    classes = classes or conjugacy_classes(G)
    k = len(classes)
    if k > MAX_CLASSES:
        raise CharacterTableError(f"{k} classes exceeds the limit {MAX_CLASSES}")
    order = G.order
    class_of = [None] * order
    for j, c in enumerate(classes):
        for g in c.members:
            class_of[g] = j
    e = G.exponent
    p = dixon_prime(order, e)
    M = class_matrices(G, classes, class_of)

    spaces = [[[int(i == j) for j in range(k)] for i in range(k)]]
    for j in range(1, k):
        if len(spaces) == k:
            break
        spaces = _split(spaces, M[j], p)
    if len(spaces) != k:
        raise CharacterTableError("class matrices do not separate the characters")

    sizes = [len(c) for c in classes]
    inv_class = [class_of[G.inverses[c.representative]] for c in classes]
    z = pow(_primitive_root(p), (p - 1) // e, p)
    # power maps: class of rep^l for l in 0..e-1
    powmap = []
    for c in classes:
        x, row = 0, []
        for _ in range(e):
            row.append(class_of[x])
            x = G.table[x][c.representative]
        powmap.append(row)

    degrees, values = [], []
    for (v,) in spaces:
        if v[0] % p == 0:
            raise CharacterTableError("eigenvector vanishes on the identity class")
        inv0 = pow(v[0], p - 2, p)
        omega = [(x * inv0) % p for x in v]
        s = sum(omega[j] * omega[inv_class[j]] * pow(sizes[j], p - 2, p) for j in range(k)) % p
        d2 = (order * pow(s, p - 2, p)) % p
        d = next((d for d in range(1, math.isqrt(order) + 1) if (d * d - d2) % p == 0), None)
        if d is None:
            raise CharacterTableError("no integral degree for an eigenvector")
        theta = [(d * omega[j] * pow(sizes[j], p - 2, p)) % p for j in range(k)]
        inv_e = pow(e, p - 2, p)
        row = []
        for j in range(k):
            counts = {}
            for t in range(e):
                acc = 0
                for l in range(e):
                    acc += theta[powmap[j][l]] * pow(z, (-t * l) % (p - 1), p)
                m = (acc * inv_e) % p
                if m > d:
                    raise CharacterTableError("eigenvalue multiplicity failed to lift")
                if m:
                    counts[t] = m
            row.append(Cyclotomic(e, counts))
        degrees.append(d)
        values.append(row)
    return classes, degrees, values
