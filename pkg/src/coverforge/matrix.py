"""
Small dense matrices over the cyclotomic numbers (lists of lists of Cyclotomic).
"""

from .cyclotomic import Cyclotomic

ZERO = Cyclotomic.from_rational(0)
ONE = Cyclotomic.from_rational(1)


def as_cyclo(x):
    return x if isinstance(x, Cyclotomic) else Cyclotomic.from_rational(x)


def matrix(rows):
    return [[as_cyclo(x) for x in row] for row in rows]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(n, m=None):
    return [[ZERO] * (n if m is None else m) for _ in range(n)]


def matmul(A, B):
    m = len(B[0]) if B else 0
    out = []
    for row in A:
        new = []
        for j in range(m):
            acc = ZERO
            for k, a in enumerate(row):
                if a:
                    b = B[k][j]
                    if b:
                        acc = acc + a * b
            new.append(acc)
        out.append(new)
    return out


def matprod(mats, n):
    out = identity(n)
    for M in mats:
        out = matmul(out, M)
    return out


def matadd(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(c, A):
    return [[c * a for a in row] for row in A]


def trace(A):
    acc = ZERO
    for i in range(len(A)):
        acc = acc + A[i][i]
    return acc


def equal(A, B):
    return len(A) == len(B) and all(
        len(ra) == len(rb) and all(a == b for a, b in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def is_identity(A):
    return equal(A, identity(len(A)))


def is_zero(A):
    return all(not a for row in A for a in row)


def block_diag(blocks):
    n = sum(len(B) for B in blocks)
    out = zeros(n)
    off = 0
    for B in blocks:
        k = len(B)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = B[i][j]
        off += k
    return out


def _eliminate(A):
    """Row echelon form; returns (rows, rank, sign-adjusted pivot product)."""
    M = [list(row) for row in A]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    r = 0
    det = ONE
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            det = ZERO
            continue
        if piv != r:
            M[r], M[piv] = M[piv], M[r]
            det = -det
        p = M[r][c]
        det = det * p
        pinv = p.inverse()
        for i in range(r + 1, rows):
            if M[i][c]:
                f = M[i][c] * pinv
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
        if r == rows:
            break
    return M, r, det


def rank(A):
    return _eliminate(A)[1] if A else 0


def det(A):
    n = len(A)
    if n == 0:
        return ONE
    _, r, d = _eliminate(A)
    return d if r == n else ZERO


def mat_pow(A, k):
    out = identity(len(A))
    for _ in range(k):
        out = matmul(out, A)
    return out


def multiplicative_order(A, bound):
    """Least k in 1..bound with A^k = I, else None."""
    P = A
    for k in range(1, bound + 1):
        if is_identity(P):
            return k
        P = matmul(P, A)
    return None


def format_matrix(A):
    cells = [[str(x) for x in row] for row in A]
    if not cells:
        return ""
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells)


def to_complex(A):
    import numpy as np
    return np.array([[x.to_complex() for x in row] for row in A], dtype=complex)
