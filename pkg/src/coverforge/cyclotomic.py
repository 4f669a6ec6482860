"""
Exact arithmetic in cyclotomic fields Q(zeta_N) with rational coefficients.

Values are stored in the power basis 1, z, ..., z^(phi(N)-1) of Q(zeta_N),
reduced modulo the N-th cyclotomic polynomial.  Values of different
conductors are combined by lifting both to the lcm of the conductors.

Text form: "1", "-1/2", "z5^2 - z5", "3/4*z12^5 + 1".
"""

import cmath
import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

__all__ = [
    "Cyclotomic",
    "root_of_unity",
    "cyclo_reduce",
    "fractional_part",
    "cyclotomic_poly",
    "totient",
    "parse_cyclotomic",
]


def totient(n):
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def _moebius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _poly_divexact(num, den):
    # integer polynomials, low degree first; den is monic
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + dn]
        out[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num[:dn]), "inexact polynomial division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Coefficients of Phi_n, lowest degree first, as a tuple of ints."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divexact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_table(n):
    """Row k holds z^k (0 <= k < n) written in the reduced power basis."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    cur = [0] * deg
    cur[0] = 1
    for _ in range(n):
        rows.append(tuple(cur))
        # multiply by z, then reduce the z^deg term via Phi_n (monic)
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


def _reduce_vector(n, coeffs):
    """Reduce an arbitrary-length exponent vector (indices mod n) to phi(n) terms."""
    table = _power_table(n)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for k, c in enumerate(coeffs):
        if not c:
            continue
        row = table[k % n]
        for j in range(deg):
            if row[j]:
                out[j] += c * row[j]
    return tuple(out)


class Cyclotomic:
    """An element of Q(zeta_N) in reduced power-basis form.  Immutable."""

    __slots__ = ("_n", "_c")

    def __init__(self, conductor, coeffs=None):
        if conductor < 1:
            raise ValueError("conductor must be a positive integer")
        self._n = int(conductor)
        deg = totient(self._n)
        if coeffs is None:
            coeffs = ()
        if isinstance(coeffs, dict):
            vec = [Fraction(0)] * self._n
            for k, c in coeffs.items():
                vec[k % self._n] += Fraction(c)
            coeffs = vec
        coeffs = [Fraction(c) for c in coeffs]
        if len(coeffs) == deg:
            self._c = tuple(coeffs)
        else:
            self._c = _reduce_vector(self._n, coeffs)

    # -- construction ----------------------------------------------------

    @classmethod
    def from_rational(cls, q):
        return cls(1, [Fraction(q)])

    @classmethod
    def _raw(cls, n, c):
        obj = object.__new__(cls)
        obj._n = n
        obj._c = c
        return obj

    @property
    def conductor(self):
        return self._n

    @property
    def coeffs(self):
        """Coefficients over 1, z_N, ..., z_N^(phi(N)-1)."""
        return self._c

    def lift(self, m):
        """The same value written at conductor m (a multiple of the current one)."""
        if m % self._n:
            raise ValueError(f"cannot lift conductor {self._n} to {m}")
        if m == self._n:
            return self
        step = m // self._n
        vec = [Fraction(0)] * m
        for k, c in enumerate(self._c):
            vec[k * step] = c
        return Cyclotomic._raw(m, _reduce_vector(m, vec))

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            return other
        if isinstance(other, (int, Rational)):
            return Cyclotomic._raw(1, (Fraction(other),))
        return None

    def _common(self, other):
        m = self._n * other._n // math.gcd(self._n, other._n)
        return self.lift(m), other.lift(m)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic._raw(a._n, tuple(x + y for x, y in zip(a._c, b._c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self._n, tuple(-x for x in self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other._n == 1:
            q = other._c[0]
            return Cyclotomic._raw(self._n, tuple(x * q for x in self._c))
        if self._n == 1:
            q = self._c[0]
            return Cyclotomic._raw(other._n, tuple(x * q for x in other._c))
        a, b = self._common(other)
        n = a._n
        prod = [Fraction(0)] * (2 * len(a._c) - 1)
        for i, x in enumerate(a._c):
            if not x:
                continue
            for j, y in enumerate(b._c):
                if y:
                    prod[i + j] += x * y
        return Cyclotomic._raw(n, _reduce_vector(n, prod))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic._raw(1, (Fraction(1),))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        """Multiplicative inverse, by solving x*y = 1 in the power basis."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        n = self._n
        deg = len(self._c)
        if deg == 1:
            return Cyclotomic._raw(n, (1 / self._c[0],))
        # column j of the multiplication matrix is self * z^j
        cols = []
        for j in range(deg):
            vec = [Fraction(0)] * (deg + j)
            vec[j:] = self._c
            cols.append(_reduce_vector(n, vec))
        aug = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        for col in range(deg):
            piv = next(r for r in range(col, deg) if aug[r][col])
            aug[col], aug[piv] = aug[piv], aug[col]
            p = aug[col][col]
            aug[col] = [x / p for x in aug[col]]
            for r in range(deg):
                if r != col and aug[r][col]:
                    f = aug[r][col]
                    aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
        return Cyclotomic._raw(n, tuple(row[-1] for row in aug))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def galois(self, k):
        """Apply the automorphism z_N -> z_N^k (gcd(k, N) = 1)."""
        n = self._n
        if math.gcd(k, n) != 1:
            raise ValueError(f"{k} is not a unit modulo {n}")
        vec = [Fraction(0)] * n
        for j, c in enumerate(self._c):
            vec[(j * k) % n] += c
        return Cyclotomic._raw(n, _reduce_vector(n, vec))

    def conjugate(self):
        """Complex conjugation z_N^k -> z_N^(N-k)."""
        return self.galois(-1 % self._n) if self._n > 2 else self

    # -- predicates and conversions ----------------------------------------

    def is_zero(self):
        return not any(self._c)

    def is_rational(self):
        return not any(self._c[1:])

    def to_fraction(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._c[0]

    def is_integer(self):
        return self.is_rational() and self._c[0].denominator == 1

    def __int__(self):
        q = self.to_fraction()
        if q.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return q.numerator

    def minimal(self):
        """The same value at the least conductor whose field contains it."""
        n = self._n
        if self.is_rational():
            return Cyclotomic._raw(1, (self._c[0],))
        units = [k for k in range(1, n) if math.gcd(k, n) == 1]
        for d in range(1, n):
            if n % d:
                continue
            if any(self.galois(k) != self for k in units if k % d == 1):
                continue
            # solve self = sum_j c_j z_d^j over the power basis of Q(zeta_d)
            deg = totient(d)
            cols = [root_of_unity(d, j).lift(n).coeffs for j in range(deg)]
            sol = _solve_columns(cols, self._c)
            if sol is not None:
                return Cyclotomic._raw(d, tuple(sol))
        return self

    def to_complex(self):
        """Double-precision embedding sending z_N to exp(2*pi*i/N)."""
        w = cmath.exp(2j * cmath.pi / self._n)
        return sum(float(c) * w ** k for k, c in enumerate(self._c) if c) + 0j

    def normalized_trace(self):
        """Tr(x)/[Q(x):Q] computed in Q(zeta_N); independent of the conductor used."""
        n = self._n
        total = Fraction(0)
        for k, c in enumerate(self._c):
            if c:
                m = n // math.gcd(n, k)
                total += c * Fraction(_moebius(m), totient(m))
        return total

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._n == other._n:
            return self._c == other._c
        a, b = self._common(other)
        return a._c == b._c

    def __hash__(self):
        if self.is_rational():
            return hash(self._c[0])
        return hash((self.normalized_trace(), (self * self).normalized_trace()))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        return format_cyclotomic(self)


def _solve_columns(cols, target):
    """Solve sum_j x_j cols[j] = target exactly; None if inconsistent."""
    m = len(target)
    k = len(cols)
    aug = [[Fraction(cols[j][i]) for j in range(k)] + [Fraction(target[i])] for i in range(m)]
    r = 0
    pivots = []
    for c in range(k):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        p = aug[r][c]
        aug[r] = [x / p for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    if any(aug[i][-1] for i in range(r, m)):
        return None
    sol = [Fraction(0)] * k
    for i, c in enumerate(pivots):
        sol[c] = aug[i][-1]
    return sol


@lru_cache(maxsize=4096)
def root_of_unity(n, k=1):
    """zeta_n^k in reduced form."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    return Cyclotomic(n, {k % n: 1})


def cyclo_reduce(x):
    """Canonical reduced form (idempotent; construction already reduces)."""
    return Cyclotomic._raw(x.conductor, _reduce_vector(x.conductor, x.coeffs))


def fractional_part(q):
    """<q> = q - floor(q), exact, in [0, 1)."""
    q = Fraction(q)
    return q - (q.numerator // q.denominator)


# -- text form ---------------------------------------------------------------

def _fmt_rational(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_cyclotomic(x):
    x = x.minimal()
    n = x.conductor
    terms = []
    for k in range(len(x.coeffs) - 1, -1, -1):
        c = x.coeffs[k]
        if not c:
            continue
        if k == 0:
            mag = _fmt_rational(abs(c))
        else:
            z = f"z{n}" if k == 1 else f"z{n}^{k}"
            mag = z if abs(c) == 1 else f"{_fmt_rational(abs(c))}*{z}"
        terms.append((c < 0, mag))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] else "") + terms[0][1]
    for neg, mag in terms[1:]:
        out += (" - " if neg else " + ") + mag
    return out


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?
        (?:z(?P<cond>\d+)(?:\^(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_cyclotomic(text):
    """Inverse of ``str`` on Cyclotomic values; mixed conductors are allowed."""
    s = text.strip()
    if not s:
        raise ValueError("empty cyclotomic expression")
    pos = 0
    total = Cyclotomic._raw(1, (Fraction(0),))
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse cyclotomic expression at {pos}: {text!r}")
        sign, coef, cond = m.group("sign"), m.group("coef"), m.group("cond")
        if not first and sign is None:
            raise ValueError(f"missing operator at {pos}: {text!r}")
        if coef is None and cond is None:
            raise ValueError(f"empty term at {pos}: {text!r}")
        if m.group("star") and cond is None:
            raise ValueError(f"dangling '*' at {pos}: {text!r}")
        value = Fraction(coef) if coef else Fraction(1)
        term = Cyclotomic.from_rational(value)
        if cond is not None:
            k = int(m.group("exp")) if m.group("exp") else 1
            term = term * root_of_unity(int(cond), k)
        total = total - term if sign == "-" else total + term
        pos = m.end()
        first = False
    return total
