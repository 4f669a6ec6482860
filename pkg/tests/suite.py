"""Shared fixtures: random data generators and independent oracles."""

import random
from fractions import Fraction

from coverforge.cyclotomic import Cyclotomic, root_of_unity
from coverforge.datum import make_datum, validate_datum
from coverforge.groups import cyclic, dihedral, permutation_group

S3 = permutation_group(3, [(1, 0, 2), (1, 2, 0)])
S4 = permutation_group(4, [(1, 0, 2, 3), (1, 2, 3, 0)])
A4 = permutation_group(4, [(1, 2, 0, 3), (0, 2, 3, 1)])
V4 = permutation_group(4, [(1, 0, 3, 2), (2, 3, 0, 1)])
D4_PERM = permutation_group(4, [(1, 2, 3, 0), (0, 3, 2, 1)])


def _quaternion_regular():
    # units 1, i, j, k with sign; element 2*u + s means (-1)^s * unit u
    unit = {(0, 0): (0, 0), (1, 1): (0, 1), (2, 2): (0, 1), (3, 3): (0, 1),
            (1, 2): (3, 0), (2, 3): (1, 0), (3, 1): (2, 0),
            (2, 1): (3, 1), (3, 2): (1, 1), (1, 3): (2, 1)}
    for u in range(4):
        unit[(0, u)] = unit[(u, 0)] = (u, 0)

    def mul(x, y):
        w, s = unit[(x // 2, y // 2)]
        return 2 * w + (s + x + y) % 2

    return [tuple(mul(g, x) for x in range(8)) for g in (2, 4)]


# quaternion group through its left-regular action on 8 points
Q8 = permutation_group(8, _quaternion_regular())

PERM_GROUPS = {"S3": S3, "S4": S4, "A4": A4, "V4": V4, "D4perm": D4_PERM, "Q8": Q8}


def random_datum(G, rng, r_max=6, base_genus=0, tries=200):
    """A random valid datum over G: r-1 random nontrivial branches closed by the inverse product."""
    for _ in range(tries):
        handles = [rng.randrange(G.order) for _ in range(2 * base_genus)]
        r = rng.randint(0 if base_genus else 2, r_max)
        elts = [rng.randrange(1, G.order) for _ in range(max(r - 1, 0))]
        d = make_datum(G, elts, base_genus=base_genus, handles=handles)
        last = G.inv(d.long_relation())
        if last != G.identity:
            elts.append(last)
        elif r == 0 and not elts:
            pass
        d = make_datum(G, elts, base_genus=base_genus, handles=handles)
        if validate_datum(d).ok:
            return d
    return None


def suite_groups():
    out = [dihedral(n) for n in range(3, 9)] + [cyclic(n) for n in range(2, 10)]
    out += [S3, A4]
    return out


def random_suite(count=220, seed=20261019):
    rng = random.Random(seed)
    groups = suite_groups()
    data = []
    while len(data) < count:
        G = groups[len(data) % len(groups)]
        g0 = 1 if rng.random() < 0.15 else 0
        d = random_datum(G, rng, base_genus=g0)
        if d is not None:
            data.append(d)
    return data


def oracle_genus(d):
    """Euler characteristic count: |G| copies of the punctured base plus one point per coset of <h_i>."""
    n = d.group.order
    chi = n * (2 - 2 * d.base_genus - d.r) + sum(n // b.order for b in d.branches)
    assert chi % 2 == 0
    return (2 - chi) // 2


def fixed_points(d, g):
    """#points of C fixed by g != 1: cosets x<h_i> with x^-1 g x in <h_i>, summed over branches."""
    G = d.group
    total = 0
    for b in d.branches:
        H = set()
        x = G.identity
        while True:
            H.add(x)
            x = G.mul(x, b.monodromy)
            if x == G.identity:
                break
        cosets = {frozenset(G.mul(x, h) for h in H) for x in G.elements()}
        for c in cosets:
            x = min(c)
            if G.mul(G.mul(G.inv(x), g), x) in H:
                total += 1
    return total


def lefschetz_h1_multiplicity(d, table, i):
    """<chi_{H^1}, chi_i> with tr(g | H^1) = 2 - #Fix(g) for g != 1 and 2g_C at the identity."""
    G = d.group
    genus = oracle_genus(d)
    acc = Cyclotomic.from_rational(0)
    for g in G.elements():
        tr = 2 * genus if g == G.identity else 2 - fixed_points(d, g)
        acc = acc + tr * table.chi(i, g).conjugate()
    m = acc / G.order
    assert m.is_integer()
    return int(m)


def brute_fractional(q):
    q = Fraction(q)
    k = 0
    while q - k >= 1:
        k += 1
    while q - k < 0:
        k -= 1
    return q - k


def zeta_power_sum(n, coeffs):
    return sum((c * root_of_unity(n, k) for k, c in coeffs.items()), Cyclotomic.from_rational(0))
