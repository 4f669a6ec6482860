# A D3 cover of P^1 branched at six points.
#
# Monodromy (b, b, b, b, a, a^2): four reflections and two rotations whose
# product is 1.  We compute the genus, the Chevalley-Weil multiplicities of
# holomorphic differentials, and the local monodromy of each summand of the
# direct image local system.

from coverforge import (decompose_direct_image, dihedral, dihedral_multiplicity_mu_h, make_datum,
                        monodromy_blocks, riemann_hurwitz_genus, validate_datum)
from coverforge.localsystem import format_blocks

G = dihedral(3)
a, b = G.index_of("a"), G.index_of("b")
d = make_datum(G, [b, b, b, b, a, G.mul(a, a)])
print(d.describe())
print("valid:", validate_datum(d).ok, " genus:", riemann_hurwitz_genus(d))

dec = decompose_direct_image(d)
for s in dec:
    print(f"  {s.label:5s} rank {s.rank}  mu {s.mu}  type {s.hodge_type}  support {s.support}")
print("sum d*mu =", dec.weighted_mu_sum())

# the dihedral closed form gives the same multiplicity for rho1
print("mu_1 via the dihedral formula:", dihedral_multiplicity_mu_h(d, 1))

# local monodromy around the rotation branch t5
print(format_blocks(monodromy_blocks(d, "t5")))

# the same d with only two reflections has genus 2 and mu = (0, 0, 1)
d4 = make_datum(G, [b, b, a, G.mul(a, a)])
print("(b,b,a,a^2): genus", riemann_hurwitz_genus(d4), " mu", decompose_direct_image(d4).mu_vector())
