# Intermediate covers and colliding branch points.
#
# For a normal subgroup N, C/N -> P^1 is again Galois with group G/N.  A
# branch whose monodromy lies in N becomes unramified.  Colliding two adjacent
# branch points multiplies their monodromies.

from coverforge import collide_points, dihedral, make_datum, quotient_datum, subgroup_generated
from coverforge.io import serialize_datum

G = dihedral(6)
d = make_datum(G, [G.index_of(s) for s in ("b", "b", "a^3", "a^3", "a", "a^5")])
print(d.describe())

for gen in ("a", "a^2", "a^3"):
    N = subgroup_generated(G, [G.index_of(gen)])
    q, rep = quotient_datum(d, N)
    print(f"\nC/<{gen}>:", q.describe())
    print("  dropped:", rep.dropped, " order changes:", rep.order_changes)

# merging t5 and t6 (a * a^5 = 1) removes both branch points
merged = collide_points(d, "t5", "t6")
print("\nafter merging t5, t6:")
print(serialize_datum(merged))
