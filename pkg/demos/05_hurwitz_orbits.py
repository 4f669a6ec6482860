# Braid group action on monodromy tuples.
#
# Moving branch points around each other changes the tuple by the elementary
# braid moves.  The orbit of a tuple is a connected component of the Hurwitz
# space; the genus and multiplicities are constant along it.

from coverforge import HurwitzTuple, braid_move, dihedral, hurwitz_orbit

G = dihedral(3)
t = HurwitzTuple(G, tuple(G.index_of(s) for s in ("b", "a*b", "a")))
print("start  ", t.labels())
print("sigma_1", braid_move(t, 1).labels())

census = hurwitz_orbit(t)
print("orbit size:", census.size)
print("fingerprint (classes, genus, mu):", census.fingerprint)
for m in census.members[:6]:
    print("  ", tuple(G.label(g) for g in m))
print("   ...")
