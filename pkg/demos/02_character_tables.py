# Character tables: closed forms for cyclic and dihedral groups, and the
# Burnside-Dixon algorithm for anything given by permutations.

from coverforge import character_table, dihedral, make_group

D5 = dihedral(5)
print(character_table(D5).format())
print()

# S4 from two generators in image-list form (1-based)
S4 = make_group({"kind": "permutation", "degree": 4, "generators": [[2, 1, 3, 4], [2, 3, 4, 1]]})
T = character_table(S4)
print(T.format())
print("method:", T.method, " degrees:", T.degrees)
print()

# the generic algorithm agrees with the closed form on D6
closed = character_table(dihedral(6), "closed")
dixon = character_table(dihedral(6), "dixon")
rows = lambda T: sorted(sorted(str(v) for v in r) for r in T.values)
print("D6 Dixon rows = closed rows:", rows(closed) == rows(dixon))
