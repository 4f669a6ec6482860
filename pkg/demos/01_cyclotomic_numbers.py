# Exact arithmetic in cyclotomic fields.
#
# Every character value and monodromy entry in the library lives in some
# Q(zeta_N).  Values are stored in the power basis mod the N-th cyclotomic
# polynomial, so equality is exact.

from coverforge.cyclotomic import cyclotomic_poly, parse_cyclotomic, root_of_unity

z5 = root_of_unity(5)
golden = z5 + z5 ** 4          # 2 cos(2 pi / 5)
print("z5 + z5^4        =", golden)
print("its square + it  =", golden * golden + golden)   # 1

# mixed conductors are lifted to the lcm, then printed at the smallest one
x = root_of_unity(4) * root_of_unity(6)
print("i * z6           =", x, " (conductor", x.minimal().conductor, ")")

# the text form parses back
y = parse_cyclotomic("z5^2 - z5")
print("parsed           =", y, " approx", complex(round(y.to_complex().real, 6), round(y.to_complex().imag, 6)))

print("Phi_12 coeffs    =", [int(c) for c in cyclotomic_poly(12)])
