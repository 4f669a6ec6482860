# Counting a path basis against Chevalley-Weil.
#
# For a summand rho of the direct image over P^1, one can write down
# d_rho * |support| lifted paths.  The rho-isotypic part of H^1(C) has
# dimension d_rho (mu_rho + mu_conj).  The two numbers disagree in general.

from coverforge import cyclic, make_datum, path_basis_report

cases = {
    "hyperelliptic, 6 points": make_datum(cyclic(2), [1] * 6),
    "cyclic(3), 3 points": make_datum(cyclic(3), [1, 1, 1]),
}
for name, d in cases.items():
    rep = path_basis_report(d, 1)
    print(f"{name}: claimed {rep.claimed_dim}, Chevalley-Weil {rep.cw_dim}, consistent {rep.consistent}")
