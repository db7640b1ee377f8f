"""Walk through the Gelfand-Tsetlin construction for gl_3.

Builds L(2,1,0), prints the pattern basis, a generator matrix, the squared
norms, and re-derives every basis vector by applying lowering operators to
the highest vector.
"""

from fractions import Fraction

from gtbases import build_irrep, enumerate_patterns, weight
from gtbases.exact import vec_unit
from gtbases import gln

lam = (4, 2, 0)   # weights are stored doubled: this is (2, 1, 0)

print("== patterns of highest weight (2,1,0) ==")
for t, p in enumerate(enumerate_patterns("A", lam)):
    rows = [tuple(x // 2 for x in row) for row in p.rows]
    print("  #%d  rows %s  weight %s" % (t, rows, tuple(x // 2 for x in weight(p))))

rep = build_irrep(3, lam)
print("\ndim L(2,1,0) =", rep.dim)

print("\n== E_12 in the pattern basis (row, col, value) ==")
for (r, c), v in sorted(rep.gen(1, 2).entries.items()):
    print("  (%d, %d) -> %s" % (r, c, v))

print("\n== squared norms N_Lambda ==")
print(" ", rep.normsq)

print("\n== lowering operators reproduce the basis ==")
# z_31 = E_31 (h_1 - h_2) + E_21 E_32 and friends generate each basis
# vector from the highest one; the coordinates must come out exactly.
vecs = gln.basis_via_lowering(rep)
for t, v in enumerate(vecs):
    assert v == vec_unit(rep.dim, t)
print("  all %d vectors match their coordinate vectors exactly" % rep.dim)

print("\n== Capelli determinant acts by prod (u + l_i) ==")
c = gln.capelli_det(rep)
print("  degree:", c.degree())
print("  scalar action verified:", gln.capelli_scalar_check(rep))
print("  interpolation against z_in z_ni on L^+:", gln.capelli_interpolation_check(rep))

print("\n== contravariant form ==")
print("  adjointness N_M E_ij = (E_ji)^T N_Lam:", gln.adjointness_check(rep))
