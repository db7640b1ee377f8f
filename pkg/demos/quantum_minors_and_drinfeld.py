"""Quantum minors of E(u) on gl_3: the tau operators, the row operators
A_m, B_m, C_m, the kappa construction of the basis, and the characteristic
identity on the tensor product with the dual vector representation."""

from fractions import Fraction

from gtbases import build_irrep
from gtbases import gln

rep = build_irrep(3, (4, 2, 0))

print("== tau operators as quantum minors ==")
t31 = gln.tau_poly(rep, 1, "lowering")
print("  tau_31(u) degree:", t31.degree())
print("  tau_31 equals z_31 after the Cartan substitution:",
      gln.tau_equals_z_check(rep, 1))
print("  tau_32 equals z_32:", gln.tau_equals_z_check(rep, 2))

print("\n== row operator actions on patterns ==")
for m in (1, 2, 3):
    print("  level %d displays hold: %s" % (m, gln.drinfeld_checks(rep, m)))

print("\n== kappa vectors (iterated evaluated C_m) ==")
vecs = gln.kappa_basis(rep)
consts = []
for t, v in enumerate(vecs):
    nz = [x for x in v if x]
    consts.append(nz[0])
print("  proportionality constants:", consts)

print("\n== Gelfand-Tsetlin subalgebra eigenvalues separate the basis ==")
seen = set()
for p in rep.basis:
    evs = tuple(tuple(row) for row in gln.gt_eigenvalues(p))
    seen.add(evs)
print("  distinct tuples:", len(seen), "of", rep.dim)

print("\n== characteristic identity prod (E - alpha_r) = 0 ==")
print("  gl_2 (1,0):", gln.characteristic_identity_check(build_irrep(2, (2, 0))))
print("  gl_3 (2,1,0):", gln.characteristic_identity_check(rep))
