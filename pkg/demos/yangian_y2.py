"""The Yangian of gl_2 on tensor products of evaluation modules: string
combinatorics, the basis indexed by interlacing tuples, the quantum
determinant and the twisted (symplectic/orthogonal) layer."""

from fractions import Fraction

from gtbases import yangian as y

f1, f2 = y.HWString(2, 0), y.HWString(6, 4)   # strings {0} and {2}
print("strings:", f1.values(), f2.values())
print("general position:", y.string_general_position(f1, f2))

m = y.build_tensor_module([f1, f2])
print("\nL(1,0) (x) L(3,2): dim", m.dim)
print("irreducible over Y(2):", y.irreducible_Y2(m.factors))
print("irreducible over Y-(2):", y.irreducible_Yminus(m.factors))

print("\n== basis indexed by gamma tuples ==")
basis = y.eta_basis(m)
for gamma, v in basis.items():
    print("  gamma = %s -> %s" % (tuple(Fraction(g, 2) for g in gamma), v))
print("all four action displays hold:", y.eta_action_checks(m))

print("\n== quantum determinant ==")
dd = y.quantum_det(m)
print("degree:", dd.degree())
print("acts as (u+a_1+1)(u+a_2+1)(u+b_1)(u+b_2):", y.quantum_det_scalar_check(m))

print("\n== defining relations at sample points ==")
pairs = [(Fraction(1), Fraction(2)), (Fraction(1, 2), Fraction(3)),
         (Fraction(5), Fraction(-7, 3)), (Fraction(2), Fraction(9)),
         (Fraction(11, 7), Fraction(3, 5))]
print("RTT relation:", y.rtt_check(m, pairs))

print("\n== twisted layer ==")
s = y.twisted_snn(m, "-")
print("S_{n,-n}(u) degree:", s.degree(), "(even)")
print("shift display on the basis:", y.twisted_snn_action_check(m, "-"))
tb = y.twisted_basis(m, "-")
print("twisted basis size:", len(tb))
print("symmetry relation (both signs):",
      y.twisted_symmetry_check(m, "-", [1, 2, Fraction(1, 3)]),
      y.twisted_symmetry_check(m, "+", [1, 2, Fraction(1, 3)]))

print("\n== irreducibility against a brute-force subspace search ==")
for factors in [[(2, 0), (6, 4)], [(4, 0), (6, 4)], [(2, 0), (2, 0)]]:
    mm = y.build_tensor_module(factors)
    pred = y.irreducible_Y2(mm.factors)
    brute = y.brute_force_irreducible_Y2(mm)
    print("  %s: criterion %s, brute force %s" % (factors, pred, brute))
