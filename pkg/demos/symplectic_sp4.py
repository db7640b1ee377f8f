"""sp_4 at desk scale: the module construction, branching multiplicities,
the basis of each multiplicity space, and its twisted-Yangian structure.

Weights are doubled and use the signed-index convention in which the
defining representation has highest weight (0,-1)."""

from fractions import Fraction

from gtbases import branching
from gtbases.liealg_bcd import (build_bcd_irrep, fnn_action_check,
                                gt_basis_checks, multiplicity_basis,
                                v_plus_mu, zab_operators)

lam = (-2, -2)   # the 5-dimensional representation V(-1,-1)
rep = build_bcd_irrep("C", lam)
print("V(-1,-1) of sp_4: dim", rep.dim)

print("\n== branching to sp_2 ==")
for mu, spec in branching.branch_children_BCD("C", lam):
    print("  mu = %s  multiplicity %d  admissible nu %s"
          % (tuple(Fraction(x, 2) for x in mu), spec.multiplicity, list(spec.data)))
    assert len(v_plus_mu(rep, mu)) == spec.multiplicity

print("\n== multiplicity space bases ==")
for mu, spec in branching.branch_children_BCD("C", lam):
    tups, vecs = multiplicity_basis(rep, mu)
    print("  mu = %s: %d independent vectors" % (mu, len(vecs)))
    print("  F_nn eigenvalues + F_{n,-n} shift formula:",
          fnn_action_check(rep, mu))

print("\n== the twisted Yangian sees each multiplicity space ==")
mu = (-2,)
tups, vecs, zab = zab_operators(rep, mu)
znn = zab[(2, 2)]
print("  Z_nn(u) degree:", znn.degree())
print("  Z_{-n,n}(u) annihilates the twisted highest vector:",
      any(all(c.col_vector(t) == (Fraction(0),) * len(vecs) for c in zab[(-2, 2)].coeffs)
          for t in range(len(vecs))))

print("\n== full Gelfand-Tsetlin-type basis ==")
print("  rank, count and weights all match:", gt_basis_checks(rep))
