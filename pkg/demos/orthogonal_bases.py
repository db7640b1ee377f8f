"""Orthogonal Gelfand-Tsetlin bases for o_3 and o_5 via the alternating
chain of reductions o_M > o_{M-1}, built with the normalized lowering
operators of each step.  The resulting vectors are pairwise orthogonal for
the contravariant form."""

from fractions import Fraction

from gtbases import enumerate_patterns, weyl_dim
from gtbases.liealg_bcd import OrthogonalChain, orth_gt_basis

print("== o_3, highest weight (1) ==")
ch = OrthogonalChain(3, (2,))
pats, vecs = orth_gt_basis(ch)
for p, v in zip(pats, vecs):
    print("  pattern lam'=%s -> vector %s, norm^2 %s"
          % (tuple(Fraction(x, 2) for x in p.lamp[0]), v,
             ch.module.inner(v, v)))

print("\n== o_5, highest weight (1,0) ==")
ch5 = OrthogonalChain(5, (2, 0))
pats, vecs = orth_gt_basis(ch5)
print("pattern count:", len(pats),
      "= Weyl dimension:", weyl_dim("B", (2, 0)),
      "= enumerated:", len(enumerate_patterns("B4", (2, 0))))
gram = [[ch5.module.inner(a, b) for b in vecs] for a in vecs]
print("Gram diagonal:", [gram[t][t] for t in range(len(vecs))])
off = [gram[a][b] for a in range(5) for b in range(5) if a != b]
print("off-diagonal all zero:", all(x == 0 for x in off))

print("\n== a spinor example: o_5, highest weight (1/2,1/2) ==")
chs = OrthogonalChain(5, (1, 1))
pats, vecs = orth_gt_basis(chs)
print("dim:", chs.dim, "orthogonal:", all(
    chs.module.inner(vecs[a], vecs[b]) == 0
    for a in range(len(vecs)) for b in range(len(vecs)) if a != b))
