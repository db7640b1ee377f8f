"""Branching rules, Schur polynomials and the Weyl dimension oracle.

The dimension oracle is written directly from root-system data and serves as
ground truth for every dimension claim in the package.  To keep it an
independent check it must not import the patterns module.

Weight conventions: series "A" takes any doubled dominant weight; "B", "C",
"D" take doubled weights in the standard positive convention
(lam_1 >= ... >= lam_{n-1} >= |lam_n|, plus the series integrality rule).
The branch_* functions for B/C/D work in the non-positive convention used by
the corresponding constructions; use ``to_dominant`` to bridge.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def to_dominant(lam):
    """Non-positive-convention weight -> standard dominant weight (doubled)."""
    return tuple(-x for x in reversed(tuple(lam)))


def _positive_roots(series, n):
    """Positive roots as coefficient vectors over the epsilon basis."""
    roots = []
    if series == "A":
        for i in range(n):
            for j in range(i + 1, n):
                r = [0] * n
                r[i], r[j] = 1, -1
                roots.append(tuple(r))
        return roots
    for i in range(n):
        for j in range(i + 1, n):
            r = [0] * n
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            r = [0] * n
            r[i], r[j] = 1, 1
            roots.append(tuple(r))
    if series == "B":
        for i in range(n):
            r = [0] * n
            r[i] = 1
            roots.append(tuple(r))
    elif series == "C":
        for i in range(n):
            r = [0] * n
            r[i] = 2
            roots.append(tuple(r))
    elif series != "D":
        raise ValueError("unknown series %r" % (series,))
    return roots


def _rho(series, n):
    if series == "A":
        # any vector with rho_i - rho_{i+1} = 1 works; fix a symmetric choice
        return [Fraction(n - 1, 2) - i for i in range(n)]
    if series == "B":
        return [Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1)]
    if series == "C":
        return [Fraction(n - i + 1) for i in range(1, n + 1)]
    if series == "D":
        return [Fraction(n - i) for i in range(1, n + 1)]
    raise ValueError("unknown series %r" % (series,))


def _check_dominant_std(series, lam):
    lam = [Fraction(x, 2) for x in lam]
    n = len(lam)
    for i in range(n - 1):
        d = lam[i] - lam[i + 1]
        if d < 0 or d.denominator != 1:
            raise ValueError("weight is not dominant")
    if series == "A":
        return lam
    if series == "B":
        if n and lam[-1] < 0:
            raise ValueError("B weight needs lam_n >= 0")
    elif series == "C":
        if n and (lam[-1] < 0 or lam[-1].denominator != 1):
            raise ValueError("C weight needs nonnegative integer lam_n")
    elif series == "D":
        if n >= 2 and lam[-2] + lam[-1] < 0:
            raise ValueError("D weight needs lam_{n-1} + lam_n >= 0")
    else:
        raise ValueError("unknown series %r" % (series,))
    return lam


def weyl_dim(series, lam) -> int:
    """dim of the irreducible with highest weight lam (doubled, standard
    dominant convention), by the product over positive roots."""
    lam = _check_dominant_std(series, lam)
    n = len(lam)
    rho = _rho(series, n)
    num = Fraction(1)
    den = Fraction(1)
    for alpha in _positive_roots(series, n):
        num *= sum((lam[i] + rho[i]) * alpha[i] for i in range(n))
        den *= sum(rho[i] * alpha[i] for i in range(n))
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


def weyl_dim_s3(series, lam) -> int:
    """Dimension for a weight given in the non-positive convention."""
    return weyl_dim(series, to_dominant(lam))


# ---------------------------------------------------------------------------
# branching
# ---------------------------------------------------------------------------

def branch_A(lam):
    """Children of a gl_n weight: all mu interlacing lam, multiplicity one.

    Output in descending lexicographic order; weights doubled.
    """
    lam = tuple(lam)
    n = len(lam)
    out = []
    mu = [0] * (n - 1)

    def rec(i):
        if i == n - 1:
            out.append(tuple(mu))
            return
        for v in range(lam[i], lam[i + 1] - 1, -2):
            mu[i] = v
            rec(i + 1)

    if n >= 1:
        rec(0)
    return out


@dataclass(frozen=True)
class BranchSpec:
    """Restriction data for one (parent, child) pair of B/C/D weights.

    data holds the admissible tuples (doubled): (sigma, nu_1..nu_n) for B,
    (nu_1..nu_n) for C, (nu_1..nu_{n-1}) for D.  The multiplicity c(mu) is
    len(data).
    """

    series: str
    parent: tuple
    child: tuple
    data: tuple

    @property
    def multiplicity(self):
        return len(self.data)


def _desc(hi, lo):
    return range(hi, lo - 1, -2)


def branch_BCD(series, lam, mu) -> BranchSpec:
    """Admissible nu-tuples for the restriction, non-positive convention.

    B: (n+1)-tuples (sigma, nu_1, ..., nu_n) with the sign re-encoding of
    the first entry; C: n-tuples; D: (n-1)-tuples.  All entries doubled.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    n = len(lam)
    data = []

    if series == "B":
        if len(mu) != n - 1:
            raise ValueError("B child weight needs n-1 entries")
        # nu'_1 with -lam_1 >= nu'_1 >= lam_1 and -mu_1 >= nu'_1 >= mu_1,
        # then integer/half-integer together with lam
        hi1 = min(-lam[0], -mu[0]) if n > 1 else -lam[0]
        lo1 = max(lam[0], mu[0]) if n > 1 else lam[0]
        nu = [0] * n
        for nu1p in _desc(hi1, lo1):
            sigma, nu[0] = (0, nu1p) if nu1p <= 0 else (1, -nu1p)

            def rec(i):
                # nu_i for i >= 2: lam_{i-1} >= nu_i >= lam_i, mu_{i-1} >= nu_i >= mu_i
                if i > n:
                    data.append((sigma, *nu))
                    return
                hi = min(lam[i - 2], mu[i - 2])
                lo = lam[i - 1] if i == n else max(lam[i - 1], mu[i - 1])
                for v in _desc(hi, lo):
                    nu[i - 1] = v
                    rec(i + 1)

            rec(2)
        return BranchSpec("B", lam, mu, tuple(data))

    if series == "C":
        if len(mu) != n - 1:
            raise ValueError("C child weight needs n-1 entries")
        nu = [0] * n

        def rec(i):
            if i > n:
                data.append(tuple(nu))
                return
            if i == 1:
                hi = 0
                lo = max(lam[0], mu[0]) if n > 1 else lam[0]
            else:
                hi = min(lam[i - 2], mu[i - 2])
                lo = lam[i - 1] if i == n else max(lam[i - 1], mu[i - 1])
            for v in _desc(hi, lo):
                nu[i - 1] = v
                rec(i + 1)

        rec(1)
        return BranchSpec("C", lam, mu, tuple(data))

    if series == "D":
        if len(mu) != n - 1:
            raise ValueError("D child weight needs n-1 entries")
        if n == 1:
            # the rank-one orthogonal algebra is abelian; the restriction
            # to the trivial subalgebra is the single empty tuple
            return BranchSpec("D", lam, mu, ((),))
        nu = [0] * (n - 1)

        def rec(i):
            if i > n - 1:
                data.append(tuple(nu))
                return
            if i == 1:
                hi = min(-abs(lam[0]), -abs(mu[0]))
                lo = max(lam[1], mu[1]) if n > 2 else lam[1]
            else:
                hi = min(lam[i - 1], mu[i - 1])
                lo = lam[i] if i == n - 1 else max(lam[i], mu[i])
            for v in _desc(hi, lo):
                nu[i - 1] = v
                rec(i + 1)

        rec(1)
        return BranchSpec("D", lam, mu, tuple(data))

    raise ValueError("unknown series %r" % (series,))


def _cap_same_parity(cap, parity_of):
    """Largest doubled value <= cap with the parity of parity_of."""
    return cap if (cap - parity_of) % 2 == 0 else cap - 1


def branch_children_BCD(series, lam):
    """All (mu, BranchSpec) with positive multiplicity, non-positive convention.

    Candidate child weights are scanned over crude per-entry bounds and
    filtered by the exact admissible-tuple count; output is in descending
    lexicographic order of mu.
    """
    lam = tuple(lam)
    n = len(lam)
    if n == 1:
        return [((), branch_BCD(series, lam, ()))]
    out = []
    mu = [0] * (n - 1)

    def rec(i):
        if i == n - 1:
            spec = branch_BCD(series, lam, tuple(mu))
            if spec.multiplicity:
                out.append((tuple(mu), spec))
            return
        if series == "D" and i == 0:
            hi, lo = -lam[1], lam[1]
        elif series == "D":
            hi, lo = -abs(lam[0]), lam[i + 1]
        else:
            hi, lo = _cap_same_parity(0, lam[0]), lam[i + 1]
        for v in range(hi, lo - 1, -2):
            mu[i] = v
            rec(i + 1)

    rec(0)
    return out


# ---------------------------------------------------------------------------
# Schur polynomials via semistandard tableaux
# ---------------------------------------------------------------------------

def _ssyt(shape, n):
    """Semistandard tableaux of the given shape with entries 1..n."""
    shape = [s for s in shape if s > 0]
    if not shape:
        yield ()
        return
    rows = [[0] * s for s in shape]
    cells = [(r, c) for r, row in enumerate(rows) for c in range(len(row))]

    def rec(idx):
        if idx == len(cells):
            yield tuple(tuple(r) for r in rows)
            return
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            rows[r][c] = v
            yield from rec(idx + 1)

    yield from rec(0)


def schur_exponents(lam, n):
    """Multiset of monomial exponent vectors of s_lam(x_1..x_n).

    lam is a plain (undoubled) partition; returns a dict exponent -> count.
    """
    lam = tuple(lam)
    if any(a < b for a, b in zip(lam, lam[1:])) or any(x < 0 for x in lam):
        raise ValueError("not a partition")
    out = {}
    for t in _ssyt(lam, n):
        expo = [0] * n
        for row in t:
            for x in row:
                expo[x - 1] += 1
        key = tuple(expo)
        out[key] = out.get(key, 0) + 1
    return out


def schur_poly(lam, n):
    """Alias: the Schur polynomial as its monomial-exponent multiset."""
    return schur_exponents(lam, n)


def schur(lam, xs) -> Fraction:
    """s_lam evaluated at the point xs, by direct tableau summation."""
    n = len(xs)
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for expo, count in schur_exponents(lam, n).items():
        term = Fraction(count)
        for x, e in zip(xs, expo):
            term *= x ** e
        total += term
    return total
