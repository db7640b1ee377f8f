"""Gelfand-Tsetlin-type pattern families, their validation and enumeration.

Five families are supported, identified by a short tag:

  "A"   triangular arrays for gl_n,
  "B3" / "C3" / "D3"  interleaved double arrays for o_{2n+1} / sp_{2n} / o_{2n}
        in the non-positive weight convention (index set -n..n),
  "B4" / "D4"  double arrays for o_{2n+1} / o_{2n} in the positive weight
        convention (index set 1..N).

All entries are stored as DOUBLED integers so that half-integer weights stay
in pure integer arithmetic; parity uniformity is a checked invariant.  A
doubled value 3 means the entry 3/2.
"""

from __future__ import annotations

from dataclasses import dataclass

FAMILIES = ("A", "B3", "C3", "D3", "B4", "D4")


class PatternShapeError(ValueError):
    """Structurally malformed array (wrong row count or row lengths)."""


class DominanceError(ValueError):
    """Top weight violates the dominance conditions of its family."""


def _check_rows(rows, lengths, what):
    if len(rows) != len(lengths):
        raise PatternShapeError("%s: expected %d rows, got %d" % (what, len(lengths), len(rows)))
    for row, ln in zip(rows, lengths):
        if len(row) != ln:
            raise PatternShapeError("%s: bad row length %d (want %d)" % (what, len(row), ln))
        for x in row:
            if not isinstance(x, int):
                raise PatternShapeError("%s: entries must be doubled integers" % what)


@dataclass(frozen=True)
class GTPatternA:
    """Triangular array; rows[0] is the top row (length n), rows[-1] length 1."""

    rows: tuple

    def __post_init__(self):
        n = len(self.rows)
        _check_rows(self.rows, list(range(n, 0, -1)), "A pattern")

    @property
    def n(self):
        return len(self.rows)

    def row(self, k):
        """Row with k entries (k = 1..n)."""
        return self.rows[self.n - k]

    def entry(self, k, i):
        """lambda_{ki} (doubled), 1-based i."""
        return self.rows[self.n - k][i - 1]

    def flatten(self):
        return tuple(x for row in self.rows for x in row)

    def shift(self, k, i, delta2):
        """Array with lambda_{ki} changed by delta2 (doubled units)."""
        rows = [list(r) for r in self.rows]
        rows[self.n - k][i - 1] += delta2
        return GTPatternA(tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class PatternB3:
    """Signed-convention B array: sigma flags, unprimed and primed rows, k = 1..n."""

    sigma: tuple   # sigma[k-1] in {0, 1}
    lam: tuple     # lam[k-1] = unprimed row with k entries
    lamp: tuple    # lamp[k-1] = primed row with k entries

    def __post_init__(self):
        n = len(self.lam)
        if len(self.sigma) != n:
            raise PatternShapeError("B3: need %d sigma flags" % n)
        for s in self.sigma:
            if s not in (0, 1):
                raise PatternShapeError("B3: sigma flags must be 0 or 1")
        _check_rows(self.lam, list(range(1, n + 1)), "B3 unprimed")
        _check_rows(self.lamp, list(range(1, n + 1)), "B3 primed")

    @property
    def n(self):
        return len(self.lam)

    def flatten(self):
        out = []
        for k in range(self.n, 0, -1):
            out.append(self.sigma[k - 1])
            out.extend(self.lam[k - 1])
            out.extend(self.lamp[k - 1])
        return tuple(out)


@dataclass(frozen=True)
class PatternC3:
    lam: tuple
    lamp: tuple

    def __post_init__(self):
        n = len(self.lam)
        _check_rows(self.lam, list(range(1, n + 1)), "C3 unprimed")
        _check_rows(self.lamp, list(range(1, n + 1)), "C3 primed")

    @property
    def n(self):
        return len(self.lam)

    def flatten(self):
        out = []
        for k in range(self.n, 0, -1):
            out.extend(self.lam[k - 1])
            out.extend(self.lamp[k - 1])
        return tuple(out)


@dataclass(frozen=True)
class PatternD3:
    lam: tuple     # rows k = 1..n
    lamp: tuple    # rows k = 1..n-1

    def __post_init__(self):
        n = len(self.lam)
        _check_rows(self.lam, list(range(1, n + 1)), "D3 unprimed")
        _check_rows(self.lamp, list(range(1, n)), "D3 primed")

    @property
    def n(self):
        return len(self.lam)

    def flatten(self):
        out = []
        for k in range(self.n, 1, -1):
            out.extend(self.lam[k - 1])
            out.extend(self.lamp[k - 2])
        out.extend(self.lam[0])
        return tuple(out)

    def derived_prime0(self, k):
        """lambda'_{k-1,0} = max(lambda_{k1}, lambda_{k-1,1}); computed, never stored."""
        return max(self.lam[k - 1][0], self.lam[k - 2][0])


@dataclass(frozen=True)
class PatternB4:
    """Positive-convention B array, primed row below row k."""

    lam: tuple
    lamp: tuple

    def __post_init__(self):
        n = len(self.lam)
        _check_rows(self.lam, list(range(1, n + 1)), "B4 unprimed")
        _check_rows(self.lamp, list(range(1, n + 1)), "B4 primed")

    @property
    def n(self):
        return len(self.lam)

    def flatten(self):
        out = []
        for k in range(self.n, 0, -1):
            out.extend(self.lam[k - 1])
            out.extend(self.lamp[k - 1])
        return tuple(out)


@dataclass(frozen=True)
class PatternD4:
    lam: tuple     # rows k = 1..n
    lamp: tuple    # rows k = 1..n-1

    def __post_init__(self):
        n = len(self.lam)
        _check_rows(self.lam, list(range(1, n + 1)), "D4 unprimed")
        _check_rows(self.lamp, list(range(1, n)), "D4 primed")

    @property
    def n(self):
        return len(self.lam)

    def flatten(self):
        out = []
        for k in range(self.n, 1, -1):
            out.extend(self.lam[k - 1])
            out.extend(self.lamp[k - 2])
        out.extend(self.lam[0])
        return tuple(out)


# ---------------------------------------------------------------------------
# dominance of highest weights
# ---------------------------------------------------------------------------

def _uniform_parity(values):
    vals = [v for v in values]
    return not vals or all((v - vals[0]) % 2 == 0 for v in vals)


def check_dominant(family, lam):
    """Raise DominanceError unless lam (doubled) is a valid top weight."""
    lam = tuple(lam)
    if not _uniform_parity(lam):
        raise DominanceError("weight entries must all be integers or all half-integers")
    for a, b in zip(lam, lam[1:]):
        if a < b or (a - b) % 2 != 0:
            raise DominanceError("consecutive differences must be nonnegative integers")
    if family == "A":
        pass
    elif family == "B3":
        if lam and lam[0] > 0:
            raise DominanceError("B3 weights must satisfy -2*lambda_1 >= 0")
    elif family == "C3":
        if lam and (lam[0] > 0 or lam[0] % 2 != 0):
            raise DominanceError("C3 weights must be non-positive integers")
    elif family == "D3":
        if len(lam) >= 2 and lam[0] + lam[1] > 0:
            raise DominanceError("D3 weights must satisfy -lambda_1-lambda_2 >= 0")
    elif family == "B4":
        if lam and lam[-1] < 0:
            raise DominanceError("B4 weights must satisfy 2*lambda_n >= 0")
    elif family == "D4":
        if len(lam) >= 2 and lam[-2] + lam[-1] < 0:
            raise DominanceError("D4 weights must satisfy lambda_{n-1}+lambda_n >= 0")
    else:
        raise ValueError("unknown family %r" % (family,))
    return lam


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def _chain_ok(seq):
    return all(a >= b for a, b in zip(seq, seq[1:]))


def _interleave(a, b):
    """a_1 b_1 a_2 b_2 ... for len(a) = len(b) or len(b)+1."""
    out = []
    for i in range(len(a)):
        out.append(a[i])
        if i < len(b):
            out.append(b[i])
    return out


def validate(p) -> bool:
    """True iff the family-specific inequalities and parity rules hold.

    Malformed shapes raise PatternShapeError at construction time, so this
    only judges the inequality content.
    """
    if isinstance(p, GTPatternA):
        flat = p.flatten()
        if not _uniform_parity(flat):
            return False
        for k in range(p.n, 1, -1):
            upper = p.row(k)
            lower = p.row(k - 1)
            for i in range(k - 1):
                if not (upper[i] >= lower[i] >= upper[i + 1]):
                    return False
        return True

    if isinstance(p, PatternB3):
        flat = [x for row in p.lam for x in row] + [x for row in p.lamp for x in row]
        if not _uniform_parity(flat):
            return False
        if any(x > 0 for x in flat):
            return False
        integer_case = flat[0] % 2 == 0 if flat else True
        for k in range(1, p.n + 1):
            lamk = p.lam[k - 1]
            lampk = p.lamp[k - 1]
            if not _chain_ok(_interleave(lampk, lamk)):
                return False
            if k >= 2:
                if not _chain_ok(_interleave(lampk, p.lam[k - 2])):
                    return False
            if integer_case and p.sigma[k - 1] == 1 and lampk[0] > -2:
                return False
        return True

    if isinstance(p, PatternC3):
        flat = [x for row in p.lam for x in row] + [x for row in p.lamp for x in row]
        if any(x % 2 != 0 or x > 0 for x in flat):
            return False
        for k in range(1, p.n + 1):
            if not _chain_ok([0] + _interleave(p.lamp[k - 1], p.lam[k - 1])):
                return False
            if k >= 2:
                if not _chain_ok([0] + _interleave(p.lamp[k - 1], p.lam[k - 2])):
                    return False
        return True

    if isinstance(p, PatternD3):
        flat = [x for row in p.lam for x in row] + [x for row in p.lamp for x in row]
        if not _uniform_parity(flat):
            return False
        # primed entries are non-positive; first unprimed entries may have
        # either sign (they sit inside absolute values below)
        if any(x > 0 for row in p.lamp for x in row):
            return False
        for k in range(2, p.n + 1):
            lamk = p.lam[k - 1]
            lamk1 = p.lam[k - 2]
            lampk = p.lamp[k - 2]
            if not _chain_ok([-abs(lamk[0])] + _interleave(lampk, lamk[1:])):
                return False
            if not _chain_ok([-abs(lamk1[0])] + _interleave(lampk, lamk1[1:])):
                return False
        return True

    if isinstance(p, PatternB4):
        flat = [x for row in p.lam for x in row] + [x for row in p.lamp for x in row]
        if not _uniform_parity(flat):
            return False
        for k in range(1, p.n + 1):
            lamk = p.lam[k - 1]
            lampk = p.lamp[k - 1]
            if not _chain_ok(_interleave(lamk, lampk[:-1]) + [abs(lampk[-1])]):
                return False
            if k >= 2:
                chain = _interleave(lampk[:-1], p.lam[k - 2]) + [abs(lampk[-1])]
                if not _chain_ok(chain):
                    return False
        return True

    if isinstance(p, PatternD4):
        flat = [x for row in p.lam for x in row] + [x for row in p.lamp for x in row]
        if not _uniform_parity(flat):
            return False
        for k in range(2, p.n + 1):
            lamk = p.lam[k - 1]
            lampk = p.lamp[k - 2]
            chain = _interleave(lamk[:-1], lampk[:-1]) + [lampk[-1], abs(lamk[-1])]
            if not _chain_ok(chain):
                return False
        for k in range(1, p.n):
            lamk = p.lam[k - 1]
            lampk = p.lamp[k - 1]
            chain = _interleave(lampk, lamk[:-1]) + [abs(lamk[-1])]
            if not _chain_ok(chain):
                return False
        return True

    raise TypeError("not a pattern: %r" % (p,))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _desc_range(hi, lo):
    """Doubled values hi, hi-2, ..., down to lo (same parity assumed)."""
    return range(hi, lo - 1, -2)


def _walk(bounds, emit):
    """Choose entries left to right, each descending within [lo, hi].

    bounds is a list of (hi, lo) pairs; emit receives the chosen tuple.
    Choosing in this order yields descending lexicographic output.
    """
    row = [0] * len(bounds)

    def rec(i):
        if i == len(bounds):
            emit(tuple(row))
            return
        hi, lo = bounds[i]
        for v in _desc_range(hi, lo):
            row[i] = v
            rec(i + 1)

    rec(0)


def _walk_iter(bounds):
    out = []
    _walk(bounds, out.append)
    return out


def _cap_par(cap, anchor):
    """Largest doubled value <= cap with the parity of anchor."""
    return cap if (cap - anchor) % 2 == 0 else cap - 1


def enumerate_patterns(family, lam):
    """All valid patterns with top row lam, in descending lexicographic order
    of the flattened array (top row first, larger entries first).

    The position in this list is the canonical basis index everywhere else.
    """
    lam = check_dominant(family, tuple(lam))
    dispatch = {"A": _enumerate_A, "B3": _enumerate_B3, "C3": _enumerate_C3,
                "D3": _enumerate_D3, "B4": _enumerate_B4, "D4": _enumerate_D4}
    out = dispatch[family](lam)
    assert all(validate(p) for p in out)
    return out


def _enumerate_A(lam):
    n = len(lam)
    out = []
    rows = [lam]

    def rec(k):
        if k == 1:
            out.append(GTPatternA(tuple(rows)))
            return
        upper = rows[-1]
        for row in _walk_iter([(upper[i], upper[i + 1]) for i in range(k - 1)]):
            rows.append(row)
            rec(k - 1)
            rows.pop()

    rec(n)
    return out


def _enumerate_B3(lam):
    n = len(lam)
    integer_case = lam[0] % 2 == 0
    out = []
    lam_rows, lamp_rows, sig = [None] * n, [None] * n, [None] * n
    lam_rows[n - 1] = tuple(lam)

    def rec(k):
        # flatten order within level k: sigma_k, (lam_k fixed), lamp_k
        lamk = lam_rows[k - 1]
        for s in (1, 0):
            sig[k - 1] = s
            # lamp_k: 0 >= lamp_k1 >= ... interleaving lam_k from above
            bounds = [(_cap_par(0, lamk[0]) if i == 0 else lamk[i - 1], lamk[i])
                      for i in range(k)]
            if s == 1 and integer_case:
                bounds[0] = (min(bounds[0][0], -2), bounds[0][1])
            for lampk in _walk_iter(bounds):
                lamp_rows[k - 1] = lampk
                if k == 1:
                    out.append(PatternB3(tuple(sig), tuple(lam_rows), tuple(lamp_rows)))
                    continue
                for row in _walk_iter([(lampk[i], lampk[i + 1]) for i in range(k - 1)]):
                    lam_rows[k - 2] = row
                    rec(k - 1)

    rec(n)
    return out


def _enumerate_C3(lam):
    n = len(lam)
    out = []
    lam_rows, lamp_rows = [None] * n, [None] * n
    lam_rows[n - 1] = tuple(lam)

    def rec(k):
        lamk = lam_rows[k - 1]
        bounds = [(0 if i == 0 else lamk[i - 1], lamk[i]) for i in range(k)]
        for lampk in _walk_iter(bounds):
            lamp_rows[k - 1] = lampk
            if k == 1:
                out.append(PatternC3(tuple(lam_rows), tuple(lamp_rows)))
                continue
            for row in _walk_iter([(lampk[i], lampk[i + 1]) for i in range(k - 1)]):
                lam_rows[k - 2] = row
                rec(k - 1)

    rec(n)
    return out


def _enumerate_D3(lam):
    n = len(lam)
    out = []
    lam_rows, lamp_rows = [None] * n, [None] * max(n - 1, 0)
    lam_rows[n - 1] = tuple(lam)

    def rec(k):
        if k == 1:
            out.append(PatternD3(tuple(lam_rows), tuple(lamp_rows)))
            return
        lamk = lam_rows[k - 1]
        # lamp_{k-1}: -|lam_k1| >= p_1 >= lam_k2 >= p_2 >= ... >= p_{k-1} >= lam_kk
        bounds = [(-abs(lamk[0]) if i == 0 else lamk[i], lamk[i + 1]) for i in range(k - 1)]
        for p in _walk_iter(bounds):
            lamp_rows[k - 2] = p
            # lam_{k-1}: -|r_1| >= p_1 (so r_1 in [p_1, -p_1]), p_{i-1} >= r_i >= p_i
            row_bounds = [(-p[0], p[0]) if i == 0 else (p[i - 1], p[i]) for i in range(k - 1)]
            for row in _walk_iter(row_bounds):
                lam_rows[k - 2] = row
                rec(k - 1)

    rec(n)
    return out


def _enumerate_B4(lam):
    n = len(lam)
    out = []
    lam_rows, lamp_rows = [None] * n, [None] * n
    lam_rows[n - 1] = tuple(lam)

    def rec(k):
        lamk = lam_rows[k - 1]
        # lamp_k: lam_ki >= p_i >= lam_k,i+1 for i < k; lam_kk >= |p_k|
        bounds = [(lamk[i], lamk[i + 1] if i + 1 < k else -lamk[k - 1]) for i in range(k)]
        for p in _walk_iter(bounds):
            lamp_rows[k - 1] = p
            if k == 1:
                out.append(PatternB4(tuple(lam_rows), tuple(lamp_rows)))
                continue
            # lam_{k-1}: p_i >= r_i >= p_{i+1} for i < k-1; p_{k-1} >= r_{k-1} >= |p_k|
            row_bounds = [(p[i], p[i + 1] if i + 2 < k else abs(p[k - 1])) for i in range(k - 1)]
            for row in _walk_iter(row_bounds):
                lam_rows[k - 2] = row
                rec(k - 1)

    rec(n)
    return out


def _enumerate_D4(lam):
    n = len(lam)
    out = []
    lam_rows, lamp_rows = [None] * n, [None] * max(n - 1, 0)
    lam_rows[n - 1] = tuple(lam)

    def rec(k):
        if k == 1:
            out.append(PatternD4(tuple(lam_rows), tuple(lamp_rows)))
            return
        lamk = lam_rows[k - 1]
        # lamp_{k-1}: lam_ki >= p_i >= lam_k,i+1 for i < k-1; lam_{k,k-1} >= p_{k-1} >= |lam_kk|
        bounds = [(lamk[i], lamk[i + 1] if i + 2 < k else abs(lamk[k - 1])) for i in range(k - 1)]
        for p in _walk_iter(bounds):
            lamp_rows[k - 2] = p
            # lam_{k-1}: p_i >= r_i >= p_{i+1} for i < k-1; p_{k-1} >= r_{k-1} >= -p_{k-1}
            row_bounds = [(p[i], p[i + 1] if i + 2 < k else -p[k - 2]) for i in range(k - 1)]
            for row in _walk_iter(row_bounds):
                lam_rows[k - 2] = row
                rec(k - 1)

    rec(n)
    return out


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------

def weight(p):
    """Doubled weight vector (eigenvalues of the diagonal Cartan generators).

    A type: the k-th entry is (sum of row k) - (sum of row k-1).
    B3/C3/D3: the analogue computed from the interleaved rows; each level
    contributes 2*sum(primed) - sum(unprimed_k) - sum(unprimed_{k-1}), plus
    the sigma flag in the B case and with the derived nu_0 entry in D.
    """
    if isinstance(p, GTPatternA):
        out = []
        prev = 0
        for k in range(1, p.n + 1):
            s = sum(p.row(k))
            out.append(s - prev)
            prev = s
        return tuple(out)

    if isinstance(p, PatternB3):
        out = []
        for k in range(1, p.n + 1):
            s = 2 * sum(p.lamp[k - 1]) - sum(p.lam[k - 1])
            if k >= 2:
                s -= sum(p.lam[k - 2])
            out.append(s + 2 * p.sigma[k - 1])
        return tuple(out)

    if isinstance(p, PatternC3):
        out = []
        for k in range(1, p.n + 1):
            s = 2 * sum(p.lamp[k - 1]) - sum(p.lam[k - 1])
            if k >= 2:
                s -= sum(p.lam[k - 2])
            out.append(s)
        return tuple(out)

    if isinstance(p, PatternD3):
        out = [p.lam[0][0]]
        for k in range(2, p.n + 1):
            nu0 = p.derived_prime0(k)
            s = 2 * (nu0 + sum(p.lamp[k - 2])) - sum(p.lam[k - 1]) - sum(p.lam[k - 2])
            out.append(s)
        return tuple(out)

    raise TypeError("weight is defined for A/B3/C3/D3 patterns, got %r" % (p,))


# ---------------------------------------------------------------------------
# tableau bijection (A type, partition case)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemistandardTableau:
    """Rows of a semistandard tableau, entries in 1..n (plain integers)."""

    rows: tuple

    def __post_init__(self):
        for row in self.rows:
            if any(not isinstance(x, int) or x < 1 for x in row):
                raise ValueError("tableau entries must be positive integers")
        for row in self.rows:
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError("rows must weakly increase")
        for r in range(1, len(self.rows)):
            upper, lower = self.rows[r - 1], self.rows[r]
            if len(lower) > len(upper):
                raise ValueError("shape must be a partition")
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                raise ValueError("columns must strictly increase")

    @property
    def shape(self):
        return tuple(len(row) for row in self.rows)

    def content(self, n):
        out = [0] * n
        for row in self.rows:
            for x in row:
                out[x - 1] += 1
        return tuple(out)


def pattern_to_tableau(p: GTPatternA) -> SemistandardTableau:
    """Fill the boxes of row-k/row-(k-1) skew strips with the entry k."""
    if any(x < 0 for x in p.flatten()):
        raise ValueError("tableau bijection needs nonnegative (partition) entries")
    if any(x % 2 != 0 for x in p.flatten()):
        raise ValueError("tableau bijection needs integer entries")
    n = p.n
    shapes = [tuple(x // 2 for x in p.row(k)) for k in range(1, n + 1)]
    nrows = max((i for i, v in enumerate(shapes[-1]) if v > 0), default=-1) + 1
    rows = [[] for _ in range(nrows)]
    prev = (0,) * n
    for k in range(1, n + 1):
        cur = shapes[k - 1]
        for r in range(nrows):
            have = prev[r] if r < len(prev) else 0
            want = cur[r] if r < len(cur) else 0
            rows[r].extend([k] * (want - have))
        prev = cur
    return SemistandardTableau(tuple(tuple(r) for r in rows))


def tableau_to_pattern(t: SemistandardTableau, n=None) -> GTPatternA:
    if n is None:
        n = max((x for row in t.rows for x in row), default=1)
    rows = []
    for k in range(n, 0, -1):
        shape = []
        for row in t.rows:
            cnt = sum(1 for x in row if x <= k)
            shape.append(cnt)
        shape = shape + [0] * k
        rows.append(tuple(2 * c for c in shape[:k]))
    return GTPatternA(tuple(rows))


# ---------------------------------------------------------------------------
# JSON serialization and weight-convention bridges
# ---------------------------------------------------------------------------

_FAMILY_OF_TYPE = {
    GTPatternA: "A", PatternB3: "B3", PatternC3: "C3",
    PatternD3: "D3", PatternB4: "B4", PatternD4: "D4",
}


def family_of(p):
    return _FAMILY_OF_TYPE[type(p)]


def to_json(p):
    """JSON-ready dict: family tag plus nested arrays of doubled integers."""
    d = {"family": family_of(p)}
    if isinstance(p, GTPatternA):
        d["rows"] = [list(r) for r in p.rows]
    else:
        d["rows"] = [list(r) for r in p.lam]
        d["primed"] = [list(r) for r in p.lamp]
        if isinstance(p, PatternB3):
            d["sigma"] = list(p.sigma)
    return d


def from_json(d):
    fam = d["family"]
    if fam == "A":
        return GTPatternA(tuple(tuple(r) for r in d["rows"]))
    lam = tuple(tuple(r) for r in d["rows"])
    lamp = tuple(tuple(r) for r in d["primed"])
    if fam == "B3":
        return PatternB3(tuple(d["sigma"]), lam, lamp)
    cls = {"C3": PatternC3, "D3": PatternD3, "B4": PatternB4, "D4": PatternD4}[fam]
    return cls(lam, lamp)


def s3_to_dominant(lam):
    """Bridge from the non-positive convention to a standard dominant weight.

    (lam_1, ..., lam_n) with lam_1 <= 0 maps to (-lam_n, ..., -lam_1).  Used
    only at interface boundaries (Weyl oracle, CLI); both sides doubled.
    """
    return tuple(-x for x in reversed(tuple(lam)))


def dominant_to_s3(lam):
    return tuple(-x for x in reversed(tuple(lam)))
