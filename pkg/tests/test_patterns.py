import pytest
from hypothesis import given, settings, strategies as st

from gtbases import branching
from gtbases.patterns import (DominanceError, GTPatternA, PatternB3,
                              PatternShapeError, SemistandardTableau,
                              enumerate_patterns, from_json, pattern_to_tableau,
                              tableau_to_pattern, to_json, validate, weight)


def d(*xs):
    """Double a plain weight."""
    return tuple(2 * x for x in xs)


class TestValidateA:
    def test_good(self):
        p = GTPatternA((d(2, 1, 0), d(2, 0), d(1)))
        assert validate(p)

    def test_row_monotonicity_violation(self):
        p = GTPatternA((d(2, 1, 0), d(0, 2), d(1)))
        assert not validate(p)

    def test_malformed_shape(self):
        with pytest.raises(PatternShapeError):
            GTPatternA((d(2, 1, 0), d(2)))

    def test_b3_sigma_rule(self):
        # integer weights, sigma = 1 forces lam'_k1 <= -1
        p = PatternB3((1,), (d(0),), (d(0),))
        assert not validate(p)
        p = PatternB3((0,), (d(0),), (d(0),))
        assert validate(p)


COUNTS = [
    ("A", d(0, 0, 0), 1),
    ("A", d(2, 1, 0), 8),
    ("C3", d(0, -1), 4),
    ("B4", d(1), 3),
    ("B3", (-1, -1), 4),
    ("D3", d(0, -1), 4),
    ("D4", d(1, 0), 4),
    ("B4", d(1, 0), 5),
]


@pytest.mark.parametrize("family,lam,count", COUNTS)
def test_enumeration_counts(family, lam, count):
    assert len(enumerate_patterns(family, lam)) == count


SERIES_OF = {"B3": "B", "C3": "C", "D3": "D"}


@pytest.mark.parametrize("family,lam", [
    ("A", d(3, 1, 0)), ("A", d(2, 2, 1)), ("A", (1, -1)),
    ("B3", d(-1, -1)), ("B3", (-3, -5)), ("B3", d(-1, -2, -2)),
    ("C3", d(-1, -1)), ("C3", d(0, -2)), ("C3", d(-1, -2, -3)),
    ("D3", d(1, -1)), ("D3", (-1, -3)), ("D3", d(0, -1, -1)),
    ("B4", d(2, 1)), ("B4", (3, 1)), ("B4", d(1, 1, 0)),
    ("D4", d(2, 1)), ("D4", d(1, -1)), ("D4", (3, 1, 1)),
])
def test_count_equals_weyl_oracle(family, lam):
    n = len(lam)
    cnt = len(enumerate_patterns(family, lam))
    if family == "A":
        assert cnt == branching.weyl_dim("A", lam)
    elif family in SERIES_OF:
        assert cnt == branching.weyl_dim_s3(SERIES_OF[family], lam)
    else:
        assert cnt == branching.weyl_dim(family[0], lam)


def test_enumeration_is_sorted_descending():
    for family, lam, _ in COUNTS:
        pats = enumerate_patterns(family, lam)
        flats = [p.flatten() for p in pats]
        assert flats == sorted(flats, reverse=True)
        assert len(set(flats)) == len(flats)


def test_dominance_rejected():
    with pytest.raises(DominanceError):
        enumerate_patterns("A", d(0, 1))
    with pytest.raises(DominanceError):
        enumerate_patterns("C3", d(1, 0))
    with pytest.raises(DominanceError):
        enumerate_patterns("C3", (-1, -1))  # half-integers illegal for C
    with pytest.raises(DominanceError):
        enumerate_patterns("B4", d(1, -1))
    with pytest.raises(DominanceError):
        enumerate_patterns("A", (2, 1))  # mixed parity


def _perturbations(p):
    """All patterns obtained by moving one non-top entry by one unit."""
    if isinstance(p, GTPatternA):
        for k in range(1, p.n):
            for i in range(1, k + 1):
                for step in (2, -2):
                    yield p.shift(k, i, step)
        return
    n = p.n
    rows = [list(r) for r in p.lam]
    primes = [list(r) for r in p.lamp]
    make = type(p)
    for k in range(len(rows)):
        for i in range(len(rows[k])):
            if k == n - 1:
                continue  # top row is pinned to lam
            for step in (2, -2):
                rows[k][i] += step
                lam = tuple(tuple(r) for r in rows)
                rows[k][i] -= step
                if isinstance(p, PatternB3):
                    yield make(p.sigma, lam, p.lamp)
                else:
                    yield make(lam, p.lamp)
    for k in range(len(primes)):
        for i in range(len(primes[k])):
            for step in (2, -2):
                primes[k][i] += step
                lamp = tuple(tuple(r) for r in primes)
                primes[k][i] -= step
                if isinstance(p, PatternB3):
                    yield make(p.sigma, p.lam, lamp)
                else:
                    yield make(p.lam, lamp)


def test_validity_matches_enumeration_at_distance_one():
    # a one-unit perturbation is valid exactly when it appears in the
    # enumerated list for the same top row
    for family, lam, _ in COUNTS:
        pats = enumerate_patterns(family, lam)
        valid = {p.flatten() for p in pats}
        for p in pats:
            for q in _perturbations(p):
                assert validate(q) == (q.flatten() in valid)


def test_weight_examples():
    p = GTPatternA((d(1, 0), d(1)))
    assert weight(p) == d(1, 0)
    p0 = GTPatternA((d(0, 0, 0), d(0, 0), d(0)))
    assert weight(p0) == d(0, 0, 0)
    total = [0, 0, 0]
    for p in enumerate_patterns("A", d(2, 1, 0)):
        for k, w in enumerate(weight(p)):
            total[k] += w
    assert tuple(total) == d(8, 8, 8)


def test_weight_multiset_matches_schur():
    for lam_plain in [(2, 1, 0), (1, 1, 0), (3, 0, 0)]:
        lam = d(*lam_plain)
        expo = branching.schur_exponents(lam_plain, 3)
        got = {}
        for p in enumerate_patterns("A", lam):
            key = tuple(x // 2 for x in weight(p))
            got[key] = got.get(key, 0) + 1
        assert got == expo


class TestTableauBijection:
    def test_single_box(self):
        p = GTPatternA((d(1),))
        t = pattern_to_tableau(p)
        assert t.rows == ((1,),)

    def test_top_pattern(self):
        p = GTPatternA((d(2, 1, 0), d(2, 1), d(2)))
        t = pattern_to_tableau(p)
        assert t.rows == ((1, 1), (2,))

    def test_round_trip_exhaustive(self):
        for p in enumerate_patterns("A", d(2, 1, 0)):
            t = pattern_to_tableau(p)
            assert tableau_to_pattern(t, 3) == p

    def test_rejects_negative(self):
        p = GTPatternA((d(1, -1), d(0)))
        with pytest.raises(ValueError):
            pattern_to_tableau(p)

    def test_semistandard_rules(self):
        with pytest.raises(ValueError):
            SemistandardTableau(((1, 1), (1,)))
        with pytest.raises(ValueError):
            SemistandardTableau(((2, 1),))


def test_json_round_trip():
    for family, lam, _ in COUNTS:
        for p in enumerate_patterns(family, lam):
            assert from_json(to_json(p)) == p


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=2, max_size=3))
def test_enumerated_patterns_all_valid(parts):
    lam = tuple(sorted((2 * x for x in parts), reverse=True))
    for p in enumerate_patterns("A", lam):
        assert validate(p)
