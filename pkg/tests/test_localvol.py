import math
from fractions import Fraction as F

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from kwall.chow import PolyC
from kwall.errors import NotQuasihomogeneous, ParityError, ParseError, RangeError
from kwall.intervals import Interval
from kwall.localvol import (MarkovTriple, MonomialValuation, MuOne, MuZero, OddDEvenIndex, QuotientSing,
                            Excluded, Inconclusive, congruence_monomials, exclude_singularity,
                            global_bound_holds, index_bound, is_admissible, is_T_singularity, lct_catalog,
                            markov_classes, markov_enumerate, nvol_monomial_bound, nvol_quotient,
                            parse_local_equation, vieta_neighbors, weighted_projective_from_markov)
from oracles import exclusion_inequality_holds, lct_brute_weighted, markov_brute, t_singularity_brute

HALF = Interval(F(0), F(1, 2))


# ---------------------------------------------------------------- basic invariants

def test_quotient_sing():
    s = QuotientSing(1, 3, 1)
    assert (s.order, s.index, s.milnor, s.weight) == (9, 3, 0, 2)
    assert QuotientSing(1, 5, 2).label() == "1/25(1,9)"
    with pytest.raises(RangeError):
        QuotientSing(1, 4, 2)


def test_nvol_monomial():
    c = PolyC.c()
    assert nvol_monomial_bound(MonomialValuation(1, 2, 6), c) == (3 - 6 * c) ** 2 / 2
    assert nvol_monomial_bound(MonomialValuation(1, 1, 0), 0) == 4
    assert nvol_monomial_bound(MonomialValuation(2, 3, 0), 0) == F(25, 6)
    with pytest.raises(RangeError):
        nvol_monomial_bound(MonomialValuation(1, 2, 6), F(1, 2))


def test_nvol_quotient():
    assert nvol_quotient(1) == 4 and nvol_quotient(9) == F(4, 9) and nvol_quotient(2) == 2
    vals = [nvol_quotient(r) for r in range(1, 50)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert nvol_quotient(1) == nvol_monomial_bound(MonomialValuation(1, 1, 0), 0)


def test_global_bound():
    assert global_bound_holds(4, F(1, 10), 2) is False
    assert global_bound_holds(4, F(1, 8), 2) is True
    with pytest.raises(RangeError):
        global_bound_holds(4, F(1, 2), 2)


@settings(max_examples=100, deadline=None)
@given(st.integers(3, 10), st.fractions(min_value=0, max_value=1, max_denominator=200))
def test_smooth_point_always_passes(d, u):
    c = u * F(2, d)
    assume(c < F(2, d))
    assert global_bound_holds(d, c, 4)


# ---------------------------------------------------------------- index bounds

def test_index_examples():
    assert index_bound(4, F(1, 4), MuZero) == 2
    assert index_bound(4, F(1, 2) - F(1, 10 ** 6), MuZero) == 5
    assert index_bound(4, F(1, 2) - F(1, 10 ** 6), MuOne) == 4
    assert index_bound(5, F(2, 5) - F(1, 10 ** 6), OddDEvenIndex) == 8
    with pytest.raises(ParityError):
        index_bound(4, F(1, 4), OddDEvenIndex)
    with pytest.raises(RangeError):
        index_bound(4, 0, MuZero)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 12), st.fractions(min_value=0, max_value=1, max_denominator=300))
def test_index_floors_exact(d, u):
    c = u * F(2, d)
    assume(0 < c < F(2, d))
    s = 2 - c * d
    k = index_bound(d, c, MuZero)
    assert 2 * k * k * s * s <= 9
    assert k == d + 1 or 2 * (k + 1) ** 2 * s * s > 9
    k = index_bound(d, c, MuOne)
    assert 2 * k * s <= 3
    assert k == d or 2 * (k + 1) * s > 3
    if d % 2:
        k = index_bound(d, c, OddDEvenIndex)
        assert k % 2 == 0 and 8 * (k // 2) ** 2 * s * s <= 9
        assert k == 2 * d - 2 or 8 * (k // 2 + 1) ** 2 * s * s > 9


# ---------------------------------------------------------------- congruences

def test_congruence_examples():
    assert congruence_monomials(QuotientSing(1, 3, 1), 4, 3) == [(0, 3)]
    assert congruence_monomials(QuotientSing(1, 4, 1), 4, 3) == []
    assert congruence_monomials(QuotientSing(1, 1, 1), 4, 0) == [(0, 0)]


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6), st.integers(1, 6), st.sampled_from([4, 6, 8]), st.integers(0, 12), st.integers(0, 12))
def test_even_d_matches_stated_congruence(n, a, d, i, j):
    assume(math.gcd(a, n) == 1)
    s = QuotientSing(1, n, a)
    stated = (i + (n * a - 1) * j - (d // 2) * n * a) % (n * n) == 0
    assert is_admissible(s, d, i, j) == stated


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 4, 6]), st.integers(1, 7), st.sampled_from([3, 5, 7]))
def test_odd_d_even_index_residue(n, a, d):
    assume(math.gcd(a, n) == 1)
    for i, j in congruence_monomials(QuotientSing(1, n, a), d, 3 * n):
        assert (i - j) % n == n // 2


# ---------------------------------------------------------------- exclusion

@pytest.mark.parametrize("e,n,a", [(1, 3, 1), (1, 4, 1), (1, 5, 1), (1, 5, 2)])
def test_excluded(e, n, a):
    assert isinstance(exclude_singularity(QuotientSing(e, n, a), 4, HALF), Excluded)


def test_one_quarter_inconclusive():
    res = exclude_singularity(QuotientSing(1, 2, 1), 4, HALF)
    assert isinstance(res, Inconclusive)
    assert (res.i, res.j) == (0, 0) and res.c in HALF
    # the surviving witness really satisfies the ord inequality (checked without squaring)
    assert exclusion_inequality_holds(4, 4, res.c, 1, 1, 0)


def test_final_step_of_one_ninth():
    res = exclude_singularity(QuotientSing(1, 3, 1), 4, HALF)
    last = res.trace[-1]
    assert last["weights"] == [1, 2] and last["wD"] == 6
    # 4 sqrt(2*9*2)(1-2c) <= 3(3-6c) fails for every c
    for k in range(1, 50):
        assert not exclusion_inequality_holds(9, 4, F(k, 100), 1, 2, 6)


def test_exclusion_interval_checks():
    with pytest.raises(RangeError):
        exclude_singularity(QuotientSing(1, 3, 1), 4, Interval(F(0), F(1)))


@settings(max_examples=30, deadline=None)
@given(st.fractions(min_value=0, max_value=F(1, 2), max_denominator=40),
       st.fractions(min_value=0, max_value=F(1, 2), max_denominator=40),
       st.sampled_from([(1, 3, 1), (1, 4, 1), (1, 5, 1), (1, 5, 2)]))
def test_exclusion_monotone(x, y, sing):
    lo, hi = sorted((x, y))
    assume(lo < hi)
    assert isinstance(exclude_singularity(QuotientSing(*sing), 4, Interval(lo, hi)), Excluded)


# ---------------------------------------------------------------- Markov

def test_markov_small():
    assert [t.as_tuple() for t in markov_classes(12)] == [(1, 1, 1), (1, 3, 1), (1, 3, 5), (3, 11, 1)]
    assert markov_enumerate(1) == [MarkovTriple(1, 1, 1)]
    nb = vieta_neighbors(MarkovTriple(1, 3, 5))[0]
    assert nb == MarkovTriple(59, 3, 5) and nb.is_solution()


def test_published_tuple_is_not_a_solution():
    # the printed (11,3,5) fails the equation: 121 + 9 + 50 = 180 but 4*11*3*5 = 660
    assert not MarkovTriple(11, 3, 5).is_solution()
    assert MarkovTriple(3, 11, 1).is_solution()


def test_markov_brute_force():
    got = {t.as_tuple() for t in markov_enumerate(200)}
    assert got == markov_brute(200)


def test_vieta_closed():
    triples = markov_enumerate(2000)
    s = set(triples)
    for t in triples:
        assert t.is_solution()
        for nb in vieta_neighbors(t):
            assert nb.is_solution() or min(nb.as_tuple()) <= 0
            if min(nb.as_tuple()) > 0 and max(nb.as_tuple()) <= 2000:
                assert nb in s


def test_weighted_projective():
    assert weighted_projective_from_markov(MarkovTriple(1, 1, 1)) == (1, 1, 2)
    assert weighted_projective_from_markov(MarkovTriple(1, 3, 1)) == (1, 2, 9)
    assert weighted_projective_from_markov(MarkovTriple(1, 3, 5)) == (1, 9, 50)
    with pytest.raises(RangeError):
        weighted_projective_from_markov(MarkovTriple(11, 3, 5))


# ---------------------------------------------------------------- T-singularities

def test_t_examples():
    t = is_T_singularity(4, 1)
    assert (t.e, t.n, t.a, t.milnor) == (1, 2, 1, 0)
    t = is_T_singularity(2, 1)
    assert (t.e, t.n, t.a, t.milnor) == (2, 1, 1, 1)
    t = is_T_singularity(9, 2)
    assert (t.e, t.n, t.a) == (1, 3, 1)
    assert is_T_singularity(5, 2) is None


def test_t_against_brute():
    for r in range(1, 60):
        for b in range(1, r + 1):
            if math.gcd(b, r) != 1:
                continue
            got = is_T_singularity(r, b)
            brute = t_singularity_brute(r, b)
            if got is None:
                assert brute == []
            else:
                assert (got.e, got.n, got.a) in brute


# ---------------------------------------------------------------- lct

@pytest.mark.parametrize("entry,value", [("E_12", F(10, 21)), ("E_13", F(7, 15)), ("E_14", F(11, 24)),
                                         ("J_{4,∞}", F(5, 12)), ("J_{3,0}", F(4, 9)), ("A_1", 1),
                                         ("quadruple conic", F(1, 4)),
                                         ("triple conic + transverse conic", F(1, 3)), ("A_7", F(5, 8))])
def test_lct_catalog(entry, value):
    assert lct_catalog(entry).lct == value


def test_lct_skoda_and_caveat():
    q = lct_catalog("quadruple conic")
    assert q.skoda_bound == F(1, 2) and q.multiplicity == 4
    assert lct_catalog("J_{3,0}").nondegeneracy_assumed
    assert not lct_catalog("E_12").nondegeneracy_assumed
    with pytest.raises(NotQuasihomogeneous):
        lct_catalog("J_{3,0}", strict=True)
    with pytest.raises(ParseError):
        parse_local_equation("x^2 + 1")


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12))
def test_lct_diagonal(p, q):
    assume(p + q >= 3)
    r = lct_catalog(f"x^{p} + y^{q}")
    assert r.lct == lct_brute_weighted(p, q)
    assert r.lct <= 1 and r.lct <= r.skoda_bound


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 30))
def test_lct_ak(k):
    assert lct_catalog(f"A_{k}").lct == min(F(1), F(1, 2) + F(1, k + 1))
