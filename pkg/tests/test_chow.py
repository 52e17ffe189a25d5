from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from kwall.chow import (P1P1xP, P3xPE, ChowClass, PolyC, QuadricInP3, brute_cube_pushforward, chow_mul,
                        cm_class_p44, cm_class_pe, expected_pe, integrate_fiber, log_anticanonical_p1p1,
                        log_anticanonical_pe, proportionality_check, pushforward_family)
from kwall.errors import AmbientMismatch, RangeError
from oracles import cm_p44_sympy, cm_pe_sympy

h, eta, xi = (ChowClass.symbol(P3xPE, s) for s in P3xPE.symbols)
h1, h2, H = (ChowClass.symbol(P1P1xP, s) for s in P1P1xP.symbols)


def _as_sympy(p: PolyC):
    c = sp.Symbol("c")
    return sp.expand(sum(sp.Rational(x.numerator, x.denominator) * c ** k for k, x in enumerate(p.coeffs)))


def test_relations():
    assert (h ** 4).terms == {}
    assert (h1 * h1).terms == {} and (h2 ** 2).terms == {}
    assert (h1 + h2) ** 2 == 2 * (h1 * h2)


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        chow_mul(h, h1)
    with pytest.raises(AmbientMismatch):
        pushforward_family(h1, QuadricInP3)


def test_fibre_integration():
    assert integrate_fiber(h ** 3 * eta) == eta
    assert integrate_fiber(h ** 2 * xi).terms == {}
    # through the quadric family the same class picks up the factor 2h
    assert pushforward_family(h ** 2 * xi, QuadricInP3) == 2 * xi


@pytest.mark.parametrize("d", range(3, 11))
def test_cm_pe_matches_sympy(d):
    expr, (e, x, c) = cm_pe_sympy(d)
    cls = cm_class_pe(d)
    assert set(cls.terms) == {(0, 1, 0), (0, 0, 1)}
    assert _as_sympy(cls.coefficient((0, 1, 0))) == sp.expand(expr.coeff(e))
    assert _as_sympy(cls.coefficient((0, 0, 1))) == sp.expand(expr.coeff(x))
    a, b = expected_pe(d)
    assert cls.coefficient((0, 1, 0)) == a and cls.coefficient((0, 0, 1)) == b


@pytest.mark.parametrize("d", range(3, 11))
def test_cm_p44(d):
    expr, (Hs, c) = cm_p44_sympy(d)
    cls = cm_class_p44(d)
    assert set(cls.terms) == {(0, 0, 1)}
    coeff = cls.coefficient((0, 0, 1))
    assert _as_sympy(coeff) == sp.expand(expr.coeff(Hs))
    cc = PolyC.c()
    assert coeff == 6 * cc * (2 - d * cc) ** 2
    assert coeff(0) == 0
    for k in range(1, 20):
        assert coeff(Fraction(2 * k, d * 20)) > 0


def test_cm_p44_stated_coefficient_differs():
    # the stated 3(2-4c)^2 c is half of the expansion
    cc = PolyC.c()
    assert cm_class_p44(4).coefficient((0, 0, 1)) == 2 * (3 * (2 - 4 * cc) ** 2 * cc)


@pytest.mark.parametrize("d", [3, 4, 7])
def test_brute_expansion_oracle(d):
    lin = dict(log_anticanonical_pe(d).terms)
    assert brute_cube_pushforward(lin, P3xPE) == dict(cm_class_pe(d).terms)
    lin2 = dict(log_anticanonical_p1p1(d).terms)
    assert brute_cube_pushforward(lin2, P1P1xP) == dict(cm_class_p44(d).terms)


def test_range_errors():
    with pytest.raises(RangeError):
        cm_class_pe(2)
    with pytest.raises(RangeError):
        proportionality_check(4, Fraction(1, 2))


@pytest.mark.parametrize("d,c,rho,t", [(4, Fraction(1, 8), Fraction(81, 8), Fraction(1, 6)),
                                       (4, 0, 16, 0),
                                       (5, Fraction(1, 5), 5, Fraction(6, 25))])
def test_proportionality_examples(d, c, rho, t):
    p = proportionality_check(d, c)
    assert (p.rho, p.t) == (rho, t)


def test_json_shape():
    j = cm_class_pe(4).to_json()
    assert j["ambient"] == "P3xPE"
    assert {tuple(t["exponents"]) for t in j["terms"]} == {(0, 1, 0), (0, 0, 1)}
    assert all(isinstance(x, str) for t in j["terms"] for x in t["coeff_poly_in_c"])


rat_c = st.fractions(min_value=0, max_value=Fraction(2, 3), max_denominator=50)


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 10), st.fractions(min_value=0, max_value=1, max_denominator=97))
def test_ratio_identity(d, u):
    c = u * Fraction(2, d)
    if c >= Fraction(2, d):
        return
    a = cm_class_pe(d).coefficient((0, 1, 0))
    b = cm_class_pe(d).coefficient((0, 0, 1))
    assert b(c) * (d * c + 4) == 6 * c * a(c)


@settings(max_examples=30, deadline=None)
@given(rat_c)
def test_evaluation_homomorphism(c):
    before = (h * (2 - 3 * c) - eta - xi * c) ** 3 * (2 * h + eta)
    after = ((h * (2 - 3 * PolyC.c()) - eta - xi * PolyC.c()) ** 3 * (2 * h + eta)).evaluate(c)
    assert before == after
