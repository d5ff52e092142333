import json
from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, settings, strategies as st

from mayachain.poly import IntPoly, hermite
from mayachain.ratfunc import (
    FieldMismatch,
    QuadExtScalar,
    QuadRationalFunction,
    QuasiRational,
    RationalFunction,
    frac_from_str,
    frac_to_str,
    is_rational_square,
    log_derivative,
    rf_from_json,
    rf_to_json,
    scale_argument,
)

z = sp.Symbol("z")
x = RationalFunction.x()

polys = st.lists(st.integers(-6, 6), max_size=5).map(IntPoly)
nonzero_polys = polys.filter(bool)
rfs = st.builds(RationalFunction, polys, nonzero_polys)
nonsquare_d = st.sampled_from([Fraction(-1), Fraction(-1, 2), Fraction(-1, 6), Fraction(-1, 10), Fraction(2), Fraction(3, 5)])


def to_sp(f: RationalFunction):
    num = sum(sp.Integer(c) * z**i for i, c in enumerate(f.num.c))
    den = sum(sp.Integer(c) * z**i for i, c in enumerate(f.den.c))
    return num / den


def q_to_sp(f: QuadRationalFunction):
    g = sp.sqrt(sp.Rational(f.d.numerator, f.d.denominator))
    return to_sp(f.re) + g * to_sp(f.im)


# canonical form ----------------------------------------------------------------

@given(rfs)
def test_canonical_form(f):
    assert f.den.lc > 0
    if f.num:
        g = sp.gcd(to_sp(RationalFunction(f.num)), to_sp(RationalFunction(f.den)))
        assert sp.Poly(g, z).degree() == 0
    else:
        assert f.den == IntPoly.const(1)


@given(rfs, nonzero_polys)
def test_representation_is_unique(f, h):
    g = RationalFunction(f.num * h, f.den * h)
    assert g == f
    assert hash(g) == hash(f)


@given(rfs, rfs)
def test_field_ops_against_sympy(f, g):
    assert sp.cancel(to_sp(f + g) - to_sp(f) - to_sp(g)) == 0
    assert sp.cancel(to_sp(f - g) - to_sp(f) + to_sp(g)) == 0
    assert sp.cancel(to_sp(f * g) - to_sp(f) * to_sp(g)) == 0
    if g:
        assert sp.cancel(to_sp(f / g) - to_sp(f) / to_sp(g)) == 0


@given(rfs)
def test_derivative_against_sympy(f):
    assert sp.cancel(to_sp(f.derivative()) - sp.diff(to_sp(f), z)) == 0


@given(rfs, rfs, rfs)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == RationalFunction()
    if a:
        assert a * a.inverse() == RationalFunction(1)


def test_examples():
    assert (1 / x).derivative() == -1 / (x * x)
    assert (x + 1 / x) * x == x * x + 1
    g = QuadRationalFunction.gamma(Fraction(-1, 2))
    assert g * x + g * x == g * x * 2
    assert (g * g).im == RationalFunction() and (g * g).re == RationalFunction(Fraction(-1, 2))


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFunction(1, 0)
    with pytest.raises(ZeroDivisionError):
        RationalFunction().inverse()


def test_log_derivative_examples():
    assert log_derivative(IntPoly((4, 0, 8))) == 4 * x / (2 * x * x + 1)
    assert log_derivative(IntPoly.const(7)) == RationalFunction()
    assert log_derivative(hermite(2)) == 8 * x / (4 * x * x - 2)


@given(nonzero_polys)
def test_log_derivative_matches_sympy(p):
    f = RationalFunction(p)
    assert sp.cancel(to_sp(log_derivative(p)) - sp.diff(to_sp(f), z) / to_sp(f)) == 0


# Q(gamma) -------------------------------------------------------------------

def test_square_d_rejected():
    for d in (4, Fraction(1, 9), 0):
        with pytest.raises(ValueError):
            QuadRationalFunction(x, 1, d)
    assert is_rational_square(Fraction(9, 4))
    assert not is_rational_square(Fraction(-1, 2))


def test_field_mismatch():
    a = QuadRationalFunction(x, 1, Fraction(-1, 2))
    b = QuadRationalFunction(x, 1, Fraction(-1, 6))
    with pytest.raises(FieldMismatch):
        a + b


@given(rfs, rfs, rfs, rfs, nonsquare_d)
@settings(max_examples=20)
def test_quad_ops_against_sympy(a, b, c, e, d):
    f = QuadRationalFunction(a, b, d)
    g = QuadRationalFunction(c, e, d)
    assert sp.simplify(q_to_sp(f * g) - q_to_sp(f) * q_to_sp(g)) == 0
    assert sp.simplify(q_to_sp(f + g) - q_to_sp(f) - q_to_sp(g)) == 0
    if g:
        assert sp.simplify(q_to_sp(f / g) - q_to_sp(f) / q_to_sp(g)) == 0
    assert sp.simplify(q_to_sp(f.derivative()) - sp.diff(q_to_sp(f), z)) == 0


def test_quad_scalar():
    d = Fraction(-1, 2)
    u = QuadExtScalar(1, 2, d)
    assert u * u.inverse() == QuadExtScalar(1, 0, d)
    assert QuadExtScalar.from_json(u.to_json()) == u


def test_scale_argument_examples():
    d = Fraction(-1, 2)
    g = QuadRationalFunction.gamma(d)
    assert scale_argument(x, d) == g * x
    assert scale_argument(x * x, d) == QuadRationalFunction(-x * x / 2, 0, d)
    d6 = Fraction(-1, 6)
    got = scale_argument(1 / (x * x + 1), d6)
    assert got == QuadRationalFunction(1 / (-x * x / 6 + 1), 0, d6)


@given(rfs, nonsquare_d, st.fractions(min_value=-3, max_value=3).filter(bool))
@settings(max_examples=20)
def test_scale_argument_against_sympy(f, d, b):
    s = scale_argument(f, d, b)
    g = sp.sqrt(sp.Rational(d.numerator, d.denominator))
    expect = to_sp(f).subs(z, sp.Rational(b.numerator, b.denominator) * g * z)
    assume(expect.has(z) or expect.is_finite)
    assert sp.simplify(q_to_sp(s) - expect) == 0


@given(rfs)
def test_scale_argument_chain_rule(f):
    d = Fraction(-1, 6)
    g = QuadRationalFunction.gamma(d)
    # d/dz f(gamma z) = gamma f'(gamma z)
    assert scale_argument(f, d).derivative() == g * scale_argument(f.derivative(), d)


# quasi-rational ---------------------------------------------------------------

@given(rfs.filter(bool), st.sampled_from([1, -1]))
@settings(max_examples=20)
def test_quasi_rational_derivative(r, eps):
    q = QuasiRational(eps, r)
    expect = sp.diff(sp.exp(eps * z**2 / 2) * to_sp(r), z) / sp.exp(eps * z**2 / 2)
    assert sp.simplify(to_sp(q.derivative().rat) - expect) == 0
    assert q.log_derivative() == q.derivative().rat / r


# encoding -------------------------------------------------------------------

@given(rfs, rfs, nonsquare_d)
def test_json_roundtrip(a, b, d):
    assert rf_from_json(json.loads(json.dumps(rf_to_json(a)))) == a
    q = QuadRationalFunction(a, b, d)
    assert rf_from_json(json.loads(json.dumps(rf_to_json(q)))) == q


@given(st.fractions())
def test_fraction_strings(q):
    assert frac_from_str(frac_to_str(q)) == q
