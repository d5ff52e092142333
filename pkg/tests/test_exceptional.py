
import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from mayachain.exceptional import (
    ETA,
    ExceptionalDegreeError,
    OperatorCoeffs,
    QuadratureError,
    RecurrenceDomainError,
    commute_check,
    darboux_flip_residual,
    eigen_residual,
    exceptional_operator,
    intertwiner_A,
    intertwining_residual,
    operator_to_potential,
    orthogonality_check,
    orthogonality_table,
    potential_U,
    rr3_residual,
    rr3_terms,
    rr4_residual,
    rr4_terms,
    seed_eigenfunction,
    xh_ode_residual,
    xh_recurrences,
    xhermite,
    xhermite_wronskian,
)
from mayachain.maya import flip, from_frobenius, xi
from mayachain.poly import IntPoly, RatPoly, hermite, pseudo_wronskian
from mayachain.ratfunc import QuasiRational, RationalFunction, log_derivative

from conftest import maya_diagrams

VALID = [0] + list(range(3, 21))
x = RationalFunction.x()
zs = sp.Symbol("z")


def test_examples():
    assert xhermite(0) == IntPoly.const(1)
    assert xhermite(3) == IntPoly((0, 12, 0, 8))
    assert xhermite(4) == IntPoly((-4, 0, 16, 0, 16))


@pytest.mark.parametrize("n", [1, 2])
def test_missing_degrees(n):
    with pytest.raises(ExceptionalDegreeError):
        xhermite(n)
    with pytest.raises(ExceptionalDegreeError):
        xh_ode_residual(n)
    with pytest.raises(ExceptionalDegreeError):
        orthogonality_check(0, n)


@pytest.mark.parametrize("n", VALID)
def test_expansion_matches_wronskian(n):
    assert xhermite_wronskian(n) == RatPoly(xhermite(n))
    assert xhermite(n).degree == n


@pytest.mark.parametrize("n", VALID)
def test_bilinear_ode(n):
    assert not xh_ode_residual(n)


def test_ode_against_sympy():
    eta = 4 + 8 * zs**2
    for n in (0, 3, 10):
        y = sum(c * zs**i for i, c in enumerate(xhermite(n).c))
        r = (eta * sp.diff(y, zs, 2) - 2 * sp.diff(eta, zs) * sp.diff(y, zs) + sp.diff(eta, zs, 2) * y) \
            - 2 * zs * (eta * sp.diff(y, zs) - sp.diff(eta, zs) * y) + 2 * (n - 2) * eta * y
        assert sp.expand(r) == 0


# recurrences ----------------------------------------------------------------

TABLE = {
    0: ((3,), (4, 0)),
    3: ((6, 4, 0), (7, 5, 3)),
    4: ((7, 5, 3), (8, 6, 4, 0)),
    5: ((8, 6, 4), (9, 7, 5, 3)),
    6: ((9, 7, 5, 3), (10, 8, 6, 4)),
    7: ((10, 8, 6, 4), (11, 9, 7, 5, 3)),
}


@pytest.mark.parametrize("n", sorted(TABLE))
def test_recurrence_degrees(n):
    d3, d4 = TABLE[n]
    assert tuple(j for _, j in rr3_terms(n)) == d3
    assert tuple(j for _, j in rr4_terms(n)) == d4


@pytest.mark.parametrize("n", VALID)
def test_recurrences_hold(n):
    r3, r4 = xh_recurrences(n)
    assert not r3 and not r4


def test_recurrence_generic_degrees():
    for n in range(8, 21):
        assert tuple(j for _, j in rr3_terms(n)) == (n + 3, n + 1, n - 1, n - 3)
        assert tuple(j for _, j in rr4_terms(n)) == (n + 4, n + 2, n, n - 2, n - 4)


def test_recurrence_seed_case():
    # 4z(3+2z^2) * 1 = H^_3
    assert IntPoly((0, 12, 0, 8)) == xhermite(3)
    assert not rr3_residual(0)
    assert not rr4_residual(0)


def test_commute():
    assert commute_check(range(7, 21))


def test_domain_error():
    with pytest.raises(ExceptionalDegreeError):
        rr3_terms(2)


def test_domain_error_raised_on_bad_index():
    # an index in {1,2} with nonzero coefficient must be refused
    from mayachain import exceptional as ex
    with pytest.raises(RecurrenceDomainError):
        ex._clean_terms([(1, 2)], 5)


# intertwining ---------------------------------------------------------------

def test_intertwiner_examples():
    assert intertwiner_A(hermite(0)) == IntPoly.const(16) == xhermite(0) * 16
    q, r = intertwiner_A(hermite(5)).divmod_exact(xhermite(5))
    assert not r and q.degree == 0 and q


@pytest.mark.parametrize("n", [0, 3, 4, 5, 9, 14])
def test_intertwiner_is_wronskian(n):
    from mayachain.poly import int_wronskian
    assert intertwiner_A(hermite(n)) == int_wronskian([hermite(1), hermite(2), hermite(n)])


def test_intertwining():
    assert intertwining_residual(15)


# potentials -----------------------------------------------------------------

def test_potential_examples():
    vac = from_frobenius([], [])
    assert potential_U(vac).full() == x * x
    M = from_frobenius([], [1, 2])
    expect = x * x + (16 * x * x - 8) / (2 * x * x + 1) ** 2 + 4
    assert potential_U(M).full() == expect
    assert potential_U(M).tail == -2 * log_derivative(ETA).derivative() + 4


def test_potential_tail_denominator():
    M = xi((0, 2, 5, 6, 7))
    H = pseudo_wronskian(from_frobenius([], [2, 3, 4, 6]))
    tail = potential_U(M).tail - 2 * M.index
    assert (tail * RationalFunction(H * H)).is_poly
    expect = -2 * (RationalFunction(H.derivative(2) * H - H.derivative() ** 2) / RationalFunction(H * H))
    assert tail == expect


def test_seed_eigenfunction_examples():
    vac = from_frobenius([], [])
    assert seed_eigenfunction(vac, 0) == QuasiRational(-1, 1)
    assert seed_eigenfunction(vac, -1) == QuasiRational(1, 1)
    assert not eigen_residual(vac, 0)
    assert not eigen_residual(vac, -1)
    M = from_frobenius([], [1, 2])
    psi = seed_eigenfunction(M, 0)
    assert psi == QuasiRational(-1, 16 / (8 * x * x + 4))
    assert not eigen_residual(M, 0)


def test_eigen_residual_detects_wrong_energy():
    M = from_frobenius([], [1, 2])
    psi = seed_eigenfunction(M, 5)
    wrong = -psi.derivative().derivative().rat + potential_U(M).full() * psi.rat - psi.rat * 13
    assert wrong


@settings(max_examples=30)
@given(maya_diagrams(4, 6), st.integers(-8, 8))
def test_eigen_relation(M, m):
    assert not eigen_residual(M, m)


@pytest.mark.parametrize("M,m", [((), 0), ((), 2), ((1, 2), 0)])
def test_darboux_examples(M, m):
    assert not darboux_flip_residual(from_frobenius([], list(M)), m)


@settings(max_examples=30)
@given(maya_diagrams(4, 6), st.integers(-8, 8))
def test_darboux_both_directions(M, m):
    assert not darboux_flip_residual(M, m)
    assert not darboux_flip_residual(flip(M, m), m)


# operator -> potential --------------------------------------------------------

def test_operator_potential_examples():
    zero = RationalFunction()
    assert operator_to_potential(OperatorCoeffs(RationalFunction(1), zero, zero)) == zero
    assert operator_to_potential(OperatorCoeffs(RationalFunction(1), -2 * x, zero)) == 1 - x * x
    with pytest.raises(ValueError):
        OperatorCoeffs(zero, zero, zero)


def test_operator_potential_laguerre_oracle():
    p, q = zs, 1 - zs
    sigma = (q - sp.diff(p, zs) / 2) / (2 * p)
    U = p * sigma**2 - p * sp.diff(sigma, zs) - q * sigma
    got = operator_to_potential(OperatorCoeffs(x, 1 - x, RationalFunction()))
    num = sum(c * zs**i for i, c in enumerate(got.num.c))
    den = sum(c * zs**i for i, c in enumerate(got.den.c))
    assert sp.cancel(num / den - U) == 0


def test_exceptional_operator_gauge():
    # -T^ and the rational extension with M = (0|1,2) differ by the constant energy shift
    U = operator_to_potential(exceptional_operator())
    UM = potential_U(from_frobenius([], [1, 2])).full()
    assert U - UM == RationalFunction(-1)
    T = exceptional_operator()
    for n in (0, 3, 4, 7):
        y = RationalFunction(xhermite(n))
        assert T.p * y.derivative().derivative() + T.q * y.derivative() + T.r * y == y * (2 * n)


# orthogonality --------------------------------------------------------------

def test_orthogonality_examples():
    assert orthogonality_check(0, 3) < 1e-12
    assert orthogonality_check(0, 4) < 1e-8
    assert orthogonality_check(3, 3) > 0


def test_orthogonality_all_pairs():
    ds = [0, 3, 4, 5, 6, 7]
    for i, m in enumerate(ds):
        for n in ds[i + 1:]:
            assert orthogonality_check(m, n) < 1e-8
    rows = orthogonality_table(ds)
    assert all(r["inner"] > 0 for r in rows if r["m"] == r["n"])


def test_orthogonality_order_cap():
    with pytest.raises(QuadratureError):
        orthogonality_check(0, 20, tol=1e-30, order=8, max_order=16)
    with pytest.raises(ValueError):
        orthogonality_check(0, 3, tol=0)
