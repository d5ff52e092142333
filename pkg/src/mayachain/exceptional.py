"""Codimension-two exceptional Hermite polynomials and rational extensions of
the harmonic oscillator.

Every identity here is checked as an exact polynomial or rational-function
identity; the orthogonality check is the one numerical routine.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

import numpy as np
from scipy.special import roots_hermite

from .maya import MayaDiagram, flip, standard_form
from .poly import IntPoly, RatPoly, hermite, pseudo_wronskian, wronskian
from .ratfunc import QuasiRational, RationalFunction, log_derivative

__all__ = [
    "ExceptionalDegreeError",
    "RecurrenceDomainError",
    "QuadratureError",
    "ETA",
    "xhermite",
    "xhermite_wronskian",
    "xh_ode_residual",
    "rr3_residual",
    "rr4_residual",
    "xh_recurrences",
    "rr3_terms",
    "rr4_terms",
    "commute_check",
    "intertwiner_A",
    "intertwining_residual",
    "PotentialUM",
    "potential_U",
    "seed_eigenfunction",
    "eigen_residual",
    "darboux_flip_residual",
    "OperatorCoeffs",
    "operator_to_potential",
    "exceptional_operator",
    "orthogonality_check",
    "orthogonality_table",
]


class ExceptionalDegreeError(ValueError):
    """Degrees 1 and 2 are missing from the exceptional family."""


class RecurrenceDomainError(ValueError):
    """A recurrence would need an exceptional or negative index with nonzero weight."""


class QuadratureError(ArithmeticError):
    """Quadrature did not settle before the order cap."""


# eta = Wr[H_1, H_2] = 4 + 8 z^2
ETA = IntPoly((4, 0, 8))


def _check_degree(n: int) -> None:
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    if n in (1, 2):
        raise ExceptionalDegreeError(f"degree {n} is exceptional (missing)")


@lru_cache(maxsize=None)
def xhermite(n: int) -> IntPoly:
    """H_n + 4n H_{n-2} + 4n(n-3) H_{n-4}, dropping negative indices."""
    _check_degree(n)
    out = hermite(n)
    if n >= 2:
        out = out + hermite(n - 2) * (4 * n)
    if n >= 4:
        out = out + hermite(n - 4) * (4 * n * (n - 3))
    return out


def xhermite_wronskian(n: int) -> RatPoly:
    """Wr[H_1, H_2, H_n] / (8(n-1)(n-2)) computed as a determinant."""
    _check_degree(n)
    w = wronskian([hermite(1), hermite(2), hermite(n)])
    return w * Fraction(1, 8 * (n - 1) * (n - 2))


def xh_ode_residual(n: int) -> IntPoly:
    """(eta y'' - 2 eta' y' + eta'' y) - 2z (eta y' - eta' y) + 2(n-2) eta y at y = xhermite(n)."""
    y = xhermite(n)
    y1, y2 = y.derivative(), y.derivative(2)
    e, e1, e2 = ETA, ETA.derivative(), ETA.derivative(2)
    z = IntPoly.x()
    return (e * y2 - e1 * y1 * 2 + e2 * y) - z * (e * y1 - e1 * y) * 2 + e * y * (2 * (n - 2))


# ---------------------------------------------------------------------------
# recurrences
# ---------------------------------------------------------------------------

def rr3_terms(n: int) -> list[tuple[int, int]]:
    """(coefficient, index) pairs on the right of the three-step relation, zero terms skipped."""
    raw = [
        (1, n + 3),
        (6 * n, n + 1),
        (12 * n * (n - 3), n - 1),
        (8 * n * (n - 4) * (n - 5), n - 3),
    ]
    return _clean_terms(raw, n)


def rr4_terms(n: int) -> list[tuple[int, int]]:
    raw = [
        (1, n + 4),
        (8 * n, n + 2),
        (4 * (6 * n * n - 14 * n + 1), n),
        (32 * n * (n - 3) * (n - 4), n - 2),
        (16 * n * (n - 3) * (n - 5) * (n - 6), n - 4),
    ]
    return _clean_terms(raw, n)


def _clean_terms(raw, n) -> list[tuple[int, int]]:
    _check_degree(n)
    out = []
    for c, j in raw:
        if c == 0:
            continue
        if j < 0 or j in (1, 2):
            raise RecurrenceDomainError(f"n={n} needs index {j} with coefficient {c}")
        out.append((c, j))
    return out


RR3_MULT = IntPoly((0, 12, 0, 8))  # 4z(3 + 2z^2)
RR4_MULT = IntPoly((0, 0, 16, 0, 16))  # 16z^2(1 + z^2)


def _apply_terms(terms, family) -> IntPoly:
    out = IntPoly()
    for c, j in terms:
        out = out + family(j) * c
    return out


def rr3_residual(n: int) -> IntPoly:
    return RR3_MULT * xhermite(n) - _apply_terms(rr3_terms(n), xhermite)


def rr4_residual(n: int) -> IntPoly:
    return RR4_MULT * xhermite(n) - _apply_terms(rr4_terms(n), xhermite)


def xh_recurrences(n: int) -> tuple[IntPoly, IntPoly]:
    return rr3_residual(n), rr4_residual(n)


def commute_check(ns: Iterable[int]) -> bool:
    """Apply both right-hand difference operators in both orders to the family."""

    def op3(family):
        return lambda m: _apply_terms(rr3_terms(m), family)

    def op4(family):
        return lambda m: _apply_terms(rr4_terms(m), family)

    a = op3(op4(xhermite))
    b = op4(op3(xhermite))
    return all(a(n) == b(n) for n in ns)


# ---------------------------------------------------------------------------
# intertwining
# ---------------------------------------------------------------------------

def intertwiner_A(y: IntPoly) -> IntPoly:
    """4(1+2z^2) y'' - 16 z y' + 16 y, which equals Wr[H_1, H_2, y]."""
    z = IntPoly.x()
    return IntPoly((4, 0, 8)) * y.derivative(2) - z * y.derivative() * 16 + y * 16


def _T(y: IntPoly) -> IntPoly:
    return y.derivative(2) - IntPoly.x() * y.derivative() * 2


def _That_cleared(y: IntPoly) -> IntPoly:
    """(1+2z^2) times y'' - (2z + 8z/(1+2z^2)) y'."""
    q = IntPoly((1, 0, 2))
    z = IntPoly.x()
    return q * y.derivative(2) - (z * q * 2 + z * 8) * y.derivative()


def intertwining_residual(D: int) -> bool:
    """True when (1+2z^2)(T^ A - A T)[z^j] vanishes for every j <= D."""
    q = IntPoly((1, 0, 2))
    for j in range(D + 1):
        m = IntPoly.monomial(j)
        if _That_cleared(intertwiner_A(m)) - q * intertwiner_A(_T(m)):
            return False
    return True


# ---------------------------------------------------------------------------
# rational extensions
# ---------------------------------------------------------------------------

def _H(M: MayaDiagram) -> IntPoly:
    return pseudo_wronskian(standard_form(M))


@dataclass(frozen=True)
class PotentialUM:
    """U_M = x^2 + tail; the quadratic term is kept as a flag."""

    source: MayaDiagram
    tail: RationalFunction
    has_x2: bool = True

    def full(self) -> RationalFunction:
        x = RationalFunction.x()
        return x * x + self.tail if self.has_x2 else self.tail


def potential_U(M: MayaDiagram) -> PotentialUM:
    L = log_derivative(_H(M))
    return PotentialUM(M, L.derivative() * -2 + 2 * M.index)


def seed_eigenfunction(M: MayaDiagram, m: int) -> QuasiRational:
    """e^{eps x^2/2} H_{flip(M,m)} / H_M with eps = +1 exactly when m is in M."""
    eps = 1 if m in M else -1
    # raw pseudo-Wronskians, so the constant matches the determinant definition
    return QuasiRational(eps, RationalFunction(pseudo_wronskian(flip(M, m)), pseudo_wronskian(M)))


def eigen_residual(M: MayaDiagram, m: int) -> RationalFunction:
    """(-psi'' + U_M psi - (2m+1) psi) with the Gaussian factor divided out."""
    psi = seed_eigenfunction(M, m)
    psi2 = psi.derivative().derivative()
    U = potential_U(M).full()
    return -psi2.rat + U * psi.rat - psi.rat * (2 * m + 1)


def darboux_flip_residual(M: MayaDiagram, m: int) -> RationalFunction:
    """1/2 (U_{M'} - U_M) + w' with M' = flip(M, m) and w the log derivative of the seed."""
    Mp = flip(M, m)
    w = seed_eigenfunction(M, m).log_derivative()
    half = Fraction(1, 2)
    return (potential_U(Mp).full() - potential_U(M).full()) * half + w.derivative()


# ---------------------------------------------------------------------------
# second-order operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OperatorCoeffs:
    """T[y] = p y'' + q y' + r y."""

    p: RationalFunction
    q: RationalFunction
    r: RationalFunction

    def __post_init__(self):
        if not self.p:
            raise ValueError("leading coefficient p must be nonzero")


def operator_to_potential(T: OperatorCoeffs) -> RationalFunction:
    """U = r + p sigma^2 - p sigma' - q sigma with sigma = (q - p'/2)/(2p)."""
    p, q, r = T.p, T.q, T.r
    sigma = (q - p.derivative() * Fraction(1, 2)) / (p * 2)
    return r + p * sigma * sigma - p * sigma.derivative() - q * sigma


def exceptional_operator() -> OperatorCoeffs:
    """-T^ = -y'' + (2z + 8z/(1+2z^2)) y'."""
    z = RationalFunction.x()
    q = z * 2 + z * 8 / (z * z * 2 + 1)
    return OperatorCoeffs(RationalFunction(-1), q, RationalFunction(0))


# ---------------------------------------------------------------------------
# orthogonality
# ---------------------------------------------------------------------------

def _eval(p: IntPoly, x: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(x)
    for c in reversed(p.c):
        acc = acc * x + float(c)
    return acc


@lru_cache(maxsize=8)
def _nodes(order: int) -> tuple[np.ndarray, np.ndarray]:
    return roots_hermite(order)


def _inner(m: int, n: int, order: int) -> float:
    x, w = _nodes(order)
    eta = _eval(ETA, x)
    return float(np.sum(w * _eval(xhermite(m), x) * _eval(xhermite(n), x) / (eta * eta)))


def _converged(m: int, n: int, order: int, max_order: int, rtol: float) -> tuple[float, int]:
    prev = _inner(m, n, order)
    scale = math.sqrt(_inner(m, m, order) * _inner(n, n, order))
    while order < max_order:
        order *= 2
        cur = _inner(m, n, order)
        if abs(cur - prev) <= rtol * scale:
            return cur, order
        prev = cur
    raise QuadratureError(f"<{m},{n}> did not settle by order {max_order}")


def orthogonality_check(m: int, n: int, tol: float = 1e-8, order: int = 200, max_order: int = 1600) -> float:
    """|<H^_m, H^_n>| / sqrt(<H^_m,H^_m><H^_n,H^_n>) under e^{-z^2}/eta^2."""
    _check_degree(m)
    _check_degree(n)
    if tol <= 0:
        raise ValueError("tol must be positive")
    # settle the diagonal norms first so the ratio is meaningful
    mm, _ = _converged(m, m, order, max_order, tol * 1e-2)
    nn, _ = _converged(n, n, order, max_order, tol * 1e-2)
    if mm <= 0 or nn <= 0:
        raise QuadratureError("non-positive norm")
    if m == n:
        return 1.0
    mn, _ = _converged(m, n, order, max_order, tol * 1e-2)
    return abs(mn) / math.sqrt(mm * nn)


def orthogonality_table(degrees: Iterable[int], order: int = 200, max_order: int = 1600) -> list[dict]:
    """Rows of diagnostics for every pair; values are floats."""
    ds = list(degrees)
    rows = []
    for i, m in enumerate(ds):
        for n in ds[i:]:
            raw, used = _converged(m, n, order, max_order, 1e-12)
            norm = math.sqrt(_inner(m, m, used) * _inner(n, n, used))
            rows.append({"m": m, "n": n, "order": used, "inner": raw, "normalized": raw / norm})
    return rows
