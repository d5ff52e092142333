"""Rational solutions of the A_{2n} Noumi-Yamada system.

Solutions come from odd-cyclic dressing chains by the substitution
f_i(z) = gamma*(w_i + w_{i+1})(gamma*z) with gamma^2 = -1/delta.  The
module also provides the w <-> f change of variables, the affine Weyl group
action, and the reduction of A_2 solutions to scalar P_IV.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence, Union

from .chain import ChainSolution
from .ratfunc import (
    FieldMismatch,
    QuadRationalFunction,
    RationalFunction,
    is_rational_square,
    scale_argument,
)

__all__ = [
    "PainleveSolution",
    "P4ScalarSolution",
    "SingularTransformation",
    "painleve_from_chain",
    "system_residuals",
    "normalization_check",
    "verify_painleve",
    "f_from_w",
    "w_from_f",
    "backlund_s",
    "backlund_pi",
    "apply_word",
    "parse_word",
    "p4_reduction",
    "p4_residual",
    "P4_D",
]

Func = Union[RationalFunction, QuadRationalFunction]

# gamma^2 for the scalar P_IV variable: c^2 = -1/2
P4_D = Fraction(-1, 2)


class SingularTransformation(ValueError):
    """A Weyl reflection s_k was applied where f_k vanishes identically."""


def _simplify(f: Func) -> Func:
    if isinstance(f, QuadRationalFunction) and not f.im:
        return f.re
    return f


@dataclass(frozen=True)
class PainleveSolution:
    f: tuple
    alpha: tuple[Fraction, ...]
    d: Fraction | None = None

    def __post_init__(self):
        if len(self.f) != len(self.alpha):
            raise ValueError("f and alpha must have the same length")
        if len(self.f) % 2 == 0:
            raise ValueError("the system needs an odd number of components")

    @property
    def n(self) -> int:
        return (len(self.f) - 1) // 2

    @classmethod
    def make(cls, f: Sequence, alpha: Sequence, d=None) -> "PainleveSolution":
        fs = tuple(_simplify(RationalFunction.coerce(x) if not isinstance(x, QuadRationalFunction) else x) for x in f)
        return cls(fs, tuple(Fraction(a) for a in alpha), None if d is None else Fraction(d))


@dataclass(frozen=True)
class P4ScalarSolution:
    y: Func
    a: Fraction
    b: Fraction
    residual: Func


def painleve_from_chain(chain: ChainSolution) -> PainleveSolution:
    if chain.delta == 0:
        raise ValueError("shift delta = 0 gives no Painleve solution")
    if chain.p % 2 == 0:
        raise ValueError("only odd periods map to the A_{2n} system")
    d = Fraction(-1, chain.delta)
    w = chain.w
    p = chain.p
    fs = []
    for i in range(p):
        s = scale_argument(w[i] + w[(i + 1) % p], d)
        # gamma*(re + gamma*im) = d*im + gamma*re
        fs.append(_simplify(QuadRationalFunction(s.im * d, s.re, d)))
    alpha = tuple(Fraction(-ai, chain.delta) for ai in chain.a)
    return PainleveSolution(tuple(fs), alpha, d)


def _sum(fs) -> Func:
    total = RationalFunction()
    for f in fs:
        total = f + total
    return total


def system_residuals(sol: PainleveSolution) -> list[Func]:
    """f_i' + f_i*(sum of odd-offset f minus sum of even-offset f) - alpha_i."""
    f = sol.f
    m = len(f)
    n = sol.n
    out = []
    for i in range(m):
        odd = _sum(f[(i + 2 * j - 1) % m] for j in range(1, n + 1))
        even = _sum(f[(i + 2 * j) % m] for j in range(1, n + 1))
        out.append(_simplify(f[i].derivative() + f[i] * (odd - even) - sol.alpha[i]))
    return out


def normalization_check(sol: PainleveSolution) -> tuple[Func, Fraction]:
    return _simplify(_sum(sol.f) - RationalFunction.x()), sum(sol.alpha) - 1


def verify_painleve(sol: PainleveSolution) -> bool:
    fz, az = normalization_check(sol)
    return not fz and az == 0 and all(not r for r in system_residuals(sol))


def f_from_w(w: Sequence) -> list:
    m = len(w)
    if m % 2 == 0:
        raise ValueError("the w <-> f map is invertible only for odd length")
    return [_simplify(w[i] + w[(i + 1) % m]) for i in range(m)]


def w_from_f(f: Sequence) -> list:
    m = len(f)
    if m % 2 == 0:
        raise ValueError("the w <-> f map is invertible only for odd length")
    half = Fraction(1, 2)
    out = []
    for i in range(m):
        acc = RationalFunction()
        for j in range(m):
            term = f[(i + j) % m]
            acc = (term + acc) if j % 2 == 0 else (acc - term)
        out.append(_simplify(acc * half))
    return out


def backlund_s(sol: PainleveSolution, k: int) -> PainleveSolution:
    m = len(sol.f)
    k %= m
    fk = sol.f[k]
    if not fk:
        raise SingularTransformation(f"s_{k} is singular: f_{k} vanishes")
    ak = sol.alpha[k]
    f = list(sol.f)
    alpha = list(sol.alpha)
    q = fk.inverse() * ak
    f[(k + 1) % m] = _simplify(f[(k + 1) % m] - q)
    f[(k - 1) % m] = _simplify(f[(k - 1) % m] + q)
    alpha[k] = -ak
    alpha[(k + 1) % m] += ak
    alpha[(k - 1) % m] += ak
    return PainleveSolution(tuple(f), tuple(alpha), sol.d)


def backlund_pi(sol: PainleveSolution) -> PainleveSolution:
    """Cyclic shift f_i -> f_{i+1}, alpha_i -> alpha_{i+1}."""
    return PainleveSolution(sol.f[1:] + sol.f[:1], sol.alpha[1:] + sol.alpha[:1], sol.d)


def parse_word(text: str) -> list[str]:
    """'s1 s0 pi' or 's1,s0' -> ['s1', 's0', 'pi']; letters are applied right to left."""
    toks = [t for t in text.replace(",", " ").replace("*", " ").split() if t]
    for t in toks:
        if t != "pi" and not (t.startswith("s") and t[1:].isdigit()):
            raise ValueError(f"unknown generator {t!r}")
    return toks


def apply_word(sol: PainleveSolution, word: Sequence[str] | str) -> PainleveSolution:
    """Apply a word in the generators; the rightmost letter acts first."""
    if isinstance(word, str):
        word = parse_word(word)
    for g in reversed(list(word)):
        sol = backlund_pi(sol) if g == "pi" else backlund_s(sol, int(g[1:]))
    return sol


# ---------------------------------------------------------------------------
# scalar P_IV
# ---------------------------------------------------------------------------

def _to_p4_field(f0: Func) -> QuadRationalFunction:
    if isinstance(f0, RationalFunction):
        return QuadRationalFunction(f0, 0, P4_D)
    if f0.d == P4_D:
        return f0
    # gamma_f = r*c needs gamma_f^2 / c^2 to be a rational square
    ratio = f0.d / P4_D
    if not is_rational_square(ratio):
        raise FieldMismatch(f"cannot embed Q(sqrt({f0.d})) into Q(sqrt({P4_D}))")
    r = Fraction(isqrt(ratio.numerator), isqrt(ratio.denominator))
    return QuadRationalFunction(f0.re, f0.im * r, P4_D)


def p4_residual(y: Func, a, b) -> Func:
    """y'' - y'^2/(2y) - 3/2 y^3 - 4t y^2 - 2(t^2 - a) y - b/y."""
    a, b = Fraction(a), Fraction(b)
    if not y:
        raise ZeroDivisionError("y vanishes identically")
    t = RationalFunction.x()
    y1 = y.derivative()
    y2 = y1.derivative()
    yinv = y.inverse()
    res = (
        y2
        - y1 * y1 * yinv * Fraction(1, 2)
        - y * y * y * Fraction(3, 2)
        - y * y * t * 4
        - y * (t * t - a) * 2
        - yinv * b
    )
    return _simplify(res)


def p4_reduction(sol: PainleveSolution) -> P4ScalarSolution:
    """y(t) = -(1/c) f_0(-t/c) with c^2 = -1/2, a = alpha_2 - alpha_1, b = -2 alpha_0^2.

    Substituting into the f_0 equation obtained by eliminating f_1, f_2 fixes
    a uniquely: the coefficient of y is 2c^2(c^2 z^2 - a), which must equal
    z^2/2 + alpha_2 - alpha_1.
    """
    if len(sol.f) != 3:
        raise ValueError("scalar reduction needs an A_2 solution")
    f0 = sol.f[0]
    if not f0:
        raise ValueError("f_0 vanishes; rotate with pi first")
    # -1/c = 2c and -t/c = 2c t
    g = _to_p4_field(f0)
    s = scale_argument(g, P4_D, 2)
    # 2c*(re + c*im) = 2 c^2 im + 2c re
    y = _simplify(QuadRationalFunction(s.im * (2 * P4_D), s.re * 2, P4_D))
    a = sol.alpha[2] - sol.alpha[1]
    b = -2 * sol.alpha[0] ** 2
    return P4ScalarSolution(y, a, b, p4_residual(y, a, b))
