"""Rational functions over Q and over a quadratic extension Q(gamma), gamma^2 = d.

A function over Q is kept as ``num/den`` with integer polynomials that are
coprime, share no integer content, and ``den`` has positive leading
coefficient.  That form is unique, so zero testing is ``num == 0``.

Over Q(gamma) a function is written ``re + gamma*im`` with ``re, im`` in Q(z).
Because d is not a rational square, gamma is not in Q(z) and the pair
(re, im) is unique.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .poly import IntPoly, RatPoly, format_poly, poly_gcd

__all__ = [
    "QuadExtScalar",
    "RationalFunction",
    "QuadRationalFunction",
    "QuasiRational",
    "FieldMismatch",
    "log_derivative",
    "scale_argument",
    "is_rational_square",
    "rf_to_json",
    "rf_from_json",
    "frac_to_str",
    "frac_from_str",
]


class FieldMismatch(ValueError):
    """Operands live in different quadratic extensions."""


def frac_to_str(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def frac_from_str(s) -> Fraction:
    return Fraction(s)


def is_rational_square(q) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    n, m = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(m) ** 2 == m


def _check_d(d) -> Fraction:
    d = Fraction(d)
    if d == 0 or is_rational_square(d):
        raise ValueError(f"extension parameter d={d} must be a non-square rational")
    return d


# ---------------------------------------------------------------------------
# scalars a + b*gamma
# ---------------------------------------------------------------------------

class QuadExtScalar:
    __slots__ = ("a", "b", "d")

    def __init__(self, a=0, b=0, d=-1):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = _check_d(d)

    def _coerce(self, other) -> "QuadExtScalar":
        if isinstance(other, QuadExtScalar):
            if other.d != self.d:
                raise FieldMismatch(f"d={self.d} vs d={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExtScalar(other, 0, self.d)
        raise TypeError(type(other).__name__)

    def __add__(self, o):
        o = self._coerce(o)
        return QuadExtScalar(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtScalar(-self.a, -self.b, self.d)

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return self._coerce(o) - self

    def __mul__(self, o):
        o = self._coerce(o)
        return QuadExtScalar(self.a * o.a + self.d * self.b * o.b, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExtScalar":
        n = self.a * self.a - self.d * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExtScalar(self.a / n, -self.b / n, self.d)

    def __truediv__(self, o):
        return self * self._coerce(o).inverse()

    def __rtruediv__(self, o):
        return self._coerce(o) * self.inverse()

    def __eq__(self, o):
        try:
            o = self._coerce(o)
        except (TypeError, FieldMismatch):
            return False
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"QuadExtScalar({self.a}, {self.b}, d={self.d})"

    def to_json(self) -> dict:
        return {"a": frac_to_str(self.a), "b": frac_to_str(self.b), "d": frac_to_str(self.d)}

    @classmethod
    def from_json(cls, obj: dict) -> "QuadExtScalar":
        return cls(Fraction(obj["a"]), Fraction(obj["b"]), Fraction(obj["d"]))


# ---------------------------------------------------------------------------
# Q(z)
# ---------------------------------------------------------------------------

Scalar = Union[int, Fraction]


def _as_intpoly_pair(v) -> tuple[IntPoly, int]:
    """Return (integer polynomial, positive integer denominator)."""
    if isinstance(v, IntPoly):
        return v, 1
    if isinstance(v, RatPoly):
        return v.num, v.den
    if isinstance(v, int):
        return IntPoly.const(v), 1
    if isinstance(v, Fraction):
        return IntPoly.const(v.numerator), v.denominator
    raise TypeError(f"unsupported polynomial type {type(v).__name__}")


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1, _reduced: bool = False):
        if _reduced:
            self.num, self.den = num, den
            return
        n, nd = _as_intpoly_pair(num)
        dp, dd = _as_intpoly_pair(den)
        if not dp:
            raise ZeroDivisionError("rational function with zero denominator")
        # n/nd over dp/dd
        n = n * dd
        dp = dp * nd
        self.num, self.den = _normalize(n, dp)

    @classmethod
    def coerce(cls, v) -> "RationalFunction":
        if isinstance(v, RationalFunction):
            return v
        return cls(v)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(IntPoly.x())

    @property
    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadRationalFunction):
            return other == self
        try:
            other = RationalFunction.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def __str__(self) -> str:
        return self.to_str()

    def to_str(self, var: str = "z") -> str:
        if self.den == 1:
            return format_poly(self.num.c, var)
        if self.den.degree == 0:
            return format_poly([Fraction(a, self.den.c[0]) for a in self.num.c], var)
        return f"({format_poly(self.num.c, var)})/({format_poly(self.den.c, var)})"

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        if isinstance(other, (QuadRationalFunction, QuadExtScalar)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        if not o.num:
            return self
        if not self.num:
            return o
        if self.den == o.den:
            return RationalFunction._from_ints(self.num + o.num, self.den)
        if self.den.degree == 0 and o.den.degree == 0:
            a, b = self.den.c[0], o.den.c[0]
            return RationalFunction._from_ints(self.num * b + o.num * a, IntPoly.const(a * b))
        g = poly_gcd(self.den, o.den)
        if g.degree == 0:
            return RationalFunction._from_ints(self.num * o.den + o.num * self.den, self.den * o.den)
        d1 = self.den.exact_div(g)
        d2 = o.den.exact_div(g)
        return RationalFunction._from_ints(self.num * d2 + o.num * d1, d1 * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (QuadRationalFunction, QuadExtScalar)):
            return NotImplemented
        return self + (-RationalFunction.coerce(other))

    def __rsub__(self, other):
        return RationalFunction.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (QuadRationalFunction, QuadExtScalar)):
            return NotImplemented
        o = RationalFunction.coerce(other)
        if not o.num or not self.num:
            return RationalFunction()
        # cross-cancel before multiplying
        g1 = poly_gcd(self.num, o.den) if o.den.degree > 0 else IntPoly.const(1)
        g2 = poly_gcd(o.num, self.den) if self.den.degree > 0 else IntPoly.const(1)
        n1 = self.num.exact_div(g1) if g1.degree > 0 else self.num
        d2 = o.den.exact_div(g1) if g1.degree > 0 else o.den
        n2 = o.num.exact_div(g2) if g2.degree > 0 else o.num
        d1 = self.den.exact_div(g2) if g2.degree > 0 else self.den
        return RationalFunction._from_coprime(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of the zero function")
        return RationalFunction._from_coprime(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (QuadRationalFunction, QuadExtScalar)):
            return QuadRationalFunction.coerce(self, other.d) / other
        return self * RationalFunction.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalFunction.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction._from_coprime(self.num**n, self.den**n)

    def derivative(self) -> "RationalFunction":
        if self.den.degree == 0:
            return RationalFunction._from_ints(self.num.derivative(), self.den)
        n, dd = self.num, self.den
        return RationalFunction._from_ints(n.derivative() * dd - n * dd.derivative(), dd * dd)

    def __call__(self, x):
        if isinstance(x, (int, Fraction)):
            return Fraction(self.num(Fraction(x))) / self.den(Fraction(x))
        return self.num(x) / self.den(x)

    def scale(self, r) -> "RationalFunction":
        """Return f(r z) for rational r."""
        r = Fraction(r)
        num = RatPoly.from_fractions([c * r**i for i, c in enumerate(self.num.c)])
        den = RatPoly.from_fractions([c * r**i for i, c in enumerate(self.den.c)])
        return RationalFunction(num, den)

    def parity(self) -> int:
        """+1 for even, -1 for odd, 0 otherwise (zero counts as even)."""
        if not self.num:
            return 1
        pn = _poly_parity(self.num)
        pd = _poly_parity(self.den)
        if pn and pd:
            return pn * pd
        return 0

    @classmethod
    def _from_ints(cls, num: IntPoly, den: IntPoly) -> "RationalFunction":
        n, d = _normalize(num, den)
        return cls(n, d, _reduced=True)

    @classmethod
    def _from_coprime(cls, num: IntPoly, den: IntPoly) -> "RationalFunction":
        n, d = _normalize(num, den, coprime=True)
        return cls(n, d, _reduced=True)


def _poly_parity(p: IntPoly) -> int:
    c = p.c
    if all(c[i] == 0 for i in range(1, len(c), 2)):
        return 1
    if all(c[i] == 0 for i in range(0, len(c), 2)):
        return -1
    return 0


def _normalize(num: IntPoly, den: IntPoly, coprime: bool = False) -> tuple[IntPoly, IntPoly]:
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return IntPoly(), IntPoly.const(1)
    if not coprime and den.degree > 0 and num.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    h = gcd(num.content(), den.content())
    if den.lc < 0:
        h = -h
    if h != 1:
        num = num.exquo_int(h)
        den = den.exquo_int(h)
    return num, den


def log_derivative(p) -> RationalFunction:
    """p'/p in lowest terms."""
    P = p if isinstance(p, IntPoly) else _as_intpoly_pair(p)[0]
    if not P:
        raise ZeroDivisionError("log derivative of the zero polynomial")
    return RationalFunction._from_ints(P.derivative(), P)


# ---------------------------------------------------------------------------
# Q(gamma)(z)
# ---------------------------------------------------------------------------

class QuadRationalFunction:
    """``re + gamma*im`` with ``re, im`` in Q(z) and gamma^2 = d."""

    __slots__ = ("re", "im", "d")

    def __init__(self, re=0, im=0, d=-1):
        self.re = RationalFunction.coerce(re)
        self.im = RationalFunction.coerce(im)
        self.d = _check_d(d)

    @classmethod
    def coerce(cls, v, d) -> "QuadRationalFunction":
        if isinstance(v, QuadRationalFunction):
            if v.d != Fraction(d):
                raise FieldMismatch(f"d={v.d} vs d={d}")
            return v
        if isinstance(v, QuadExtScalar):
            if v.d != Fraction(d):
                raise FieldMismatch(f"d={v.d} vs d={d}")
            return cls(v.a, v.b, d)
        return cls(RationalFunction.coerce(v), 0, d)

    @classmethod
    def gamma(cls, d) -> "QuadRationalFunction":
        return cls(0, 1, d)

    def _co(self, other) -> "QuadRationalFunction":
        return QuadRationalFunction.coerce(other, self.d)

    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = self._co(other)
        except (TypeError, FieldMismatch):
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im, self.d))

    def __repr__(self):
        return f"QuadRationalFunction({self}, d={self.d})"

    def __str__(self):
        return self.to_str()

    def to_str(self, var: str = "z", gname: str = "γ") -> str:
        if not self.im:
            return self.re.to_str(var)
        im = f"{gname}*({self.im.to_str(var)})"
        if not self.re:
            return im
        return f"{self.re.to_str(var)} + {im}"

    def __neg__(self):
        return QuadRationalFunction(-self.re, -self.im, self.d)

    def __add__(self, other):
        o = self._co(other)
        return QuadRationalFunction(self.re + o.re, self.im + o.im, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._co(other)
        return QuadRationalFunction(self.re - o.re, self.im - o.im, self.d)

    def __rsub__(self, other):
        return self._co(other) - self

    def __mul__(self, other):
        o = self._co(other)
        re = self.re * o.re + self.im * o.im * self.d
        im = self.re * o.im + self.im * o.re
        return QuadRationalFunction(re, im, self.d)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re - self.im * self.im * self.d
        if not n:
            raise ZeroDivisionError("inverse of the zero function")
        ninv = n.inverse()
        return QuadRationalFunction(self.re * ninv, -self.im * ninv, self.d)

    def __truediv__(self, other):
        return self * self._co(other).inverse()

    def __rtruediv__(self, other):
        return self._co(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadRationalFunction(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def derivative(self):
        return QuadRationalFunction(self.re.derivative(), self.im.derivative(), self.d)

    def __call__(self, x):
        """Value at a rational point as a QuadExtScalar."""
        return QuadExtScalar(self.re(x), self.im(x), self.d)


def _split_poly(p: IntPoly, d: Fraction, b: Fraction = Fraction(1)) -> tuple[RatPoly, RatPoly]:
    """p(b*gamma*z) = A(z) + gamma*B(z) with gamma^2 = d."""
    A, B = [], []
    for i, c in enumerate(p.c):
        # (b gamma)^i = b^i d^(i//2) gamma^(i%2)
        v = c * b**i * d ** (i // 2)
        if i % 2:
            A.append(Fraction(0))
            B.append(v)
        else:
            A.append(v)
            B.append(Fraction(0))
    return RatPoly.from_fractions(A), RatPoly.from_fractions(B)


def scale_argument(f, d, b=1) -> QuadRationalFunction:
    """Substitute z -> b*gamma*z with gamma^2 = d (b rational).

    ``f`` may be a function over Q or over the same Q(gamma).
    """
    d = _check_d(d)
    b = Fraction(b)
    if isinstance(f, QuadRationalFunction):
        if f.d != d:
            raise FieldMismatch(f"d={f.d} vs d={d}")
        g = QuadRationalFunction.gamma(d)
        return scale_argument(f.re, d, b) + g * scale_argument(f.im, d, b)
    f = RationalFunction.coerce(f)
    A, B = _split_poly(f.num, d, b)
    C, E = _split_poly(f.den, d, b)
    if not E:
        inv = RationalFunction(1, C)
        return QuadRationalFunction(RationalFunction(A) * inv, RationalFunction(B) * inv, d)
    # (A + gB)/(C + gE) = (A + gB)(C - gE)/(C^2 - d E^2)
    den = C * C - E * E * d
    re = RationalFunction(A * C - B * E * d, den)
    im = RationalFunction(B * C - A * E, den)
    return QuadRationalFunction(re, im, d)


# ---------------------------------------------------------------------------
# e^{eps x^2 / 2} * R(x)
# ---------------------------------------------------------------------------

class QuasiRational:
    __slots__ = ("eps", "rat")

    def __init__(self, eps: int, rat):
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        self.eps = eps
        self.rat = RationalFunction.coerce(rat)

    def derivative(self) -> "QuasiRational":
        x = RationalFunction.x()
        return QuasiRational(self.eps, self.rat.derivative() + x * self.rat * self.eps)

    def log_derivative(self) -> RationalFunction:
        return self.eps * RationalFunction.x() + self.rat.derivative() / self.rat

    def __mul__(self, other):
        # a product of two such functions changes the Gaussian exponent
        if isinstance(other, QuasiRational):
            return NotImplemented
        return QuasiRational(self.eps, self.rat * other)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QuasiRational) and self.eps == other.eps and self.rat == other.rat

    def __hash__(self):
        return hash((self.eps, self.rat))

    def __repr__(self):
        return f"QuasiRational(eps={self.eps}, rat={self.rat})"


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def _poly_json(p: IntPoly) -> list[str]:
    return [str(c) for c in p.c]


def rf_to_json(f) -> dict:
    """Encode a function over Q or Q(gamma) as coefficient arrays (decimal strings)."""
    if isinstance(f, QuadRationalFunction):
        return {"d": frac_to_str(f.d), "re": rf_to_json(f.re), "im": rf_to_json(f.im)}
    f = RationalFunction.coerce(f)
    return {"num": _poly_json(f.num), "den": _poly_json(f.den)}


def rf_from_json(obj: dict):
    if "d" in obj:
        return QuadRationalFunction(rf_from_json(obj["re"]), rf_from_json(obj["im"]), Fraction(obj["d"]))
    num = IntPoly(int(c) for c in obj["num"])
    den = IntPoly(int(c) for c in obj["den"])
    return RationalFunction(num, den)
