"""Exact dense polynomials over the integers and rationals.

Coefficients are stored lowest degree first.  Everything here is exact;
determinants use fraction-free elimination so intermediate entries stay
in ``Z[z]``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm
from typing import Callable, Iterable, Sequence

__all__ = [
    "IntPoly",
    "RatPoly",
    "poly_gcd",
    "subresultant_gcd",
    "euclid_gcd",
    "bareiss_det",
    "cofactor_det",
    "hermite",
    "conj_hermite",
    "classical",
    "ode_residual_classical",
    "wronskian",
    "int_wronskian",
    "pseudo_wronskian",
    "pw_normalizer",
    "normalized_pw",
    "format_poly",
]

# Above this many coefficient products, multiply by Kronecker substitution.
_KRONECKER_MIN = 900


def _strip(c: list[int]) -> tuple[int, ...]:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _pack(c: Sequence[int], bits: int) -> int:
    # Horner in base 2**bits; signed digits are fine.
    acc = 0
    for a in reversed(c):
        acc = (acc << bits) + a
    return acc


def _unpack(v: int, bits: int, n: int) -> list[int]:
    out = []
    half = 1 << (bits - 1)
    full = 1 << bits
    mask = full - 1
    for _ in range(n):
        d = v & mask
        if d >= half:
            d -= full
        out.append(d)
        v = (v - d) >> bits
    return out


def _mul_coeffs(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) < _KRONECKER_MIN:
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return res
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    n = len(a) + len(b) - 1
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, n)


class IntPoly:
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable[int] = ()):
        self.c: tuple[int, ...] = _strip([int(x) for x in coeffs])

    # construction -----------------------------------------------------
    @classmethod
    def _raw(cls, c: tuple[int, ...]) -> "IntPoly":
        p = object.__new__(cls)
        p.c = c
        return p

    @classmethod
    def const(cls, a: int) -> "IntPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, n: int, a: int = 1) -> "IntPoly":
        return cls([0] * n + [a])

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    # basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.c) - 1

    @property
    def lc(self) -> int:
        return self.c[-1] if self.c else 0

    def __bool__(self) -> bool:
        return bool(self.c)

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.c == other.c
        if isinstance(other, int):
            return self.c == _strip([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("IntPoly", self.c))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.c)})"

    def __str__(self) -> str:
        return format_poly(self.c)

    def is_const(self) -> bool:
        return len(self.c) <= 1

    # arithmetic -------------------------------------------------------
    def __neg__(self) -> "IntPoly":
        return IntPoly._raw(tuple(-a for a in self.c))

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for i, y in enumerate(b):
            res[i] += y
        return IntPoly._raw(_strip(res))

    __radd__ = __add__

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly.const(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            if not other:
                return IntPoly()
            return IntPoly._raw(tuple(a * other for a in self.c))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return IntPoly._raw(_strip(_mul_coeffs(self.c, other.c)))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "IntPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = IntPoly.const(1), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self, k: int = 1) -> "IntPoly":
        c = self.c
        for _ in range(k):
            c = tuple(i * c[i] for i in range(1, len(c)))
        return IntPoly._raw(c)

    def shift_degree(self, k: int) -> "IntPoly":
        """Multiply by ``z**k``."""
        if not self.c:
            return self
        return IntPoly._raw((0,) * k + self.c)

    def scale_arg(self, a: int) -> "IntPoly":
        """Return p(a*z)."""
        return IntPoly([ci * a**i for i, ci in enumerate(self.c)])

    def __call__(self, x):
        acc = 0 * x
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    # content / division ----------------------------------------------
    def content(self) -> int:
        g = 0
        for a in self.c:
            g = gcd(g, a)
            if g == 1:
                break
        return g

    def primitive(self) -> tuple[int, "IntPoly"]:
        """Split into (content, primitive part) with positive leading coefficient."""
        if not self.c:
            return 0, self
        g = self.content()
        if self.lc < 0:
            g = -g
        if g == 1:
            return 1, self
        return g, IntPoly._raw(tuple(a // g for a in self.c))

    def exquo_int(self, a: int) -> "IntPoly":
        out = []
        for ci in self.c:
            q, r = divmod(ci, a)
            if r:
                raise ArithmeticError("inexact integer division of polynomial")
            out.append(q)
        return IntPoly._raw(tuple(out))

    def divmod_exact(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"] | None:
        """Division in Z[z]; None when a quotient coefficient is not integral."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db = other.degree
        lb = other.lc
        b = other.c
        if len(r) - 1 < db:
            return IntPoly(), self
        q = [0] * (len(r) - db)
        for i in range(len(r) - 1 - db, -1, -1):
            t = r[i + db]
            if t:
                qi, rem = divmod(t, lb)
                if rem:
                    return None
                q[i] = qi
                for j in range(db + 1):
                    r[i + j] -= qi * b[j]
        return IntPoly(q), IntPoly(r[:db] if db > 0 else [])

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        if other.degree == 0:
            return self.exquo_int(other.c[0])
        res = self.divmod_exact(other)
        if res is None or res[1]:
            raise ArithmeticError("polynomial division is not exact")
        return res[0]

    def divides(self, other: "IntPoly") -> bool:
        """True if self divides other in Z[z]."""
        res = other.divmod_exact(self)
        return res is not None and not res[1]

    def pseudo_rem(self, other: "IntPoly") -> "IntPoly":
        r = list(self.c)
        db = other.degree
        lb = other.lc
        b = other.c
        dr = len(r) - 1
        e = dr - db + 1
        while dr >= db and any(r):
            t = r[dr]
            r = [lb * x for x in r]
            for j in range(db + 1):
                r[dr - db + j] -= t * b[j]
            r = list(_strip(r))
            dr = len(r) - 1
            e -= 1
        return IntPoly(r) * (lb**e) if e > 0 else IntPoly(r)


def format_poly(c: Sequence, var: str = "z") -> str:
    """Compact text such as ``16z^4+16z^2-4``."""
    if not any(c):
        return "0"
    parts = []
    for i in range(len(c) - 1, -1, -1):
        a = c[i]
        if not a:
            continue
        sign = "-" if a < 0 else "+"
        mag = -a if a < 0 else a
        if i == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else str(mag)
            if coef and "/" in coef:
                coef = f"({coef})"
            body = coef + var + (f"^{i}" if i > 1 else "")
        parts.append((sign, body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for s, b in parts[1:]:
        out += s + b
    return out


# ---------------------------------------------------------------------------
# gcd in Z[z]
# ---------------------------------------------------------------------------

def _interpolate(h: int, x: int) -> IntPoly:
    out = []
    half = x // 2
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return IntPoly(out)


def _heu_gcd(f: IntPoly, g: IntPoly) -> IntPoly | None:
    """Heuristic gcd of primitive polynomials by evaluation at a large integer."""
    fmax = max(abs(a) for a in f.c)
    gmax = max(abs(a) for a in g.c)
    b = 2 * min(fmax, gmax) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fmax // abs(f.lc), gmax // abs(g.lc)) + 4)
    for _ in range(6):
        fx, gx = f(x), g(x)
        if fx and gx:
            h = _interpolate(gcd(fx, gx), x)
            h = h.primitive()[1]
            if h and h.divides(f) and h.divides(g):
                return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def subresultant_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd via the subresultant polynomial remainder sequence."""
    if not f:
        return g.primitive()[1]
    if not g:
        return f.primitive()[1]
    if f.degree < g.degree:
        f, g = g, f
    f = f.primitive()[1]
    g = g.primitive()[1]
    m = g.degree
    d = f.degree - m
    h = f.pseudo_rem(g) * (-1) ** (d + 1)
    lc = g.lc
    c = -(lc**d)
    while h:
        k = h.degree
        f, g, m, d = g, h, k, m - k
        b = -lc * c**d
        h = f.pseudo_rem(g).exquo_int(b)
        lc = g.lc
        if d > 1:
            c = ((-lc) ** d) // (c ** (d - 1))
        else:
            c = -lc
    return g.primitive()[1]


def euclid_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Naive Euclid over Q; test oracle only."""
    a = [Fraction(x) for x in f.c]
    b = [Fraction(x) for x in g.c]

    def strip(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    a, b = strip(a), strip(b)
    while b:
        r = a[:]
        while len(r) >= len(b) and r:
            q = r[-1] / b[-1]
            off = len(r) - len(b)
            for i, y in enumerate(b):
                r[off + i] -= q * y
            r = strip(r)
        a, b = b, r
    if not a:
        return IntPoly()
    den = lcm(*(x.denominator for x in a))
    return IntPoly(int(x * den) for x in a).primitive()[1]


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Primitive gcd (positive leading coefficient) of two polynomials in Z[z]."""
    if not f:
        return g.primitive()[1]
    if not g:
        return f.primitive()[1]
    f = f.primitive()[1]
    g = g.primitive()[1]
    if f.degree == 0 or g.degree == 0:
        return IntPoly.const(1)
    if f == g:
        return f
    h = _heu_gcd(f, g)
    if h is not None:
        return h
    return subresultant_gcd(f, g)


# ---------------------------------------------------------------------------
# determinants
# ---------------------------------------------------------------------------

def bareiss_det(rows: Sequence[Sequence], exquo: Callable | None = None, zero=None, one=None):
    """Fraction-free determinant.

    ``exquo(a, b)`` must perform exact division; by default ``//`` for ints
    and :meth:`IntPoly.exact_div` for polynomials.
    """
    n = len(rows)
    if n == 0:
        return one if one is not None else 1
    m = [list(r) for r in rows]
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    sample = m[0][0]
    if exquo is None:
        if isinstance(sample, IntPoly):
            exquo = lambda a, b: a.exact_div(b)  # noqa: E731
        else:
            exquo = lambda a, b: a // b  # noqa: E731
    sign = 1
    prev = None
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return sample * 0
        piv = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                v = piv * row_i[j] - mik * row_k[j]
                row_i[j] = exquo(v, prev) if prev is not None else v
            row_i[k] = sample * 0
        prev = piv
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_det(rows: Sequence[Sequence]):
    """Laplace expansion along the first row; exponential cost, oracle only."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1:] for r in (list(x) for x in rows[1:])]
        term = rows[0][j] * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


# ---------------------------------------------------------------------------
# rational-coefficient polynomials
# ---------------------------------------------------------------------------

class RatPoly:
    """Polynomial over Q stored as ``num / den`` with ``num`` in Z[z], ``den`` > 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: int = 1):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.content(), den) if num else den
        if g > 1:
            num, den = num.exquo_int(g), den // g
        if not num:
            den = 1
        self.num = num
        self.den = den

    @classmethod
    def from_fractions(cls, coeffs: Iterable) -> "RatPoly":
        fr = [Fraction(x) for x in coeffs]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        return cls(IntPoly(int(x * den) for x in fr), den)

    @classmethod
    def coerce(cls, v) -> "RatPoly":
        if isinstance(v, RatPoly):
            return v
        if isinstance(v, IntPoly):
            return cls(v)
        if isinstance(v, int):
            return cls(IntPoly.const(v))
        if isinstance(v, Fraction):
            return cls(IntPoly.const(v.numerator), v.denominator)
        raise TypeError(f"cannot coerce {type(v).__name__} to RatPoly")

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(a, self.den) for a in self.num.c]

    @property
    def degree(self) -> int:
        return self.num.degree

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        try:
            other = RatPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash(("RatPoly", self.num.c, self.den))

    def __repr__(self) -> str:
        return f"RatPoly({self})"

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __neg__(self) -> "RatPoly":
        return RatPoly(-self.num, self.den)

    def __add__(self, other) -> "RatPoly":
        other = RatPoly.coerce(other)
        return RatPoly(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatPoly":
        return self + (-RatPoly.coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return RatPoly.coerce(other) - self

    def __mul__(self, other) -> "RatPoly":
        other = RatPoly.coerce(other)
        return RatPoly(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def derivative(self, k: int = 1) -> "RatPoly":
        return RatPoly(self.num.derivative(k), self.den)

    def __call__(self, x):
        return Fraction(self.num(x), self.den) if isinstance(x, (int, Fraction)) else self.num(x) / self.den


# ---------------------------------------------------------------------------
# classical families
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def hermite(n: int) -> IntPoly:
    """Physicists' Hermite polynomial from 2z H_n = H_{n+1} + 2n H_{n-1}."""
    if n < 0:
        raise ValueError("Hermite degree must be non-negative")
    if n == 0:
        return IntPoly.const(1)
    if n == 1:
        return IntPoly((0, 2))
    return hermite(n - 1).shift_degree(1) * 2 - hermite(n - 2) * (2 * (n - 1))


@lru_cache(maxsize=None)
def conj_hermite(n: int) -> IntPoly:
    """theta_n(z) = i^{-n} H_n(iz): Hermite coefficients with alternating signs dropped."""
    if n < 0:
        raise ValueError("conjugate Hermite degree must be non-negative")
    h = hermite(n).c
    # coefficient of z^j picks up i^{j-n}; only j = n mod 2 survive
    return IntPoly(a * (-1) ** ((n - j) // 2) for j, a in enumerate(h))


def _laguerre(n: int, alpha: Fraction) -> RatPoly:
    prev, cur = RatPoly.coerce(0), RatPoly.coerce(1)
    z = RatPoly(IntPoly.x())
    for k in range(n):
        # (k+1) L_{k+1} = (2k+alpha+1-z) L_k - (k+alpha) L_{k-1}
        nxt = (cur * (2 * k + alpha + 1) - z * cur - prev * (k + alpha)) * Fraction(1, k + 1)
        prev, cur = cur, nxt
    return cur


def _gbinom(top: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (top - i) / (i + 1)
    return out


def _jacobi(n: int, a: Fraction, b: Fraction) -> RatPoly:
    zm = RatPoly.from_fractions([Fraction(-1, 2), Fraction(1, 2)])
    zp = RatPoly.from_fractions([Fraction(1, 2), Fraction(1, 2)])
    total = RatPoly.coerce(0)
    for s in range(n + 1):
        coef = _gbinom(n + a, n - s) * _gbinom(n + b, s)
        if coef:
            term = RatPoly.coerce(coef)
            for _ in range(s):
                term = term * zm
            for _ in range(n - s):
                term = term * zp
            total = total + term
    return total


def classical(family: str, n: int, *params) -> RatPoly:
    """Classical polynomial of degree ``n`` from its three-term recurrence.

    ``family`` is one of ``hermite``, ``conj_hermite``, ``laguerre`` (param alpha)
    or ``jacobi`` (params alpha, beta).
    """
    if n < 0:
        raise ValueError(f"degree must be non-negative, got {n}")
    ps = [Fraction(p) for p in params]
    if family == "hermite":
        return RatPoly(hermite(n))
    if family == "conj_hermite":
        return RatPoly(conj_hermite(n))
    if family == "laguerre":
        (alpha,) = ps or [Fraction(0)]
        return _laguerre(n, alpha)
    if family == "jacobi":
        if len(ps) != 2:
            raise ValueError("jacobi needs (alpha, beta)")
        return _jacobi(n, ps[0], ps[1])
    raise ValueError(f"unknown family {family!r}")


def ode_residual_classical(family: str, n: int, *params) -> RatPoly:
    """Left-hand side of the family's differential equation at its polynomial."""
    y = classical(family, n, *params)
    y1, y2 = y.derivative(), y.derivative(2)
    z = RatPoly(IntPoly.x())
    ps = [Fraction(p) for p in params]
    if family == "hermite":
        return y2 - z * y1 * 2 + y * (2 * n)
    if family == "conj_hermite":
        # theta_n solves y'' + 2z y' - 2n y = 0
        return y2 + z * y1 * 2 - y * (2 * n)
    if family == "laguerre":
        (alpha,) = ps or [Fraction(0)]
        return z * y2 + (RatPoly.coerce(alpha + 1) - z) * y1 + y * n
    if family == "jacobi":
        a, b = ps
        one_minus_z2 = RatPoly(IntPoly((1, 0, -1)))
        return one_minus_z2 * y2 + (RatPoly.coerce(b - a) - z * (a + b + 2)) * y1 + y * (n * (a + b + n + 1))
    raise ValueError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Wronskians
# ---------------------------------------------------------------------------

def int_wronskian(fs: Sequence[IntPoly]) -> IntPoly:
    """Wronskian of integer polynomials; row j holds f_j and its derivatives."""
    n = len(fs)
    if n == 0:
        return IntPoly.const(1)
    rows = []
    for f in fs:
        row, g = [], f
        for _ in range(n):
            row.append(g)
            g = g.derivative()
        rows.append(row)
    return bareiss_det(rows)


def wronskian(fs: Sequence) -> RatPoly:
    """Exact Wronskian of polynomials over Q (rows are functions)."""
    if not fs:
        raise ValueError("wronskian of an empty list")
    rps = [RatPoly.coerce(f) for f in fs]
    den = 1
    for r in rps:
        den *= r.den
    return RatPoly(int_wronskian([r.num for r in rps]), den)


# ---------------------------------------------------------------------------
# Hermite pseudo-Wronskians
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _pw_cached(s: tuple[int, ...], t: tuple[int, ...]) -> IntPoly:
    n = len(s) + len(t)
    if n == 0:
        return IntPoly.const(1)
    rows = [[conj_hermite(si + j) for j in range(n)] for si in s]
    for ti in t:
        row, g = [], hermite(ti)
        for _ in range(n):
            row.append(g)
            g = g.derivative()
        rows.append(row)
    return bareiss_det(rows)


def pseudo_wronskian(M) -> IntPoly:
    """Mixed determinant with conjugate-Hermite shift rows for the minus part
    (descending) and Hermite derivative rows for the plus part (ascending)."""
    return _pw_cached(tuple(M.minus_set), tuple(M.plus_set))


def pw_normalizer(M) -> int:
    s = M.minus_set  # s_1 > s_2 > ... > s_r
    t = M.plus_set[::-1]  # t_1 > t_2 > ... > t_q
    r, q = len(s), len(t)
    c = -1 if (r * q) % 2 else 1
    for i in range(r):
        for j in range(i + 1, r):
            c *= 2 * s[j] - 2 * s[i]
    for i in range(q):
        for j in range(i + 1, q):
            c *= 2 * t[i] - 2 * t[j]
    return c


def normalized_pw(M) -> RatPoly:
    """Pseudo-Wronskian scaled so that it depends only on M up to translation."""
    c = pw_normalizer(M)
    H = pseudo_wronskian(M)
    return RatPoly(H, c)
