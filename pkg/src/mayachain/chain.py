"""Rational dressing chains built from Maya cycles.

Each w_i is a linear term s_i*x plus a rational tail given by a difference
of logarithmic derivatives of Hermite Wronskians.  The chain equations are
checked as exact identities in Q(x).
"""
from __future__ import annotations

import os
from fractions import Fraction
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, TypeVar

from .cycles import MayaCycle
from .maya import MayaDiagram, standard_form
from .poly import IntPoly, pseudo_wronskian
from .ratfunc import RationalFunction, log_derivative

__all__ = [
    "ChainSolution",
    "chain_from_cycle",
    "chain_residuals",
    "first_integral_check",
    "verify_chain",
    "reversal",
    "rotate",
    "hermite_wronskian",
    "parallel_map",
]

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Ordered map; MAYA_CHAIN_THREADS caps the worker count (default 1)."""
    items = list(items)
    try:
        n = int(os.environ.get("MAYA_CHAIN_THREADS", "1"))
    except ValueError:
        n = 1
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as ex:
        return list(ex.map(fn, items))


def hermite_wronskian(M: MayaDiagram) -> IntPoly:
    """Hermite Wronskian of the standard form of M."""
    return pseudo_wronskian(standard_form(M))


@dataclass(frozen=True)
class ChainSolution:
    signs: tuple[int, ...]
    tails: tuple[RationalFunction, ...]
    a: tuple[int, ...]
    delta: int
    lambdas: tuple[int, ...]
    wronskian_indices: tuple[tuple[int, ...], ...] | None = None
    cycle: MayaCycle | None = field(default=None, compare=False, repr=False)

    @property
    def p(self) -> int:
        return len(self.signs)

    @property
    def k(self) -> int:
        return self.delta // 2

    @property
    def w(self) -> tuple[RationalFunction, ...]:
        x = RationalFunction.x()
        return tuple(x * s + t for s, t in zip(self.signs, self.tails))

    def lam(self, i: int) -> int:
        """lambda_i extended by lambda_{i+p} = lambda_i + delta."""
        q, r = divmod(i, self.p)
        return self.lambdas[r] + q * self.delta

    def check_invariants(self) -> bool:
        p = self.p
        ok = all(self.a[i] == self.lam(i) - self.lam(i + 1) for i in range(p))
        return ok and sum(self.a) == -self.delta


def chain_from_cycle(cycle: MayaCycle) -> ChainSolution:
    p, k = cycle.p, cycle.k
    D = cycle.diagrams
    mu = cycle.flips
    std = [standard_form(M) for M in D[:p]]
    H = parallel_map(pseudo_wronskian, std)
    # M_p is M_0 shifted, so its standard form and Wronskian coincide with M_0's
    L = [log_derivative(h) for h in H]
    L.append(L[0])
    signs = tuple(1 if mu[i] in D[i] else -1 for i in range(p))
    tails = tuple(L[i + 1] - L[i] for i in range(p))
    mu_ext = list(mu) + [mu[0] + k]
    a = tuple(2 * (mu_ext[i] - mu_ext[i + 1]) for i in range(p))
    lambdas = tuple(2 * m + 1 for m in mu)
    return ChainSolution(
        signs=signs,
        tails=tails,
        a=a,
        delta=2 * k,
        lambdas=lambdas,
        wronskian_indices=tuple(M.plus_set for M in std),
        cycle=cycle,
    )


def _residual(w: Sequence[RationalFunction], a: Sequence[int], i: int) -> RationalFunction:
    p = len(w)
    wi, wj = w[i], w[(i + 1) % p]
    s = wi + wj
    return s.derivative() + (wj - wi) * s - a[i]


def chain_residuals(chain: ChainSolution) -> list[RationalFunction]:
    """(w_i + w_{i+1})' + w_{i+1}^2 - w_i^2 - a_i for each i."""
    w = chain.w
    return parallel_map(lambda i: _residual(w, chain.a, i), range(chain.p))


def first_integral_check(chain: ChainSolution) -> RationalFunction:
    """(sum of w)' + delta/2; zero for a genuine chain."""
    total = RationalFunction()
    for wi in chain.w:
        total = total + wi
    return total.derivative() + RationalFunction(Fraction(chain.delta, 2))


def verify_chain(chain: ChainSolution) -> bool:
    return (
        chain.check_invariants()
        and all(not r for r in chain_residuals(chain))
        and not first_integral_check(chain)
    )


def reversal(chain: ChainSolution) -> ChainSolution:
    """w_i -> -w_{-i}, a_i -> -a_{-i-1}, delta -> -delta."""
    p = chain.p
    signs = tuple(-chain.signs[(-i) % p] for i in range(p))
    tails = tuple(-chain.tails[(-i) % p] for i in range(p))
    a = tuple(-chain.a[(-i - 1) % p] for i in range(p))
    lambdas = tuple(chain.lam(-i) for i in range(p))
    idx = None
    if chain.wronskian_indices is not None:
        # the reversed tail L_{-i} - L_{1-i} telescopes over H_{1-i}
        idx = tuple(chain.wronskian_indices[(1 - i) % p] for i in range(p))
    return ChainSolution(signs, tails, a, -chain.delta, lambdas, idx)


def rotate(chain: ChainSolution, j: int) -> ChainSolution:
    """w_i -> w_{i+j} with matching a and lambda."""
    p = chain.p
    if not 0 <= j < p:
        raise ValueError(f"rotation must lie in 0..{p - 1}, got {j}")
    if j == 0:
        return chain
    signs = tuple(chain.signs[(i + j) % p] for i in range(p))
    tails = tuple(chain.tails[(i + j) % p] for i in range(p))
    a = tuple(chain.a[(i + j) % p] for i in range(p))
    lambdas = tuple(chain.lam(i + j) for i in range(p))
    idx = None
    if chain.wronskian_indices is not None:
        idx = tuple(chain.wronskian_indices[(i + j) % p] for i in range(p))
    return ChainSolution(signs, tails, a, chain.delta, lambdas, idx)
