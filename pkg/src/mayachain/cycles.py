"""Cyclic Maya diagrams and Maya p-cycles.

A cycle is labelled by a period p, a shift k, a signature (the block counts
of the k-modular components of M_0), p-1 free increments and a permutation
of the canonical flip sequence.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, Sequence

from .maya import MayaDiagram, flip, interlace, translate, xi

__all__ = [
    "CycleSpec",
    "MayaCycle",
    "valid_shifts",
    "signatures",
    "initial_kblock_coords",
    "build_cycle",
    "enumerate_cycles",
    "count_cycles",
    "cycle_spec_at",
    "parse_spec",
    "parse_permutation",
]


def _check_period(p: int) -> None:
    if p < 1:
        raise ValueError(f"period must be positive, got {p}")
    if p % 2 == 0:
        raise NotImplementedError(f"even period {p} is not supported")


@dataclass(frozen=True)
class CycleSpec:
    p: int
    k: int
    signature: tuple[int, ...]
    n_tuple: tuple[int, ...]
    permutation: tuple[int, ...]

    def __post_init__(self):
        _check_period(self.p)
        if self.k < 1:
            raise ValueError(f"shift must be positive, got {self.k}")
        if (self.p - self.k) % 2:
            raise ValueError(f"shift {self.k} has the wrong parity for period {self.p}")
        if len(self.signature) != self.k:
            raise ValueError(f"signature {self.signature} does not have k={self.k} parts")
        if any(s < 1 or s % 2 == 0 for s in self.signature) or sum(self.signature) != self.p:
            raise ValueError(f"signature {self.signature} is not a composition of {self.p} into odd parts")
        if len(self.n_tuple) != self.p - 1 or any(n < 0 for n in self.n_tuple):
            raise ValueError(f"need {self.p - 1} non-negative increments, got {self.n_tuple}")
        if sorted(self.permutation) != list(range(self.p)):
            raise ValueError(f"{self.permutation} is not a permutation of 0..{self.p - 1}")
        if self.permutation[-1] != 0:
            raise ValueError("permutation must end in 0")

    def to_text(self) -> str:
        sep = "," if self.p > 10 else ""
        return (
            f"p={self.p} k={self.k} sig={','.join(map(str, self.signature))} "
            f"n={','.join(map(str, self.n_tuple))} perm={sep.join(map(str, self.permutation))}"
        )

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "signature": list(self.signature),
            "n": list(self.n_tuple),
            "permutation": list(self.permutation),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CycleSpec":
        return cls(
            int(d["p"]),
            int(d["k"]),
            tuple(d["signature"]),
            tuple(d["n"]),
            tuple(d["permutation"]),
        )


@dataclass(frozen=True)
class MayaCycle:
    spec: CycleSpec
    diagrams: tuple[MayaDiagram, ...]
    flips: tuple[int, ...]
    canonical: tuple[int, ...]
    degenerate: bool

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def k(self) -> int:
        return self.spec.k

    def check(self) -> bool:
        """Flip property on every step and closure M_p = M_0 + k."""
        D = self.diagrams
        steps = all(flip(D[i], self.flips[i]) == D[i + 1] for i in range(self.p))
        return steps and D[-1] == translate(D[0], self.k)


def valid_shifts(p: int) -> list[int]:
    """All shifts 1 <= k <= p with k of the same parity as p."""
    _check_period(p)
    return list(range(1, p + 1, 2))


def signatures(p: int, k: int) -> list[tuple[int, ...]]:
    """Compositions of p into k odd positive parts, in lexicographic order."""
    _check_period(p)
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], left: int, parts: int) -> None:
        if parts == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        for part in range(1, left - parts + 2, 2):
            rec(prefix + [part], left - part, parts - 1)

    rec([], p, k)
    return out


def initial_kblock_coords(signature: Sequence[int], n_tuple: Sequence[int]) -> list[tuple[int, ...]]:
    """Block coordinates of each component of M_0 built from the free increments.

    The first component starts at 0; every coordinate after that, and the
    first coordinate of every later component, adds the next increment to a
    running sum that restarts at each component.
    """
    it = iter(n_tuple)
    coords = []
    for i, size in enumerate(signature):
        acc = 0
        block = [0] if i == 0 else []
        while len(block) < size:
            acc += next(it)
            block.append(acc)
        coords.append(tuple(block))
    return coords


def build_cycle(spec: CycleSpec) -> MayaCycle:
    coords = initial_kblock_coords(spec.signature, spec.n_tuple)
    M0 = interlace([xi(c) for c in coords])
    # read off the coordinates rather than M_0 so repeated entries survive
    canonical = tuple(spec.k * b + i for i, bs in enumerate(coords) for b in bs)
    if canonical[0] != 0:
        raise ValueError("normalisation mu_0 = 0 violated")
    flips = tuple(canonical[j] for j in spec.permutation)
    diagrams = [M0]
    for m in flips:
        diagrams.append(flip(diagrams[-1], m))
    degenerate = len(set(flips)) != len(flips)
    cyc = MayaCycle(spec, tuple(diagrams), flips, canonical, degenerate)
    if diagrams[-1] != translate(M0, spec.k):
        raise AssertionError("cycle does not close")
    return cyc


def count_cycles(p: int, max_n: int) -> int:
    total = 0
    for k in valid_shifts(p):
        # odd compositions of p into k parts: choose where the (p-k)/2 extra pairs go
        total += comb((p - k) // 2 + k - 1, k - 1)
    return total * (max_n + 1) ** (p - 1) * factorial(p - 1)


def enumerate_cycles(p: int, max_n: int) -> Iterator[CycleSpec]:
    """Every normalised spec with increments <= max_n.

    Order: k ascending, signatures lexicographic, increments as in
    itertools.product, permutations of 1..p-1 lexicographic with 0 appended.
    """
    for k in valid_shifts(p):
        for sig in signatures(p, k):
            for n in itertools.product(range(max_n + 1), repeat=p - 1):
                for perm in itertools.permutations(range(1, p)):
                    yield CycleSpec(p, k, sig, n, perm + (0,))


def cycle_spec_at(p: int, max_n: int, index: int) -> CycleSpec:
    """The CycleSpec that enumerate_cycles would yield at position ``index``."""
    if not 0 <= index < count_cycles(p, max_n):
        raise IndexError(index)
    n_block = (max_n + 1) ** (p - 1)
    perms = factorial(p - 1)
    per_sig = n_block * perms
    for k in valid_shifts(p):
        sigs = signatures(p, k)
        if index >= len(sigs) * per_sig:
            index -= len(sigs) * per_sig
            continue
        sig = sigs[index // per_sig]
        index %= per_sig
        n_idx, perm_idx = divmod(index, perms)
        n = []
        for _ in range(p - 1):
            n_idx, r = divmod(n_idx, max_n + 1)
            n.append(r)
        n.reverse()
        perm = _nth_permutation(list(range(1, p)), perm_idx)
        return CycleSpec(p, k, sig, tuple(n), tuple(perm) + (0,))
    raise IndexError(index)


def _nth_permutation(items: list[int], idx: int) -> list[int]:
    out = []
    items = list(items)
    while items:
        f = factorial(len(items) - 1)
        j, idx = divmod(idx, f)
        out.append(items.pop(j))
    return out


def parse_permutation(text: str) -> tuple[int, ...]:
    """'34210' digit-wise, or comma separated for longer periods."""
    text = text.strip().strip("()")
    if "," in text:
        return tuple(int(x) for x in text.split(","))
    return tuple(int(ch) for ch in text)


_KV = re.compile(r"(\w+)\s*=\s*([^\s]+)")


def parse_spec(text: str) -> CycleSpec:
    """Parse ``p=5 k=3 sig=1,1,3 n=3,1,1,2 perm=41230``; k defaults to len(sig)."""
    fields = dict(_KV.findall(text))
    unknown = set(fields) - {"p", "k", "sig", "n", "perm"}
    if unknown:
        raise ValueError(f"unknown spec fields: {sorted(unknown)}")
    try:
        sig = tuple(int(x) for x in fields["sig"].split(","))
        p = int(fields.get("p", sum(sig)))
        k = int(fields.get("k", len(sig)))
        n_txt = fields.get("n", "")
        n = tuple(int(x) for x in n_txt.split(",") if x) if n_txt else ()
        perm = parse_permutation(fields["perm"])
    except KeyError as e:
        raise ValueError(f"missing spec field {e.args[0]!r}") from None
    return CycleSpec(p, k, sig, n, perm)
