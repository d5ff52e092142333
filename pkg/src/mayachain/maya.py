"""Maya diagrams: subsets of Z that contain all sufficiently negative integers
and only finitely many non-negative ones.

A diagram is stored by its Frobenius pair.  ``minus_set`` lists the excluded
negatives ``m`` through ``s = -m-1`` in decreasing order; ``plus_set`` lists
the included non-negatives in increasing order.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "MayaDiagram",
    "construct",
    "from_frobenius",
    "from_members",
    "frobenius",
    "index",
    "translate",
    "standard_shift",
    "standard_form",
    "equivalent",
    "blocks",
    "xi",
    "genus",
    "flip",
    "multi_flip",
    "upsilon",
    "modular_decomp",
    "interlace",
    "kblocks",
    "canonical_flip_sequence",
    "kprec_key",
    "parse_maya",
    "render",
]


@dataclass(frozen=True, slots=True)
class MayaDiagram:
    minus_set: tuple[int, ...] = ()
    plus_set: tuple[int, ...] = ()

    def __post_init__(self):
        s, t = self.minus_set, self.plus_set
        if any(x < 0 for x in s) or any(x < 0 for x in t):
            raise ValueError("Frobenius entries must be non-negative")
        if any(s[i] <= s[i + 1] for i in range(len(s) - 1)):
            raise ValueError(f"minus_set must be strictly decreasing: {s}")
        if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
            raise ValueError(f"plus_set must be strictly increasing: {t}")

    def __contains__(self, m: int) -> bool:
        if m >= 0:
            return m in self.plus_set
        return (-m - 1) not in self.minus_set

    @property
    def index(self) -> int:
        return len(self.plus_set) - len(self.minus_set)

    def window(self, lo: int, hi: int) -> list[bool]:
        """Membership of lo..hi-1."""
        return [m in self for m in range(lo, hi)]

    def __str__(self) -> str:
        s = ",".join(map(str, self.minus_set)) or "∅"
        t = ",".join(map(str, self.plus_set)) or "∅"
        return f"({s}|{t})"


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def from_frobenius(s: Iterable[int], t: Iterable[int]) -> MayaDiagram:
    """Build from Frobenius lists given in any order; duplicates are rejected."""
    s, t = list(s), list(t)
    if len(set(s)) != len(s) or len(set(t)) != len(t):
        raise ValueError("duplicate entries in Frobenius symbol")
    return MayaDiagram(tuple(sorted(s, reverse=True)), tuple(sorted(t)))


def from_members(cutoff: int, members: Iterable[int]) -> MayaDiagram:
    """Diagram containing every integer below ``cutoff`` plus ``members`` (all >= cutoff)."""
    mem = list(members)
    if len(set(mem)) != len(mem):
        raise ValueError("duplicate members")
    if any(m < cutoff for m in mem):
        raise ValueError("explicit members must lie at or above the cutoff")
    ms = set(mem)
    hi = max([cutoff, 0] + [m + 1 for m in mem])
    lo = min(cutoff, 0)
    s = [-m - 1 for m in range(lo, 0) if not (m < cutoff or m in ms)]
    t = [m for m in range(0, hi) if (m < cutoff or m in ms)]
    return from_frobenius(s, t)


def construct(raw) -> MayaDiagram:
    """Accept a diagram, a Frobenius pair, a ``{"cutoff", "members"}`` mapping,
    a ``{"blocks": [...]}`` mapping or notation text."""
    if isinstance(raw, MayaDiagram):
        return raw
    if isinstance(raw, str):
        return parse_maya(raw)
    if isinstance(raw, dict):
        if "blocks" in raw:
            return xi(raw["blocks"])
        if "cutoff" in raw:
            return from_members(raw["cutoff"], raw.get("members", ()))
        if "minus" in raw or "plus" in raw:
            return from_frobenius(raw.get("minus", ()), raw.get("plus", ()))
    if isinstance(raw, (tuple, list)) and len(raw) == 2:
        return from_frobenius(raw[0], raw[1])
    raise ValueError(f"cannot build a Maya diagram from {raw!r}")


def frobenius(M: MayaDiagram) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return M.minus_set, M.plus_set


def index(M: MayaDiagram) -> int:
    return M.index


# ---------------------------------------------------------------------------
# translation and block coordinates
# ---------------------------------------------------------------------------

def _bounds(M: MayaDiagram) -> tuple[int, int]:
    """Window [lo, hi) outside of which M agrees with the vacuum shape."""
    lo = -(M.minus_set[0] + 1) if M.minus_set else 0
    hi = M.plus_set[-1] + 1 if M.plus_set else 0
    return min(lo, 0), max(hi, 0)


def translate(M: MayaDiagram, k: int) -> MayaDiagram:
    """Return M + k."""
    if k == 0:
        return M
    lo, hi = _bounds(M)
    members = [m + k for m in range(lo, hi) if m in M]
    return from_members(lo + k, members)


def blocks(M: MayaDiagram) -> tuple[int, ...]:
    """Strictly increasing block coordinates: M = (-inf,b0) u [b1,b2) u ..."""
    lo, hi = _bounds(M)
    # lo - 1 is always a member and hi never is, so the list has odd length
    out = []
    prev = True
    for m in range(lo, hi + 1):
        cur = m in M
        if cur != prev:
            out.append(m)
            prev = cur
    return tuple(out)


def xi(beta: Sequence[int]) -> MayaDiagram:
    """Diagram (-inf,b0) u [b1,b2) u ... u [b_{2g-1}, b_{2g}); repeated entries give empty blocks."""
    beta = [int(b) for b in beta]
    if len(beta) % 2 == 0:
        raise ValueError(f"block coordinates need odd length, got {len(beta)}")
    if any(beta[i] > beta[i + 1] for i in range(len(beta) - 1)):
        raise ValueError(f"block coordinates must be non-decreasing: {beta}")
    members = []
    for i in range(1, len(beta), 2):
        members.extend(range(beta[i], beta[i + 1]))
    return from_members(beta[0], members)


def genus(M: MayaDiagram) -> int:
    return (len(blocks(M)) - 1) // 2


def standard_shift(M: MayaDiagram) -> int:
    """The k for which M + k is in standard form."""
    return -blocks(M)[0]


def standard_form(M: MayaDiagram) -> MayaDiagram:
    return translate(M, standard_shift(M))


def equivalent(M1: MayaDiagram, M2: MayaDiagram) -> bool:
    """True when the two diagrams differ by a translation."""
    return standard_form(M1) == standard_form(M2)


# ---------------------------------------------------------------------------
# flips
# ---------------------------------------------------------------------------

def flip(M: MayaDiagram, m: int) -> MayaDiagram:
    s, t = set(M.minus_set), set(M.plus_set)
    if m >= 0:
        t ^= {m}
    else:
        s ^= {-m - 1}
    return MayaDiagram(tuple(sorted(s, reverse=True)), tuple(sorted(t)))


def multi_flip(M: MayaDiagram, mu: Iterable[int]) -> MayaDiagram:
    """Apply a multiset of flips; sites of even multiplicity cancel."""
    s, t = set(M.minus_set), set(M.plus_set)
    for m, c in Counter(mu).items():
        if c % 2:
            if m >= 0:
                t ^= {m}
            else:
                s ^= {-m - 1}
    return MayaDiagram(tuple(sorted(s, reverse=True)), tuple(sorted(t)))


def upsilon(M1: MayaDiagram, M2: MayaDiagram) -> tuple[int, ...]:
    """Sorted symmetric difference of two diagrams."""
    lo1, hi1 = _bounds(M1)
    lo2, hi2 = _bounds(M2)
    return tuple(m for m in range(min(lo1, lo2), max(hi1, hi2)) if (m in M1) != (m in M2))


# ---------------------------------------------------------------------------
# modular decomposition
# ---------------------------------------------------------------------------

def modular_decomp(M: MayaDiagram, k: int) -> tuple[MayaDiagram, ...]:
    """Components M^(i) = {m : k m + i in M}, i = 0..k-1."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    lo, hi = _bounds(M)
    out = []
    for i in range(k):
        c = (lo - i) // k
        top = (hi - i) // k + 1
        out.append(from_members(c, [m for m in range(c, top + 1) if k * m + i in M]))
    return tuple(out)


def interlace(parts: Sequence[MayaDiagram]) -> MayaDiagram:
    k = len(parts)
    if k == 0:
        raise ValueError("interlace needs at least one diagram")
    spans = [_bounds(P) for P in parts]
    cutoff = min(k * plo + i for i, (plo, _) in enumerate(spans))
    members = []
    for i, (P, (_, phi)) in enumerate(zip(parts, spans)):
        start = -((i - cutoff) // k)
        members.extend(k * m + i for m in range(start, phi) if m in P)
    return from_members(cutoff, members)


def kblocks(M: MayaDiagram, k: int) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Signature (p_0..p_{k-1}) and the block coordinates of each k-modular component."""
    comps = modular_decomp(M, k)
    coords = tuple(blocks(c) for c in comps)
    return tuple(len(c) for c in coords), coords


def kprec_key(m: int, k: int) -> tuple[int, int]:
    """Sort key realising the total order: residue mod k first, then value."""
    return (m % k, m)


def canonical_flip_sequence(M: MayaDiagram, k: int) -> tuple[int, ...]:
    """Flip sites taking M to M + k, ordered by residue class then value."""
    _, coords = kblocks(M, k)
    return tuple(k * b + i for i, bs in enumerate(coords) for b in bs)


# ---------------------------------------------------------------------------
# notation
# ---------------------------------------------------------------------------

_FROB = re.compile(r"^\(\s*([^|]*)\|([^)]*)\)$")
_XI = re.compile(r"^(?:Ξ|Xi|xi)\s*\(([^)]*)\)$")


def _ints(text: str) -> list[int]:
    text = text.strip().replace("∅", "")
    return [int(x) for x in text.split(",") if x.strip()]


def parse_maya(text: str) -> MayaDiagram:
    """Parse ``(5,2,1|1,2)``, ``5,2,1|1,2`` or ``Ξ(0,2,5,6,7)``."""
    t = text.strip()
    m = _XI.match(t)
    if m:
        return xi(_ints(m.group(1)))
    if not t.startswith("(") and "|" in t:
        t = f"({t})"
    m = _FROB.match(t)
    if m:
        return from_frobenius(_ints(m.group(1)), _ints(m.group(2)))
    raise ValueError(f"unrecognised Maya diagram notation: {text!r}")


def render(M: MayaDiagram, lo: int | None = None, hi: int | None = None) -> str:
    """Box-and-ball picture of a window; '●' filled, '·' empty, '|' marks zero."""
    blo, bhi = _bounds(M)
    lo = blo - 2 if lo is None else lo
    hi = bhi + 2 if hi is None else hi
    out = []
    for m in range(lo, hi):
        if m == 0:
            out.append("|")
        out.append("●" if m in M else "·")
    return "".join(out)
