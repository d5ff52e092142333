"""Solution documents: JSON encoding, independent re-verification, LaTeX output.

Numbers are exact: polynomial coefficients are decimal strings and
rationals are "num/den" strings.  Output uses sorted keys so identical
inputs give identical bytes.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .chain import ChainSolution, chain_from_cycle, chain_residuals, first_integral_check
from .cycles import CycleSpec, build_cycle
from .maya import blocks
from .painleve import (
    PainleveSolution,
    normalization_check,
    painleve_from_chain,
    system_residuals,
)
from .poly import hermite, int_wronskian
from .ratfunc import (
    frac_to_str,
    log_derivative,
    rf_from_json,
    rf_to_json,
)

__all__ = [
    "SCHEMA_VERSION",
    "SolutionDocument",
    "DocumentError",
    "build_document",
    "serialize",
    "deserialize",
    "verify_document",
    "latex_report",
    "latex_wr",
    "residual_hash",
]

SCHEMA_VERSION = "1"


class DocumentError(ValueError):
    """Malformed or inconsistent solution document."""


@dataclass
class SolutionDocument:
    spec: CycleSpec
    cycle: dict
    chain: dict
    painleve: dict
    verification: dict
    schema_version: str = SCHEMA_VERSION
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "spec": {**self.spec.to_dict(), "text": self.spec.to_text()},
            "cycle": self.cycle,
            "chain": self.chain,
            "painleve": self.painleve,
            "verification": self.verification,
        }

    @property
    def verified(self) -> bool:
        return bool(self.verification.get("all_pass"))

    def painleve_solution(self) -> PainleveSolution:
        pv = self.painleve
        f = tuple(rf_from_json(x) for x in pv["f"])
        alpha = tuple(Fraction(a) for a in pv["alpha"])
        return PainleveSolution(f, alpha, Fraction(pv["d"]))


def residual_hash(r) -> str:
    blob = json.dumps(rf_to_json(r), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def _residual_block(residuals) -> dict:
    return {"pass": all(not r for r in residuals), "hashes": [residual_hash(r) for r in residuals]}


def build_document(spec: CycleSpec) -> SolutionDocument:
    cyc = build_cycle(spec)
    chain = chain_from_cycle(cyc)
    sol = painleve_from_chain(chain)
    cycle_d = {
        "flips": list(cyc.flips),
        "canonical": list(cyc.canonical),
        "degenerate": cyc.degenerate,
        "diagrams": [
            {"minus": list(M.minus_set), "plus": list(M.plus_set), "blocks": list(blocks(M))}
            for M in cyc.diagrams
        ],
    }
    chain_d = {
        "k": chain.k,
        "delta": chain.delta,
        "a": list(chain.a),
        "signs": list(chain.signs),
        "lambdas": list(chain.lambdas),
        "wronskian_indices": [list(t) for t in chain.wronskian_indices],
    }
    pv_d = {
        "n": sol.n,
        "d": frac_to_str(sol.d),
        "alpha": [frac_to_str(a) for a in sol.alpha],
        "f": [rf_to_json(f) for f in sol.f],
    }
    doc = SolutionDocument(spec, cycle_d, chain_d, pv_d, {})
    doc.verification = _verification(doc)
    return doc


def _chain_from_indices(chain_d: dict) -> ChainSolution:
    """Rebuild w from the stored Wronskian index sets alone."""
    idx = [tuple(t) for t in chain_d["wronskian_indices"]]
    p = len(idx)
    H = [int_wronskian([hermite(j) for j in t]) for t in idx]
    L = [log_derivative(h) for h in H]
    L.append(L[0])
    tails = tuple(L[i + 1] - L[i] for i in range(p))
    return ChainSolution(
        signs=tuple(chain_d["signs"]),
        tails=tails,
        a=tuple(chain_d["a"]),
        delta=chain_d["delta"],
        lambdas=tuple(chain_d["lambdas"]),
        wronskian_indices=tuple(idx),
    )


def _verification(doc: SolutionDocument) -> dict:
    out: dict[str, Any] = {}
    # cycle: rebuild from the cycle spec and compare
    cyc = build_cycle(doc.spec)
    out["cycle"] = {
        "pass": cyc.check()
        and list(cyc.flips) == doc.cycle["flips"]
        and [list(M.plus_set) for M in cyc.diagrams] == [d["plus"] for d in doc.cycle["diagrams"]]
        and [list(M.minus_set) for M in cyc.diagrams] == [d["minus"] for d in doc.cycle["diagrams"]]
    }
    chain = _chain_from_indices(doc.chain)
    out["chain_invariants"] = {"pass": chain.check_invariants() and chain.k == doc.chain["k"]}
    out["chain_residuals"] = _residual_block(chain_residuals(chain))
    out["first_integral"] = _residual_block([first_integral_check(chain)])
    stored = doc.painleve_solution()
    rebuilt = painleve_from_chain(chain)
    out["painleve_matches_chain"] = {
        "pass": rebuilt.f == stored.f and rebuilt.alpha == stored.alpha and rebuilt.d == stored.d
    }
    out["painleve_residuals"] = _residual_block(system_residuals(stored))
    fz, az = normalization_check(stored)
    out["normalization"] = {"pass": not fz and az == 0, "hashes": [residual_hash(fz)]}
    out["all_pass"] = all(v["pass"] for v in out.values())
    return out


def verify_document(doc: SolutionDocument) -> dict:
    """Recompute every identity and compare residual hashes with the stored ones."""
    fresh = _verification(doc)
    stored = doc.verification or {}
    for key, block in fresh.items():
        if key == "all_pass" or "hashes" not in block:
            continue
        old = stored.get(key, {}).get("hashes")
        if old is not None and old != block["hashes"]:
            block["pass"] = False
            block["hash_mismatch"] = True
    fresh["all_pass"] = all(v["pass"] for k, v in fresh.items() if k != "all_pass")
    return fresh


def serialize(doc: SolutionDocument) -> bytes:
    return (json.dumps(doc.to_dict(), sort_keys=True, indent=2) + "\n").encode()


def deserialize(data: bytes | str) -> SolutionDocument:
    try:
        obj = json.loads(data)
    except json.JSONDecodeError as e:
        raise DocumentError(f"malformed JSON: {e}") from None
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise DocumentError(f"unsupported schema_version {obj.get('schema_version')!r}")
    for key in ("spec", "cycle", "chain", "painleve", "verification"):
        if key not in obj:
            raise DocumentError(f"missing section {key!r}")
    try:
        spec = CycleSpec.from_dict(obj["spec"])
        alpha = [Fraction(a) for a in obj["painleve"]["alpha"]]
        Fraction(obj["painleve"]["d"])
        for f in obj["painleve"]["f"]:
            rf_from_json(f)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as e:
        raise DocumentError(f"malformed document: {e}") from None
    if sum(alpha) != 1:
        raise DocumentError(f"alpha sums to {sum(alpha)}, expected 1")
    return SolutionDocument(spec, obj["cycle"], obj["chain"], obj["painleve"], obj["verification"])


# ---------------------------------------------------------------------------
# LaTeX
# ---------------------------------------------------------------------------

def _hidx(j: int) -> str:
    return f"H_{j}" if j < 10 else f"H_{{{j}}}"


def latex_wr(indices) -> str:
    if not indices:
        return "1"
    return "\\Wr(" + ",".join(_hidx(j) for j in indices) + ")"


def _latex_frac(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return f"{sign}\\tfrac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def latex_report(doc: SolutionDocument) -> str:
    if doc is None or not doc.chain or not doc.painleve:
        raise DocumentError("empty document")
    if not doc.verified:
        raise DocumentError("document is not verified; run verify-all first")
    idx = doc.chain["wronskian_indices"]
    p = len(idx)
    signs = doc.chain["signs"]
    delta = doc.chain["delta"]
    alpha = [Fraction(a) for a in doc.painleve["alpha"]]
    d = Fraction(doc.painleve["d"])
    lines = [f"% {doc.spec.to_text()}", "\\begin{align*}"]
    for i, t in enumerate(idx):
        end = ",\\\\" if i < p - 1 else ","
        lines.append(f"H_{{M_{i}}}(z) &= {latex_wr(t)}{end}")
    lines.append("\\end{align*}")
    lines.append(f"with $c^2 = {_latex_frac(d)}$ and")
    lines.append("\\begin{align*}")
    for i in range(p):
        lin = Fraction(-(signs[i] + signs[(i + 1) % p]), delta)
        if lin == 0:
            head = ""
        elif lin == 1:
            head = "z+"
        else:
            head = f"{_latex_frac(lin)}z+"
        j2 = (i + 2) % p
        body = (
            f"f_{i}(z) &= {head}\\frac{{{{\\rm d}}}}{{{{\\rm d}}z}}\\Big["
            f"\\log H_{{M_{j2}}}(cz) - \\log H_{{M_{i}}}(cz)\\Big], && \\alpha_{i}={_latex_frac(alpha[i])}"
        )
        lines.append(body + (",\\\\" if i < p - 1 else "."))
    lines.append("\\end{align*}")
    return "\n".join(lines) + "\n"
