"""Maya cycles, rational dressing chains and rational solutions of the
A_{2n} Painleve systems, with exact verification."""

from .maya import MayaDiagram, blocks, flip, from_frobenius, parse_maya, translate, xi
from .cycles import CycleSpec, MayaCycle, build_cycle, enumerate_cycles, parse_spec
from .chain import ChainSolution, chain_from_cycle, chain_residuals, verify_chain
from .painleve import PainleveSolution, painleve_from_chain, system_residuals, verify_painleve
from .poly import IntPoly, RatPoly, hermite, normalized_pw, pseudo_wronskian, wronskian
from .ratfunc import QuadExtScalar, QuadRationalFunction, QuasiRational, RationalFunction
from .exceptional import xhermite

__version__ = "0.1.0"

__all__ = [
    "MayaDiagram",
    "blocks",
    "flip",
    "from_frobenius",
    "parse_maya",
    "translate",
    "xi",
    "CycleSpec",
    "MayaCycle",
    "build_cycle",
    "enumerate_cycles",
    "parse_spec",
    "ChainSolution",
    "chain_from_cycle",
    "chain_residuals",
    "verify_chain",
    "PainleveSolution",
    "painleve_from_chain",
    "system_residuals",
    "verify_painleve",
    "IntPoly",
    "RatPoly",
    "hermite",
    "normalized_pw",
    "pseudo_wronskian",
    "wronskian",
    "QuadExtScalar",
    "QuadRationalFunction",
    "QuasiRational",
    "RationalFunction",
    "xhermite",
]
