"""Finite lattices with poset actions, Z/nZ modules, and hollow representation analysis.

The layers, bottom up:

  lattice   validated bounded lattices, posets, actions, dual/star/interval/
            quotient constructions
  spectra   the ten primeness/coprimeness element kinds and their law checkers
  modules   finite Z/nZ modules, submodule enumeration, class predicates,
            second representations, and the bridge to the lattice layer
  pshollow  pseudo strongly hollow profiles, representations, minimization,
            uniqueness verifiers, and the structural theorem checkers
  cli       file-driven front end with deterministic reports
"""

from .lattice import (
    FiniteLattice,
    FinitePoset,
    PosetAction,
    build_lattice,
    build_poset,
    dual_action,
    is_join_distributive,
    is_multiplication,
    lower_interval,
    make_action,
    quotient,
    star_action,
)
from .modules import FiniteModule, Ideal, Ring, enumerate_submodules, span, submodule_lattice
from .pshollow import (
    HollowProfile,
    Representation,
    enumerate_minimal_representations,
    find_ps_hollow_submodules,
    is_ps_hollow,
    minimize,
    profile,
)
from .spectra import KINDS, is_kind, spectrum

__all__ = [
    "FiniteLattice",
    "FinitePoset",
    "PosetAction",
    "build_lattice",
    "build_poset",
    "dual_action",
    "is_join_distributive",
    "is_multiplication",
    "lower_interval",
    "make_action",
    "quotient",
    "star_action",
    "FiniteModule",
    "Ideal",
    "Ring",
    "enumerate_submodules",
    "span",
    "submodule_lattice",
    "HollowProfile",
    "Representation",
    "enumerate_minimal_representations",
    "find_ps_hollow_submodules",
    "is_ps_hollow",
    "minimize",
    "profile",
    "KINDS",
    "is_kind",
    "spectrum",
]
__version__ = "0.1.0"
