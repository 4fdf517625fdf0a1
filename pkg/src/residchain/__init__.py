"""Construction and verification kit for odd and even involutive FL_e-chains."""

from .bunch import (
    BunchOfLayerAlgebras,
    BunchOfLayerGroups,
    ChainElement,
    KappaIndex,
    Xi,
    algebras_to_groups,
    decompose_chain,
    derive_chain,
    groups_to_algebras,
    validate_bunch_algebras,
    validate_bunch_groups,
    verify_main_theorem,
)
from .convert import Dotted, Subgroup, downshift, iota_chain_to_group, iota_group_to_chain, split, unsplit, upshift
from .flechain import Chain, FiniteChainTable, Parity, TableChain, classify_parity, run_law_suite
from .ogroup import Homomorphism, OrderedGroup, hom_validate
from .oracle import SearchConfig, cross_check, enumerate_finite_chains
from .report import Report

__version__ = "0.1.0"
