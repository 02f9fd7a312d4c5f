"""Abelian ideals of a Borel subalgebra, their rootlets, and the join on positive roots."""

from .affine import AffineVector, AffineWeylElement, from_word, inversion_set, is_minuscule
from .central import centraliser, classify, sigma_pairs, stunning_pairs, unique_container
from .ideals import AbelianIdeal, Atlas, atlas, brute_force_enumerate, chain_to, extend, z1_enumerate
from .lattice import join, join_oracle
from .rootsys import CartanType, CounterexampleError, RootSystem, all_types, build
from .verify import VerificationReport, verify_type

__version__ = "0.1.0"

__all__ = [
    "AbelianIdeal",
    "AffineVector",
    "AffineWeylElement",
    "Atlas",
    "CartanType",
    "CounterexampleError",
    "RootSystem",
    "VerificationReport",
    "all_types",
    "atlas",
    "brute_force_enumerate",
    "build",
    "centraliser",
    "chain_to",
    "classify",
    "extend",
    "from_word",
    "inversion_set",
    "is_minuscule",
    "join",
    "join_oracle",
    "sigma_pairs",
    "stunning_pairs",
    "unique_container",
    "verify_type",
    "z1_enumerate",
]
