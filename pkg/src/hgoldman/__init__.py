"""Exact computations in the homological Goldman Lie algebra QH and its ideals."""

from .algebra import AdWord, AlgebraElement, ad_apply, bracket, decompose, singleton, translate
from .certificates import Extraction, Transport, check_extraction, extract_component, transport
from .exceptions import InvalidPairError, KernelElementError, NotHomogeneousError, ParseError, SpecError
from .group import (
    GroupElement,
    GroupSpec,
    KernelData,
    coset_rep,
    in_kernel,
    kernel_data,
    key_lemma_witness,
    lift,
    pairing,
    validate_spec,
)
from .ideal import (
    FULL,
    ZERO,
    FiniteIdeals,
    IdealPair,
    InfiniteIdeals,
    Membership,
    center,
    contains,
    converse_witness_check,
    derived_or_lower_central,
    enumerate_if_finite,
    ideal_from_generators,
    is_abelian,
    make_pair,
    pair_equal,
    validate_pair,
)
from .oracle import Box, oracle_contains, truncated_closure
from .surface import surface_spec
from .textio import format_element, format_pair, parse_element, parse_pair, parse_spec

__version__ = "0.1.0"
