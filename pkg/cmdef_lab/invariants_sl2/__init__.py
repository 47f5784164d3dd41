"""
SL2 Vector Invariants - cmdef_lab
Bracket generators, Roberts' isomorphism, hsop and test-sequence builders
"""

from .vector_config import VectorInvariantConfig
from .plucker import (
    bracket,
    bracket_tag,
    plucker_generators,
    plucker_presentation,
    plucker_relations,
    plucker_ideal,
    hsop_terms,
    hsop_builder,
    hsop_tags,
    certify_hsop,
    chain_is_groebner,
    chain_height,
)
from .roberts import RobertsIsomorphism, roberts_forward, roberts_inverse
from .sequences import (
    twisted_bracket,
    depth_test_sequence,
    expected_regular_positions,
    ga_test_sequence,
    annihilator_phsop,
    known_annihilator_witnesses,
    ga_dimension,
    sl2_dimension,
    twisted_ga_dimension,
    twisted_sl2_dimension,
)

__all__ = [
    "VectorInvariantConfig",
    "bracket",
    "bracket_tag",
    "plucker_generators",
    "plucker_presentation",
    "plucker_relations",
    "plucker_ideal",
    "hsop_terms",
    "hsop_builder",
    "hsop_tags",
    "certify_hsop",
    "chain_is_groebner",
    "chain_height",
    "RobertsIsomorphism",
    "roberts_forward",
    "roberts_inverse",
    "twisted_bracket",
    "depth_test_sequence",
    "expected_regular_positions",
    "ga_test_sequence",
    "annihilator_phsop",
    "known_annihilator_witnesses",
    "ga_dimension",
    "sl2_dimension",
    "twisted_ga_dimension",
    "twisted_sl2_dimension",
]
