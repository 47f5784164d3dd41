"""
Subalgebras - cmdef_lab
Relation ideals, membership, M ∩ A^r and algebraic independence tests
"""

from .presentation import (
    SubalgebraPresentation,
    MembershipResult,
    relation_ideal,
    member,
    member_graded,
)
from .module_intersect import module_intersect_with_Ar
from .jacobian import JacobianVerdict, jacobian_rank, jacobian_independent, find_minimal_relation

__all__ = [
    "SubalgebraPresentation",
    "MembershipResult",
    "relation_ideal",
    "member",
    "member_graded",
    "module_intersect_with_Ar",
    "JacobianVerdict",
    "jacobian_rank",
    "jacobian_independent",
    "find_minimal_relation",
]
