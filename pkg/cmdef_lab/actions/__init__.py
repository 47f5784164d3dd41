"""
Group Actions - cmdef_lab
G_a and SL2 actions by substitution, invariance, cocycles and annihilators
"""

from .group_action import GroupKind, GroupAction, TwoCopyFrame, builtin_actions, copies_action
from .cocycle import (
    Cocycle1,
    CoboundaryResult,
    ComponentSystem,
    AnnihilatorResult,
    KnownAnnihilator,
    check_cocycle,
    solve_coboundary,
    check_annihilator,
    verify_witness,
    builtin_cocycle,
    first_copy_annihilator,
    anchored_bracket_annihilator,
    bracket_power_annihilator,
)

__all__ = [
    "GroupKind",
    "GroupAction",
    "TwoCopyFrame",
    "builtin_actions",
    "copies_action",
    "Cocycle1",
    "CoboundaryResult",
    "ComponentSystem",
    "AnnihilatorResult",
    "KnownAnnihilator",
    "check_cocycle",
    "solve_coboundary",
    "check_annihilator",
    "verify_witness",
    "builtin_cocycle",
    "first_copy_annihilator",
    "anchored_bracket_annihilator",
    "bracket_power_annihilator",
]
