"""
Gröbner Engine - cmdef_lab
Buchberger bases for ideals and submodules, elimination, intersection,
quotients, dimension and syzygies
"""

from .engine import GroebnerEngine, is_groebner_basis
from .module import FreeModuleElement, combine, module_groebner_basis, module_normal_form
from .ideal import (
    Ideal,
    normal_form,
    buchberger,
    eliminate,
    intersect,
    quotient,
    quotient_by_ideal,
    is_zero_divisor,
    fresh_name,
)
from .dimension import dimension, height, height_in_quotient
from .syzygy import syzygies
from .cache import GroebnerCache, set_cache_enabled, active_cache

__all__ = [
    "GroebnerEngine",
    "is_groebner_basis",
    "FreeModuleElement",
    "combine",
    "module_groebner_basis",
    "module_normal_form",
    "Ideal",
    "normal_form",
    "buchberger",
    "eliminate",
    "intersect",
    "quotient",
    "quotient_by_ideal",
    "is_zero_divisor",
    "fresh_name",
    "dimension",
    "height",
    "height_in_quotient",
    "syzygies",
    "GroebnerCache",
    "set_cache_enabled",
    "active_cache",
]
