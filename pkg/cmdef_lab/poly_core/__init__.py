"""
Polynomial Core - cmdef_lab
Coefficient fields, ring contexts, monomial orders, sparse polynomials,
the text format and exact linear algebra
"""

from .field import CoefficientField
from .ring import RingContext, Monomial, monomials_of_degree
from .orders import (
    MonomialOrder,
    ModuleOrder,
    ModuleExtension,
    OrderKind,
    lex,
    graded_lex,
    grevlex,
    weighted,
    weighted_for,
    block,
    elimination_order,
    compare,
)
from .polynomial import Polynomial, make_variables, polynomial_sum
from .text_format import (
    format_polynomial,
    parse_polynomial,
    format_ring,
    parse_ring,
    parse_ideal_text,
    format_ideal_text,
    read_ideal_file,
    write_ideal_file,
)

__all__ = [
    "CoefficientField",
    "RingContext",
    "Monomial",
    "monomials_of_degree",
    "MonomialOrder",
    "ModuleOrder",
    "ModuleExtension",
    "OrderKind",
    "lex",
    "graded_lex",
    "grevlex",
    "weighted",
    "weighted_for",
    "block",
    "elimination_order",
    "compare",
    "Polynomial",
    "make_variables",
    "polynomial_sum",
    "format_polynomial",
    "parse_polynomial",
    "format_ring",
    "parse_ring",
    "parse_ideal_text",
    "format_ideal_text",
    "read_ideal_file",
    "write_ideal_file",
]
