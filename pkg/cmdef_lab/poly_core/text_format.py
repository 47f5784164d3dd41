"""
Text Format - poly_core
Ring headers and infix polynomial text; printing and parsing round-trip exactly

Ideal files look like:

    ring F2[X0,Y0,X1,Y1] weights [1,1,2,2]
    # comment lines and blank lines are ignored
    X0*Y1 + X1*Y0
    X1^2
"""

import logging
import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from sympy import Float, Poly, Symbol, sympify
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import PolynomialError

from ..errors import FieldError, ParseError
from .field import CoefficientField
from .orders import grevlex
from .polynomial import Polynomial
from .ring import Monomial, RingContext

logger = logging.getLogger(__name__)

_RING_HEADER = re.compile(r"^ring\s+(\w+)\[([^\]]*)\](?:\s+weights\s+\[([^\]]*)\])?\s*$")
_TRANSFORMS = standard_transformations + (convert_xor,)


def format_ring(ring: RingContext) -> str:
    weights = ",".join(str(w) for w in ring.weights)
    return f"ring {ring.field.label}[{','.join(ring.variables)}] weights [{weights}]"


def parse_ring(line: str) -> RingContext:
    """Parse a 'ring F<p>[...] weights [...]' header line"""
    match = _RING_HEADER.match(line.strip())
    if not match:
        raise ParseError(f"malformed ring header: {line!r}")
    label, names, weights = match.groups()
    try:
        field = CoefficientField.from_label(label)
    except FieldError as exc:
        raise ParseError(str(exc)) from exc
    variables = tuple(v.strip() for v in names.split(",") if v.strip())
    for name in variables:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise ParseError(f"invalid variable name {name!r}")
    parsed_weights: tuple = ()
    if weights is not None and weights.strip():
        try:
            parsed_weights = tuple(Fraction(w.strip()) for w in weights.split(","))
        except ValueError as exc:
            raise ParseError(f"invalid weight list {weights!r}") from exc
    try:
        return RingContext(variables, field, parsed_weights)
    except Exception as exc:
        raise ParseError(str(exc)) from exc


def format_monomial(ring: RingContext, exps: Monomial) -> str:
    factors = []
    for name, e in zip(ring.variables, exps):
        if e == 1:
            factors.append(name)
        elif e:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_polynomial(f: Polynomial) -> str:
    """Deterministic infix text, terms in decreasing grevlex order"""
    if f.is_zero():
        return "0"
    prime = f.ring.field.characteristic
    pieces = []
    for exps, coeff in f.sorted_terms(grevlex()):
        negative = (not prime) and coeff < 0
        magnitude = abs(coeff) if not prime else coeff
        monomial = format_monomial(f.ring, exps)
        if not monomial:
            body = str(magnitude)
        elif magnitude == 1:
            body = monomial
        else:
            body = f"{magnitude}*{monomial}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def parse_polynomial(text: str, ring: RingContext) -> Polynomial:
    """
    Parse infix text (+, -, *, ^, integer and rational constants)

    Coefficients are read over Q and mapped into the ring's field.
    """
    symbols = {name: Symbol(name) for name in ring.variables}
    try:
        expr = parse_expr(text, local_dict=dict(symbols), transformations=_TRANSFORMS)
    except Exception as exc:
        raise ParseError(f"cannot parse polynomial {text!r}: {exc}") from exc
    expr = sympify(expr)
    unknown = expr.free_symbols - set(symbols.values())
    if unknown:
        raise ParseError(f"unknown symbols {sorted(map(str, unknown))} in {text!r}")
    if expr.atoms(Float):
        raise ParseError(f"floating point constants are not allowed: {text!r}")
    if not ring.variables:
        try:
            value = Fraction(str(expr))
        except ValueError as exc:
            raise ParseError(f"not a constant: {text!r}") from exc
        return Polynomial.constant(ring, value)
    try:
        poly = Poly(expr, *[symbols[name] for name in ring.variables], domain=QQ)
    except (PolynomialError, ValueError, TypeError) as exc:
        raise ParseError(f"not a polynomial: {text!r}") from exc
    terms = {}
    for monom, coeff in poly.terms():
        coeff = sympify(coeff)
        try:
            terms[tuple(monom)] = ring.field.convert(Fraction(int(coeff.p), int(coeff.q)))
        except FieldError as exc:
            raise ParseError(str(exc)) from exc
    return Polynomial(ring, terms)


def _content_lines(text: str) -> list[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            lines.append(line)
    return lines


def parse_ideal_text(text: str) -> tuple[RingContext, list[Polynomial]]:
    """Ring header followed by one polynomial per line"""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("missing ring header")
    ring = parse_ring(lines[0])
    return ring, [parse_polynomial(line, ring) for line in lines[1:]]


def format_ideal_text(ring: RingContext, polynomials: Iterable[Polynomial]) -> str:
    lines = [format_ring(ring)]
    for f in polynomials:
        f.ring.require_same(ring)
        lines.append(format_polynomial(f))
    return "\n".join(lines) + "\n"


def read_ideal_file(path: Path) -> tuple[RingContext, list[Polynomial]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    logger.info(f"📄 [TEXT FORMAT] Reading polynomial file {path}")
    return parse_ideal_text(text)


def write_ideal_file(path: Path, ring: RingContext, polynomials: Sequence[Polynomial]) -> None:
    Path(path).write_text(format_ideal_text(ring, polynomials), encoding="utf-8")
    logger.info(f"💾 [TEXT FORMAT] Wrote {len(polynomials)} polynomials to {path}")
