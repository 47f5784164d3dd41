"""
Sparse Polynomials - poly_core
Immutable exact multivariate polynomials stored as {exponent tuple: coefficient}
"""

import heapq
import logging
from fractions import Fraction
from operator import add
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from ..errors import DivisionError, RingMismatchError
from .field import Coefficient
from .orders import MonomialOrder, grevlex
from .ring import Monomial, RingContext, monomial_divides

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


class Polynomial:
    """
    Element of a RingContext

    Terms never hold zero coefficients. Instances are treated as immutable;
    every operation builds a new polynomial.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingContext, terms: Optional[Mapping[Monomial, Scalar]] = None, normalized: bool = False):
        self.ring = ring
        self._hash = None
        if normalized:
            self.terms = dict(terms) if terms is not None else {}
            return
        field = ring.field
        clean: dict[Monomial, Coefficient] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ring.nvars or any(e < 0 for e in exps):
                raise RingMismatchError(f"bad exponent vector {exps} for {ring}")
            value = field.convert(coeff)
            if value:
                clean[exps] = field.reduce(clean.get(exps, field.zero) + value)
                if not clean[exps]:
                    del clean[exps]
        self.terms = clean

    # ------------------------------------------------------------------ builders

    @classmethod
    def zero(cls, ring: RingContext) -> "Polynomial":
        return cls(ring, {}, normalized=True)

    @classmethod
    def constant(cls, ring: RingContext, value: Scalar) -> "Polynomial":
        return cls(ring, {ring.one: value})

    @classmethod
    def variable(cls, ring: RingContext, name: str, power: int = 1) -> "Polynomial":
        return cls(ring, {ring.variable_exponent(name, power): ring.field.one}, normalized=True)

    @classmethod
    def monomial(cls, ring: RingContext, exps: Monomial, coeff: Scalar = 1) -> "Polynomial":
        return cls(ring, {tuple(exps): coeff})

    @classmethod
    def gens(cls, ring: RingContext) -> list["Polynomial"]:
        return [cls.variable(ring, name) for name in ring.variables]

    # ---------------------------------------------------------------- inspection

    @property
    def field(self):
        return self.ring.field

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.one in self.terms)

    @property
    def constant_term(self) -> Coefficient:
        return self.terms.get(self.ring.one, self.field.zero)

    def coefficient(self, exps: Monomial) -> Coefficient:
        return self.terms.get(tuple(exps), self.field.zero)

    def items(self) -> Iterator[tuple[Monomial, Coefficient]]:
        return iter(self.terms.items())

    def degree(self) -> Fraction:
        """Largest weighted degree of a term; -1 for the zero polynomial"""
        if not self.terms:
            return Fraction(-1)
        return max(self.ring.degree(e) for e in self.terms)

    def scaled_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.ring.scaled_degree(e) for e in self.terms)

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self.ring.index(name)
        return max((e[i] for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degrees = {self.ring.scaled_degree(e) for e in self.terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict[Fraction, "Polynomial"]:
        parts: dict[Fraction, dict[Monomial, Coefficient]] = {}
        for exps, coeff in self.terms.items():
            parts.setdefault(self.ring.degree(exps), {})[exps] = coeff
        return {d: Polynomial(self.ring, t, normalized=True) for d, t in sorted(parts.items())}

    def variables_used(self) -> set[str]:
        used = set()
        for exps in self.terms:
            used.update(self.ring.variables[i] for i, e in enumerate(exps) if e)
        return used

    def sorted_terms(self, order: Optional[MonomialOrder] = None) -> list[tuple[Monomial, Coefficient]]:
        """Terms in decreasing order (grevlex by default)"""
        key = (order or grevlex()).key_function(self.ring.nvars)
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = order.key_function(self.ring.nvars)
        return max(self.terms, key=key)

    def leading_coefficient(self, order: MonomialOrder) -> Coefficient:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inverse(self.leading_coefficient(order)))

    # ---------------------------------------------------------------- arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        field = self.field
        out = dict(self.terms)
        for exps, coeff in other.terms.items():
            value = field.reduce(out.get(exps, 0) + coeff)
            if value:
                out[exps] = value
            else:
                out.pop(exps, None)
        return Polynomial(self.ring, out, normalized=True)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        field = self.field
        return Polynomial(self.ring, {e: field.reduce(-c) for e, c in self.terms.items()}, normalized=True)

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, value: Scalar) -> "Polynomial":
        field = self.field
        value = field.convert(value)
        if not value:
            return Polynomial.zero(self.ring)
        return Polynomial(self.ring, {e: field.reduce(c * value) for e, c in self.terms.items()}, normalized=True)

    def mul_term(self, exps: Monomial, coeff: Scalar = 1) -> "Polynomial":
        """Multiply by a single term coeff * x^exps"""
        field = self.field
        coeff = field.convert(coeff)
        if not coeff:
            return Polynomial.zero(self.ring)
        return Polynomial(
            self.ring,
            {tuple(map(add, e, exps)): field.reduce(c * coeff) for e, c in self.terms.items()},
            normalized=True,
        )

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) < len(other.terms):
            small, large = self.terms, other.terms
        else:
            small, large = other.terms, self.terms
        out: dict[Monomial, Coefficient] = {}
        for e1, c1 in small.items():
            for e2, c2 in large.items():
                exps = tuple(map(add, e1, e2))
                out[exps] = out.get(exps, 0) + c1 * c2
        field = self.field
        clean = {}
        for exps, coeff in out.items():
            coeff = field.reduce(coeff)
            if coeff:
                clean[exps] = coeff
        return Polynomial(self.ring, clean, normalized=True)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    # ------------------------------------------------------------ transformations

    def derivative(self, name: str) -> "Polynomial":
        """Formal partial derivative d/d(name)"""
        i = self.ring.index(name)
        field = self.field
        out = {}
        for exps, coeff in self.terms.items():
            if exps[i]:
                value = field.reduce(coeff * exps[i])
                if value:
                    lowered = list(exps)
                    lowered[i] -= 1
                    out[tuple(lowered)] = value
        return Polynomial(self.ring, out, normalized=True)

    def divide_by_monomial(self, exps: Monomial) -> "Polynomial":
        """Exact division by x^exps; raises DivisionError on a nondivisible term"""
        out = {}
        for term, coeff in self.terms.items():
            if not monomial_divides(exps, term):
                raise DivisionError(f"term {term} is not divisible by {exps}")
            out[tuple(a - b for a, b in zip(term, exps))] = coeff
        return Polynomial(self.ring, out, normalized=True)

    def exact_divide(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact polynomial division; raises DivisionError on a remainder"""
        divisor = self._coerce(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        field = self.field
        key = grevlex().key_function(self.ring.nvars)
        lead = max(divisor.terms, key=key)
        lead_inv = field.inverse(divisor.terms[lead])
        tail = [(e, c) for e, c in divisor.terms.items() if e != lead]
        work = dict(self.terms)
        heap = [(tuple(-x for x in key(e)), e) for e in work]
        heapq.heapify(heap)
        quotient = {}
        while heap:
            _, exps = heapq.heappop(heap)
            coeff = work.pop(exps, None)
            if coeff is None:
                continue
            if not monomial_divides(lead, exps):
                raise DivisionError("polynomial division leaves a remainder")
            shift = tuple(a - b for a, b in zip(exps, lead))
            factor = field.reduce(coeff * lead_inv)
            quotient[shift] = factor
            for e, c in tail:
                target = tuple(map(add, e, shift))
                present = target in work
                value = field.reduce(work.get(target, 0) - factor * c)
                if value:
                    work[target] = value
                    if not present:
                        heapq.heappush(heap, (tuple(-x for x in key(target)), target))
                elif present:
                    del work[target]
        return Polynomial(self.ring, quotient, normalized=True)

    def substitute(self, images: Mapping[str, "Polynomial"], target: Optional[RingContext] = None) -> "Polynomial":
        """
        Replace variables by polynomials

        Args:
            images: Map from variable name to its image in the target ring
            target: Ring of the result; variables without an image map to the
                same-named variable of the target ring

        Returns:
            The substituted polynomial in the target ring
        """
        target = target or self.ring
        columns = []
        for i, name in enumerate(self.ring.variables):
            image = images.get(name)
            if image is None:
                if any(e[i] for e in self.terms):
                    image = Polynomial.variable(target, name)
                else:
                    columns.append(None)
                    continue
            elif image.ring != target:
                raise RingMismatchError(f"image of {name} lives in {image.ring}, expected {target}")
            columns.append(image)

        power_cache: dict[tuple[int, int], Polynomial] = {}

        def power(i: int, e: int) -> Polynomial:
            cached = power_cache.get((i, e))
            if cached is None:
                cached = columns[i] if e == 1 else power(i, e - 1) * columns[i]
                power_cache[(i, e)] = cached
            return cached

        field = target.field
        total: dict[Monomial, Coefficient] = {}
        for exps, coeff in self.terms.items():
            product = Polynomial.constant(target, coeff)
            for i, e in enumerate(exps):
                if e:
                    product = product * power(i, e)
                    if not product:
                        break
            for m, c in product.terms.items():
                value = field.reduce(total.get(m, 0) + c)
                if value:
                    total[m] = value
                else:
                    total.pop(m, None)
        return Polynomial(target, total, normalized=True)

    def rename(self, target: RingContext, mapping: Optional[Mapping[str, str]] = None) -> "Polynomial":
        """
        Move into another ring by variable names (with optional renaming)

        Variables of this ring that are used must exist in the target.
        """
        mapping = mapping or {}
        positions = []
        for i, name in enumerate(self.ring.variables):
            new_name = mapping.get(name, name)
            if target.has(new_name):
                positions.append(target.index(new_name))
            elif any(e[i] for e in self.terms):
                raise RingMismatchError(f"variable {name} has no counterpart in {target}")
            else:
                positions.append(None)
        out = {}
        for exps, coeff in self.terms.items():
            moved = [0] * target.nvars
            for i, e in enumerate(exps):
                if e:
                    moved[positions[i]] += e
            out[tuple(moved)] = coeff
        if self.ring.field != target.field:
            return Polynomial(target, out)
        return Polynomial(target, out, normalized=True)

    def evaluate(self, values: Mapping[str, Scalar]) -> "Polynomial":
        """Plug field constants into some variables; the ring is unchanged"""
        images = {name: Polynomial.constant(self.ring, value) for name, value in values.items()}
        return self.substitute(images)

    def frobenius_contract(self, names: Sequence[str], p: int, target: RingContext, new_names: Sequence[str]) -> "Polynomial":
        """
        Replace x^p by a fresh variable z for each x in names

        Every exponent of the named variables must be a multiple of p; the
        remaining variables keep their names.
        """
        rename = dict(zip(names, new_names))
        indices = {self.ring.index(name) for name in names}
        out = {}
        for exps, coeff in self.terms.items():
            moved = [0] * target.nvars
            for i, e in enumerate(exps):
                if not e:
                    continue
                name = self.ring.variables[i]
                if i in indices:
                    if e % p:
                        raise DivisionError(f"exponent {e} of {name} is not a multiple of {p}")
                    moved[target.index(rename[name])] += e // p
                else:
                    moved[target.index(name)] += e
            out[tuple(moved)] = coeff
        return Polynomial(target, out, normalized=True)

    def frobenius_expand(self, names: Sequence[str], p: int, target: RingContext, new_names: Sequence[str]) -> "Polynomial":
        """Inverse of frobenius_contract: z -> x^p for z in names"""
        rename = dict(zip(names, new_names))
        out = {}
        for exps, coeff in self.terms.items():
            moved = [0] * target.nvars
            for i, e in enumerate(exps):
                if not e:
                    continue
                name = self.ring.variables[i]
                if name in rename:
                    moved[target.index(rename[name])] += e * p
                else:
                    moved[target.index(name)] += e
            out[tuple(moved)] = coeff
        return Polynomial(target, out, normalized=True)

    # ------------------------------------------------------------------- display

    def __repr__(self) -> str:
        from .text_format import format_polynomial

        return f"Polynomial({format_polynomial(self)!r} in {self.ring})"

    def __str__(self) -> str:
        from .text_format import format_polynomial

        return format_polynomial(self)


def polynomial_sum(ring: RingContext, parts: Iterable[Polynomial]) -> Polynomial:
    total = Polynomial.zero(ring)
    for part in parts:
        total = total + part
    return total


def make_variables(ring: RingContext) -> dict[str, Polynomial]:
    """Name -> variable polynomial, handy for writing formulas"""
    return {name: Polynomial.variable(ring, name) for name in ring.variables}
