"""
Ring Contexts - poly_core
Ordered variable names, positive rational weights and a coefficient field
"""

import logging
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Iterable, Optional, Sequence

from ..errors import RingMismatchError
from .field import CoefficientField

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class RingContext:
    """
    Polynomial ring K[x_1, ..., x_n] with a weighted grading

    Monomials are exponent tuples of length n. Weights are exact Fractions;
    scaled_weights multiplies them by the lcm of their denominators so every
    degree computation inside the kernel stays integral.
    """

    variables: tuple[str, ...]
    field: CoefficientField
    weights: tuple[Fraction, ...] = dc_field(default=())

    def __post_init__(self):
        names = tuple(str(v) for v in self.variables)
        object.__setattr__(self, "variables", names)
        if len(set(names)) != len(names):
            raise RingMismatchError(f"duplicate variable names in {names}")
        weights = tuple(Fraction(w) for w in self.weights) or tuple(Fraction(1) for _ in names)
        if len(weights) != len(names):
            raise RingMismatchError("one weight per variable is required")
        if any(w <= 0 for w in weights):
            raise RingMismatchError("weights must be positive")
        object.__setattr__(self, "weights", weights)

    @classmethod
    def create(
        cls,
        variables: Sequence[str],
        field: CoefficientField,
        weights: Optional[Sequence] = None,
    ) -> "RingContext":
        return cls(tuple(variables), field, tuple(weights or ()))

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.variables)}

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise RingMismatchError(f"variable {name!r} not in ring {self.variables}") from None

    def has(self, name: str) -> bool:
        return name in self._positions

    @cached_property
    def weight_scale(self) -> int:
        return lcm(*(w.denominator for w in self.weights)) if self.weights else 1

    @cached_property
    def scaled_weights(self) -> tuple[int, ...]:
        scale = self.weight_scale
        return tuple(int(w * scale) for w in self.weights)

    def degree(self, exps: Monomial) -> Fraction:
        """Weighted degree of a monomial"""
        return Fraction(self.scaled_degree(exps), self.weight_scale)

    def scaled_degree(self, exps: Monomial) -> int:
        return sum(e * w for e, w in zip(exps, self.scaled_weights))

    @property
    def one(self) -> Monomial:
        return (0,) * self.nvars

    def variable_exponent(self, name: str, power: int = 1) -> Monomial:
        exps = [0] * self.nvars
        exps[self.index(name)] = power
        return tuple(exps)

    def extend(
        self,
        names: Iterable[str],
        weights: Optional[Iterable] = None,
        front: bool = False,
    ) -> "RingContext":
        """New ring with extra variables placed before or after the current ones"""
        names = tuple(names)
        extra = tuple(weights) if weights is not None else tuple(Fraction(1) for _ in names)
        if front:
            return RingContext(names + self.variables, self.field, extra + self.weights)
        return RingContext(self.variables + names, self.field, self.weights + extra)

    def drop(self, names: Iterable[str]) -> "RingContext":
        """New ring without the named variables"""
        dropped = set(names)
        for name in dropped:
            self.index(name)
        kept = [(v, w) for v, w in zip(self.variables, self.weights) if v not in dropped]
        return RingContext(tuple(v for v, _ in kept), self.field, tuple(w for _, w in kept))

    def with_weights(self, weights: Sequence) -> "RingContext":
        return RingContext(self.variables, self.field, tuple(weights))

    def require_same(self, other: "RingContext") -> None:
        if self != other:
            raise RingMismatchError(f"ring mismatch: {self.variables} vs {other.variables}")

    def __str__(self) -> str:
        return f"{self.field.label}[{','.join(self.variables)}]"


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b"""
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def monomials_of_degree(weights: Sequence[int], degree: int) -> list[Monomial]:
    """
    All exponent tuples e with sum(e_i * w_i) == degree

    Args:
        weights: Positive integer weights (use RingContext.scaled_weights)
        degree: Target weighted degree on the same scale

    Returns:
        Monomials in increasing lexicographic order
    """
    if degree < 0:
        return []
    n = len(weights)
    out: list[Monomial] = []

    def fill(i: int, left: int, prefix: list[int]) -> None:
        if i == n - 1:
            if left % weights[i] == 0:
                out.append(tuple(prefix + [left // weights[i]]))
            return
        for e in range(left // weights[i] + 1):
            fill(i + 1, left - e * weights[i], prefix + [e])

    if n == 0:
        return [()] if degree == 0 else []
    fill(0, degree, [])
    return out
