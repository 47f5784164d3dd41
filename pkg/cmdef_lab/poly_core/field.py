"""
Coefficient Fields - poly_core
Exact arithmetic over a prime field F_p or the rationals
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ

from ..errors import FieldError

logger = logging.getLogger(__name__)

Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class CoefficientField:
    """
    F_p when characteristic is a prime p, Q when characteristic is 0

    F_p elements are plain ints in [0, p); Q elements are Fractions.
    """

    characteristic: int

    def __post_init__(self):
        if self.characteristic != 0 and not isprime(self.characteristic):
            raise FieldError(f"characteristic {self.characteristic} is not prime")

    @classmethod
    def prime(cls, p: int) -> "CoefficientField":
        return cls(int(p))

    @classmethod
    def rationals(cls) -> "CoefficientField":
        return cls(0)

    @classmethod
    def from_label(cls, label: str) -> "CoefficientField":
        """Parse 'F<p>' or 'QQ'"""
        text = label.strip()
        if text in ("QQ", "Q"):
            return cls.rationals()
        if text.startswith("F") and text[1:].isdigit():
            return cls.prime(int(text[1:]))
        raise FieldError(f"unknown field label {label!r}")

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def label(self) -> str:
        return f"F{self.characteristic}" if self.characteristic else "QQ"

    @property
    def zero(self) -> Coefficient:
        return 0 if self.characteristic else Fraction(0)

    @property
    def one(self) -> Coefficient:
        return 1 if self.characteristic else Fraction(1)

    def convert(self, value) -> Coefficient:
        """Map an int, Fraction or sympy Rational into the field"""
        if isinstance(value, Rational) and not isinstance(value, Fraction):
            value = Fraction(int(value.p), int(value.q))
        p = self.characteristic
        if isinstance(value, Fraction):
            if not p:
                return value
            if value.denominator % p == 0:
                raise FieldError(f"{value} has no image in F{p}")
            return value.numerator * pow(value.denominator, -1, p) % p
        if isinstance(value, int):
            return value % p if p else Fraction(value)
        raise FieldError(f"cannot convert {value!r} into {self.label}")

    def reduce(self, value: Coefficient) -> Coefficient:
        return value % self.characteristic if self.characteristic else value

    def inverse(self, value: Coefficient) -> Coefficient:
        if not value:
            raise ZeroDivisionError("inverse of zero")
        if self.characteristic:
            return pow(value, -1, self.characteristic)
        return 1 / Fraction(value)

    def divide(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.reduce(a * self.inverse(b))

    def sympy_domain(self):
        """The matching sympy domain for DomainMatrix computations"""
        return GF(self.characteristic) if self.characteristic else QQ

    def to_domain(self, domain, value: Coefficient):
        if self.characteristic:
            return domain(int(value))
        value = Fraction(value)
        return domain(value.numerator, value.denominator)

    def from_domain(self, domain, element) -> Coefficient:
        converted = domain.to_sympy(element)
        if self.characteristic:
            return int(converted) % self.characteristic
        return Fraction(int(converted.p), int(converted.q))

    def __str__(self) -> str:
        return self.label
