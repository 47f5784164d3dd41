"""
Monomial Orders - poly_core
Term orders compiled to flat integer sort keys

A larger key means a larger monomial, so max(key) is the leading monomial and
heaps can run on negated keys.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Callable, Optional, Sequence

from .ring import Monomial, RingContext

logger = logging.getLogger(__name__)

SortKey = tuple[int, ...]


class OrderKind(str, Enum):
    """Supported monomial order families"""
    LEX = "lex"
    GRADED_LEX = "graded_lex"
    GREVLEX = "grevlex"
    WEIGHTED = "weighted_graded"
    BLOCK = "block_elimination"


@dataclass(frozen=True)
class MonomialOrder:
    """
    A monomial order on exponent tuples

    weights/tiebreak are used by WEIGHTED; front/front_order/back_order by BLOCK,
    where front lists the variable indices compared first.
    """

    kind: OrderKind
    weights: tuple[int, ...] = ()
    tiebreak: Optional["MonomialOrder"] = None
    front: tuple[int, ...] = ()
    front_order: Optional["MonomialOrder"] = None
    back_order: Optional["MonomialOrder"] = None

    def key_function(self, nvars: int) -> Callable[[Monomial], SortKey]:
        return _compile(self, nvars)

    def key(self, exps: Monomial) -> SortKey:
        return _compile(self, len(exps))(exps)

    @property
    def label(self) -> str:
        if self.kind is OrderKind.WEIGHTED:
            return f"weighted{list(self.weights)}+{self.tiebreak.label}"
        if self.kind is OrderKind.BLOCK:
            return f"block{list(self.front)}({self.front_order.label},{self.back_order.label})"
        return self.kind.value


def lex() -> MonomialOrder:
    return MonomialOrder(OrderKind.LEX)


def graded_lex() -> MonomialOrder:
    return MonomialOrder(OrderKind.GRADED_LEX)


def grevlex() -> MonomialOrder:
    return MonomialOrder(OrderKind.GREVLEX)


def weighted(weights: Sequence[int], tiebreak: Optional[MonomialOrder] = None) -> MonomialOrder:
    """Weighted degree first, then the tiebreak order (grevlex by default)"""
    if any(int(w) <= 0 for w in weights):
        raise ValueError("order weights must be positive integers")
    return MonomialOrder(OrderKind.WEIGHTED, weights=tuple(int(w) for w in weights), tiebreak=tiebreak or grevlex())


def weighted_for(ring: RingContext, tiebreak: Optional[MonomialOrder] = None) -> MonomialOrder:
    """Weighted order using the ring's (integrally scaled) grading"""
    return weighted(ring.scaled_weights, tiebreak)


def block(front: Sequence[int], front_order: MonomialOrder, back_order: MonomialOrder) -> MonomialOrder:
    return MonomialOrder(
        OrderKind.BLOCK,
        front=tuple(front),
        front_order=front_order,
        back_order=back_order,
    )


def elimination_order(
    ring: RingContext,
    eliminate: Sequence[str],
    inner: Optional[MonomialOrder] = None,
    rest: Optional[MonomialOrder] = None,
) -> MonomialOrder:
    """
    Block order in which every monomial involving an eliminated variable beats
    every monomial free of them

    Args:
        ring: Ring the order is used in
        eliminate: Names of the variables to eliminate
        inner: Order inside the eliminated block (grevlex by default)
        rest: Order on the kept block (grevlex by default)
    """
    front = sorted(ring.index(name) for name in eliminate)
    return block(front, inner or grevlex(), rest or grevlex())


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as m1 is smaller than, equal to or larger than m2"""
    key = order.key_function(len(m1))
    k1, k2 = key(m1), key(m2)
    return (k1 > k2) - (k1 < k2)


@lru_cache(maxsize=None)
def _compile(order: MonomialOrder, nvars: int) -> Callable[[Monomial], SortKey]:
    kind = order.kind
    if kind is OrderKind.LEX:
        return lambda e: e
    if kind is OrderKind.GRADED_LEX:
        return lambda e: (sum(e),) + e
    if kind is OrderKind.GREVLEX:
        return lambda e: (sum(e),) + tuple(-x for x in reversed(e))
    if kind is OrderKind.WEIGHTED:
        weights = order.weights
        if len(weights) != nvars:
            raise ValueError(f"weighted order has {len(weights)} weights for {nvars} variables")
        inner = _compile(order.tiebreak, nvars)
        return lambda e: (sum(x * w for x, w in zip(e, weights)),) + inner(e)
    if kind is OrderKind.BLOCK:
        front = order.front
        front_set = set(front)
        back = tuple(i for i in range(nvars) if i not in front_set)
        front_key = _compile(order.front_order, len(front))
        back_key = _compile(order.back_order, len(back))
        return lambda e: front_key(tuple(e[i] for i in front)) + back_key(tuple(e[i] for i in back))
    raise ValueError(f"unknown order kind {kind}")


class ModuleExtension(str, Enum):
    """How positions combine with the monomial order in a free module"""
    POSITION_OVER_TERM = "pot"
    TERM_OVER_POSITION = "top"


@dataclass(frozen=True)
class ModuleOrder:
    """
    Order on module terms (position, monomial)

    Lower positions are larger. With degree_weights and shifts the order first
    compares the shifted weighted degree, which keeps graded modules graded.
    """

    base: MonomialOrder
    extension: ModuleExtension = ModuleExtension.TERM_OVER_POSITION
    degree_weights: tuple[int, ...] = ()
    shifts: tuple[int, ...] = ()

    def key_function(self, nvars: int) -> Callable[[int, Monomial], SortKey]:
        return _compile_module(self, nvars)

    @property
    def label(self) -> str:
        return f"{self.extension.value}({self.base.label})"


@lru_cache(maxsize=None)
def _compile_module(order: ModuleOrder, nvars: int) -> Callable[[int, Monomial], SortKey]:
    base = _compile(order.base, nvars)
    if order.extension is ModuleExtension.POSITION_OVER_TERM:
        return lambda pos, e: (-pos,) + base(e)
    if order.degree_weights:
        weights, shifts = order.degree_weights, order.shifts

        def graded_top(pos: int, e: Monomial) -> SortKey:
            shift = shifts[pos] if shifts else 0
            return (sum(x * w for x, w in zip(e, weights)) + shift,) + base(e) + (-pos,)

        return graded_top
    return lambda pos, e: base(e) + (-pos,)
