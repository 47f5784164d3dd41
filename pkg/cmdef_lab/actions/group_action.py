"""
Group Actions - actions
Polynomial actions of G_a and SL2 on S(V) by linear substitution

An element σ = (a b; c d) acts on each copy <X_j, Y_j> by
    σ·X_j = a X_j + c Y_j,   σ·Y_j = b X_j + d Y_j
and G_a embeds as a = d = 1, c = 0, b = t. A Frobenius-twisted copy uses the
p-th powers of the entries. Identities over SL2 are checked modulo ad - bc - 1
with a lex order on the parameters, so ad is the leading monomial.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Mapping, Optional, Sequence

from ..errors import CertificationError
from ..groebner.ideal import normal_form
from ..poly_core.field import CoefficientField
from ..poly_core.orders import MonomialOrder, block, grevlex, lex
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import Monomial, RingContext

logger = logging.getLogger(__name__)


class GroupKind(str, Enum):
    """Supported groups"""
    GA = "ga"
    SL2 = "sl2"


PARAMETERS = {
    GroupKind.GA: ("t",),
    GroupKind.SL2: ("a", "b", "c", "d"),
}

IDENTITY = {
    GroupKind.GA: {"t": 0},
    GroupKind.SL2: {"a": 1, "b": 0, "c": 0, "d": 1},
}


def _group_law(kind: GroupKind, ring: RingContext, first: Mapping[str, str], second: Mapping[str, str]) -> dict[str, Polynomial]:
    """Parameters of σ·τ in terms of the parameters of σ (first) and τ (second)"""
    v = {name: Polynomial.variable(ring, name) for name in ring.variables}
    if kind is GroupKind.GA:
        return {"t": v[first["t"]] + v[second["t"]]}
    a1, b1, c1, d1 = (v[first[n]] for n in "abcd")
    a2, b2, c2, d2 = (v[second[n]] for n in "abcd")
    return {
        "a": a1 * a2 + b1 * c2,
        "b": a1 * b2 + b1 * d2,
        "c": c1 * a2 + d1 * c2,
        "d": c1 * b2 + d1 * d2,
    }


def _variety(kind: GroupKind, ring: RingContext, names: Mapping[str, str]) -> list[Polynomial]:
    if kind is GroupKind.GA:
        return []
    a, b, c, d = (Polynomial.variable(ring, names[n]) for n in "abcd")
    return [a * d - b * c - 1]


@dataclass
class TwoCopyFrame:
    """Ring with two parameter sets σ (first) and τ (second) over the target"""
    ring: RingContext
    first: dict[str, str]
    second: dict[str, str]
    law: dict[str, Polynomial]
    reduce: Callable[[Polynomial], Polynomial]


class GroupAction:
    """
    Linear action of G_a or SL2 on a polynomial ring

    Args:
        kind: GA (parameter t) or SL2 (parameters a, b, c, d)
        target: Ring acted on
        images: Target variable name -> image in parameters ⊗ target, linear in the target variables
        blocks: Variable copies whose degrees the action preserves separately
        verify: Check identity, linearity and composability on construction
    """

    def __init__(
        self,
        kind: GroupKind,
        target: RingContext,
        images: Mapping[str, Polynomial],
        blocks: Sequence[Sequence[str]] = (),
        verify: bool = True,
    ):
        self.kind = GroupKind(kind)
        self.target = target
        self.parameters: tuple[str, ...] = PARAMETERS[self.kind]
        self.product = target.extend(self.parameters, front=True)
        self.images: dict[str, Polynomial] = {}
        for name in target.variables:
            image = images.get(name)
            if image is None:
                image = Polynomial.variable(self.product, name)
            image.ring.require_same(self.product)
            self.images[name] = image
        given = [tuple(b) for b in blocks]
        covered = {n for b in given for n in b}
        self.blocks: tuple[tuple[str, ...], ...] = tuple(given + [(n,) for n in target.variables if n not in covered])
        self._block_index = [
            tuple(self.product.index(n) for n in b) for b in self.blocks
        ]
        self.variety = _variety(self.kind, self.product, {n: n for n in self.parameters})
        if verify:
            self.verify()

    def __repr__(self) -> str:
        return f"GroupAction({self.kind.value} on {self.target})"

    # ------------------------------------------------------------- reduction

    @cached_property
    def reduction_order(self) -> MonomialOrder:
        return block(range(len(self.parameters)), lex(), grevlex())

    def reduce(self, h: Polynomial) -> Polynomial:
        """Normal form modulo the group variety (identity map for G_a)"""
        if not self.variety:
            return h
        return normal_form(h, self.variety, self.reduction_order)

    def embed(self, f: Polynomial) -> Polynomial:
        return f.rename(self.product)

    # ---------------------------------------------------------------- acting

    def act(self, f: Polynomial) -> Polynomial:
        """σ·f by substitution, as a polynomial in parameters ⊗ target"""
        f.ring.require_same(self.target)
        return self.reduce(f.substitute(self.images, self.product))

    def is_invariant(self, f: Polynomial) -> bool:
        return (self.act(f) - self.embed(f)).is_zero()

    def difference(self, f: Polynomial) -> Polynomial:
        """(σ - 1)·f"""
        return self.act(f) - self.embed(f)

    def multidegree(self, exps: Monomial) -> tuple[int, ...]:
        """Per-block total degree of a product-ring monomial"""
        return tuple(sum(exps[i] for i in idx) for idx in self._block_index)

    # ---------------------------------------------------------- verification

    @cached_property
    def two_copy(self) -> TwoCopyFrame:
        first = {n: f"{n}_1" for n in self.parameters}
        second = {n: f"{n}_2" for n in self.parameters}
        names = list(first.values()) + list(second.values())
        ring = self.target.extend(names, front=True)
        variety = _variety(self.kind, ring, first) + _variety(self.kind, ring, second)
        order = block(range(len(names)), lex(), grevlex())

        def reduce(h: Polynomial) -> Polynomial:
            return normal_form(h, variety, order) if variety else h

        return TwoCopyFrame(ring, first, second, _group_law(self.kind, ring, first, second), reduce)

    def images_in(self, frame: TwoCopyFrame, copy: Mapping[str, str]) -> dict[str, Polynomial]:
        """Action images with parameters renamed to one copy of the frame"""
        return {name: image.rename(frame.ring, copy) for name, image in self.images.items()}

    def verify(self) -> None:
        """Identity, linearity and composability as exact identities"""
        identity = IDENTITY[self.kind]
        target_idx = [self.product.index(n) for n in self.target.variables]
        for name, image in self.images.items():
            if image.evaluate(identity) != Polynomial.variable(self.product, name):
                raise CertificationError(f"identity parameters do not fix {name}")
            if any(sum(e[i] for i in target_idx) != 1 for e in image.terms):
                raise CertificationError(f"image of {name} is not linear in the target variables")

        frame = self.two_copy
        sigma = self.images_in(frame, frame.first)
        for name, image in self.images.items():
            tau = image.rename(frame.ring, frame.second)
            left = tau.substitute(sigma, frame.ring)
            right = image.substitute(frame.law, frame.ring)
            if frame.reduce(left - right):
                raise CertificationError(f"action is not compatible with the group law on {name}")
        logger.debug(f"✅ [ACTION] {self.kind.value} action on {self.target} verified")


def builtin_actions(
    p: int,
    k: int,
    group: GroupKind = GroupKind.GA,
    frobenius_twist: bool = True,
    ring: Optional[RingContext] = None,
) -> GroupAction:
    """
    The action on <X0,Y0> ⊕ <X1,Y1> ⊕ ... ⊕ <Xk,Yk> over F_p

    Args:
        p: Characteristic
        k: Number of natural copies besides copy 0
        group: GA or SL2
        frobenius_twist: Copy 0 carries the p-th power action (else the natural one)
        ring: Target ring to use; must contain X0..Yk (default: weights 1 over F_p)
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    group = GroupKind(group)
    names = [f"{s}{i}" for i in range(k + 1) for s in ("X", "Y")]
    target = ring or RingContext.create(names, CoefficientField.prime(p))
    product = target.extend(PARAMETERS[group], front=True)
    v = {n: Polynomial.variable(product, n) for n in product.variables}
    if group is GroupKind.GA:
        a, b, c, d = Polynomial.constant(product, 1), v["t"], Polynomial.zero(product), Polynomial.constant(product, 1)
    else:
        a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    images = {}
    for i in range(k + 1):
        x, y = v[f"X{i}"], v[f"Y{i}"]
        if i == 0 and frobenius_twist:
            images[f"X{i}"] = a ** p * x + c ** p * y
            images[f"Y{i}"] = b ** p * x + d ** p * y
        else:
            images[f"X{i}"] = a * x + c * y
            images[f"Y{i}"] = b * x + d * y
    blocks = [(f"X{i}", f"Y{i}") for i in range(k + 1)]
    logger.debug(f"🔧 [ACTION] Built {group.value} action p={p} k={k} twist={frobenius_twist}")
    return GroupAction(group, target, images, blocks)


def copies_action(
    target: RingContext,
    copies: Sequence[tuple[str, str]],
    group: GroupKind,
    twisted: Sequence[tuple[str, str]] = (),
    p: int = 1,
) -> GroupAction:
    """
    Action on an arbitrary list of natural copies plus optional twisted copies

    Args:
        target: Ring containing every named variable
        copies: (X, Y) name pairs carrying the natural action
        group: GA or SL2
        twisted: (X, Y) name pairs carrying the p-th power action
        p: Exponent used on twisted copies
    """
    group = GroupKind(group)
    product = target.extend(PARAMETERS[group], front=True)
    v = {n: Polynomial.variable(product, n) for n in product.variables}
    if group is GroupKind.GA:
        a, b, c, d = Polynomial.constant(product, 1), v["t"], Polynomial.zero(product), Polynomial.constant(product, 1)
    else:
        a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    images = {}
    for (x, y), power in [(pair, 1) for pair in copies] + [(pair, p) for pair in twisted]:
        images[x] = a ** power * v[x] + c ** power * v[y]
        images[y] = b ** power * v[x] + d ** power * v[y]
    blocks = list(copies) + list(twisted)
    return GroupAction(group, target, images, blocks)
