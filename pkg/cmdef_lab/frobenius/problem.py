"""
Frobenius Problem - frobenius
Input of the B ∩ K[X^p, Y] pipeline and the built-in G_a / SL2 instances
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from ..actions.group_action import GroupAction, GroupKind, builtin_actions
from ..errors import FieldError
from ..poly_core.field import CoefficientField
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import RingContext

logger = logging.getLogger(__name__)

# Generator counts reported for the (p, k) G_a instances; informational only
PUBLISHED_COUNTS: dict[tuple[int, int], int] = {
    (2, 2): 6,
    (3, 2): 6,
    (5, 2): 6,
    (2, 3): 11,
    (3, 3): 14,
    (2, 4): 20,
}


@dataclass
class FrobeniusProblem:
    """
    B = K[f_1..f_k, g_1..g_l] with f_i ∈ K[X,Y] and g_i ∈ K[Y]

    x_block lists the variables X whose p-th powers become the variables
    z_names of target_ring; every other variable keeps its name.
    """
    p: int
    ring: RingContext
    x_block: tuple[str, ...]
    f_generators: list[Polynomial]
    g_generators: list[Polynomial]
    target_ring: RingContext
    z_names: tuple[str, ...] = ()
    action: Optional[GroupAction] = None
    label: str = ""
    y_block: tuple[str, ...] = field(init=False)

    def __post_init__(self):
        if self.ring.field.p != self.p:
            raise FieldError(f"the Frobenius pipeline needs F{self.p}, got {self.ring.field.label}")
        self.x_block = tuple(self.x_block)
        for name in self.x_block:
            self.ring.index(name)
        self.z_names = tuple(self.z_names) or self.x_block
        if len(self.z_names) != len(self.x_block):
            raise ValueError("one target name per X variable is required")
        self.y_block = tuple(v for v in self.ring.variables if v not in self.x_block)
        for g in self.g_generators:
            if g.variables_used() & set(self.x_block):
                raise ValueError(f"g-generator {g} involves X variables")
        for f in list(self.f_generators) + list(self.g_generators):
            f.ring.require_same(self.ring)
        if self.action is not None:
            self.action.target.require_same(self.target_ring)

    @classmethod
    def from_generators(
        cls,
        p: int,
        generators: Sequence[Polynomial],
        x_block: Sequence[str],
        target_ring: Optional[RingContext] = None,
        z_names: Sequence[str] = (),
        action: Optional[GroupAction] = None,
        label: str = "",
    ) -> "FrobeniusProblem":
        """
        Split generators into f (using some X variable) and g (free of X)

        The default target ring keeps every name and multiplies the weights of
        the X variables by p.
        """
        gens = [g for g in generators if not g.is_constant()]
        if not gens:
            raise ValueError("at least one nonconstant generator is required")
        ring = gens[0].ring
        xs = set(x_block)
        fs = [g for g in gens if g.variables_used() & xs]
        gs = [g for g in gens if not g.variables_used() & xs]
        if target_ring is None:
            z = tuple(z_names) or tuple(x_block)
            rename = dict(zip(x_block, z))
            names = [rename.get(v, v) for v in ring.variables]
            weights = [w * p if v in xs else w for v, w in zip(ring.variables, ring.weights)]
            target_ring = RingContext.create(names, ring.field, weights)
        return cls(p, ring, tuple(x_block), fs, gs, target_ring, tuple(z_names), action, label)

    @property
    def tensor_rank(self) -> int:
        """r = p^k, the number of products f^e with 0 <= e_i < p"""
        return self.p ** len(self.f_generators)


def builtin_generators(p: int, k: int, group: GroupKind = GroupKind.GA) -> list[Polynomial]:
    """
    Generators of S(U)^G for U = <X0,Y0> ⊕ ... ⊕ <Xk,Yk> with natural actions

    The brackets X_i Y_j - X_j Y_i for 0 <= i < j <= k, together with the X_i
    for G_a. Copy 0 has weight 1/p so that contraction to the twisted copy
    preserves degrees.
    """
    names = [f"{s}{i}" for i in range(k + 1) for s in ("X", "Y")]
    weights = [Fraction(1, p) if i == 0 else Fraction(1) for i in range(k + 1) for _ in range(2)]
    ring = RingContext.create(names, CoefficientField.prime(p), weights)
    v = {n: Polynomial.variable(ring, n) for n in names}
    gens = []
    if GroupKind(group) is GroupKind.GA:
        gens += [v[f"X{i}"] for i in range(k + 1)]
    gens += [v[f"X{i}"] * v[f"Y{j}"] - v[f"X{j}"] * v[f"Y{i}"] for i, j in combinations(range(k + 1), 2)]
    return gens


def builtin_problem(p: int, k: int, group: GroupKind = GroupKind.GA) -> FrobeniusProblem:
    """S(<X^p,Y^p> ⊕ k·<X,Y>)^G from the natural generators, twisted variables named X0, Y0"""
    group = GroupKind(group)
    action = builtin_actions(p, k, group)
    problem = FrobeniusProblem.from_generators(
        p,
        builtin_generators(p, k, group),
        ("X0", "Y0"),
        target_ring=action.target,
        action=action,
        label=f"{group.value}({p},{k})",
    )
    logger.info(
        f"🔧 [FROBENIUS] {problem.label}: {len(problem.f_generators)} f-generators, "
        f"{len(problem.g_generators)} g-generators, r = {problem.tensor_rank}"
    )
    return problem
