"""
Cocycles - actions
1-cocycles with polynomial values, coboundary search and annihilator checks

A cocycle is stored as its value g_σ, a polynomial in parameters ⊗ target.
The action preserves the degree in every variable copy, so (σ - 1)·v = g_σ can
be decided one multi-homogeneous component at a time by a finite exact linear
system over the grid of parameter-monomials × target-monomials.
"""

import logging
from dataclasses import dataclass, field
from itertools import product as cartesian
from typing import Optional

from ..errors import CertificationError, NotInvariantError
from ..poly_core.linalg import solve
from ..poly_core.polynomial import Polynomial
from ..poly_core.ring import Monomial, monomials_of_degree
from .group_action import GroupAction, GroupKind, builtin_actions

logger = logging.getLogger(__name__)


@dataclass
class Cocycle1:
    """σ -> g_σ with values in a graded piece of the target ring"""
    action: GroupAction
    value: Polynomial
    target_component: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        self.value.ring.require_same(self.action.product)
        self.value = self.action.reduce(self.value)
        if self.target_component is None and self.value:
            degrees = {self.action.multidegree(e) for e in self.value.terms}
            if len(degrees) == 1:
                self.target_component = degrees.pop()

    def is_zero(self) -> bool:
        return self.value.is_zero()


@dataclass
class ComponentSystem:
    """Linear system solved for one multi-homogeneous component"""
    multidegree: tuple[int, ...]
    unknowns: int
    equations: int
    rank: int
    augmented_rank: int

    @property
    def consistent(self) -> bool:
        return self.rank == self.augmented_rank


@dataclass
class CoboundaryResult:
    """
    Verdict of the coboundary search

    potential is v with (σ - 1)·v = g_σ when is_coboundary; for a nontrivial
    cocycle the inconsistent system (rank < augmented rank) is the certificate.
    """
    is_coboundary: bool
    potential: Optional[Polynomial] = None
    systems: list[ComponentSystem] = field(default_factory=list)


@dataclass
class AnnihilatorResult:
    annihilates: bool
    witness: Optional[Polynomial]
    certificate: CoboundaryResult


def split_components(action: GroupAction, h: Polynomial) -> dict[tuple[int, ...], Polynomial]:
    """Multi-homogeneous components of a product-ring polynomial"""
    parts: dict[tuple[int, ...], dict] = {}
    for exps, coeff in h.terms.items():
        parts.setdefault(action.multidegree(exps), {})[exps] = coeff
    return {md: Polynomial(h.ring, t, normalized=True) for md, t in sorted(parts.items())}


def component_monomials(action: GroupAction, multidegree: tuple[int, ...]) -> list[Monomial]:
    """Target monomials with the given degree in every block"""
    target = action.target
    per_block = []
    for names, degree in zip(action.blocks, multidegree):
        idx = [target.index(n) for n in names]
        per_block.append([(idx, m) for m in monomials_of_degree([1] * len(idx), degree)])
    out = []
    for choice in cartesian(*per_block):
        exps = [0] * target.nvars
        for idx, m in choice:
            for i, e in zip(idx, m):
                exps[i] = e
        out.append(tuple(exps))
    return out


def check_cocycle(c: Cocycle1) -> bool:
    """g_{στ} = σ·g_τ + g_σ as an identity in two parameter sets"""
    if c.is_zero():
        return True
    action = c.action
    frame = action.two_copy
    g_sigma = c.value.rename(frame.ring, frame.first)
    g_tau = c.value.rename(frame.ring, frame.second)
    sigma_g_tau = g_tau.substitute(action.images_in(frame, frame.first), frame.ring)
    g_product = c.value.substitute(frame.law, frame.ring)
    holds = frame.reduce(g_product - sigma_g_tau - g_sigma).is_zero()
    logger.debug(f"🔍 [COCYCLE] cocycle identity {'holds' if holds else 'fails'}")
    return holds


def solve_coboundary(c: Cocycle1) -> CoboundaryResult:
    """
    Find v with (σ - 1)·v = g_σ, or certify that none exists

    Each multi-homogeneous component of g is matched against the differences
    (σ - 1)·m of all target monomials m of that component.
    """
    action = c.action
    if c.is_zero():
        return CoboundaryResult(True, Polynomial.zero(action.target))
    fld = action.target.field
    potential = Polynomial.zero(action.target)
    systems: list[ComponentSystem] = []
    solvable = True
    for multidegree, part in split_components(action, c.value).items():
        candidates = component_monomials(action, multidegree)
        differences = [action.difference(Polynomial.monomial(action.target, m)) for m in candidates]
        row_of: dict[Monomial, int] = {}
        rows: list[dict] = []
        for col, diff in enumerate(differences):
            for exps, coeff in diff.terms.items():
                if exps not in row_of:
                    row_of[exps] = len(rows)
                    rows.append({})
                rows[row_of[exps]][col] = coeff
        for exps in part.terms:
            if exps not in row_of:
                row_of[exps] = len(rows)
                rows.append({})
        rhs = [fld.zero] * len(rows)
        for exps, coeff in part.terms.items():
            rhs[row_of[exps]] = coeff
        outcome = solve(rows, rhs, len(candidates), fld)
        systems.append(ComponentSystem(multidegree, len(candidates), len(rows), outcome.rank, outcome.augmented_rank))
        if not outcome.consistent:
            solvable = False
            continue
        for col, value in outcome.solution.items():
            potential = potential + Polynomial.monomial(action.target, candidates[col], value)

    if not solvable:
        logger.info(f"✅ [COBOUNDARY] nontrivial: {sum(not s.consistent for s in systems)} inconsistent component(s)")
        return CoboundaryResult(False, None, systems)
    if action.difference(potential) != c.value:
        raise CertificationError("coboundary potential does not reproduce the cocycle")
    logger.info(f"✅ [COBOUNDARY] coboundary found with {len(potential)} terms")
    return CoboundaryResult(True, potential, systems)


def verify_witness(a: Polynomial, c: Cocycle1, b: Polynomial) -> bool:
    """a·g_σ == (σ - 1)·b exactly"""
    action = c.action
    return action.difference(b) == action.reduce(action.embed(a) * c.value)


def check_annihilator(a: Polynomial, c: Cocycle1) -> AnnihilatorResult:
    """
    Does the invariant a annihilate the cohomology class of c?

    Returns:
        annihilates=True with b such that a·g_σ = (σ - 1)·b, else the
        inconsistent systems as certificate
    """
    action = c.action
    if not action.is_invariant(a):
        raise NotInvariantError(f"{a} is not invariant")
    if not check_cocycle(c):
        raise CertificationError("input is not a cocycle")
    result = solve_coboundary(Cocycle1(action, action.embed(a) * c.value))
    if result.is_coboundary and not verify_witness(a, c, result.potential):
        raise CertificationError(f"annihilation witness for {a} fails to verify")
    return AnnihilatorResult(result.is_coboundary, result.potential, result)


# ---------------------------------------------------------------- builtins


def builtin_cocycle(p: int, k: int) -> Cocycle1:
    """
    The nontrivial G_a cocycle g_t = X0 · ((t·X1 + Y1)^(p-1) - Y1^(p-1)) / X1

    For p = 2 this is t·X0.
    """
    if k < 1:
        raise ValueError("the cocycle needs at least one natural copy")
    action = builtin_actions(p, k, GroupKind.GA)
    target = action.target
    y1 = Polynomial.variable(target, "Y1")
    x0 = Polynomial.variable(action.product, "X0")
    x1 = Polynomial.variable(action.product, "X1")
    value = x0 * action.difference(y1 ** (p - 1)).exact_divide(x1)
    cocycle = Cocycle1(action, value)
    if not check_cocycle(cocycle):
        raise CertificationError("builtin cocycle fails the cocycle identity")
    return cocycle


@dataclass
class KnownAnnihilator:
    """An annihilating invariant a with b such that a·g_t = (t - 1)·b"""
    label: str
    annihilator: Polynomial
    witness: Polynomial


def first_copy_annihilator(c: Cocycle1, p: int) -> KnownAnnihilator:
    """X1 with witness X0·Y1^(p-1)"""
    v = {n: Polynomial.variable(c.action.target, n) for n in c.action.target.variables}
    return KnownAnnihilator("X1", v["X1"], v["X0"] * v["Y1"] ** (p - 1))


def anchored_bracket_annihilator(c: Cocycle1, p: int, i: int) -> KnownAnnihilator:
    """X1·Yi - Xi·Y1 with witness Y1^(p-1)·Yi·X0 - X1^(p-1)·Xi·Y0"""
    v = {n: Polynomial.variable(c.action.target, n) for n in c.action.target.variables}
    x1, y1, xi, yi = v["X1"], v["Y1"], v[f"X{i}"], v[f"Y{i}"]
    witness = y1 ** (p - 1) * yi * v["X0"] - x1 ** (p - 1) * xi * v["Y0"]
    return KnownAnnihilator(f"X1*Y{i}-X{i}*Y1", x1 * yi - xi * y1, witness)


def bracket_power_annihilator(c: Cocycle1, p: int, i: int, j: int) -> KnownAnnihilator:
    """
    (Xi·Yj - Xj·Yi)^(p-1) for 2 <= i < j with its double-sum witness

    -(Xi·Yj - Xj·Yi)^(p-1)·g_t = (t - 1)·W where
    W = Y0 Σ X1^(p-2-r) Y1^r · Xi^(p-1-s) Yi^s · Xj^(r+s+1) Yj^(p-2-r-s)
      + X0 Σ X1^r Y1^(p-2-r) · Xi^s Yi^(p-1-s) · Xj^(p-2-r-s) Yj^(r+s+1)
    over 0 <= r <= p-2, 0 <= s <= p-2-r.
    """
    if not 2 <= i < j:
        raise ValueError("bracket annihilators need 2 <= i < j")
    v = {n: Polynomial.variable(c.action.target, n) for n in c.action.target.variables}
    x1, y1 = v["X1"], v["Y1"]
    xi, yi, xj, yj = v[f"X{i}"], v[f"Y{i}"], v[f"X{j}"], v[f"Y{j}"]
    low = Polynomial.zero(c.action.target)
    high = Polynomial.zero(c.action.target)
    for r in range(p - 1):
        for s in range(p - 1 - r):
            low = low + x1 ** (p - 2 - r) * y1 ** r * xi ** (p - 1 - s) * yi ** s * xj ** (r + s + 1) * yj ** (p - 2 - r - s)
            high = high + x1 ** r * y1 ** (p - 2 - r) * xi ** s * yi ** (p - 1 - s) * xj ** (p - 2 - r - s) * yj ** (r + s + 1)
    witness = -(v["Y0"] * low + v["X0"] * high)
    return KnownAnnihilator(f"(X{i}*Y{j}-X{j}*Y{i})^{p - 1}", (xi * yj - xj * yi) ** (p - 1), witness)
