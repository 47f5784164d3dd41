#!/usr/bin/env python3
"""
Test Group Actions
G_a / SL2 substitution actions, invariance, cocycles, coboundaries and annihilators
"""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from cmdef_lab.actions import (
    Cocycle1,
    GroupKind,
    anchored_bracket_annihilator,
    bracket_power_annihilator,
    builtin_actions,
    builtin_cocycle,
    check_annihilator,
    check_cocycle,
    copies_action,
    first_copy_annihilator,
    solve_coboundary,
    verify_witness,
)
from cmdef_lab.poly_core import CoefficientField, Polynomial, RingContext, make_variables, parse_polynomial

RNG_SEED = 4242
INSTANCES = 200


def test_builtin_ga_images():
    """t·Y1 = t X1 + Y1 and t·Y0 = t^p X0 + Y0"""
    print("🧪 Testing the builtin G_a action")
    action = builtin_actions(2, 1, GroupKind.GA)
    assert action.product.variables == ("t", "X0", "Y0", "X1", "Y1")
    v = make_variables(action.target)
    assert action.act(v["Y1"]) == parse_polynomial("t*X1 + Y1", action.product)
    assert action.act(v["Y0"]) == parse_polynomial("t^2*X0 + Y0", action.product)
    assert action.act(v["X1"]) == action.embed(v["X1"])
    assert action.act(Polynomial.constant(action.target, 1)) == Polynomial.constant(action.product, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("group", [GroupKind.GA, GroupKind.SL2])
def test_actions_verify_on_construction(p, group):
    """Identity, linearity and the group law are checked when the action is built"""
    action = builtin_actions(p, 2, group)
    action.verify()
    frame = action.two_copy
    assert len(frame.first) == len(action.parameters)


def test_invariance_of_known_invariants():
    ring = RingContext.create(["X1", "Y1", "X2", "Y2"], CoefficientField.rationals())
    v = make_variables(ring)
    sl2 = copies_action(ring, [("X1", "Y1"), ("X2", "Y2")], GroupKind.SL2)
    assert sl2.is_invariant(v["X1"] * v["Y2"] - v["X2"] * v["Y1"])
    assert not sl2.is_invariant(v["X1"])
    ga = copies_action(ring, [("X1", "Y1"), ("X2", "Y2")], GroupKind.GA)
    assert ga.is_invariant(v["X1"])
    assert not ga.is_invariant(v["Y1"])


@pytest.mark.parametrize("p", [2, 3])
def test_twisted_bracket_invariance(p):
    """X1^p Y0 - X0 Y1^p is fixed by the twisted action; the p-th power bracket by the natural one"""
    twisted = builtin_actions(p, 1, GroupKind.GA)
    v = make_variables(twisted.target)
    assert twisted.is_invariant(v["X1"] ** p * v["Y0"] - v["X0"] * v["Y1"] ** p)
    assert not twisted.is_invariant(v["X0"] * v["Y1"] - v["X1"] * v["Y0"])
    natural = builtin_actions(p, 1, GroupKind.GA, frobenius_twist=False)
    w = make_variables(natural.target)
    assert natural.is_invariant(w["X0"] ** p * w["Y1"] ** p - w["X1"] ** p * w["Y0"] ** p)


def test_invariant_products_stay_invariant():
    """Products of invariants are invariant, on random choices"""
    print("🧪 Testing closure of invariants under products")
    rng = random.Random(RNG_SEED)
    action = builtin_actions(3, 2, GroupKind.GA)
    v = make_variables(action.target)
    invariants = [
        v["X0"],
        v["X1"],
        v["X2"],
        v["X1"] * v["Y2"] - v["X2"] * v["Y1"],
        v["X1"] ** 3 * v["Y0"] - v["X0"] * v["Y1"] ** 3,
    ]
    for _ in range(INSTANCES):
        factors = [rng.choice(invariants) for _ in range(rng.randint(1, 3))]
        product = Polynomial.constant(action.target, rng.randint(1, 2))
        for f in factors:
            product = product * f
        assert action.is_invariant(product)
        assert not action.is_invariant(product * v["Y1"])


def test_cocycle_at_p2_is_t_x0():
    c = builtin_cocycle(2, 1)
    assert c.value == parse_polynomial("t*X0", c.action.product)
    assert check_cocycle(c)
    assert check_cocycle(Cocycle1(c.action, Polynomial.zero(c.action.product)))


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("k", [1, 2])
def test_builtin_cocycle_is_nontrivial(p, k):
    """The inconsistent component system certifies nontriviality"""
    c = builtin_cocycle(p, k)
    assert check_cocycle(c)
    result = solve_coboundary(c)
    assert not result.is_coboundary
    assert any(s.rank < s.augmented_rank for s in result.systems)


def test_constructed_coboundary_is_found():
    action = builtin_actions(3, 1, GroupKind.GA)
    v = make_variables(action.target)
    value = action.difference(v["X0"] * v["Y1"])
    result = solve_coboundary(Cocycle1(action, value))
    assert result.is_coboundary
    assert action.difference(result.potential) == value

    zero = solve_coboundary(Cocycle1(action, Polynomial.zero(action.product)))
    assert zero.is_coboundary and zero.potential.is_zero()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_closed_form_witnesses(p):
    """The three annihilator families verify with their closed-form witnesses"""
    print(f"🧪 Testing closed-form annihilation witnesses at p={p}")
    k = 4
    c = builtin_cocycle(p, k)
    known = [first_copy_annihilator(c, p)]
    known += [anchored_bracket_annihilator(c, p, i) for i in range(2, k + 1)]
    known += [bracket_power_annihilator(c, p, i, j) for i in range(2, k + 1) for j in range(i + 1, k + 1)]
    for item in known:
        assert c.action.is_invariant(item.annihilator), item.label
        assert verify_witness(item.annihilator, c, item.witness), item.label
    if p == 2:
        v = make_variables(c.action.target)
        assert known[0].witness == v["X0"] * v["Y1"]


@pytest.mark.parametrize("p", [2, 3])
def test_annihilators_by_linear_algebra(p):
    c = builtin_cocycle(p, 3)
    v = make_variables(c.action.target)
    for a in (v["X1"], v["X1"] * v["Y3"] - v["X3"] * v["Y1"], (v["X2"] * v["Y3"] - v["X3"] * v["Y2"]) ** (p - 1)):
        outcome = check_annihilator(a, c)
        assert outcome.annihilates
        assert verify_witness(a, c, outcome.witness)
    assert not check_annihilator(Polynomial.constant(c.action.target, 1), c).annihilates


if __name__ == "__main__":
    print("🚀 Running actions tests")
    print("=" * 60)
    test_builtin_ga_images()
    for prime in (2, 3, 5):
        for kind in GroupKind:
            test_actions_verify_on_construction(prime, kind)
        for copies in (1, 2):
            test_builtin_cocycle_is_nontrivial(prime, copies)
        test_closed_form_witnesses(prime)
    test_invariance_of_known_invariants()
    for prime in (2, 3):
        test_twisted_bracket_invariance(prime)
        test_annihilators_by_linear_algebra(prime)
    test_invariant_products_stay_invariant()
    test_cocycle_at_p2_is_t_x0()
    test_constructed_coboundary_is_found()
    print("✅ All actions tests passed")
