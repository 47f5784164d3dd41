#!/usr/bin/env python3
"""
Test SL2 Vector Invariants
Brackets, Plucker relations, the hsop certificate, Roberts' isomorphism and test sequences
"""

import os
import sys

import pytest
from pydantic import ValidationError

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from cmdef_lab.actions import GroupKind, builtin_cocycle, verify_witness
from cmdef_lab.errors import NotInvariantError
from cmdef_lab.invariants_sl2 import (
    RobertsIsomorphism,
    VectorInvariantConfig,
    annihilator_phsop,
    bracket,
    certify_hsop,
    chain_height,
    chain_is_groebner,
    depth_test_sequence,
    expected_regular_positions,
    ga_dimension,
    ga_test_sequence,
    hsop_builder,
    hsop_terms,
    known_annihilator_witnesses,
    plucker_generators,
    plucker_ideal,
    plucker_presentation,
    plucker_relations,
    roberts_forward,
    roberts_inverse,
    sl2_dimension,
    twisted_bracket,
    twisted_ga_dimension,
    twisted_sl2_dimension,
)
from cmdef_lab.poly_core import CoefficientField, make_variables


def test_vector_config():
    cfg = VectorInvariantConfig(group=GroupKind.GA, n_copies=3)
    assert cfg.ring().variables == ("X1", "Y1", "X2", "Y2", "X3", "Y3")
    assert len(plucker_generators(cfg)) == 6
    sl2 = VectorInvariantConfig(group=GroupKind.SL2, n_copies=3)
    assert len(plucker_generators(sl2)) == 3

    twisted = VectorInvariantConfig(group=GroupKind.GA, n_copies=1, frobenius_p=3)
    assert twisted.field_label == "F3"
    assert twisted.ring().variables[:2] == ("X0", "Y0")
    with pytest.raises(ValueError):
        plucker_generators(twisted)
    with pytest.raises(ValidationError):
        VectorInvariantConfig(group=GroupKind.GA, n_copies=1, frobenius_p=3, field_label="F5")


def test_plucker_relation_for_four_copies():
    """One relation G12 G34 - G13 G24 + G14 G23 and it spans the relation ideal"""
    print("🧪 Testing the Plucker relation for n=4")
    presentation = plucker_presentation(4)
    relations = plucker_relations(presentation, 4)
    assert len(relations) == 1
    t = make_variables(presentation.tag_ring)
    assert relations[0] == t["G12"] * t["G34"] - t["G13"] * t["G24"] + t["G14"] * t["G23"]
    assert presentation.relation_ideal.equals(plucker_ideal(presentation, 4))


def test_hsop_shape():
    assert hsop_terms(3) == [[(1, 2, 1)], [(1, 3, 1)], [(2, 3, 1)]]
    assert [[(i, j) for i, j, _ in terms] for terms in hsop_terms(4)] == [
        [(1, 2)],
        [(1, 3)],
        [(1, 4), (2, 3)],
        [(2, 4)],
        [(3, 4)],
    ]
    f = hsop_builder(4)
    ring = f[0].ring
    assert f[2] == bracket(ring, 1, 4) + bracket(ring, 2, 3)
    with pytest.raises(ValueError):
        hsop_terms(1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_hsop_is_certified(n):
    print(f"🧪 Certifying the bracket hsop for n={n}")
    assert certify_hsop(n)


def test_squared_hsop_and_prime_field():
    squared = {(i, j): 2 for terms in hsop_terms(3) for i, j, _ in terms}
    assert certify_hsop(3, squared)
    assert certify_hsop(3, field=CoefficientField.prime(2))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_bracket_chain(n):
    """g12, g23, ..., g_{n-1,n} is a Groebner basis of height n-1"""
    assert chain_is_groebner(n)
    assert chain_height(n) == n - 1


def test_roberts_standard_round_trip():
    print("🧪 Testing Roberts' isomorphism on two copies")
    iso = RobertsIsomorphism.standard(2)
    v = make_variables(iso.sl2_ring)
    w = make_variables(iso.ga_ring)
    assert roberts_forward(bracket(iso.sl2_ring, 1, ""), iso) == w["X1"]
    assert roberts_inverse(w["X1"], iso) == v["X1"] * v["Y"] - v["X"] * v["Y1"]
    g12 = bracket(iso.ga_ring, 1, 2)
    assert roberts_inverse(g12, iso) == bracket(iso.sl2_ring, 1, 2)
    for g in (w["X1"] * w["X2"], g12 * w["X2"], w["X1"] ** 2 + g12):
        assert iso.forward(iso.inverse(g)) == g
    with pytest.raises(NotInvariantError):
        iso.inverse(w["Y1"])
    with pytest.raises(NotInvariantError):
        iso.forward(v["Y1"])


def test_roberts_worked_values():
    """The distinguished bracket goes to X1 and brackets of V are fixed, in both directions"""
    iso = RobertsIsomorphism.standard(2)
    v = make_variables(iso.sl2_ring)
    w = make_variables(iso.ga_ring)
    assert iso.forward(v["Y"] * v["X1"] - v["X"] * v["Y1"]) == w["X1"]
    assert iso.forward(v["X1"] * v["Y2"] - v["X2"] * v["Y1"]) == w["X1"] * w["Y2"] - w["X2"] * w["Y1"]
    assert iso.inverse(w["X1"]) == v["Y"] * v["X1"] - v["X"] * v["Y1"]
    assert iso.inverse(w["X1"] * w["Y2"] - w["X2"] * w["Y1"]) == v["X1"] * v["Y2"] - v["X2"] * v["Y1"]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_roberts_round_trip_on_generators(n):
    """forward(inverse(g)) = g on the G_a generators and inverse(forward(f)) = f on the brackets"""
    print(f"🧪 Testing Roberts' isomorphism on the generators for n={n}")
    iso = RobertsIsomorphism.standard(n)
    ga_generators = plucker_generators(VectorInvariantConfig(group=GroupKind.GA, n_copies=n))
    assert len(ga_generators) == n + n * (n - 1) // 2
    for g in ga_generators:
        g = g.rename(iso.ga_ring)
        assert iso.forward(iso.inverse(g)) == g

    sl2_generators = [g.rename(iso.sl2_ring) for g in plucker_generators(VectorInvariantConfig(group=GroupKind.SL2, n_copies=n))]
    sl2_generators += [bracket(iso.sl2_ring, i, "") for i in range(1, n + 1)]
    for f in sl2_generators:
        assert iso.inverse(iso.forward(f)) == f


@pytest.mark.parametrize("p", [2, 3])
def test_roberts_twisted_round_trip(p):
    iso = RobertsIsomorphism.twisted_frame(p, 2)
    assert iso.ga_ring.variables == ("X0", "Y0", "X1", "Y1")
    w = make_variables(iso.ga_ring)
    h = w["X1"] ** p * w["Y0"] - w["X0"] * w["Y1"] ** p
    for g in (w["X0"], w["X1"], h, h * w["X1"]):
        lifted = iso.inverse(g)
        assert iso.sl2_action.is_invariant(lifted)
        assert iso.forward(lifted) == g


def test_dimension_formulas():
    assert ga_dimension(4) == 3
    assert sl2_dimension(4) == 5
    assert sl2_dimension(1) == 0
    assert [twisted_ga_dimension(k) for k in (1, 2, 3)] == [3, 5, 7]
    assert [twisted_sl2_dimension(k) for k in (2, 3, 4)] == [3, 5, 7]


def test_expected_regular_positions():
    assert expected_regular_positions(2) == [3, 4, 5]
    assert expected_regular_positions(3) == [3, 4, 5, 6, 7]
    assert expected_regular_positions(4) == [3, 4, 6, 7, 8, 9]
    for k in (2, 3, 4, 5):
        assert len(expected_regular_positions(k + 1)) == k + 3


@pytest.mark.parametrize("p", [2, 3])
def test_depth_test_sequence_small(p):
    sequence = depth_test_sequence(p, 2)
    ring = sequence[0].ring
    assert sequence == [bracket(ring, 1, 2), twisted_bracket(ring, 1, p), twisted_bracket(ring, 2, p)]
    assert len(depth_test_sequence(p, 3)) == 5
    homogenized = depth_test_sequence(p, 4, homogenize=True)
    assert all(f.is_homogeneous() for f in homogenized)
    with pytest.raises(ValueError):
        depth_test_sequence(p, 1)


@pytest.mark.parametrize("p", [2, 3])
def test_ga_test_sequence_is_invariant(p):
    iso, sequence = ga_test_sequence(p, 2)
    assert len(sequence) == 5
    for f in sequence:
        assert iso.ga_action.is_invariant(f)
        assert not f.constant_term


@pytest.mark.parametrize("p", [2, 3, 5])
def test_annihilator_phsop(p):
    phsop = annihilator_phsop(p, 4)
    v = make_variables(phsop[0].ring)
    assert phsop == [
        v["X1"],
        v["X2"] ** (p - 1),
        v["X1"] * v["Y3"] - v["X3"] * v["Y1"],
        (v["X3"] * v["Y4"] - v["X4"] * v["Y3"]) ** (p - 1),
    ]
    c = builtin_cocycle(p, 4)
    witnesses = known_annihilator_witnesses(c, p, 4)
    assert len(witnesses) == len(phsop)
    assert witnesses[1] is None
    for a, known in zip(phsop, witnesses):
        assert c.action.is_invariant(a)
        if known is not None:
            assert known.annihilator == a
            assert verify_witness(a, c, known.witness)
    short = annihilator_phsop(p, 2)
    u = make_variables(short[0].ring)
    assert short == [u["X1"], u["X2"] ** (p - 1)]


if __name__ == "__main__":
    print("🚀 Running invariants_sl2 tests")
    print("=" * 60)
    test_vector_config()
    test_plucker_relation_for_four_copies()
    test_hsop_shape()
    for copies in (2, 3, 4):
        test_hsop_is_certified(copies)
    test_squared_hsop_and_prime_field()
    for copies in (3, 4, 5):
        test_bracket_chain(copies)
    test_roberts_standard_round_trip()
    test_roberts_worked_values()
    for copies in (2, 3, 4):
        test_roberts_round_trip_on_generators(copies)
    test_dimension_formulas()
    test_expected_regular_positions()
    for prime in (2, 3):
        test_roberts_twisted_round_trip(prime)
        test_depth_test_sequence_small(prime)
        test_ga_test_sequence_is_invariant(prime)
    for prime in (2, 3, 5):
        test_annihilator_phsop(prime)
    print("✅ All invariants_sl2 tests passed")
