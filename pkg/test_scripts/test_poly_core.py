#!/usr/bin/env python3
"""
Test Polynomial Core
Field arithmetic, monomial orders, sparse polynomials and the text format
"""

import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))

from cmdef_lab.errors import DivisionError, FieldError, ParseError, RingMismatchError
from cmdef_lab.poly_core import (
    CoefficientField,
    Polynomial,
    RingContext,
    block,
    compare,
    format_polynomial,
    format_ring,
    graded_lex,
    grevlex,
    lex,
    make_variables,
    monomials_of_degree,
    parse_ideal_text,
    parse_polynomial,
    parse_ring,
    weighted,
)
from cmdef_lab.poly_core.linalg import nullspace, rank, solve

RNG_SEED = 20240601
INSTANCES = 200

F2 = CoefficientField.prime(2)
F3 = CoefficientField.prime(3)
QQ = CoefficientField.rationals()


def random_polynomial(rng: random.Random, ring: RingContext, terms: int = 4, max_exp: int = 3) -> Polynomial:
    data = {}
    for _ in range(rng.randint(0, terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in ring.variables)
        if ring.field.characteristic:
            data[exps] = rng.randint(1, ring.field.characteristic - 1)
        else:
            data[exps] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return Polynomial(ring, data)


def test_prime_fields_only():
    """Non-prime moduli are rejected at construction"""
    print("🧪 Testing field construction")
    with pytest.raises(FieldError):
        CoefficientField.prime(4)
    assert CoefficientField.from_label("F5").characteristic == 5
    assert CoefficientField.from_label("QQ") == QQ
    assert F3.convert(Fraction(1, 2)) == 2
    with pytest.raises(FieldError):
        F3.convert(Fraction(1, 3))


def test_characteristic_two_sign_collapse():
    ring = RingContext.create(["X", "Y"], F2)
    v = make_variables(ring)
    assert (v["X"] + v["Y"]) * (v["X"] - v["Y"]) == v["X"] ** 2 + v["Y"] ** 2


def test_derivative_of_pth_power_vanishes():
    for p in (2, 3, 5):
        ring = RingContext.create(["X", "Y"], CoefficientField.prime(p))
        x = Polynomial.variable(ring, "X")
        assert (x ** p).derivative("X").is_zero()
        assert (x ** (p + 1)).derivative("X") == x ** p


def test_substitution_expands_square():
    ring = RingContext.create(["t", "X", "Y"], F2)
    v = make_variables(ring)
    image = (v["X"] ** 2).substitute({"X": v["t"] * v["X"] + v["Y"]})
    assert image == v["t"] ** 2 * v["X"] ** 2 + v["Y"] ** 2

    rational = RingContext.create(["t", "X", "Y"], QQ)
    w = make_variables(rational)
    image = (w["X"] ** 2).substitute({"X": w["t"] * w["X"] + w["Y"]})
    assert image == w["t"] ** 2 * w["X"] ** 2 + 2 * w["t"] * w["X"] * w["Y"] + w["Y"] ** 2


def test_order_comparisons():
    """Leading monomials of brackets and degree comparisons"""
    print("🧪 Testing monomial order comparisons")
    # X1 > Y1 > X2 > Y2
    assert compare((1, 0, 0, 1), (0, 1, 1, 0), graded_lex()) == 1
    for order in (lex(), graded_lex(), grevlex(), weighted([1, 2]), block([0], lex(), grevlex())):
        assert compare((0, 0), (1, 0), order) == -1
        assert compare((0, 0), (0, 1), order) == -1
    assert compare((2, 1), (1, 2), grevlex()) == 1


def test_order_properties():
    """Antisymmetry, transitivity, multiplicativity and well-order on random exponents"""
    print("🧪 Testing monomial order properties")
    rng = random.Random(RNG_SEED)
    orders = [lex(), graded_lex(), grevlex(), weighted([1, 2, 3]), block([0, 2], grevlex(), lex())]
    for _ in range(INSTANCES):
        a, b, c, n = (tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(4))
        for order in orders:
            assert compare(a, b, order) == -compare(b, a, order)
            if compare(a, b, order) <= 0 and compare(b, c, order) <= 0:
                assert compare(a, c, order) <= 0
            an = tuple(x + y for x, y in zip(a, n))
            bn = tuple(x + y for x, y in zip(b, n))
            assert compare(an, bn, order) == compare(a, b, order)
            assert compare((0, 0, 0), a, order) <= 0
    print(f"   ✅ {INSTANCES} random triples checked for {len(orders)} orders")


@pytest.mark.parametrize("field", [F3, QQ])
def test_ring_axioms(field):
    rng = random.Random(RNG_SEED + field.characteristic)
    ring = RingContext.create(["X", "Y", "Z"], field)
    for _ in range(INSTANCES):
        f, g, h = (random_polynomial(rng, ring) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f + g == g + f
        assert f - f == Polynomial.zero(ring)
        assert (f * g).is_zero() == (f.is_zero() or g.is_zero())


@pytest.mark.parametrize("field", [F3, QQ])
def test_substitution_and_derivative_laws(field):
    rng = random.Random(RNG_SEED * 7 + field.characteristic)
    ring = RingContext.create(["X", "Y", "Z"], field)
    identity = {name: Polynomial.variable(ring, name) for name in ring.variables}
    for _ in range(INSTANCES):
        f, g = random_polynomial(rng, ring), random_polynomial(rng, ring)
        c = field.convert(rng.randint(1, 2))
        assert f.substitute(identity) == f
        assert (f + g.scale(c)).derivative("Y") == f.derivative("Y") + g.derivative("Y").scale(c)
        assert (f * g).derivative("X") == f.derivative("X") * g + f * g.derivative("X")


def test_weighted_degrees():
    ring = RingContext.create(["X0", "Y0", "X1"], F2, [Fraction(1, 2), Fraction(1, 2), 1])
    assert ring.scaled_weights == (1, 1, 2)
    v = make_variables(ring)
    f = v["X0"] * v["Y0"] + v["X1"]
    assert f.is_homogeneous()
    assert f.degree() == 1
    assert not (v["X0"] + v["X1"]).is_homogeneous()
    assert set((v["X0"] + v["X1"]).homogeneous_components()) == {Fraction(1, 2), Fraction(1)}
    assert len(monomials_of_degree(ring.scaled_weights, 2)) == 4


def test_exact_division():
    ring = RingContext.create(["X", "Y"], QQ)
    v = make_variables(ring)
    f = (v["X"] + v["Y"]) * (v["X"] - 2 * v["Y"])
    assert f.exact_divide(v["X"] + v["Y"]) == v["X"] - 2 * v["Y"]
    with pytest.raises(DivisionError):
        (f + 1).exact_divide(v["X"] + v["Y"])
    assert (v["X"] ** 2 * v["Y"]).divide_by_monomial((1, 1)) == v["X"]
    with pytest.raises(DivisionError):
        (v["X"] + v["Y"]).divide_by_monomial((1, 0))


def test_frobenius_contract():
    ring = RingContext.create(["X", "Y", "Z"], F3)
    target = RingContext.create(["U", "Y", "Z"], F3)
    v = make_variables(ring)
    f = v["X"] ** 6 * v["Z"] + v["X"] ** 3 * v["Y"]
    contracted = f.frobenius_contract(["X"], 3, target, ["U"])
    assert contracted == parse_polynomial("U^2*Z + U*Y", target)
    assert contracted.frobenius_expand(["U"], 3, ring, ["X"]) == f
    with pytest.raises(DivisionError):
        (v["X"] ** 2).frobenius_contract(["X"], 3, target, ["U"])


def test_ring_mismatch():
    a = RingContext.create(["X"], F2)
    b = RingContext.create(["X"], F3)
    with pytest.raises(RingMismatchError):
        Polynomial.variable(a, "X") + Polynomial.variable(b, "X")
    with pytest.raises(RingMismatchError):
        RingContext.create(["X", "X"], F2)


@pytest.mark.parametrize("field", [F3, QQ])
def test_text_round_trip(field):
    """Printing then parsing gives back the same polynomial"""
    rng = random.Random(RNG_SEED * 3 + field.characteristic)
    ring = RingContext.create(["X0", "Y0", "X1"], field, [Fraction(1, 3), Fraction(1, 3), 1])
    assert parse_ring(format_ring(ring)) == ring
    for _ in range(INSTANCES):
        f = random_polynomial(rng, ring)
        text = format_polynomial(f)
        assert parse_polynomial(text, ring) == f
        assert format_polynomial(parse_polynomial(text, ring)) == text


def test_parse_errors():
    ring = RingContext.create(["X", "Y"], F2)
    for bad in ("X +", "X*Z", "1.5*X", "X^(1/2)"):
        with pytest.raises(ParseError):
            parse_polynomial(bad, ring)
    with pytest.raises(ParseError):
        parse_ring("ring F4[X]")
    with pytest.raises(ParseError):
        parse_ring("polynomials over F2")


def test_ideal_text_ignores_comments():
    ring, polys = parse_ideal_text("# header comment\nring F2[X,Y]\n\nX + Y\n# inner\nX^2\n")
    assert ring.variables == ("X", "Y")
    assert [format_polynomial(f) for f in polys] == ["X + Y", "X^2"]


def test_exact_linear_algebra():
    rows = [{0: 1, 1: 1}, {1: 1, 2: 1}]
    outcome = solve(rows, [1, 0], 3, F2)
    assert outcome.consistent
    x = [outcome.solution.get(i, 0) for i in range(3)]
    assert (x[0] + x[1]) % 2 == 1 and (x[1] + x[2]) % 2 == 0
    inconsistent = solve([{0: 1}, {0: 1}], [0, 1], 1, F2)
    assert not inconsistent.consistent
    assert inconsistent.rank < inconsistent.augmented_rank
    assert rank([{0: 1, 1: 2}, {0: 2, 1: 4}], 2, QQ) == 1
    (kernel,) = nullspace([{0: 1, 1: 2}], 2, QQ)
    assert kernel[0] + 2 * kernel[1] == 0


if __name__ == "__main__":
    print("🚀 Running poly_core tests")
    print("=" * 60)
    test_prime_fields_only()
    test_characteristic_two_sign_collapse()
    test_derivative_of_pth_power_vanishes()
    test_substitution_expands_square()
    test_order_comparisons()
    test_order_properties()
    for fld in (F3, QQ):
        test_ring_axioms(fld)
        test_substitution_and_derivative_laws(fld)
        test_text_round_trip(fld)
    test_weighted_degrees()
    test_exact_division()
    test_frobenius_contract()
    test_ring_mismatch()
    test_parse_errors()
    test_ideal_text_ignores_comments()
    test_exact_linear_algebra()
    print("✅ All poly_core tests passed")
