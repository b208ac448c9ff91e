"""Unit tests for the graded-commutative arithmetic core."""

import random
from fractions import Fraction

import pytest

from obstructor.errors import (
    DegreeOverflowError,
    MixedDegreeError,
    PresentationError,
    RingMismatchError,
)
from obstructor.graded import (
    AlgebraPresentation,
    CoefficientRing,
    Element,
    exterior,
    truncated_poly,
)
from obstructor.render import render_element


def test_modular_ring_arithmetic():
    r = CoefficientRing.modular(4)
    assert r.normalize(-1) == 3
    assert r.add(3, 3) == 2
    assert r.mul(2, 2) == 0
    assert r.neg(1) == 3
    assert r.is_zero(8)
    assert str(r) == "Z_4"


def test_rational_ring_arithmetic():
    r = CoefficientRing.rational()
    assert r.normalize(2) == Fraction(2)
    assert r.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert r.neg(Fraction(1, 2)) == Fraction(-1, 2)
    assert str(r) == "Q"


def test_modulus_must_be_at_least_two():
    with pytest.raises(PresentationError):
        CoefficientRing.modular(1)


def test_generator_validation():
    with pytest.raises(PresentationError):
        exterior("x2", 2)  # exterior generators are odd
    with pytest.raises(PresentationError):
        truncated_poly("y", 2, 1)  # height >= 2
    with pytest.raises(PresentationError):
        # odd-degree polynomial letters only make sense mod 2
        AlgebraPresentation(
            CoefficientRing.modular(3), [truncated_poly("t", 1, 4)]
        )


def test_exterior_square_is_zero():
    alg = AlgebraPresentation(CoefficientRing.modular(3), [exterior("x1", 1)])
    x = alg.gen("x1")
    assert (x * x).is_zero()


def test_mod2_degree_one_polynomial_square():
    # Z_2[x1]/(x1^4): the quotient SU(2)/Z_2, where x1^2 is nonzero
    alg = AlgebraPresentation(
        CoefficientRing.modular(2), [truncated_poly("x1", 1, 4)]
    )
    x = alg.gen("x1")
    assert x * x == alg.gen("x1", 2)
    assert (alg.gen("x1", 2) * alg.gen("x1", 2)).is_zero()


def test_koszul_sign_on_odd_generators():
    alg = AlgebraPresentation(
        CoefficientRing.modular(5), [exterior("x1", 1), exterior("x3", 3)]
    )
    a = alg.gen("x1")
    b = alg.gen("x3")
    assert b * a == -(a * b)
    assert a * b == alg.monomial((1, 1))


def test_binomial_square_mod3():
    alg = AlgebraPresentation(
        CoefficientRing.modular(3),
        [exterior("x1", 1), truncated_poly("y", 2, 3)],
    )
    e = alg.gen("x1") + alg.gen("y")
    sq = e * e
    # x1^2 = 0, x1*y + y*x1 = 2*x1*y, plus y^2
    expected = alg.monomial((1, 1), 2) + alg.gen("y", 2)
    assert sq == expected
    assert render_element(sq) == "-x1*y + y^2"


def test_basis_in_degree(psu3):
    alg = psu3.algebra
    # generators in order: x1, x3, y
    assert alg.basis_in_degree(0) == [(0, 0, 0)]
    assert alg.basis_in_degree(1) == [(1, 0, 0)]
    assert alg.basis_in_degree(3) == [(0, 1, 0), (1, 0, 1)]
    assert alg.basis_in_degree(4) == [(0, 0, 2), (1, 1, 0)]
    with pytest.raises(DegreeOverflowError):
        alg.basis_in_degree(alg.max_degree + 1)


def test_strict_mode_raises_on_overflow():
    alg = AlgebraPresentation(
        CoefficientRing.modular(5), [truncated_poly("y", 2, 10)], max_degree=6
    )
    with pytest.raises(DegreeOverflowError):
        alg.gen("y", 3) * alg.gen("y")


def test_lenient_mode_truncates():
    alg = AlgebraPresentation(
        CoefficientRing.modular(5),
        [truncated_poly("y", 2, 10)],
        max_degree=6,
        strict=False,
    )
    prod = alg.gen("y", 3) * alg.gen("y")
    assert prod.is_zero()
    assert prod.truncated


def test_non_canonical_monomial_rejected(psu3):
    with pytest.raises(PresentationError):
        Element(psu3.algebra, {(2, 0, 0): 1})  # x1^2 is not canonical


def test_mixed_degree_detection(psu3):
    alg = psu3.algebra
    e = alg.gen("x1") + alg.gen("y")
    assert not e.is_homogeneous()
    with pytest.raises(MixedDegreeError):
        e.homogeneous_degree()
    assert alg.zero().homogeneous_degree() is None


def test_ring_mismatch_rejected(psu3):
    other = AlgebraPresentation(CoefficientRing.modular(3), [exterior("z", 1)])
    with pytest.raises(RingMismatchError):
        psu3.algebra.gen("x1") + other.gen("z")


def test_scalar_multiplication(psu3):
    alg = psu3.algebra
    e = alg.gen("y")
    assert 2 * e == e + e
    assert e.scale(3).is_zero()
    assert (e * 2) == e.scale(2)


def test_power_and_counit(psu3):
    alg = psu3.algebra
    assert alg.gen("y") ** 3 == alg.zero()
    assert (alg.one(2) + alg.gen("x1")).counit() == 2
    assert alg.gen("x1").counit() == 0


def test_randomized_associativity_and_commutativity(psu4_mod2):
    alg = psu4_mod2.algebra
    rng = random.Random(7)
    monos = [m for d in range(0, 5) for m in alg.basis_in_degree(d)]
    for _ in range(500):
        a = alg.monomial(rng.choice(monos), rng.randrange(1, 2))
        b = alg.monomial(rng.choice(monos))
        c = alg.monomial(rng.choice(monos))
        try:
            left = (a * b) * c
            right = a * (b * c)
        except DegreeOverflowError:
            continue
        assert left == right
        da = a.homogeneous_degree() or 0
        db = b.homogeneous_degree() or 0
        ba = b * a
        if da * db % 2:
            ba = -ba
        assert a * b == ba
