"""Unit tests for the commutator pipeline, obstruction classification, and
order bookkeeping."""

import pytest

from obstructor.catalog import additive_order
from obstructor.engine import (
    Classification,
    PrimeLocalResult,
    assemble_l0,
    build_pipeline,
    classify_obstruction,
    commutator_pullback,
    covering_local_order,
    ord_additive_oracle,
)
from obstructor.errors import PresentationError, UnclassifiableObstructionError
from obstructor.graded import (
    AlgebraPresentation,
    CoefficientRing,
    exterior,
)
from obstructor.hopf import HopfPresentation


def tensor(sq, *parts):
    out = sq.algebra.one()
    for i, e in enumerate(parts):
        out = out * sq.embed(e, i)
    return out


def test_pipeline_golden(psu3):
    alg = psu3.algebra
    sq = psu3.square
    w = commutator_pullback(psu3, alg.gen("x3"))
    expected = tensor(sq, alg.gen("x1"), alg.gen("y")) - tensor(
        sq, alg.gen("y"), alg.gen("x1")
    )
    assert w == expected


def test_pipeline_annihilates_primitives(psu3):
    # x1 and y are primitive, so the commutator pullback kills them
    for name in ("x1", "y"):
        assert commutator_pullback(psu3, psu3.algebra.gen(name)).is_zero()


def test_pipeline_rejects_mixed_input(psu3):
    alg = psu3.algebra
    with pytest.raises(PresentationError):
        commutator_pullback(psu3, alg.gen("x1") + alg.gen("y"))


def test_pipeline_stage_count(psu3):
    pipe = build_pipeline(psu3)
    assert [name for name, _, _ in pipe.stages] == [
        "μ*",
        "(μ×μ)*",
        "(1×1×c×c)*",
        "(1×T×1)*",
        "(Δ×Δ)*",
    ]


def test_classify_zero(psu3):
    cls = classify_obstruction(psu3, psu3.square.algebra.zero())
    assert cls.kind == "zero"


def test_classify_bockstein_image(psu3):
    w = commutator_pullback(psu3, psu3.algebra.gen("x3"))
    cls = classify_obstruction(psu3, w)
    assert cls == Classification("bockstein-image", "x1⊗x1", -1, 1)


def test_classify_unmatched_is_hard_error(psu3):
    alg = psu3.algebra
    stray = psu3.square.embed(alg.gen("x3"), 0)  # x3 ⊗ 1
    with pytest.raises(UnclassifiableObstructionError):
        classify_obstruction(psu3, stray)


def test_classify_without_bockstein_data():
    alg = AlgebraPresentation(CoefficientRing.modular(2), [exterior("x3", 3)])
    h = HopfPresentation(alg, {})
    w = h.square.embed(alg.gen("x3"), 0)
    with pytest.raises(UnclassifiableObstructionError):
        classify_obstruction(h, w)


def test_covering_local_order():
    assert covering_local_order(3, 1, 1) == 3  # adjoint PSU(3)
    assert covering_local_order(2, 2, 2) == 4  # adjoint PSU(4)
    assert covering_local_order(2, 2, 1) == 1  # SU(4)/Z2: class dies
    assert covering_local_order(3, 2, 1) == 1  # SU(9)/Z3
    assert covering_local_order(3, 3, 2) == 3  # SU(27)/Z9
    with pytest.raises(ValueError):
        covering_local_order(2, 1, 2)


def test_ord_additive_oracle():
    assert ord_additive_oracle(1, 6) == 6
    assert ord_additive_oracle(2, 4) == 2
    assert ord_additive_oracle(0, 5) == 1
    assert ord_additive_oracle(3, 9) == 3
    with pytest.raises(ValueError):
        ord_additive_oracle(1, 0)


def test_oracle_matches_gcd_closed_form():
    for l in range(1, 60):
        for q in range(0, l + 3):
            assert ord_additive_oracle(q, l) == additive_order(q, l)


def _local(p, order):
    return PrimeLocalResult(
        prime=p,
        r=1,
        s=1,
        strategy="lemma-backed",
        classified_as="lemma",
        local_order=order,
    )


def test_assemble_l0():
    assert assemble_l0([]) == 1
    assert assemble_l0([_local(2, 2), _local(3, 3)]) == 6
    with pytest.raises(ValueError):
        assemble_l0([_local(2, 2), _local(2, 1)])
