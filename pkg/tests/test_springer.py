"""Graded modules over the sign-isotypic ideal algebra, plus chain counts."""

import random
from fractions import Fraction

import pytest

from diffalg.ideals import IdealSpec, Window, graded_dimension
from diffalg.poly import LaurentPoly, VarContext
from diffalg.springer import (
    ChainModel,
    EquivaluedModule,
    ModuleElt,
    NotInIdeal,
    chain_poincare,
    module_act,
    module_slice_basis,
)
from diffalg.weyl import RootData

CTX2 = VarContext(2)
ROOTS2 = RootData.type_a(2)
NARROW = Window(0, 1, 1)


def halved_difference():
    return (LaurentPoly.x(CTX2, 0) - LaurentPoly.x(CTX2, 1)) * Fraction(1, 2)


def test_module_construction_and_equality():
    mod = EquivaluedModule(ROOTS2, 1)
    assert mod == EquivaluedModule(ROOTS2, 1)
    assert mod != EquivaluedModule(ROOTS2, 2)
    assert mod.ideal_spec(0).d == 1
    assert mod.ideal_spec(2).d == 3
    with pytest.raises(ValueError):
        EquivaluedModule(ROOTS2, -1)
    with pytest.raises(ValueError):
        mod.ideal_spec(-1)


def test_elements_are_membership_checked():
    mod = EquivaluedModule(ROOTS2, 1)
    with pytest.raises(NotInIdeal) as info:
        mod.element(0, LaurentPoly.one(CTX2))
    assert info.value.witness == {"pair": (1, 2), "order": (0, 0), "coefficient": "1"}
    # the Vandermonde has a first-order zero, so it is a valid grade-0 vector
    elt = mod.element(0, ROOTS2.vandermonde(CTX2))
    assert elt.grade == 0
    assert not elt.is_zero()


def test_zero_module_admits_constants():
    mod = EquivaluedModule(ROOTS2, 0)
    one = mod.element(0, LaurentPoly.one(CTX2))
    assert one.text()
    assert (one - one).is_zero()


def test_pinned_action_raises_the_grade():
    mod = EquivaluedModule(ROOTS2, 0)
    m = mod.element(0, LaurentPoly.one(CTX2))
    a = halved_difference()
    out = module_act(a, m, 1)
    assert isinstance(out, ModuleElt)
    assert out.grade == 1
    assert out.value == a


def test_action_accepts_class_mappings():
    mod = EquivaluedModule(ROOTS2, 0)
    m = mod.element(0, LaurentPoly.one(CTX2))
    mapping = {
        (1, 0): LaurentPoly.const(CTX2, Fraction(1, 2)),
        (0, 1): LaurentPoly.const(CTX2, Fraction(-1, 2)),
    }
    out = module_act(mapping, m, 1)
    assert out.value == halved_difference()


def test_action_gatekeeps_membership_and_isotypy():
    mod = EquivaluedModule(ROOTS2, 0)
    m = mod.element(0, LaurentPoly.one(CTX2))
    with pytest.raises(NotInIdeal) as info:
        module_act(LaurentPoly.one(CTX2), m, 1)
    assert info.value.witness is not None
    with pytest.raises(NotInIdeal):
        # symmetric but vanishing: in the ideal, wrong isotypic type for d=1
        module_act(ROOTS2.vandermonde(CTX2) ** 2, m, 1)
    with pytest.raises(NotInIdeal):
        # y1 - y2 is antisymmetric and first-order, but not sign^2-isotypic
        module_act(ROOTS2.vandermonde(CTX2) ** 1, m, 2)


def test_action_is_bilinear_and_composes():
    rng = random.Random(5150)
    mod = EquivaluedModule(ROOTS2, 1)
    van = ROOTS2.vandermonde(CTX2)
    base = mod.element(0, van)
    a = halved_difference()
    b = van
    for _ in range(10):
        scale = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        m = mod.element(0, van * scale)
        lhs = module_act(a, m, 1) + module_act(a, base, 1)
        rhs = module_act(a, m + base, 1)
        assert lhs == rhs
    twice = module_act(b, module_act(a, base, 1), 1)
    other = module_act(a, module_act(b, base, 1), 1)
    assert twice == other
    assert twice.grade == 2


def test_untwisted_views_divide_out_the_alternant():
    mod = EquivaluedModule(ROOTS2, 1)
    van = ROOTS2.vandermonde(CTX2)
    flat = mod.element(0, van)
    assert repr(flat.untwisted()) == "RatFn(y1 - y2)"
    lifted = module_act(halved_difference(), EquivaluedModule(ROOTS2, 0).element(0, LaurentPoly.one(CTX2)), 1)
    assert repr(lifted.untwisted()) == "RatFn((1/2*x1 - 1/2*x2) / (y1 - y2))"


def test_module_slices_match_ideal_slices():
    mod = EquivaluedModule(ROOTS2, 0)
    for j in range(3):
        slice_a = module_slice_basis(mod, j, NARROW)
        slice_b = graded_dimension(IdealSpec(ROOTS2, j), None, NARROW)
        assert slice_a.dimension == slice_b.dimension
    assert module_slice_basis(EquivaluedModule(ROOTS2, 1), 0, NARROW).dimension == 6
    assert module_slice_basis(mod, 0, NARROW).dimension == 12


def test_chain_model_validation():
    with pytest.raises(ValueError):
        ChainModel(-1, 2)
    with pytest.raises(ValueError):
        ChainModel(1, 0)
    chain = ChainModel(2, 4)
    assert chain.d == 2
    assert chain.length == 4


def test_chain_poincare_pinned_example():
    assert chain_poincare(ChainModel(1, 3)) == [1, 1, 3]


def test_chain_poincare_invariants():
    for d in range(4):
        for length in range(1, 5):
            coeffs = chain_poincare(ChainModel(d, length))
            assert len(coeffs) == d + 2
            assert coeffs[0] == 1
            assert sum(coeffs) == d + 1 + length
            assert all(v >= 1 for v in coeffs)
