"""Difference-reflection operator algebra: relations, words, shift identity."""

from fractions import Fraction

import pytest

from diffalg.daha import (
    DiffReflOp,
    NotPolynomialPreserving,
    delta_poly,
    e_lambda,
    evaluate_word,
    op_pi,
    op_sigma,
    op_to_text,
    parse_word,
    phi_shift_check,
    verify_relations,
    word_to_text,
)
from diffalg.poly import (
    LaurentPoly,
    LinearForm,
    ParseError,
    RationalFunction,
    VarContext,
    shift_y,
)
from diffalg.weyl import RootData, identity_perm

CTX2 = VarContext(2)
CTX3 = VarContext(3)

RELATION_LABELS_N2 = [
    "s1^2 = id",
    "s1 y1 cross relation",
    "s1 y2 cross relation",
    "pi y1 = y2 pi",
    "pi y2 = (y1 + h) pi",
    "pi^n = u^[1,..,1]",
]


def test_defining_relations_hold_rank_two():
    checks = verify_relations(2)
    assert [label for label, _, _ in checks] == RELATION_LABELS_N2
    for label, ok, witness in checks:
        assert ok, f"{label}: {witness}"


def test_defining_relations_hold_rank_three():
    for label, ok, witness in verify_relations(3):
        assert ok, f"{label}: {witness}"


def test_corrupted_generator_breaks_cross_relations_only():
    bad = [label for label, ok, _ in verify_relations(2, corrupt=True) if not ok]
    assert bad == ["s1 y1 cross relation", "s1 y2 cross relation"]
    for label, ok, witness in verify_relations(2, corrupt=True):
        if not ok:
            assert witness


def test_word_parse_and_text_round_trip():
    word = parse_word("s1 pi y2 (c + h)", CTX3)
    assert word_to_text(word) == "s1 pi y2 (c + h)"
    assert parse_word(word_to_text(word), CTX3) == word
    back = parse_word("pi^-1 s2 y3", CTX3)
    assert parse_word(word_to_text(back), CTX3) == back


def test_word_parse_rejects_bad_input():
    with pytest.raises(ParseError):
        parse_word("s2 y1", CTX2)  # only s1 exists at rank two
    with pytest.raises(ParseError):
        parse_word("q1", CTX2)
    with pytest.raises(ParseError):
        parse_word("s1 (y1 + ", CTX2)


def test_involution_word_evaluates_to_identity():
    op = evaluate_word(CTX2, parse_word("s1 s1", CTX2))
    assert op == DiffReflOp.identity(CTX2)


def test_word_scalars_multiply_through():
    op = evaluate_word(CTX2, parse_word("(y1 + y2) y1", CTX2))
    f = LaurentPoly.y(CTX2, 0)
    applied = op.apply(LaurentPoly.one(CTX2))
    assert applied == (f + LaurentPoly.y(CTX2, 1)) * f


def test_sigma_squares_to_identity():
    sig = op_sigma(CTX2, 0)
    assert sig.compose(sig) == DiffReflOp.identity(CTX2)
    assert not (sig @ sig - DiffReflOp.identity(CTX2)).terms


def test_sigma_preserves_the_polynomial_module():
    sig = op_sigma(CTX3, 1)
    for f in (
        LaurentPoly.y(CTX3, 0),
        LaurentPoly.y(CTX3, 2, 2),
        LaurentPoly.y(CTX3, 1) * LaurentPoly.y(CTX3, 2),
        LaurentPoly.x(CTX3, 0),  # fixed by the reflection
        LaurentPoly.x(CTX3, 1) * LaurentPoly.x(CTX3, 2),
    ):
        sig.apply(f)  # must not raise
    with pytest.raises(NotPolynomialPreserving):
        sig.apply(LaurentPoly.x(CTX3, 1))  # moved by the reflection


def test_non_polynomial_application_is_reported():
    form = LinearForm(0, 1, 0, 0)
    coeff = RationalFunction(LaurentPoly.one(CTX2), [form])
    op = DiffReflOp(CTX2, {(identity_perm(2), (0, 0)): coeff})
    with pytest.raises(NotPolynomialPreserving):
        op.apply(LaurentPoly.one(CTX2))


def test_pi_translates_last_variable():
    f = LaurentPoly.y(CTX2, 1)
    assert op_pi(CTX2).apply(f) == LaurentPoly.y(CTX2, 0) + LaurentPoly.h(CTX2)


def test_delta_poly_matches_root_system_alternant():
    roots = RootData.type_a(3)
    assert delta_poly(CTX3) == roots.vandermonde(CTX3)
    deformed = delta_poly(CTX2, c_mult=1)
    assert deformed == (
        LaurentPoly.y(CTX2, 0) - LaurentPoly.y(CTX2, 1) + LaurentPoly.c(CTX2)
    )


def test_shift_element_modes_agree_rank_two():
    for m in range(3):
        lam = (1,) * m + (0,) * (2 - m)
        closed = e_lambda(CTX2, lam, "closed")
        generators = e_lambda(CTX2, lam, "generators")
        assert (closed - generators).is_zero(), f"m={m}"


def test_shift_element_rejects_bad_arguments():
    with pytest.raises(ValueError):
        e_lambda(CTX2, (2, 0))
    with pytest.raises(ValueError):
        e_lambda(CTX2, (0, 1))
    with pytest.raises(ValueError):
        e_lambda(CTX2, (1, 0), mode="mystery")


def test_spherical_collapse_reproduces_symmetric_action():
    op = e_lambda(CTX2, (1, 0), "generators")
    f = LaurentPoly.y(CTX2, 0) + LaurentPoly.y(CTX2, 1)
    collapsed = op.spherical_collapse()
    total = RationalFunction.zero(CTX2)
    for lam, coeff in collapsed.items():
        total = total + coeff * shift_y(f, lam)
    assert total.is_polynomial()
    assert total.num == op.apply(f)


def test_parameter_shift_identity_rank_two():
    ok, witness = phi_shift_check(2, 1)
    assert ok and witness is None


def test_operator_text_is_printable():
    text = op_to_text(op_sigma(CTX2, 0))
    assert isinstance(text, str) and text
    assert op_to_text(DiffReflOp.zero(CTX2)) == "0"


def test_scalar_multiplication_distributes():
    sig = op_sigma(CTX2, 0)
    doubled = sig * 2
    assert doubled - sig == sig
    assert (sig * Fraction(1, 2)) * 2 == sig
