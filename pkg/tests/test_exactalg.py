"""Exact algebra layer: forms, constraints, generator matrices, presentations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperweyl.exactalg import (
    CENTRAL_V,
    CENTRAL_W,
    ExactArithmeticError,
    LinForm,
    RatMatrix,
    SUBGROUP_GENERATORS,
    V_GENERATOR_NAMES,
    V_GENERATORS,
    V_SYMBOLS,
    W_GENERATOR_NAMES,
    W_GENERATORS,
    W_SYMBOLS,
    coxeter_order,
    eq_mod_constraint,
    identity_symvec,
    v_constraint,
    w_constraint,
    word_to_matrix,
)

WF = lambda s: LinForm.parse(s, W_SYMBOLS)
VF = lambda s: LinForm.parse(s, V_SYMBOLS)


def test_parse_and_str_roundtrip():
    for text in ["1+a-c-d", "2c-a", "b", "-1-3a+b", "1/2+1/2a", "0"]:
        f = WF(text)
        assert WF(str(f)) == f


def test_parse_rejects_bad_symbols():
    with pytest.raises(ValueError):
        LinForm.parse("1+a-z", W_SYMBOLS)
    with pytest.raises(ValueError):
        LinForm.parse("a+b", V_SYMBOLS)


def test_canonical_str_is_alphabet_ordered():
    assert str(WF("2c-a")) == "-a+2c"
    assert str(WF("c+b-a")) == "-a+b+c"
    assert str(WF("1+a-c-d")) == "1+a-c-d"


def test_reduced_zeroes_last_symbol():
    f = WF("h").reduced(w_constraint())
    assert f.coef("h") == 0
    assert f == WF("2+3a-b-c-d-e-f-g")
    g = VF("2-G").reduced(v_constraint())
    assert g.coef("G") == 0
    assert g == VF("1-A-B-C-D+E+F")


def test_eq_mod_constraint_basic():
    c = w_constraint()
    assert eq_mod_constraint(WF("h"), WF("2+3a-b-c-d-e-f-g"), c)
    assert not eq_mod_constraint(WF("h"), WF("g"), c)
    cv = v_constraint()
    assert eq_mod_constraint(VF("E+F-B-C"), VF("1+A+D-G"), cv)


@given(
    st.lists(st.integers(-4, 4), min_size=8, max_size=8),
    st.integers(-3, 3),
    st.integers(-5, 5),
)
@settings(max_examples=60, deadline=None)
def test_eq_mod_constraint_is_shift_invariant(coefs, const, lam):
    c = w_constraint()
    f = LinForm(W_SYMBOLS, const, coefs)
    g = f + c * lam
    assert eq_mod_constraint(f, g, c)
    if lam != 0:
        # adding a non-multiple breaks it
        assert not eq_mod_constraint(f, g + LinForm.symbol(W_SYMBOLS, "a"), c)


@given(st.lists(st.integers(-6, 6), min_size=8, max_size=8))
@settings(max_examples=40, deadline=None)
def test_linform_evaluate_is_linear(coefs):
    f = LinForm(W_SYMBOLS, 1, coefs)
    pt = [complex(k, -k) / 7 for k in range(1, 9)]
    direct = complex(1) + sum(float(c) * v for c, v in zip(f.coefs, pt))
    assert abs(f.evaluate(pt) - direct) < 1e-12


# -- matrix layer ------------------------------------------------------------


def test_half_integer_closure_is_checked():
    m = RatMatrix.from_rows([[Fraction(1, 2), 0], [0, 1]])
    with pytest.raises(ExactArithmeticError):
        RatMatrix.from_rows([[Fraction(1, 4), 0], [0, 1]])
    # (1/2 I) * (1/2 I) has quarter entries and must be refused
    with pytest.raises(ExactArithmeticError):
        half = RatMatrix.from_rows([[Fraction(1, 2), 0], [0, Fraction(1, 2)]])
        _ = half @ half


def test_known_generator_actions():
    idw = identity_symvec("w")
    got = W_GENERATORS["s3'"].apply(idw).reduced()
    expected = ["1+2a-c-d-e", "b", "1+a-d-e", "1+a-c-e", "1+a-c-d", "f", "g", "h"]
    cw = w_constraint()
    for e, s in zip(got.entries, expected):
        assert eq_mod_constraint(e, WF(s), cw)

    got_y = word_to_matrix(["s1"], "w").apply(idw)
    expected_s1 = ["2c-a", "c+b-a", "c", "c+d-a", "c+e-a", "c+f-a", "c+g-a", "c+h-a"]
    for e, s in zip(got_y.entries, expected_s1):
        assert eq_mod_constraint(e, WF(s), cw)

    idv = identity_symvec("v")
    got_x1 = V_GENERATORS["a3"].apply(idv)
    expected_x1 = ["A", "E-C", "E-B", "D", "E", "1+A+D-G", "1+A+D-F"]
    cv = v_constraint()
    for e, s in zip(got_x1.entries, expected_x1):
        assert eq_mod_constraint(e, VF(s), cv)


def test_central_involutions():
    cw = w_constraint()
    idw = identity_symvec("w")
    zw = CENTRAL_W.apply(idw)
    for e, s in zip(zw.entries, ["1-a", "1-b", "1-c", "1-d", "1-e", "1-f", "1-g", "1-h"]):
        assert eq_mod_constraint(e, WF(s), cw)
    assert (CENTRAL_W @ CENTRAL_W).is_identity()
    for name in W_GENERATOR_NAMES:
        g = W_GENERATORS[name]
        assert (CENTRAL_W @ g) == (g @ CENTRAL_W)

    cv = v_constraint()
    idv = identity_symvec("v")
    zv = CENTRAL_V.apply(idv)
    for e, s in zip(zv.entries, ["1-A", "1-B", "1-C", "1-D", "2-E", "2-F", "2-G"]):
        assert eq_mod_constraint(e, VF(s), cv)
    assert (CENTRAL_V @ CENTRAL_V).is_identity()
    for name in V_GENERATOR_NAMES:
        g = V_GENERATORS[name]
        assert (CENTRAL_V @ g) == (g @ CENTRAL_V)


def test_generators_preserve_constraint_functional():
    # every group element fixes the constraint functional, so hyperplane
    # membership is preserved exactly
    cw = w_constraint()
    idw = identity_symvec("w")
    for name in W_GENERATOR_NAMES:
        v = W_GENERATORS[name].apply(idw)
        total = v.entries[1]
        for e in v.entries[2:]:
            total = total + e
        lhs = total - v.entries[0] * 3
        assert eq_mod_constraint(lhs, LinForm.const_form(W_SYMBOLS, 2), cw)
    cv = v_constraint()
    idv = identity_symvec("v")
    for name in V_GENERATOR_NAMES:
        v = V_GENERATORS[name].apply(idv)
        lhs = v.entries[4] + v.entries[5] + v.entries[6] - (
            v.entries[0] + v.entries[1] + v.entries[2] + v.entries[3]
        )
        assert eq_mod_constraint(lhs, LinForm.const_form(V_SYMBOLS, 1), cv)


def test_coxeter_presentation_w_side():
    names = W_GENERATOR_NAMES
    for n1 in names:
        g1 = W_GENERATORS[n1]
        assert (g1 @ g1).is_identity(), n1
        for n2 in names:
            m = coxeter_order("w", n1, n2)
            prod = g1 @ W_GENERATORS[n2]
            assert (prod ** m).is_identity(), (n1, n2, m)
            if m == 3:
                assert not (prod ** 2).is_identity(), (n1, n2)


def test_coxeter_presentation_v_side():
    names = V_GENERATOR_NAMES
    for n1 in names:
        g1 = V_GENERATORS[n1]
        assert (g1 @ g1).is_identity(), n1
        for n2 in names:
            m = coxeter_order("v", n1, n2)
            prod = g1 @ V_GENERATORS[n2]
            assert (prod ** m).is_identity(), (n1, n2, m)
            if m == 3:
                assert not (prod ** 2).is_identity(), (n1, n2)


def test_word_to_matrix_composes_left_to_right():
    w1 = word_to_matrix(["s1", "s2"], "w")
    assert w1 == W_GENERATORS["s1"] @ W_GENERATORS["s2"]
    with pytest.raises(KeyError):
        word_to_matrix(["sX"], "w")


def test_subgroup_generator_catalog_shapes():
    assert len(SUBGROUP_GENERATORS["G"]) == 6
    assert len(SUBGROUP_GENERATORS["Q"]) == 6
    assert len(SUBGROUP_GENERATORS["H1"]) == 6
    assert len(SUBGROUP_GENERATORS["G_J"]) == 5
    assert len(SUBGROUP_GENERATORS["G_L"]) == 5
