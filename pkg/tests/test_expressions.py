"""Class-expression grammar: parse, render, evaluate."""

import random

import pytest

from relchern import (ChowRing, NonUnitError, ParseError, Symbol, SymbolError,
                      parse_class_expr, render_expr)
from relchern.expressions import BinOp, Neg, Num, Pow, Sym, evaluate
from tests.randgen import random_expr, random_poly


def test_parse_divisor_sum():
    tree = parse_class_expr("3*H + 6*L")
    assert tree == BinOp("+", BinOp("*", Num(3), Sym("H")),
                         BinOp("*", Num(6), Sym("L")))


def test_parse_product_of_factors():
    tree = parse_class_expr("(1+H)*(1+H+2*L)*(1+H+3*L)")
    middle = BinOp("+", BinOp("+", Num(1), Sym("H")), BinOp("*", Num(2), Sym("L")))
    last = BinOp("+", BinOp("+", Num(1), Sym("H")), BinOp("*", Num(3), Sym("L")))
    assert tree == BinOp("*", BinOp("*", BinOp("+", Num(1), Sym("H")), middle),
                         last)


def test_parse_powers_and_precedence():
    assert parse_class_expr("2*H^3") == BinOp("*", Num(2), Pow(Sym("H"), 3))
    assert parse_class_expr("(2*H)^3") == Pow(BinOp("*", Num(2), Sym("H")), 3)
    assert parse_class_expr("1 - 2 - 3") == BinOp(
        "-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_class_expr("-H + L") == BinOp("+", Neg(Sym("H")), Sym("L"))


def test_nonunit_denominator_is_an_evaluation_error():
    tree = parse_class_expr("1/(2+L)")  # parses fine
    ring = ChowRing([Symbol("L")], 2)
    env = {"L": ring.sym("L")}
    with pytest.raises(NonUnitError):
        evaluate(tree, env, ring.const)


def test_unit_denominator_evaluates_to_series():
    ring = ChowRing([Symbol("L")], 3)
    env = {"L": ring.sym("L")}
    tree = parse_class_expr("12*L/(1+6*L)")
    L = ring.sym("L")
    assert evaluate(tree, env, ring.const) == 12 * L - 72 * L ** 2 + 432 * L ** 3


def test_unknown_symbol_is_an_evaluation_error():
    ring = ChowRing([Symbol("L")], 2)
    with pytest.raises(SymbolError):
        evaluate(parse_class_expr("1+Q"), {"L": ring.sym("L")}, ring.const)


@pytest.mark.parametrize("src,line,column", [
    ("12L", 1, 3),          # no implicit multiplication
    ("3 + ", 1, 5),         # dangling operator
    ("(1+L", 1, 5),         # unclosed group
    ("H^-1", 1, 3),         # exponents are unsigned integers
    ("H^(2)", 1, 3),
    ("1.5*L", 1, 2),        # no floats in the grammar
    ("", 1, 1),
    ("2*H\n+ 3*?", 2, 5),   # positions track line breaks
])
def test_parse_error_positions(src, line, column):
    with pytest.raises(ParseError) as err:
        parse_class_expr(src)
    assert (err.value.line, err.value.column) == (line, column)


def test_render_parse_fixpoint_random():
    rng = random.Random(424242)
    for _ in range(150):
        tree = random_expr(rng)
        text = render_expr(tree)
        assert parse_class_expr(text) == tree, text


def test_rendered_classes_read_back():
    rng = random.Random(99)
    ring = ChowRing([Symbol("L"), Symbol("M"), Symbol("c2", 2)], 3)
    env = {name: ring.sym(name) for name in ("L", "M", "c2")}
    for _ in range(60):
        poly = random_poly(rng, ring, max_factors=3)
        text = str(poly)
        again = evaluate(parse_class_expr(text), env, ring.const)
        assert again == poly, text


def test_rendered_fraction_coefficients_read_back():
    from fractions import Fraction
    ring = ChowRing([Symbol("L")], 2)
    L = ring.sym("L")
    poly = Fraction(-3, 4) * L + Fraction(5, 6) * L ** 2
    text = str(poly)
    assert text == "-3/4*L + 5/6*L^2"
    value = evaluate(parse_class_expr(text), {"L": L}, ring.const)
    assert value == poly
