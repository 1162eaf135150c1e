"""Core ring arithmetic: truncation, exact series inversion, grading."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relchern import (ChowPoly, ChowRing, ContextError, GradeError,
                      NonUnitError, Symbol, SymbolError, expand_ratio)


def ring_L(bound):
    return ChowRing([Symbol("L", 1)], bound)


def test_symbol_validation():
    with pytest.raises(SymbolError):
        Symbol("2bad")
    with pytest.raises(SymbolError):
        Symbol("c", 0)
    assert Symbol("c2", 2).degree == 2


def test_ring_rejects_duplicate_names():
    with pytest.raises(SymbolError):
        ChowRing([Symbol("L"), Symbol("L")], 2)
    with pytest.raises(SymbolError):
        ChowRing([Symbol("L")], 2, formal=("L",))


def test_add_examples():
    ring = ring_L(2)
    L = ring.sym("L")
    assert (3 * L) + (-3 * L) == 0
    assert (1 + 2 * L) + L ** 2 == 1 + 2 * L + L ** 2
    ring1 = ring_L(1)
    L1 = ring1.sym("L")
    assert L1 ** 2 + L1 ** 2 == 0  # degree-2 input dies at construction


def test_mul_examples():
    ring = ring_L(3)
    L = ring.sym("L")
    assert (1 + L) * (1 - L) == 1 - L ** 2
    two = ChowRing([Symbol("L"), Symbol("h")], 2)
    L2, h = two.sym("L"), two.sym("h")
    assert (2 * L2 + 3 * h) * h == 2 * L2 * h + 3 * h ** 2
    assert (1 + 6 * L) * (1 - 6 * L + 36 * L ** 2 - 216 * L ** 3) == 1


def test_expand_ratio_examples():
    ring = ring_L(3)
    L = ring.sym("L")
    one = ring.one
    assert expand_ratio(one, 1 + 6 * L) == 1 - 6 * L + 36 * L ** 2 - 216 * L ** 3
    assert expand_ratio(12 * L, 1 + 6 * L) == 12 * L - 72 * L ** 2 + 432 * L ** 3
    ring2 = ring_L(2)
    L2 = ring2.sym("L")
    assert expand_ratio(ring2.one, (1 + L2) ** 2) == 1 - 2 * L2 + 3 * L2 ** 2


def test_division_operator_semantics():
    ring = ring_L(3)
    L = ring.sym("L")
    assert 12 * L / (1 + 6 * L) == expand_ratio(12 * L, 1 + 6 * L)
    # exact scalar division by rational constants
    assert (3 * L) / Fraction(3, 4) == 4 * L
    assert (3 * L) / 3 == L
    with pytest.raises(NonUnitError):
        ring.one / (2 + L)
    with pytest.raises(ZeroDivisionError):
        L / 0


def test_context_mismatch_errors():
    a = ring_L(2).sym("L")
    b = ring_L(3).sym("L")
    with pytest.raises(ContextError):
        a + b
    with pytest.raises(ContextError):
        a * b


def test_float_rejection():
    ring = ring_L(2)
    with pytest.raises(TypeError):
        ring.const(0.5)
    with pytest.raises(TypeError):
        ring.sym("L") * 0.5


def test_derivative_examples():
    ring = ring_L(3).with_formal(["x"])
    x, L = ring.sym("x"), ring.sym("L")
    assert (x ** 3).derivative("x") == 3 * x ** 2
    assert (L * x ** 2 + x).derivative("x") == 2 * L * x + 1
    assert (x ** 2).derivative("x").derivative("x") / 2 == 1
    with pytest.raises(SymbolError):
        L.derivative("L")  # not a formal variable


def test_substitute_examples():
    ring = ChowRing([Symbol("L")], 3, formal=("x1", "x2"))
    x1, x2, L = ring.sym("x1"), ring.sym("x2"), ring.sym("L")
    assert (x1 ** 2).substitute("x1", -L) == L ** 2
    assert (1 + x1 + x1 ** 2).substitute("x1", ring.zero) == 1
    assert (x1 + x2).substitute("x1", -2 * L).substitute("x2", -3 * L) == -5 * L
    with pytest.raises(SymbolError):
        L.substitute("L", x1)


def test_formal_variables_escape_truncation():
    ring = ChowRing([Symbol("L")], 2, formal=("x",))
    x, L = ring.sym("x"), ring.sym("L")
    tall = x ** 9 + L * x ** 5
    assert tall.coefficient({"x": 9}) == 1
    assert tall.coefficient({"L": 1, "x": 5}) == 1
    # but the base-symbol part still truncates
    assert (L ** 3 * x).is_zero()
    with pytest.raises(SymbolError):
        expand_ratio(ring.one, 1 + x)  # a formal series would never terminate


def test_component_examples():
    ring = ring_L(3)
    L = ring.sym("L")
    p = 1 - 6 * L + 36 * L ** 2
    assert p.component(1) == -6 * L
    assert (12 * L - 72 * L ** 2).component(0) == 0
    fano = ChowRing([Symbol("c1", 1), Symbol("c2", 2)], 3)
    c1, c2 = fano.sym("c1"), fano.sym("c2")
    top = 360 * c1 ** 3 + 12 * c1 * c2
    assert top.component(3) == top
    with pytest.raises(GradeError):
        p.component(4)
    with pytest.raises(GradeError):
        p.component(-1)


def test_string_rendering_is_canonical():
    ring = ChowRing([Symbol("L"), Symbol("c1", 1), Symbol("c2", 2)], 3)
    L, c1, c2 = ring.sym("L"), ring.sym("c1"), ring.sym("c2")
    assert str(ring.zero) == "0"
    assert str(12 * L - 72 * L ** 2) == "12*L - 72*L^2"
    assert str(-L + ring.one) == "1 - L"
    assert str(Fraction(-3, 4) * L) == "-3/4*L"
    assert str(c2 * c1 + L ** 3) == "L^3 + c1*c2"


# -- property tests ---------------------------------------------------------

RING = ChowRing([Symbol("L"), Symbol("M"), Symbol("c2", 2)], 3)


@st.composite
def polys(draw, names=("L", "M", "c2")):
    poly = RING.zero
    for _ in range(draw(st.integers(0, 4))):
        coeff = Fraction(draw(st.integers(-9, 9)), draw(st.integers(1, 4)))
        term = RING.const(coeff)
        for name in draw(st.lists(st.sampled_from(names), max_size=3)):
            term = term * RING.sym(name)
        poly = poly + term
    return poly


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(polys())
def test_series_inverse_property(tail):
    q = RING.one + tail - tail.component(0)
    assert expand_ratio(RING.one, q) * q == 1


@settings(max_examples=60, deadline=None)
@given(polys())
def test_component_partition_and_idempotence(p):
    total = RING.zero
    for k in range(RING.bound + 1):
        piece = p.component(k)
        assert piece.component(k) == piece
        assert piece.is_homogeneous(k)
        total = total + piece
    assert total == p


@settings(max_examples=60, deadline=None)
@given(polys(), polys())
def test_truncation_is_ring_homomorphism(a, b):
    low = RING.with_bound(2)
    assert low.convert(a * b) == low.convert(a) * low.convert(b)
    assert low.convert(a + b) == low.convert(a) + low.convert(b)


FORMAL = RING.with_formal(["x", "y"])


@st.composite
def formal_polys(draw):
    poly = FORMAL.zero
    for _ in range(draw(st.integers(0, 4))):
        term = FORMAL.const(draw(st.integers(-5, 5)))
        for name in draw(st.lists(st.sampled_from(("L", "x", "y")), max_size=3)):
            term = term * FORMAL.sym(name)
        poly = poly + term
    return poly


@settings(max_examples=60, deadline=None)
@given(formal_polys(), formal_polys())
def test_derivative_leibniz(a, b):
    left = (a * b).derivative("x")
    right = a.derivative("x") * b + a * b.derivative("x")
    assert left == right


def test_convert_between_contexts():
    small = ChowRing([Symbol("L")], 2)
    big = ChowRing([Symbol("L"), Symbol("M")], 2)
    p = small.sym("L") + 1
    q = big.convert(p)
    assert q.ring == big and q == big.sym("L") + 1
    with pytest.raises(SymbolError):
        small.convert(big.sym("M"))
    clash = ChowRing([Symbol("L", 2)], 4)
    with pytest.raises(ContextError):
        clash.convert(p)
