from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homlie.errors import FieldMismatch, ParseError
from homlie.fields import Mod, PrimeField, Q, QuadNumber, QuadraticField, field_from_spec, field_spec

K2 = QuadraticField(2)
F7 = PrimeField(7)

rationals = st.fractions(max_denominator=12).filter(lambda q: abs(q.numerator) < 500)
quads = st.builds(lambda a, b: QuadNumber(a, b, 2), rationals, rationals)


def test_rationals_normalize_and_format():
    assert Q(Fraction(6, -4)) == Fraction(-3, 2)
    assert Q.format(Fraction(-3, 2)) == "-3/2"
    assert Q.format(Fraction(4)) == "4"
    assert Q.parse("-6/4") == Fraction(-3, 2)


@pytest.mark.parametrize("p", [2, 3, 4, 9])
def test_small_or_composite_characteristic_refused(p):
    with pytest.raises(ValueError):
        PrimeField(p)


def test_prime_field_residues_and_inverse():
    x = F7(10)
    assert x == Mod(3, 7) and x.value == 3
    assert x * x.inverse() == F7(1)
    assert F7(Fraction(1, 2)) * 2 == F7(1)
    assert F7.format(F7(-1)) == "6"


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatch):
        F7(3) + PrimeField(5)(1)
    with pytest.raises(FieldMismatch):
        QuadraticField(3)(K2.w)
    with pytest.raises(FieldMismatch):
        Q(K2.w)


def test_square_d_rejected_for_quadratic_field():
    with pytest.raises(ValueError):
        QuadraticField(4)


@given(quads, quads)
def test_quadratic_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(quads, quads)
def test_quadratic_product_with_conjugate_round_trips(x, y):
    # (a+bw)(a'-b'w) computed directly equals the product by the conjugate
    prod = x * y.conjugate()
    if y:
        assert prod / y.conjugate() == x


@given(quads)
def test_quadratic_format_parse_round_trip(x):
    assert K2.parse(K2.format(x)) == x


@given(rationals)
def test_rational_format_parse_round_trip(q):
    assert Q.parse(Q.format(q)) == q


@pytest.mark.parametrize("tok,val", [("w", (0, 1)), ("-w", (0, -1)), ("1/2w", (0, Fraction(1, 2))),
                                     ("3+w", (3, 1)), ("1/2-3/4w", (Fraction(1, 2), Fraction(-3, 4))), ("-2", (-2, 0))])
def test_quadratic_scalar_syntax(tok, val):
    assert K2.parse(tok) == QuadNumber(val[0], val[1], 2)


@pytest.mark.parametrize("tok", ["1/0x", "ww", "2w3", ""])
def test_bad_quadratic_scalar_raises(tok):
    with pytest.raises((ParseError, ValueError, ZeroDivisionError)):
        K2.parse(tok)


def test_w_squared_is_d():
    assert K2.w * K2.w == K2(2)


@pytest.mark.parametrize("spec", ["Q", "F 5", "Qsqrt 2", "Qsqrt -1"])
def test_field_spec_round_trip(spec):
    kind, *arg = spec.split()
    assert field_spec(field_from_spec(kind, *arg)) == spec
