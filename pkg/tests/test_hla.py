import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from homlie import corpus
from homlie.errors import DimensionMismatch, ParseError
from homlie.fields import Q, QuadNumber, QuadraticField
from homlie.hla import document_from_action, document_from_assoc, document_from_lie, emit_hla, load_hla, parse_hla

from helpers import F5, random_hom_lie, random_module

Q2 = QuadraticField(2)


def q2(a, b):
    return QuadNumber(a, b, 2)

SHEAR = """hla 1
# [e1,e2] = e1
field Q
kind lie
dim 2
bracket 1 2 : 1 0
alpha 1 : 1 0
alpha 2 : 1 1
"""


def test_parse_lie_document():
    doc = parse_hla(SHEAR)
    L = doc.to_lie()
    assert doc.comments == ["[e1,e2] = e1"]
    assert L.table[0][1] == (Q(1), Q(0)) and L.table[1][0] == (Q(-1), Q(0))
    assert L.alpha.column(1) == (Q(1), Q(1))
    assert L == corpus.load("shear2")


def test_omitted_entries_are_zero():
    L = parse_hla("hla 1\nfield Q\nkind lie\ndim 3\n").to_lie()
    assert L.is_abelian() and L.alpha.is_zero()


@pytest.mark.parametrize("name", corpus.names())
def test_corpus_files_round_trip(name):
    doc = corpus.document(name)
    text = emit_hla(doc)
    again = parse_hla(text)
    assert again == doc
    assert emit_hla(again) == text


def test_corpus_file_loads_from_path():
    assert load_hla(corpus.path("so3")) == corpus.document("so3")


def test_rational_and_quadratic_scalars():
    doc = parse_hla("hla 1\nfield Qsqrt 2\nkind lie\ndim 2\nalpha 1 : 1/2 w -3/4+2w\nalpha 2 : 1/2w 0\n")
    a = doc.alpha_matrix()
    assert a.column(0) == (q2(0, Fraction(1, 2)), q2(Fraction(-3, 4), 2))
    assert a.column(1) == (q2(0, Fraction(1, 2)), Q2.zero)


def test_finite_field_scalars_reduce():
    doc = parse_hla("hla 1\nfield F 5\nkind lie\ndim 1\nalpha 1 : 7\n")
    assert doc.alpha_matrix().column(0) == (F5(2),)


def test_assoc_and_action_documents():
    A = corpus.load("ut2")
    assert parse_hla(emit_hla(document_from_assoc(A))).to_assoc() == A
    act = parse_hla("hla 1\nfield Q\nkind action\ndims 2 1\nact 1 1 : 1\n").to_action(corpus.load("shear2"), corpus.load("line"))
    assert [list(row) for row in act.value] == [[(Q(1),)], [(Q(0),)]]


def test_action_dimensions_must_match():
    doc = parse_hla("hla 1\nfield Q\nkind action\ndims 2 1\n")
    with pytest.raises(DimensionMismatch):
        doc.to_action(corpus.load("so3"), corpus.load("line"))


def test_wrong_kind_conversion_is_refused():
    with pytest.raises(ValueError):
        corpus.document("ut2").to_lie()


BAD = [
    ("field Q\nkind lie\ndim 1\n", 1, 1, "hla 1"),
    ("hla 2\nfield Q\nkind lie\ndim 1\n", 1, 5, "version"),
    ("hla 1\nfield R\nkind lie\ndim 1\n", 2, 7, "field must be"),
    ("hla 1\nfield F 4\nkind lie\ndim 1\n", 2, 9, ""),
    ("hla 1\nfield Q\nkind group\ndim 1\n", 3, 6, "kind must be"),
    ("hla 1\nfield Q\nkind lie\ndim x\n", 4, 5, "integer"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nbracket 2 1 : 1 0\n", 5, 11, "i < j"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nbracket 1 3 : 1 0\n", 5, 11, "out of range"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nbracket 1 2 : 1\n", 5, 15, "expected 2 scalars"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nbracket 1 2 : 1 0 0\n", 5, 19, "expected 2 scalars"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nbracket 1 2 : 1 1/0\n", 5, 17, "bad scalar"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nbracket 1 2 : 1 0\nbracket 1 2 : 0 1\n", 6, 1, "duplicate"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nprod 1 2 : 1 0\n", 5, 1, "not allowed"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nfrobnicate\n", 5, 1, "unknown keyword"),
    ("hla 1\nfield Q\nkind lie\ndim 1\ndim 1\n", 5, 1, "duplicate"),
    ("hla 1\nfield Q\nkind action\ndim 1\n", 4, 1, "dims"),
    ("hla 1\nfield Q\nkind lie\ndim 2\nalpha 1 1 0\n", 5, 9, "expected 'alpha"),
    ("hla 1\nkind lie\ndim 1\n", 3, 1, "missing 'field'"),
    ("", 1, 1, "empty"),
]


@pytest.mark.parametrize("text,line,col,fragment", BAD)
def test_malformed_input_reports_line_and_column(text, line, col, fragment):
    with pytest.raises(ParseError) as err:
        parse_hla(text)
    e = err.value
    assert (e.line, e.column) == (line, col), str(e)
    assert fragment in e.message
    assert str(e).startswith(f"line {line}, column {col}: ")


def random_q2(rng):
    return q2(Fraction(rng.randint(-4, 4), rng.randint(1, 3)), Fraction(rng.randint(-2, 2), rng.randint(1, 2)))


@given(st.integers(0, 10**6), st.sampled_from([Q, F5]))
def test_random_algebras_round_trip(seed, F):
    rng = random.Random(seed)
    L = random_hom_lie(rng, F)
    text = emit_hla(document_from_lie(L, ["random"]))
    assert parse_hla(text).to_lie() == L
    act = random_module(rng, L)
    back = parse_hla(emit_hla(document_from_action(act))).to_action(L, act.actee)
    assert back.value == act.value


@given(st.integers(0, 10**6))
def test_quadratic_scalars_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 3)
    cols = {("alpha", (i,)): tuple(random_q2(rng) for _ in range(n)) for i in range(n)}
    doc = parse_hla(f"hla 1\nfield Qsqrt 2\nkind lie\ndim {n}\n")
    doc.entries = cols
    text = emit_hla(doc)
    assert parse_hla(text).entries == cols
