import pytest

from gradedlc import ExprError, WeylElement, euler, parse
from gradedlc.expr import infer_shape, tokenize


def test_tokenize():
    assert tokenize("D1*X1") == ["D1", "*", "X1"]
    assert tokenize("Y*dY - 2") == ["Y", "*", "dY", "-", "2"]
    assert tokenize("(E2+1)^3") == ["(", "E2", "+", "1", ")", "^", "3"]


def test_tokenize_rejects_garbage():
    with pytest.raises(ExprError):
        tokenize("X1 @ D1")


def test_infer_shape():
    assert infer_shape(tokenize("X3*D1")) == (3, False)
    assert infer_shape(tokenize("Y*X1")) == (1, True)
    assert infer_shape(tokenize("5")) == (1, False)


def test_parse_atoms():
    assert parse("X1") == WeylElement.x(1, 1)
    assert parse("E2") == euler(2, 2)
    assert parse("7") == WeylElement.const(7, 1)
    assert parse("dY") == WeylElement.delta(1)


def test_precedence():
    # ^ over *, * over +
    assert parse("X1^2*D1") == WeylElement.x(1, 1) ** 2 * WeylElement.partial(1, 1)
    assert parse("1 + X1*D1") == WeylElement.const(1, 1) + euler(1, 1)


def test_unary_minus():
    assert parse("-X1") == -WeylElement.x(1, 1)
    assert parse("2 - -3") == WeylElement.const(5, 1)


def test_parentheses():
    lhs = parse("(E1 - 2)*X1^2")
    rhs = parse("X1^2*E1")
    assert lhs == rhs


def test_noncommutative_order():
    assert parse("D1*X1") != parse("X1*D1")
    assert parse("D1*X1") == parse("X1*D1 + 1")


def test_errors():
    for bad in ("X1*", "(X1", "X1^-2", "X1 X1"):
        with pytest.raises(ExprError):
            parse(bad)
    with pytest.raises(ExprError):
        parse("X3", d=2)
    with pytest.raises(ExprError):
        parse("Y", with_base=False)


def test_explicit_shape():
    p = parse("X1", d=3, with_base=True)
    assert p.d == 3 and p.with_base
