import json
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from liebialg.catalog import CATALOG, get_entry
from liebialg.problem import (
    ExpressionError,
    ProblemError,
    document_from_entry,
    parse_expression,
    parse_problem,
    serialize,
)
from liebialg.scalar import Scalar


def test_minimal_abelian_document():
    doc = parse_problem('{"basis": ["A", "B"]}')
    alg = doc.algebra()
    assert alg.is_abelian() and alg.dim == 2
    assert doc.cocommutator() is None and doc.split() is None


def test_caret_error_has_line_and_column():
    text = '{"parameters": ["Lambda"], "basis": ["A", "B"],\n "brackets": [{"x": "A", "y": "B", "terms": [{"gen": "A", "coeff": "Lambda^"}]}]}'
    with pytest.raises(ExpressionError) as ei:
        parse_problem(text)
    e = ei.value
    assert e.line == 2 and text.splitlines()[1][e.column - 1] == "^" and e.token == "^"
    assert "missing exponent" in str(e)
    assert str(e).startswith(f"line 2, column {e.column}: brackets[0].terms[0].coeff")


@pytest.mark.parametrize("text, fragment", [
    ('{"basis": ["A", "B"],\n "brackets": [{"x": "A", "y": "C"}]}', "unknown generator"),
    ('{"basis": ["A", "A"]}', "duplicate generator"),
    ('{"basis": ["A", "B"], "brackets": [{"x": "A", "y": "B"}, {"x": "B", "y": "A"}]}', "duplicate bracket"),
    ('{"basis": ["A", "B"], "r": [], "delta": []}', "both 'r' and 'delta'"),
    ('{"basis": ["A", "B"], "splitting": {"h": ["A"], "t": ["A", "B"]}}', "partition"),
    ('{"basis": ["A", "B"], "colour": 1}', "colour"),
    ('{"parameters": ["q"], "basis": ["A"], "substitute": {"q": "x"}}', "rational"),
    ('{"basis": ["A", "B"], "brackets": [{"x": "A", "y": "B", "terms": [{"gen": "A", "coeff": "q"}]}]}',
     "undeclared parameter"),
    ('{"basis": ["A", "B" "C"]}', "delimiter"),
])
def test_document_errors(text, fragment):
    with pytest.raises(ProblemError) as ei:
        parse_problem(text)
    assert fragment in str(ei.value)


def test_jacobi_violation_rejected():
    text = json.dumps({"basis": ["A", "B", "C"], "brackets": [
        {"x": "A", "y": "B", "terms": [{"gen": "C", "coeff": "1"}]},
        {"x": "B", "y": "C", "terms": [{"gen": "B", "coeff": "1"}]}]})
    with pytest.raises(ProblemError):
        parse_problem(text)


def test_expression_grammar():
    L = Scalar.param("Lambda", ("Lambda",))
    assert parse_expression("1/(Lambda - 1)", ("Lambda",)) == 1 / (L - 1)
    assert parse_expression("-(Lambda)^2*3/4", ("Lambda",)) == -Fraction(3, 4) * L ** 2
    assert parse_expression(3, ()) == 3
    for bad, frag in [("Lambda/0", "division by zero"), ("2^-1", "exponent"), ("2 $ 3", "unexpected"),
                      ("(1 + 2", ")"), ("", "")]:
        with pytest.raises(ExpressionError) as ei:
            parse_expression(bad, ("Lambda",))
        assert frag in str(ei.value)


@pytest.mark.parametrize("ident", list(CATALOG))
def test_catalog_document_round_trip(ident):
    e = get_entry(ident)
    doc = document_from_entry(e)
    assert doc.algebra() == e.algebra and doc.r_matrix() == e.r and doc.split() == e.splitting
    again = parse_problem(serialize(doc))
    assert again == doc and serialize(again) == serialize(doc)


def test_substitution_in_document(k31):
    doc = document_from_entry(k31, {"eta": 0})
    assert doc.algebra() == k31.substitute({"eta": 0}).algebra
    assert parse_problem(serialize(doc)).substitute == {"eta": Fraction(0)}


def _random_expr(rng, params, depth=0):
    pick = rng.random()
    if depth > 2 or pick < 0.3:
        return rng.choice([str(rng.randint(0, 9)), *params])
    a, b = _random_expr(rng, params, depth + 1), _random_expr(rng, params, depth + 1)
    op = rng.choice(["+", "-", "*", "/", "^"])
    if op == "^":
        return f"({a})^{rng.randint(0, 3)}"
    return f"({a}) {op} ({b})"


@settings(max_examples=200)
@given(seed=st.integers(0, 10**9))
def test_expression_round_trip_against_sympy(seed):
    rng = random.Random(seed)
    params = ("x", "y")
    text = _random_expr(rng, params)
    oracle = sympy.sympify(text.replace("^", "**"), locals={p: sympy.Symbol(p) for p in params}, rational=True)
    try:
        s = parse_expression(text, params)
    except ExpressionError as exc:
        # only an exactly-zero divisor is rejected
        assert "division by zero" in str(exc)
        return
    assert sympy.cancel(sympy.sympify(s.to_expr().replace("^", "**"), locals={p: sympy.Symbol(p) for p in params})
                        - oracle) == 0
    assert parse_expression(s.to_expr(), params) == s
