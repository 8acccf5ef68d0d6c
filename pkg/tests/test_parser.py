import pytest
from hypothesis import HealthCheck, given, settings
from strategies import CONSTS, PVAR_ARITY, formulas

from solnd.parser import (
    ArityError,
    ParseError,
    Signature,
    format_sol,
    parse_formula,
    parse_sol,
    pretty,
)
from solnd.parser import (
    SyntaxError as SolSyntaxError,
)
from solnd.syntax import (
    And,
    Atom,
    Const,
    ExistsPred,
    ForallInd,
    Implies,
    Not,
    Or,
    PredConst,
    PredVar,
    Var,
    alpha_eq,
)


@settings(max_examples=1000, deadline=None, suppress_health_check=list(HealthCheck))
@given(formulas(6))
def test_roundtrip(f):
    text = pretty(f)
    g = parse_formula(text, CONSTS, PVAR_ARITY)
    assert g == f
    assert alpha_eq(g, f)


def test_precedence_and_associativity():
    f = parse_formula("~A | B & C -> D -> E")
    A, B, C, D, E = (Atom(PredConst(n, 0)) for n in "ABCDE")
    assert f == Implies(Or(Not(A), And(B, C)), Implies(D, E))


def test_quantifier_scope_extends_right():
    f = parse_formula("forall x. P(x) & Q(x)")
    assert isinstance(f, ForallInd) and isinstance(f.body, And)


def test_iff_is_two_implications():
    f = parse_formula("A <-> B")
    a, b = Atom(PredConst("A", 0)), Atom(PredConst("B", 0))
    assert f == And(Implies(a, b), Implies(b, a))


def test_unicode_aliases():
    ascii_ = parse_formula("forall x. exists y. ~P(x) & Q(y) | bot -> R")
    uni = parse_formula("∀x. ∃y. ¬P(x) ∧ Q(y) ∨ ⊥ → R")
    assert ascii_ == uni


def test_second_order_binders():
    f = parse_formula("exists2 X:2. X(a,b)", constants=["a", "b"])
    assert f == ExistsPred("X", 2, Atom(PredVar("X", 2), (Const("a"), Const("b"))))
    # an uppercase binder name with an arity is second-order without the 2
    assert parse_formula("exists X:2. X(a,b)", constants=["a", "b"]) == f


def test_constants_versus_variables():
    f = parse_formula("P(a, x)", constants=["a"])
    assert f.args == (Const("a"), Var("x"))


@pytest.mark.parametrize(
    "text, kind, col",
    [
        ("P(x) &", SolSyntaxError, 7),
        ("P(x) & exists y. Q(y)", SolSyntaxError, 8),
        ("forall X. P(x)", SolSyntaxError, 9),
        ("p(x)", SolSyntaxError, 1),
        ("P(x) & P(x,y)", ArityError, 8),
        ("forall2 X:1. X(a,a)", ArityError, 14),
        ("(P(x)", SolSyntaxError, 6),
        ("P(x) )", SolSyntaxError, 6),
    ],
)
def test_errors_carry_spans(text, kind, col):
    with pytest.raises(kind) as ei:
        parse_formula(text, constants=["a"], file="t.sol")
    span = ei.value.span
    assert span.file == "t.sol" and span.line == 1 and span.column == col
    assert 1 <= span.column <= len(text) + 1


def test_cannot_bind_constant():
    with pytest.raises(ParseError):
        parse_formula("forall a. P(a)", constants=["a"])


def test_multiline_span():
    with pytest.raises(ParseError) as ei:
        parse_sol("const a\npred P/1\nP(a) &\n  ~", "f.sol")
    assert ei.value.span.line == 4


def test_sol_file_roundtrip():
    text = "const a, b  # two constants\npred T/1, K/2\npredvar Y/1\nforall x. T(x) -> K(x,a) | Y(b)\n"
    sol = parse_sol(text, "x.sol")
    assert sol.signature == Signature(("a", "b"), {"T": 1, "K": 2}, {"Y": 1})
    again = parse_sol(format_sol(sol.formula, sol.signature))
    assert again.formula == sol.formula and again.signature == sol.signature


def test_sol_requires_a_formula():
    with pytest.raises(SolSyntaxError):
        parse_sol("const a\n")


def test_declared_arity_conflicts():
    with pytest.raises(ArityError):
        parse_sol("pred P/1\nP(a,a)")
    with pytest.raises(ArityError):
        parse_sol("predvar Y/1\nY(a,a)")
