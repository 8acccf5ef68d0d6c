import random

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from strategies import assignments, formulas, models, restrict

from solnd.kernel import comprehension_formula
from solnd.models import (
    Assignment,
    CompiledFormula,
    Countermodel,
    Model,
    ResourceLimit,
    SignatureError,
    UnboundSymbol,
    Valid,
    check_validity,
    count_models,
    enumerate_models,
    evaluate,
    evaluate_naive,
    format_model,
    from_mask,
    index_tuple,
    parse_model,
    random_assignment,
    random_model,
    signature_of,
    to_mask,
    tuple_index,
)
from solnd.parser import ParseError, Signature, parse_formula
from solnd.syntax import PredAbstraction

PROPS = settings(max_examples=300, deadline=None, suppress_health_check=list(HealthCheck))


def F(text, **kw):
    return parse_formula(text, kw.pop("consts", ("a", "b")), kw.pop("predvars", {}))


@PROPS
@given(formulas(5, bind_pvars=(("X", 1), ("Z", 0))), models(3), st.data())
def test_compiled_agrees_with_naive(f, m, data):
    a = restrict(data.draw(assignments(m.size)), f)
    assert evaluate(f, m, a) == evaluate_naive(f, m, a)


@settings(max_examples=60, deadline=None, suppress_health_check=list(HealthCheck))
@given(formulas(4, bind_pvars=(("Y", 2),)), models(2), st.data())
def test_binary_binders_agree_with_naive(f, m, data):
    a = restrict(data.draw(assignments(m.size)), f)
    assert evaluate(f, m, a) == evaluate_naive(f, m, a)


def test_masks_roundtrip():
    for n in (1, 2, 3):
        for arity in (0, 1, 2):
            for i in range(n**arity):
                assert tuple_index(index_tuple(i, n, arity), n) == i
        for mask in range(1 << n):
            assert to_mask(from_mask(mask, n, 1), n) == mask


def test_model_validation():
    with pytest.raises(ValueError):
        Model(0)
    with pytest.raises(ValueError):
        Model(2, {"a": 2})
    with pytest.raises(ValueError):
        Model(2, {}, {("P", 1): {(2,)}})


def test_unbound_symbols():
    m = Model(2, {"a": 0}, {("P", 1): {(0,)}})
    with pytest.raises(UnboundSymbol):
        evaluate(F("P(x)"), m)
    with pytest.raises(UnboundSymbol):
        evaluate(F("Q(a,a)"), m)
    with pytest.raises(UnboundSymbol):
        evaluate(F("P(b)"), m)
    with pytest.raises(UnboundSymbol):
        evaluate(F("X(a)", predvars={"X": 1}), m)
    assert evaluate(F("P(x)"), m, Assignment({"x": 0}))


def test_budget_is_enforced():
    f = F("forall2 X:2. forall2 Y:2. X(a,a) | ~X(a,a) | Y(a,a)")
    with pytest.raises(ResourceLimit):
        evaluate(f, Model(3, {"a": 0}), budget=50)
    assert evaluate(f, Model(2, {"a": 0}))


def test_compiled_scope_masks():
    cf = CompiledFormula(F("Q(x,y)"), 2, {}, ("x", "y"))
    env = {("c", "Q", 2): to_mask({(1, 0)}, 2)}
    # slot 0 is x with weight 1, slot 1 is y with weight 2
    assert cf(env) == 1 << (1 + 0 * 2)
    assert cf.full == 0b1111


def test_enumeration_order_and_count():
    sig = Signature(("a",), {"P": 1}, {})
    got = list(enumerate_models(sig, 2))
    assert got[:3] == [((0,), (0,)), ((0,), (1,)), ((0,), (2,))]
    assert len(got) == count_models(sig, 2) == 2 * 4


def test_check_validity_valid_and_countermodel():
    assert isinstance(check_validity(F("forall x. P(x) | ~P(x)")), Valid)
    r = check_validity(F("exists x. P(x)"))
    assert isinstance(r, Countermodel) and r.model.size == 1 and not r.model.preds[("P", 1)]
    r = check_validity(F("P(x) -> P(y)"))
    assert isinstance(r, Countermodel)
    assert r.assignment.ind == {"x": 0, "y": 1}
    # the first countermodel is deterministic
    assert check_validity(F("P(x) -> P(y)")) == r


def test_check_validity_free_predicate_variables():
    r = check_validity(F("X(a) -> X(b)", predvars={"X": 1}))
    assert isinstance(r, Countermodel)
    assert r.assignment.pred[("X", 1)] == {(0,)}


def test_check_validity_signature_errors():
    with pytest.raises(SignatureError):
        check_validity(F("P(a)"), Signature((), {"P": 1}, {}))
    with pytest.raises(SignatureError):
        check_validity(F("P(a)"), Signature(("a",), {"P": 2}, {}))


def test_min_size():
    r = check_validity(F("exists x. exists y. ~(forall2 X:1. X(x) -> X(y))"), max_size=2, min_size=2)
    assert isinstance(r, Valid)


@pytest.mark.parametrize(
    "params, body",
    [(("x", "y"), "P(x,y) & Q(y,a)"), (("x",), "exists y. P(x,y)"), (("x",), "forall2 W:1. W(x) -> W(a)"), ((), "exists x. Q(x,x)")],
)
def test_comprehension_instances_valid(params, body):
    lam = PredAbstraction(params, F(body))
    assert check_validity(comprehension_formula(lam), max_size=3)


@pytest.mark.parametrize("text", ["forall x. P(x) -> P(x)", "exists x. P(x) | ~P(x)", "forall2 X:1. X(a) | ~X(a)"])
def test_valid_results_survive_random_sampling(text):
    f = F(text)
    sig = signature_of(f)
    k = 3
    assert check_validity(f, sig, k)
    rng = random.Random(7)
    for _ in range(1000):
        m = random_model(sig, k, rng)
        assert evaluate(f, m, random_assignment(f, k, rng))


def test_model_format_roundtrip():
    m = Model(3, {"a": 2}, {("P", 1): {(0,), (2,)}, ("Q", 2): {(0, 1)}, ("R", 0): {()}})
    a = Assignment({"x": 1}, {("X", 1): {(1,)}})
    text = format_model(m, a)
    assert text.splitlines()[0] == "domain 3"
    assert parse_model(text) == (m, a)


def test_model_format_errors():
    with pytest.raises(ParseError):
        parse_model("const a = 0\n")
    with pytest.raises(ParseError):
        parse_model("domain 2\npred P/1 = {(0,1)}\n")
    with pytest.raises(ParseError):
        parse_model("domain 2\nconst a = 5\n")
    with pytest.raises(ParseError) as ei:
        parse_model("domain 2\nbogus\n", "m.txt")
    assert ei.value.span.line == 2
