import pytest

from solnd.corpus import load_manifest
from solnd.kernel import Judgment, check, forall2_e, hyp
from solnd.parser import ParseError, parse_formula
from solnd.scripts import (
    MalformedPayload,
    UnknownRule,
    format_judgment,
    format_proof,
    parse_judgment,
    parse_proof,
    parse_script,
    read_script,
)
from solnd.syntax import PredAbstraction, alpha_eq


def test_identity_with_inferred_formula():
    p = parse_proof('(impI h1 (hyp h1 "A"))')
    assert check(p) == Judgment({}, parse_formula("A -> A"))


def test_declared_label_formula():
    p = parse_proof('(declare h "A & B")\n(andE2 (hyp h))')
    assert check(p) == Judgment({"h": parse_formula("A & B")}, parse_formula("B"))


def test_forall2E_with_lambda_payload():
    text = """
    (constants a)
    (forall2E (hyp h "forall2 X:2. X(a,b)") (lam (x y) (and (P x y) (Q y a))))
    """
    p = parse_proof(text)
    lam = p.payload[0]
    assert isinstance(lam, PredAbstraction) and lam.params == ("x", "y")
    assert alpha_eq(check(p).conclusion, parse_formula("P(a,b) & Q(b,a)", ["a"]))


def test_sexpr_formulas_match_infix():
    a = parse_proof('(hyp h (forall x (imp (P x) (exists2 X 1 (X x)))))').payload[1]
    b = parse_formula("forall x. P(x) -> exists2 X:1. X(x)")
    assert a == b
    c = parse_proof("(hyp h (iff A (or B C D)))").payload[1]
    assert c == parse_formula("A <-> B | C | D")


def test_define_and_ref():
    text = """
    (define left (andE1 (hyp h "A & B")))
    (andI (ref left) (ref left))
    """
    s = parse_script(text)
    assert "left" in s.definitions
    assert check(s.proof).conclusion == parse_formula("A & A")


def test_henkin_signature_payload():
    text = '(henkinE (sig T B K) R S psi (hyp H "A") (hyp c "C"))'
    p = parse_proof(text)
    assert p.payload[0].K.name == "K" and p.payload[1:] == ("R", "S", "psi")


@pytest.mark.parametrize(
    "text, err",
    [
        ("(cut (hyp h \"A\"))", UnknownRule),
        ('(andI (hyp h "A"))', MalformedPayload),
        ('(forallE (hyp h "forall x. P(x)"))', MalformedPayload),
        ('(forallI x y (hyp h "A"))', MalformedPayload),
        ("(impI h1 (hyp h2 \"A\"))", MalformedPayload),
        ("(ref nothing)", MalformedPayload),
        ('(hyp h "P(x) &")', ParseError),
        ('(hyp h "A"', ParseError),
        ("(constants a)", ParseError),
        ('(forall2E (hyp h "forall2 X:1. X(a)") (lam (x x) (P x)))', MalformedPayload),
    ],
)
def test_script_errors(text, err):
    with pytest.raises(err) as ei:
        parse_proof(text, "s.solp")
    assert ei.value.span.file == "s.solp" and ei.value.span.line >= 1


def test_error_span_inside_quoted_formula():
    with pytest.raises(ParseError) as ei:
        parse_proof('\n  (hyp h "A & ")', "s.solp")
    assert ei.value.span.line == 2 and ei.value.span.column > 9


def test_format_proof_roundtrip_on_corpus():
    for entry in load_manifest():
        s = read_script(entry.script)
        again = parse_script(format_proof(s.proof, s.definitions))
        assert again.proof == s.proof
        assert check(again.proof).alpha_equal(check(s.proof))


def test_format_proof_simple_roundtrip():
    lam = PredAbstraction(("x",), parse_formula("P(x)"))
    p = forall2_e(hyp("h", parse_formula("forall2 X:1. X(x)")), lam)
    assert parse_proof(format_proof(p)) == p


def test_judgment_files():
    text = "const a\npred P/1\npredvar Y/1\nhyp h: P(a) -> Y(a)\nhyp g: P(a)\n|- Y(a)\n"
    j = parse_judgment(text)
    assert set(j.hypotheses) == {"h", "g"}
    assert parse_judgment(format_judgment(j)).alpha_equal(j)
    with pytest.raises(ParseError):
        parse_judgment("hyp h: A\n")
