import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solnd.constructions import (
    HenkinSignature,
    build_Psi,
    expand_henkin,
    henkin_conjuncts,
)
from solnd.kernel import (
    RULES,
    CheckError,
    ErrorKind,
    Judgment,
    MalformedProof,
    Proof,
    and_e1,
    and_e2,
    and_i,
    bot_e,
    check,
    check_against,
    comprehension_formula,
    derive_comprehension,
    elaborate,
    exists2_e,
    exists2_i,
    exists_e,
    exists_i,
    forall2_e,
    forall2_i,
    forall_e,
    forall_i,
    format_location,
    henkin_elim,
    henkin_intro,
    hyp,
    imp_e,
    imp_i,
    not_e,
    not_i,
    or_e,
    or_i1,
    or_i2,
    raa,
)
from solnd.parser import parse_formula
from solnd.syntax import (
    BOT,
    Const,
    PredAbstraction,
    PredVar,
    Var,
    alpha_eq,
    identity_abstraction,
    subst_pred,
    subst_preds,
)


def F(text, predvars=()):
    return parse_formula(text, ("a", "b"), dict(predvars))


A, B, C = F("A"), F("B"), F("C")


def rejects(p, kind, loc=()):
    with pytest.raises(CheckError) as ei:
        check(p)
    assert ei.value.kind == kind
    assert ei.value.location == tuple(loc)
    return ei.value


# ---------------------------------------------------------- structure


def test_rule_table_shapes():
    for rule, (kinds, n) in RULES.items():
        with pytest.raises(MalformedProof):
            Proof(rule, tuple(range(len(kinds) + 1)), ())
    with pytest.raises(MalformedProof):
        Proof("cut")
    with pytest.raises(MalformedProof):
        Proof("andI", (), (hyp("a", A),))


def test_nodes_and_locations():
    p = and_i(hyp("a", A), and_i(hyp("b", B), hyp("c", C)))
    locs = [loc for loc, _ in p.nodes()]
    assert locs == [(), (0,), (1,), (1, 0), (1, 1)]
    assert p.at((1, 1)).payload == ("c", C)
    assert format_location(()) == "root" and format_location((1, 0)) == "root/1/0"


# ---------------------------------------------------- propositional


def test_hyp():
    assert check(hyp("h", A)) == Judgment({"h": A}, A)


def test_and():
    p = and_i(hyp("a", A), hyp("b", B))
    assert check(p) == Judgment({"a": A, "b": B}, F("A & B"))
    assert check(and_e1(p)).conclusion == A
    assert check(and_e2(p)).conclusion == B
    rejects(and_e1(hyp("a", A)), ErrorKind.ConclusionMismatch)


def test_label_clash():
    rejects(and_i(hyp("a", A), hyp("a", B)), ErrorKind.SideConditionViolation)


def test_or():
    assert check(or_i1(hyp("a", A), B)).conclusion == F("A | B")
    assert check(or_i2(hyp("b", B), A)).conclusion == F("A | B")
    p = or_e(hyp("d", F("A | B")), "l", or_i2(hyp("l", A), B), "r", or_i1(hyp("r", B), A))
    assert check(p) == Judgment({"d": F("A | B")}, F("B | A"))
    bad = or_e(hyp("d", F("A | B")), "l", hyp("l", A), "r", hyp("r", B))
    rejects(bad, ErrorKind.ConclusionMismatch)
    rejects(or_e(hyp("d", A), "l", hyp("x", C), "r", hyp("x", C)), ErrorKind.ConclusionMismatch)
    swapped = or_e(hyp("d", F("A | B")), "l", hyp("l", B), "r", hyp("r", B))
    rejects(swapped, ErrorKind.DischargeMismatch, (1,))


def test_imp():
    p = imp_i("h", A, hyp("h", A))
    assert check(p) == Judgment({}, F("A -> A"))
    vac = imp_i("h", B, hyp("a", A))
    assert check(vac) == Judgment({"a": A}, F("B -> A"))
    rejects(imp_i("h", B, hyp("h", A)), ErrorKind.DischargeMismatch)
    mp = imp_e(hyp("f", F("A -> B")), hyp("a", A))
    assert check(mp) == Judgment({"f": F("A -> B"), "a": A}, B)
    rejects(imp_e(hyp("f", F("A -> B")), hyp("c", C)), ErrorKind.ConclusionMismatch)
    rejects(imp_e(hyp("f", A), hyp("a", A)), ErrorKind.ConclusionMismatch)


def test_not():
    p = not_i("a", A, not_e(hyp("a", A), hyp("n", F("~A"))))
    assert check(p) == Judgment({"n": F("~A")}, F("~A"))
    rejects(not_i("a", A, hyp("a", A)), ErrorKind.ConclusionMismatch)
    rejects(not_e(hyp("a", A), hyp("n", F("~B"))), ErrorKind.ConclusionMismatch)
    rejects(not_e(hyp("a", A), hyp("n", A)), ErrorKind.ConclusionMismatch)


def test_bot_and_raa():
    assert check(bot_e(hyp("f", BOT), A)).conclusion == A
    rejects(bot_e(hyp("a", A), B), ErrorKind.ConclusionMismatch)
    p = raa("n", F("~A"), not_e(hyp("a", A), hyp("n", F("~A"))))
    assert check(p) == Judgment({"a": A}, A)
    rejects(raa("n", A, hyp("f", BOT)), ErrorKind.DischargeMismatch)
    rejects(raa("n", F("~A"), hyp("a", A)), ErrorKind.ConclusionMismatch)


# ------------------------------------------------------- first order


def test_forall():
    p = forall_i("x", imp_i("h", F("P(x)"), hyp("h", F("P(x)"))))
    assert check(p).conclusion == F("forall x. P(x) -> P(x)")
    rejects(forall_i("x", hyp("h", F("P(x)"))), ErrorKind.EigenvariableViolation)
    inst = forall_e(hyp("h", F("forall x. Q(x,y)")), Var("y"))
    # substitution renames nothing here, the free y is the instance
    assert check(inst).conclusion == F("Q(y,y)")
    assert check(forall_e(hyp("h", F("forall x. P(x)")), Const("a"))).conclusion == F("P(a)")
    rejects(forall_e(hyp("h", F("P(a)")), Const("a")), ErrorKind.ConclusionMismatch)


def test_exists():
    target = F("exists x. Q(x,a)")
    p = exists_i(hyp("h", F("Q(b,a)")), Const("b"), target)
    assert check(p).conclusion == target
    rejects(exists_i(hyp("h", F("Q(a,a)")), Const("b"), target), ErrorKind.ConclusionMismatch)
    rejects(exists_i(hyp("h", F("Q(a,a)")), Const("a"), F("Q(a,a)")), ErrorKind.ConclusionMismatch)

    major = hyp("e", F("exists x. P(x)"))
    ok = exists_e(major, "y", "py", exists_i(hyp("py", F("P(y)")), Var("y"), F("exists z. P(z)")))
    assert check(ok) == Judgment({"e": F("exists x. P(x)")}, F("exists z. P(z)"))
    escapes = exists_e(major, "y", "py", hyp("py", F("P(y)")))
    rejects(escapes, ErrorKind.EigenvariableViolation)
    in_hyp = exists_e(major, "y", "py", and_e2(and_i(hyp("q", F("Q(y,y)")), hyp("c", C))))
    rejects(in_hyp, ErrorKind.EigenvariableViolation)
    rejects(exists_e(hyp("p", A), "y", "py", hyp("c", C)), ErrorKind.ConclusionMismatch)


# ------------------------------------------------------ second order


def test_forall2():
    p = forall2_i("X", 1, imp_i("h", F("X(a)", {"X": 1}), hyp("h", F("X(a)", {"X": 1}))))
    assert check(p).conclusion == F("forall2 X:1. X(a) -> X(a)")
    rejects(forall2_i("X", 1, hyp("h", F("X(a)", {"X": 1}))), ErrorKind.EigenpredicateViolation)
    # a different arity is a different variable
    assert check(forall2_i("X", 2, hyp("h", F("X(a)", {"X": 1})))).hypotheses

    major = hyp("h", F("forall2 X:2. X(a,b)"))
    lam = PredAbstraction(("x", "y"), F("P(x,y) & Q(y,a)"))
    assert alpha_eq(check(forall2_e(major, lam)).conclusion, F("P(a,b) & Q(b,a)"))
    rejects(forall2_e(major, PredAbstraction(("x",), F("P(x)"))), ErrorKind.ArityMismatch)
    rejects(forall2_e(hyp("h", A), lam), ErrorKind.ConclusionMismatch)


def test_exists2():
    target = F("exists2 X:1. X(a)")
    lam = PredAbstraction(("x",), F("P(x)"))
    assert check(exists2_i(hyp("h", F("P(a)")), lam, target)).conclusion == target
    rejects(exists2_i(hyp("h", F("P(b)")), lam, target), ErrorKind.ConclusionMismatch)
    rejects(exists2_i(hyp("h", F("P(a)")), PredAbstraction((), F("A")), target), ErrorKind.ArityMismatch)

    major = hyp("e", target)
    body = exists_i(hyp("w", F("W(a)", {"W": 1})), Const("a"), F("exists x. W(x)", {"W": 1}))
    closed = exists2_e(major, "W", 1, "w", exists2_i(body, identity_abstraction("W", 1), F("exists2 V:1. exists x. V(x)")))
    assert check(closed) == Judgment({"e": target}, F("exists2 V:1. exists x. V(x)"))
    rejects(exists2_e(major, "W", 1, "w", body), ErrorKind.EigenpredicateViolation)
    rejects(exists2_e(major, "W", 2, "w", body), ErrorKind.ArityMismatch)
    side = and_e1(and_i(hyp("w", F("W(a)", {"W": 1})), hyp("o", F("W(b)", {"W": 1}))))
    rejects(exists2_e(major, "W", 1, "w", bot_e(not_e(side, hyp("n", F("~W(a)", {"W": 1}))), A)), ErrorKind.EigenpredicateViolation)


# ----------------------------------------------------------- Henkin

SIG = HenkinSignature()


def _henkin_premises(A, B):
    parts = henkin_conjuncts(PredVar("F", 2), PredVar("G", 2), SIG)
    inst = [subst_preds(c, {("F", 2): A, ("G", 2): B}) for c in parts]
    return [hyp(f"p{i}", f) for i, f in enumerate(inst, 1)]


def test_henkin_intro_and_elim():
    A = PredAbstraction(("u", "v"), F("Q(u,v)"))
    Bsel = PredAbstraction(("u", "v"), F("Q(v,u)"))
    prems = _henkin_premises(A, Bsel)
    node = henkin_intro(*prems, A, Bsel, SIG)
    j = check(node)
    assert j.conclusion == expand_henkin(SIG)
    assert set(j.hypotheses) == {"p1", "p2", "p3"}
    with pytest.raises(CheckError) as ei:
        henkin_intro(prems[1], prems[0], prems[2], A, Bsel, SIG)
    assert ei.value.location == (0,)

    psi = build_Psi(PredVar("R", 2), PredVar("S", 2), SIG)
    back = henkin_elim(hyp("H", expand_henkin(SIG)), exists2_i(exists2_i(hyp("psi", psi), identity_abstraction("S", 2), _mid()), identity_abstraction("R", 2), expand_henkin(SIG)), "R", "S", "psi", SIG)
    assert check(back) == Judgment({"H": expand_henkin(SIG)}, expand_henkin(SIG))


def _mid():
    full = expand_henkin(SIG)
    return subst_pred(full.body, full.var, 2, identity_abstraction("R", 2))


def test_henkin_elim_side_conditions():
    psi = build_Psi(PredVar("R", 2), PredVar("S", 2), SIG)
    H = hyp("H", expand_henkin(SIG))
    with pytest.raises(CheckError) as ei:
        henkin_elim(H, hyp("psi", psi), "R", "S", "psi", SIG)
    assert ei.value.kind == ErrorKind.EigenpredicateViolation
    with pytest.raises(CheckError) as ei:
        henkin_elim(H, hyp("c", C), "R", "R", "psi", SIG)
    assert ei.value.kind == ErrorKind.EigenpredicateViolation
    with pytest.raises(CheckError) as ei:
        henkin_elim(hyp("x", A), hyp("c", C), "R", "S", "psi", SIG)
    assert ei.value.kind == ErrorKind.ConclusionMismatch
    open_s = and_e1(and_i(hyp("c", C), hyp("s", F("S(a,a)", {"S": 2}))))
    with pytest.raises(CheckError) as ei:
        henkin_elim(H, open_s, "R", "S", "psi", SIG)
    assert ei.value.kind == ErrorKind.EigenpredicateViolation


def test_elaborate_henkin():
    A = PredAbstraction(("u", "v"), F("Q(u,v)"))
    node = henkin_intro(*_henkin_premises(A, A), A, A, SIG)
    e = elaborate(node)
    assert "henkinI" not in e.rules_used()
    assert check(e).alpha_equal(check(node))
    plain = imp_i("h", A_ := F("A"), hyp("h", A_))
    assert elaborate(plain) is plain


# ---------------------------------------------------- judgments


def test_check_against_and_weakening():
    p = imp_e(hyp("f", F("A -> B")), hyp("a", A))
    exact = Judgment({"f": F("A -> B"), "a": A}, B)
    assert check_against(p, exact)
    wider = exact.weaken({"z": C})
    assert not check_against(p, wider)
    assert check_against(p, wider, allow_weakening=True)
    with pytest.raises(ValueError):
        exact.weaken({"a": C})


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.sampled_from(["k1", "k2", "k3"]), st.sampled_from(["A", "B & C", "forall x. P(x)"])))
def test_weakening_property(extra):
    p = not_i("a", A, not_e(hyp("a", A), hyp("n", F("~A"))))
    j = check(p)
    wider = j.weaken({k: F(v) for k, v in extra.items()})
    assert j.subsumed_by(wider)
    assert check_against(p, wider, allow_weakening=True)


def test_judgment_alpha_equal():
    j1 = Judgment({"h": F("forall x. P(x)")}, F("exists y. P(y)"))
    j2 = Judgment({"h": F("forall z. P(z)")}, F("exists w. P(w)"))
    assert j1.alpha_equal(j2) and not j1.alpha_equal(Judgment({}, j1.conclusion))
    assert "|-" in str(j1)


# ---------------------------------------------------- comprehension


@pytest.mark.parametrize(
    "params, body",
    [(("x", "y"), "P(x,y) & Q(y,a)"), (("x",), "exists2 X:1. X(x)"), ((), "A | ~A")],
)
def test_derive_comprehension(params, body):
    lam = PredAbstraction(params, F(body))
    p = derive_comprehension(lam)
    j = check(p)
    assert not j.hypotheses
    assert alpha_eq(j.conclusion, comprehension_formula(lam))


def test_error_message_mentions_location():
    p = and_i(hyp("a", A), forall_i("x", hyp("h", F("P(x)"))))
    e = rejects(p, ErrorKind.EigenvariableViolation, (1,))
    assert "root/1" in str(e)
