"""Natural deduction checker for classical second-order logic.

A :class:`Proof` is a tree of rule applications.  Hypotheses are leaves
labelled by name; discharging rules name the label they close (vacuous
discharge is allowed).  :func:`check` computes the judgment a tree proves
or raises :class:`CheckError` pointing at the offending node.  Formulas are
compared up to alpha-equivalence.

The rule catalogue (script keyword, payload, premises) is :data:`RULES`;
``docs/rules.md`` describes each rule's side conditions.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .constructions import HenkinSignature, build_Psi, expand_henkin, henkin_conjuncts, selector_names
from .syntax import (
    BOT,
    And,
    Bot,
    ExistsInd,
    ExistsPred,
    ForallInd,
    ForallPred,
    Formula,
    FreshnessError,
    Iff,
    Implies,
    Not,
    Or,
    PredAbstraction,
    PredVar,
    Term,
    Var,
    alpha_eq,
    fresh_name,
    free_ind_vars,
    free_pred_vars,
    identity_abstraction,
    subst_pred,
    subst_preds,
    subst_term,
)


class ErrorKind(str, enum.Enum):
    EigenvariableViolation = "EigenvariableViolation"
    EigenpredicateViolation = "EigenpredicateViolation"
    DischargeMismatch = "DischargeMismatch"
    ConclusionMismatch = "ConclusionMismatch"
    ArityMismatch = "ArityMismatch"
    UnknownHypothesis = "UnknownHypothesis"
    SideConditionViolation = "SideConditionViolation"


class CheckError(Exception):
    """A rule application is invalid.

    ``location`` is the path of premise indices from the root to the node.
    """

    def __init__(self, kind: ErrorKind, location: tuple[int, ...], detail: str):
        super().__init__(f"{kind.value} at {format_location(location)}: {detail}")
        self.kind = kind
        self.location = tuple(location)
        self.detail = detail


def format_location(loc: Iterable[int]) -> str:
    loc = tuple(loc)
    return "root" if not loc else "root/" + "/".join(str(i) for i in loc)


# -------------------------------------------------------------- the trees

# keyword -> (payload field kinds, number of premises)
RULES: dict[str, tuple[tuple[str, ...], int]] = {
    "hyp": (("label", "formula"), 0),
    "andI": ((), 2),
    "andE1": ((), 1),
    "andE2": ((), 1),
    "orI1": (("formula",), 1),
    "orI2": (("formula",), 1),
    "orE": (("label", "label"), 3),
    "impI": (("label", "formula"), 1),
    "impE": ((), 2),
    "notI": (("label", "formula"), 1),
    "notE": ((), 2),
    "botE": (("formula",), 1),
    "raa": (("label", "formula"), 1),
    "forallI": (("ivar",), 1),
    "forallE": (("term",), 1),
    "existsI": (("term", "formula"), 1),
    "existsE": (("ivar", "label"), 2),
    "forall2I": (("pvar", "nat"), 1),
    "forall2E": (("abs",), 1),
    "exists2I": (("abs", "formula"), 1),
    "exists2E": (("pvar", "nat", "label"), 2),
    "henkinI": (("sig", "abs", "abs"), 3),
    "henkinE": (("sig", "pvar", "pvar", "label"), 2),
}


class MalformedProof(ValueError):
    pass


@dataclass(frozen=True)
class Proof:
    rule: str
    payload: tuple = ()
    premises: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "payload", tuple(self.payload))
        object.__setattr__(self, "premises", tuple(self.premises))
        if self.rule not in RULES:
            raise MalformedProof(f"unknown rule {self.rule!r}")
        kinds, n = RULES[self.rule]
        if len(self.payload) != len(kinds):
            raise MalformedProof(f"{self.rule} expects payload {kinds}, got {len(self.payload)} items")
        if len(self.premises) != n:
            raise MalformedProof(f"{self.rule} expects {n} premises, got {len(self.premises)}")

    def nodes(self):
        """Pre-order iteration over ``(location, node)`` pairs."""
        stack = [((), self)]
        while stack:
            loc, p = stack.pop()
            yield loc, p
            for i in reversed(range(len(p.premises))):
                stack.append((loc + (i,), p.premises[i]))

    def at(self, loc: Iterable[int]) -> "Proof":
        p = self
        for i in loc:
            p = p.premises[i]
        return p

    def rules_used(self) -> set[str]:
        return {p.rule for _, p in self.nodes()}

    def labels(self) -> set[str]:
        out = set()
        for _, p in self.nodes():
            kinds = RULES[p.rule][0]
            out.update(v for k, v in zip(kinds, p.payload) if k == "label")
        return out


# Small constructors, named after the script keywords.


def hyp(label: str, f: Formula) -> Proof:
    return Proof("hyp", (label, f))


def and_i(a: Proof, b: Proof) -> Proof:
    return Proof("andI", (), (a, b))


def and_e1(p: Proof) -> Proof:
    return Proof("andE1", (), (p,))


def and_e2(p: Proof) -> Proof:
    return Proof("andE2", (), (p,))


def or_i1(p: Proof, right: Formula) -> Proof:
    return Proof("orI1", (right,), (p,))


def or_i2(p: Proof, left: Formula) -> Proof:
    return Proof("orI2", (left,), (p,))


def or_e(major: Proof, l1: str, m1: Proof, l2: str, m2: Proof) -> Proof:
    return Proof("orE", (l1, l2), (major, m1, m2))


def imp_i(label: str, f: Formula, p: Proof) -> Proof:
    return Proof("impI", (label, f), (p,))


def imp_e(major: Proof, minor: Proof) -> Proof:
    return Proof("impE", (), (major, minor))


def not_i(label: str, f: Formula, p: Proof) -> Proof:
    return Proof("notI", (label, f), (p,))


def not_e(pos: Proof, neg: Proof) -> Proof:
    return Proof("notE", (), (pos, neg))


def bot_e(p: Proof, f: Formula) -> Proof:
    return Proof("botE", (f,), (p,))


def raa(label: str, neg: Formula, p: Proof) -> Proof:
    return Proof("raa", (label, neg), (p,))


def forall_i(var: str, p: Proof) -> Proof:
    return Proof("forallI", (var,), (p,))


def forall_e(p: Proof, t: Term) -> Proof:
    return Proof("forallE", (t,), (p,))


def exists_i(p: Proof, t: Term, concl: Formula) -> Proof:
    return Proof("existsI", (t, concl), (p,))


def exists_e(major: Proof, var: str, label: str, minor: Proof) -> Proof:
    return Proof("existsE", (var, label), (major, minor))


def forall2_i(var: str, arity: int, p: Proof) -> Proof:
    return Proof("forall2I", (var, arity), (p,))


def forall2_e(p: Proof, a: PredAbstraction) -> Proof:
    return Proof("forall2E", (a,), (p,))


def exists2_i(p: Proof, a: PredAbstraction, concl: Formula) -> Proof:
    return Proof("exists2I", (a, concl), (p,))


def exists2_e(major: Proof, var: str, arity: int, label: str, minor: Proof) -> Proof:
    return Proof("exists2E", (var, arity, label), (major, minor))


# ------------------------------------------------------------- judgments


@dataclass(frozen=True)
class Judgment:
    hypotheses: Mapping[str, Formula] = field(default_factory=dict)
    conclusion: Formula = BOT

    def __post_init__(self):
        object.__setattr__(self, "hypotheses", dict(self.hypotheses))

    def alpha_equal(self, other: "Judgment") -> bool:
        if set(self.hypotheses) != set(other.hypotheses):
            return False
        if not alpha_eq(self.conclusion, other.conclusion):
            return False
        return all(alpha_eq(f, other.hypotheses[k]) for k, f in self.hypotheses.items())

    def weaken(self, extra: Mapping[str, Formula]) -> "Judgment":
        clash = [k for k in extra if k in self.hypotheses and not alpha_eq(extra[k], self.hypotheses[k])]
        if clash:
            raise ValueError(f"labels already bound to other formulas: {clash}")
        return Judgment({**extra, **self.hypotheses}, self.conclusion)

    def subsumed_by(self, other: "Judgment") -> bool:
        """True iff ``other`` is this judgment with possibly more hypotheses."""
        if not alpha_eq(self.conclusion, other.conclusion):
            return False
        return all(k in other.hypotheses and alpha_eq(f, other.hypotheses[k]) for k, f in self.hypotheses.items())

    def __str__(self):
        from .parser import pretty

        hs = ", ".join(f"{k}: {pretty(f)}" for k, f in sorted(self.hypotheses.items()))
        return f"{hs} |- {pretty(self.conclusion)}" if hs else f"|- {pretty(self.conclusion)}"


# ---------------------------------------------------------------- checking


def check(p: Proof) -> Judgment:
    """The judgment proved by ``p``; raises :class:`CheckError`."""
    hyps, concl = _check(p, ())
    return Judgment(hyps, concl)


def check_against(p: Proof, expected: Judgment, allow_weakening: bool = False) -> bool:
    """True iff ``p`` proves ``expected`` (up to alpha-equivalence).

    With ``allow_weakening`` the expected judgment may list extra,
    unused hypotheses.
    """
    j = check(p)
    if allow_weakening:
        return j.subsumed_by(expected)
    return j.alpha_equal(expected)


def _err(kind: ErrorKind, loc, detail: str) -> CheckError:
    return CheckError(kind, loc, detail)


def _merge(parts: Iterable[dict], loc) -> dict:
    out: dict = {}
    for d in parts:
        for k, f in d.items():
            g = out.get(k)
            if g is None:
                out[k] = f
            elif g is not f and not alpha_eq(f, g):
                raise _err(ErrorKind.SideConditionViolation, loc, f"hypothesis label {k!r} used for two formulas")
    return out


def _discharge(hyps: dict, label: str, required: Formula, loc) -> dict:
    if label in hyps:
        if not alpha_eq(hyps[label], required):
            raise _err(
                ErrorKind.DischargeMismatch,
                loc,
                f"label {label!r} stands for {hyps[label]} but the rule discharges {required}",
            )
        hyps = {k: v for k, v in hyps.items() if k != label}
    return hyps


def _expect(cond: bool, loc, detail: str, kind: ErrorKind = ErrorKind.ConclusionMismatch) -> None:
    if not cond:
        raise _err(kind, loc, detail)


def _pvars_in(hyps: Mapping[str, Formula]) -> set:
    out = set()
    for f in hyps.values():
        out |= free_pred_vars(f)
    return out


def _ivars_in(hyps: Mapping[str, Formula]) -> set:
    out = set()
    for f in hyps.values():
        out |= free_ind_vars(f)
    return out


def _check(p: Proof, loc: tuple) -> tuple[dict, Formula]:
    r = p.rule
    sub = [loc + (i,) for i in range(len(p.premises))]

    if r == "hyp":
        label, f = p.payload
        return {label: f}, f

    prem = [_check(q, l) for q, l in zip(p.premises, sub)]

    if r == "andI":
        return _merge([h for h, _ in prem], loc), And(prem[0][1], prem[1][1])

    if r in ("andE1", "andE2"):
        h, c = prem[0]
        _expect(isinstance(c, And), loc, f"{r} needs a conjunction, got {c}")
        return h, c.left if r == "andE1" else c.right

    if r == "orI1":
        h, c = prem[0]
        return h, Or(c, p.payload[0])

    if r == "orI2":
        h, c = prem[0]
        return h, Or(p.payload[0], c)

    if r == "orE":
        l1, l2 = p.payload
        (h0, c0), (h1, c1), (h2, c2) = prem
        _expect(isinstance(c0, Or), loc, f"orE needs a disjunction, got {c0}")
        _expect(alpha_eq(c1, c2), loc, f"orE branches prove different formulas: {c1} / {c2}")
        h1 = _discharge(h1, l1, c0.left, sub[1])
        h2 = _discharge(h2, l2, c0.right, sub[2])
        return _merge([h0, h1, h2], loc), c1

    if r == "impI":
        label, f = p.payload
        h, c = prem[0]
        return _discharge(h, label, f, loc), Implies(f, c)

    if r == "impE":
        (h0, c0), (h1, c1) = prem
        _expect(isinstance(c0, Implies), loc, f"impE needs an implication, got {c0}")
        _expect(alpha_eq(c0.left, c1), loc, f"impE minor proves {c1}, expected {c0.left}")
        return _merge([h0, h1], loc), c0.right

    if r == "notI":
        label, f = p.payload
        h, c = prem[0]
        _expect(isinstance(c, Bot), loc, f"notI needs a proof of bot, got {c}")
        return _discharge(h, label, f, loc), Not(f)

    if r == "notE":
        (h0, c0), (h1, c1) = prem
        _expect(isinstance(c1, Not), loc, f"notE second premise must be a negation, got {c1}")
        _expect(alpha_eq(c1.body, c0), loc, f"notE premises {c0} and {c1} do not contradict")
        return _merge([h0, h1], loc), BOT

    if r == "botE":
        h, c = prem[0]
        _expect(isinstance(c, Bot), loc, f"botE needs a proof of bot, got {c}")
        return h, p.payload[0]

    if r == "raa":
        label, neg = p.payload
        h, c = prem[0]
        _expect(isinstance(neg, Not), loc, f"raa discharges a negation, got {neg}", ErrorKind.DischargeMismatch)
        _expect(isinstance(c, Bot), loc, f"raa needs a proof of bot, got {c}")
        return _discharge(h, label, neg, loc), neg.body

    if r == "forallI":
        (x,) = p.payload
        h, c = prem[0]
        bad = [k for k, f in h.items() if x in free_ind_vars(f)]
        _expect(not bad, loc, f"eigenvariable {x} free in open hypotheses {bad}", ErrorKind.EigenvariableViolation)
        return h, ForallInd(x, c)

    if r == "forallE":
        (t,) = p.payload
        h, c = prem[0]
        _expect(isinstance(c, ForallInd), loc, f"forallE needs a universal formula, got {c}")
        return h, subst_term(c.body, c.var, t)

    if r == "existsI":
        t, target = p.payload
        h, c = prem[0]
        _expect(isinstance(target, ExistsInd), loc, f"existsI concludes an existential, got {target}")
        inst = subst_term(target.body, target.var, t)
        _expect(alpha_eq(inst, c), loc, f"existsI premise proves {c}, expected {inst}")
        return h, target

    if r == "existsE":
        y, label = p.payload
        (h0, c0), (h1, c1) = prem
        _expect(isinstance(c0, ExistsInd), loc, f"existsE major must be existential, got {c0}")
        assumed = subst_term(c0.body, c0.var, Var(y))
        h1 = _discharge(h1, label, assumed, sub[1])
        _expect(
            y not in free_ind_vars(c0) and y not in free_ind_vars(c1) and y not in _ivars_in(h1),
            loc,
            f"eigenvariable {y} occurs free in the major premise, the conclusion or an open hypothesis",
            ErrorKind.EigenvariableViolation,
        )
        return _merge([h0, h1], loc), c1

    if r == "forall2I":
        X, n = p.payload
        h, c = prem[0]
        bad = [k for k, f in h.items() if (X, n) in free_pred_vars(f)]
        _expect(not bad, loc, f"eigenpredicate {X}/{n} free in open hypotheses {bad}", ErrorKind.EigenpredicateViolation)
        return h, ForallPred(X, n, c)

    if r == "forall2E":
        (a,) = p.payload
        h, c = prem[0]
        _expect(isinstance(c, ForallPred), loc, f"forall2E needs a second-order universal, got {c}")
        _expect(a.arity == c.arity, loc, f"abstraction of arity {a.arity} for {c.var}/{c.arity}", ErrorKind.ArityMismatch)
        return h, subst_pred(c.body, c.var, c.arity, a)

    if r == "exists2I":
        a, target = p.payload
        h, c = prem[0]
        _expect(isinstance(target, ExistsPred), loc, f"exists2I concludes a second-order existential, got {target}")
        _expect(
            a.arity == target.arity,
            loc,
            f"abstraction of arity {a.arity} for {target.var}/{target.arity}",
            ErrorKind.ArityMismatch,
        )
        inst = subst_pred(target.body, target.var, target.arity, a)
        _expect(alpha_eq(inst, c), loc, f"exists2I premise proves {c}, expected {inst}")
        return h, target

    if r == "exists2E":
        Y, n, label = p.payload
        (h0, c0), (h1, c1) = prem
        _expect(isinstance(c0, ExistsPred), loc, f"exists2E major must be a second-order existential, got {c0}")
        _expect(c0.arity == n, loc, f"eigenpredicate {Y}/{n} for {c0.var}/{c0.arity}", ErrorKind.ArityMismatch)
        assumed = subst_pred(c0.body, c0.var, n, identity_abstraction(Y, n))
        h1 = _discharge(h1, label, assumed, sub[1])
        key = (Y, n)
        _expect(
            key not in free_pred_vars(c0) and key not in free_pred_vars(c1) and key not in _pvars_in(h1),
            loc,
            f"eigenpredicate {Y}/{n} occurs free in the major premise, the conclusion or an open hypothesis",
            ErrorKind.EigenpredicateViolation,
        )
        return _merge([h0, h1], loc), c1

    if r == "henkinI":
        sig, A, B = p.payload
        _expect(A.arity == 2 and B.arity == 2, loc, "henkinI abstractions must be binary", ErrorKind.ArityMismatch)
        concl = expand_henkin(sig)
        wanted = _henkin_instance(concl, A, B)
        names = ("first selector", "second selector", "matrix")
        for i, ((_, c), w) in enumerate(zip(prem, wanted)):
            _expect(alpha_eq(c, w), sub[i], f"henkinI {names[i]} premise proves {c}, expected {w}")
        return _merge([h for h, _ in prem], loc), concl

    if r == "henkinE":
        sig, A, B, label = p.payload
        (h0, c0), (h1, c1) = prem
        full = expand_henkin(sig)
        _expect(alpha_eq(c0, full), loc, f"henkinE major must prove {full}, got {c0}")
        ev = ErrorKind.EigenpredicateViolation
        _expect(A != B, loc, f"eigenpredicate {B} occurs free in the intermediate formula", ev)
        assumed = build_Psi(PredVar(A, 2), PredVar(B, 2), sig)
        h1 = _discharge(h1, label, assumed, sub[1])
        for v in (A, B):
            _expect((v, 2) not in free_pred_vars(c1), loc, f"eigenpredicate {v} free in the conclusion {c1}", ev)
            _expect((v, 2) not in _pvars_in(h1), loc, f"eigenpredicate {v} free in an open hypothesis", ev)
        return _merge([h0, h1], loc), c1

    raise _err(ErrorKind.SideConditionViolation, loc, f"unknown rule {r}")  # pragma: no cover


def _henkin_instance(concl: ExistsPred, A: PredAbstraction, B: PredAbstraction) -> tuple[Formula, Formula, Formula]:
    F = concl.var
    inner = concl.body
    assert isinstance(inner, ExistsPred)
    G = inner.var
    psi = subst_preds(inner.body, {(F, 2): A, (G, 2): B})
    # psi is (left & right) & closure
    return psi.left.left, psi.left.right, psi.right


# --------------------------------------------------------- derived rules


def henkin_intro(
    prem_a: Proof,
    prem_b: Proof,
    prem_phi: Proof,
    A: PredAbstraction,
    B: PredAbstraction,
    sig: HenkinSignature = HenkinSignature(),
) -> Proof:
    """Introduce the branching quantifier from three closed premises.

    ``prem_a`` proves ``forall x. exists x'. T(x) -> A(x,x')``, ``prem_b``
    the same for ``B``, and ``prem_phi`` the closed matrix with ``A``, ``B``
    in place of the selectors.  Raises :class:`CheckError` otherwise.
    """
    node = Proof("henkinI", (sig, A, B), (prem_a, prem_b, prem_phi))
    check(node)
    return node


def henkin_elim(
    major: Proof,
    minor: Proof,
    A: str,
    B: str,
    label: str,
    sig: HenkinSignature = HenkinSignature(),
) -> Proof:
    node = Proof("henkinE", (sig, A, B, label), (major, minor))
    check(node)
    return node


def derive_comprehension(a: PredAbstraction) -> Proof:
    """Hypothesis-free proof of ``exists X. forall x1..xn. (a(x1..xn) <-> X(x1..xn))``."""
    X = fresh_name("X", {n for n, _ in a.free_pred_vars()})
    if (X, a.arity) in a.free_pred_vars():
        raise FreshnessError(f"generated predicate variable {X} occurs in {a}")
    target = comprehension_formula(a, X)
    phi = a.body
    inner = Iff(phi, phi)
    label = fresh_name("h", ())
    both = and_i(imp_i(label, phi, hyp(label, phi)), imp_i(label, phi, hyp(label, phi)))
    assert alpha_eq(inner, check(both).conclusion)
    p = both
    for v in reversed(a.params):
        p = forall_i(v, p)
    return exists2_i(p, a, target)


def comprehension_formula(a: PredAbstraction, X: str = "X") -> Formula:
    from .syntax import Atom

    xs = tuple(Var(v) for v in a.params)
    body: Formula = Iff(a.body, Atom(PredVar(X, a.arity), xs))
    for v in reversed(a.params):
        body = ForallInd(v, body)
    return ExistsPred(X, a.arity, body)


# ------------------------------------------------------------- elaboration


def elaborate(p: Proof) -> Proof:
    """Rewrite every Henkin node into ordinary second-order steps."""
    if not ({"henkinI", "henkinE"} & p.rules_used()):
        return p
    used = set(p.labels())
    return _elab(p, used)


def _elab(p: Proof, used: set) -> Proof:
    prem = tuple(_elab(q, used) for q in p.premises)
    if p.rule == "henkinI":
        sig, A, B = p.payload
        full = expand_henkin(sig)
        F, G = full.var, full.body.var
        mid = subst_pred(full.body, F, 2, A)  # exists G. Psi(A, G)
        body = and_i(and_i(prem[0], prem[1]), prem[2])
        return exists2_i(exists2_i(body, B, mid), A, full)
    if p.rule == "henkinE":
        sig, A, B, label = p.payload
        full = expand_henkin(sig)
        mid = subst_pred(full.body, full.var, 2, identity_abstraction(A, 2))
        outer_label = fresh_name("hE", used)
        used.add(outer_label)
        inner = exists2_e(hyp(outer_label, mid), B, 2, label, prem[1])
        return exists2_e(prem[0], A, 2, outer_label, inner)
    if prem == p.premises:
        return p
    return Proof(p.rule, p.payload, prem)
