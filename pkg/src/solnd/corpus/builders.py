"""Proof builders for the regression corpus.

Every builder returns a :class:`Built` record: the proof, the judgment it
must establish, and any named sub-proofs.  The builders are generic in the
concept property ``phi`` (a :class:`SecondOrderAbstraction`) and the
individual property ``psi`` (a unary :class:`PredAbstraction`); the corpus
instantiates them with the defaults below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from ..constructions import (
    HenkinSignature,
    build_Psi,
    concept_of,
    exists_concepts,
    exists_lower,
    expand_henkin,
    forall_concepts,
    forall_lower,
    henkin_conjuncts,
    is_concept,
    is_concept_var,
    leibniz_eq,
    lift,
    lower,
)
from ..kernel import (
    Judgment,
    Proof,
    and_e1,
    and_e2,
    and_i,
    bot_e,
    check,
    derive_comprehension,
    exists2_e,
    exists2_i,
    exists_e,
    exists_i,
    forall2_e,
    forall2_i,
    forall_e,
    forall_i,
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
from ..parser import parse_formula
from ..syntax import (
    BOT,
    And,
    Atom,
    Bot,
    ExistsInd,
    ExistsPred,
    ForallInd,
    ForallPred,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    PredAbstraction,
    PredConst,
    PredVar,
    SecondOrderAbstraction,
    Var,
    all_names,
    fresh_name,
    free_pred_vars,
    identity_abstraction,
    subst_pred,
    subst_term,
)

# phi(X): every instance of X is a Y, and something is not an X
DEFAULT_PHI = SecondOrderAbstraction("X", parse_formula("(forall w. X(w) -> Y(w)) & (exists w. ~X(w))", predvars={"X": 1, "Y": 1}))
DEFAULT_PSI = PredAbstraction(("x",), parse_formula("Y(x)", predvars={"Y": 1}))
COMPREHENSION_ABS = PredAbstraction(("x", "y"), parse_formula("P(x,y) & Q(y,a)", constants=["a"]))


@dataclass
class Built:
    proof: Proof
    statement: Judgment
    definitions: dict = field(default_factory=dict)


def concl(p: Proof) -> Formula:
    return check(p).conclusion


def open_exists(f: ExistsInd, v: str) -> Formula:
    return subst_term(f.body, f.var, Var(v))


def open_exists2(f: ExistsPred, name: str) -> Formula:
    return subst_pred(f.body, f.var, f.arity, identity_abstraction(name, f.arity))


def identity_proof(label: str, f: Formula) -> Proof:
    return imp_i(label, f, hyp(label, f))


def cut(label: str, f: Formula, body: Proof, proof_of_f: Proof) -> Proof:
    """Use ``proof_of_f`` for the open hypothesis ``label: f`` of ``body``."""
    return imp_e(imp_i(label, f, body), proof_of_f)


class _Labels:
    def __init__(self, prefix: str = "r"):
        self.counter = itertools.count(1)
        self.prefix = prefix

    def __call__(self) -> str:
        return f"{self.prefix}{next(self.counter)}"


# ---------------------------------------------------------------- delta


def delta(x: str = "x", strict: bool = True) -> Built:
    """``|- C(E_x)``: being equal to ``x`` is an individual concept."""
    Ex = concept_of(Var(x))
    target = is_concept(Ex, strict)
    unique = target.left if strict else target
    a_name = unique.var
    b_name = unique.body.var
    Zname = "Z"
    h = unique.body.body.left  # E_x(a) & E_x(b)
    a_, b_ = Var(a_name), Var(b_name)
    Z = PredVar(Zname, 1)
    za = Atom(Z, (a_,))
    zx = Atom(Z, (Var(x),))
    back = PredAbstraction(("u",), Implies(Atom(Z, (Var("u"),)), zx))
    # E_x(a) instantiated at  u |-> (Z(u) -> Z(x))  gives  (Z(x)->Z(x)) -> (Z(a)->Z(x))
    step = imp_e(forall2_e(and_e1(hyp("h", h)), back), identity_proof("i", zx))
    z_x = imp_e(step, hyp("za", za))
    z_b = imp_e(forall2_e(and_e2(hyp("h", h)), identity_abstraction(Zname, 1)), z_x)
    eq = forall2_i(Zname, 1, imp_i("za", za, z_b))
    uniq = forall_i(a_name, forall_i(b_name, imp_i("h", h, eq)))
    if not strict:
        return Built(uniq, Judgment({}, target))
    refl = reflexivity(x)
    exists = exists_i(refl, Var(x), target.right)
    return Built(and_i(uniq, exists), Judgment({}, target))


def reflexivity(x: str, var: str = "X") -> Proof:
    """``|- forall X. X(x) -> X(x)``"""
    f = Atom(PredVar(var, 1), (Var(x),))
    return forall2_i(var, 1, identity_proof("refl", f))


# ------------------------------------------------------- replacement lemma


def _distinct_binders(f: Formula, used: set) -> Formula:
    if isinstance(f, (ForallInd, ExistsInd)):
        nv = fresh_name(f.var, used)
        used.add(nv)
        body = _distinct_binders(subst_term(f.body, f.var, Var(nv)), used)
        return type(f)(nv, body)
    if isinstance(f, (ForallPred, ExistsPred)):
        nv = fresh_name(f.var, used)
        used.add(nv)
        body = _distinct_binders(subst_pred(f.body, f.var, f.arity, identity_abstraction(nv, f.arity)), used)
        return type(f)(nv, f.arity, body)
    if isinstance(f, Not):
        return Not(_distinct_binders(f.body, used))
    if isinstance(f, (And, Or, Implies)):
        return type(f)(_distinct_binders(f.left, used), _distinct_binders(f.right, used))
    return f


class Replacement:
    """Proofs of ``A[S] -> A[D]`` from ``eSD: forall w. S(w) -> D(w)`` and
    ``eDS: forall w. D(w) -> S(w)``, by induction on ``A``.

    ``A`` ranges over subformulas of ``phi.body``; ``phi.param`` marks the
    positions being replaced.
    """

    def __init__(self, phi: SecondOrderAbstraction, S: str, D: str, eSD: str = "eSD", eDS: str = "eDS"):
        avoid = all_names(phi.body) | {S, D, phi.param}
        self.P = phi.param
        self.body = _distinct_binders(phi.body, set(avoid))
        self.S, self.D = S, D
        self.w = fresh_name("w", avoid | all_names(self.body))
        self.labels = _Labels("rp")
        self.eSD, self.eDS = eSD, eDS

    def ext(self, src: str, dst: str) -> Formula:
        w = Var(self.w)
        return ForallInd(self.w, Implies(Atom(PredVar(src, 1), (w,)), Atom(PredVar(dst, 1), (w,))))

    def inst(self, A: Formula, name: str) -> Formula:
        return subst_pred(A, self.P, 1, identity_abstraction(name, 1))

    def top(self) -> Proof:
        """``phi(S) -> phi(D)`` with ``eSD`` and ``eDS`` open."""
        return self.prove(self.body, True)

    def prove(self, A: Formula, fwd: bool) -> Proof:
        src, dst = (self.S, self.D) if fwd else (self.D, self.S)
        As, Ad = self.inst(A, src), self.inst(A, dst)
        if (self.P, 1) not in free_pred_vars(A):
            label = self.labels()
            return identity_proof(label, As)
        h = self.labels()
        H = hyp(h, As)
        if isinstance(A, Atom):
            lab = self.eSD if fwd else self.eDS
            return forall_e(hyp(lab, self.ext(src, dst)), A.args[0])
        if isinstance(A, Not):
            b = self.labels()
            back = imp_e(self.prove(A.body, not fwd), hyp(b, self.inst(A.body, dst)))
            return imp_i(h, As, not_i(b, self.inst(A.body, dst), not_e(back, H)))
        if isinstance(A, And):
            return imp_i(
                h,
                As,
                and_i(imp_e(self.prove(A.left, fwd), and_e1(H)), imp_e(self.prove(A.right, fwd), and_e2(H))),
            )
        if isinstance(A, Or):
            l1, l2 = self.labels(), self.labels()
            left = or_i1(imp_e(self.prove(A.left, fwd), hyp(l1, self.inst(A.left, src))), self.inst(A.right, dst))
            right = or_i2(imp_e(self.prove(A.right, fwd), hyp(l2, self.inst(A.right, src))), self.inst(A.left, dst))
            return imp_i(h, As, or_e(H, l1, left, l2, right))
        if isinstance(A, Implies):
            b = self.labels()
            antecedent = imp_e(self.prove(A.left, not fwd), hyp(b, self.inst(A.left, dst)))
            return imp_i(h, As, imp_i(b, self.inst(A.left, dst), imp_e(self.prove(A.right, fwd), imp_e(H, antecedent))))
        if isinstance(A, ForallInd):
            return imp_i(h, As, forall_i(A.var, imp_e(self.prove(A.body, fwd), forall_e(H, Var(A.var)))))
        if isinstance(A, ExistsInd):
            l = self.labels()
            inner = exists_i(imp_e(self.prove(A.body, fwd), hyp(l, self.inst(A.body, src))), Var(A.var), Ad)
            return imp_i(h, As, exists_e(H, A.var, l, inner))
        if isinstance(A, ForallPred):
            inner = imp_e(self.prove(A.body, fwd), forall2_e(H, identity_abstraction(A.var, A.arity)))
            return imp_i(h, As, forall2_i(A.var, A.arity, inner))
        if isinstance(A, ExistsPred):
            l = self.labels()
            inner = exists2_i(
                imp_e(self.prove(A.body, fwd), hyp(l, self.inst(A.body, src))),
                identity_abstraction(A.var, A.arity),
                Ad,
            )
            return imp_i(h, As, exists2_e(H, A.var, A.arity, l, inner))
        raise TypeError(A)


# ------------------------------------------------------ concept lemmas


def _names(*objs) -> set:
    out: set = set()
    for o in objs:
        if isinstance(o, SecondOrderAbstraction):
            out |= all_names(o.body) | {o.param}
        elif isinstance(o, PredAbstraction):
            out |= all_names(o.body) | set(o.params)
        else:
            out |= all_names(o)
    return out


def _uniqueness(C: Formula, strict: bool) -> Formula:
    return C.left if strict else C


def unique_to_eq(CX: Proof, Cform: Formula, strict: bool, s, t, p_s: Proof, p_t: Proof) -> Proof:
    """From ``C(X)``, ``X(s)`` and ``X(t)`` conclude ``s = t`` (Leibniz)."""
    u = _uniqueness(Cform, strict)
    base = and_e1(CX) if strict else CX
    return imp_e(forall_e(forall_e(base, s), t), and_i(p_s, p_t))


def prop1_1a(phi: SecondOrderAbstraction = DEFAULT_PHI) -> Built:
    """``forall x. phi_down(x) |- forall X. C(X) -> phi(X)``"""
    hypf = forall_lower(phi)
    target = forall_concepts(phi)
    X = target.var
    avoid = _names(phi, hypf, target)
    z = fresh_name("z", avoid)
    W = fresh_name("W", avoid)
    CX = target.body.left  # C(X)
    CXp = hyp("c", CX)
    ex_z = and_e2(CXp)
    xz = Atom(PredVar(X, 1), (Var(z),))
    down_z = concl(forall_e(hyp("h", hypf), Var(z)))
    d = open_exists2(down_z, W)  # (C(W) & W(z)) & phi(W)
    D = hyp("d", d)
    CW = and_e1(and_e1(D))
    CWf = d.left.left
    wz = and_e2(and_e1(D))

    rep = Replacement(phi, W, X, "eWX", "eXW")
    w = rep.w
    wv = Var(w)
    Xw, Ww = Atom(PredVar(X, 1), (wv,)), Atom(PredVar(W, 1), (wv,))
    # forall w. W(w) -> X(w): W(z), W(w) give z = w; apply it to X
    zw = unique_to_eq(CW, CWf, True, Var(z), wv, wz, hyp("ww", Ww))
    e_wx = forall_i(w, imp_i("ww", Ww, imp_e(forall2_e(zw, identity_abstraction(X, 1)), hyp("xz", xz))))
    # forall w. X(w) -> W(w)
    zw2 = unique_to_eq(CXp, CX, True, Var(z), wv, hyp("xz", xz), hyp("xw", Xw))
    e_xw = forall_i(w, imp_i("xw", Xw, imp_e(forall2_e(zw2, identity_abstraction(W, 1)), wz)))
    phiW_to_phiX = cut("eWX", rep.ext(W, X), cut("eXW", rep.ext(X, W), rep.top(), e_xw), e_wx)
    phiX = imp_e(phiW_to_phiX, and_e2(D))
    body = exists_e(ex_z, z, "xz", exists2_e(forall_e(hyp("h", hypf), Var(z)), W, 1, "d", phiX))
    p = forall2_i(X, 1, imp_i("c", CX, body))
    return Built(p, Judgment({"h": hypf}, target))


def prop1_1b(phi: SecondOrderAbstraction = DEFAULT_PHI, strict: bool = True) -> Built:
    """``forall X. C(X) -> phi(X) |- forall x. phi_down(x)``"""
    hypf = forall_concepts(phi, strict)
    target = forall_lower(phi, strict)
    x = fresh_name("x", _names(phi, hypf))
    down_x = subst_term(target.body, target.var, Var(x))
    Ex = concept_of(Var(x))
    d = delta(x, strict).proof
    phiE = imp_e(forall2_e(hyp("h", hypf), Ex), d)
    ExX = reflexivity(x)
    p = forall_i(x, exists2_i(and_i(and_i(d, ExX), phiE), Ex, down_x))
    return Built(p, Judgment({"h": hypf}, target))


def _psi_lift_concepts(psi: PredAbstraction, strict: bool = True) -> Formula:
    up = lift(psi)
    return forall_concepts(up, strict)


def prop1_2a(psi: PredAbstraction = DEFAULT_PSI) -> Built:
    """``forall x. psi(x) |- forall X. C(X) -> psi_up(X)``"""
    hypf = ForallInd(psi.params[0], psi.body)
    target = _psi_lift_concepts(psi)
    X = target.var
    CX = target.body.left
    up = target.body.right  # exists x. X(x) & psi(x)
    z = fresh_name("z", _names(psi, target))
    xz = Atom(PredVar(X, 1), (Var(z),))
    inner = exists_i(and_i(hyp("xz", xz), forall_e(hyp("h", hypf), Var(z))), Var(z), up)
    p = forall2_i(X, 1, imp_i("c", CX, exists_e(and_e2(hyp("c", CX)), z, "xz", inner)))
    return Built(p, Judgment({"h": hypf}, target))


def _transport_back(eq_xv: Proof, x: str, v: str, psi: PredAbstraction, p_psi_v: Proof) -> Proof:
    """From ``x = v`` and ``psi(v)`` conclude ``psi(x)``."""
    px = psi.apply(Var(x))
    back = PredAbstraction(("u",), Implies(psi.apply(Var("u")), px)) if "u" not in _names(px) else None
    if back is None:
        u = fresh_name("u", _names(px, psi))
        back = PredAbstraction((u,), Implies(psi.apply(Var(u)), px))
    step = imp_e(forall2_e(eq_xv, back), identity_proof("id", px))
    return imp_e(step, p_psi_v)


def prop1_2b(psi: PredAbstraction = DEFAULT_PSI) -> Built:
    """``forall X. C(X) -> psi_up(X) |- forall x. psi(x)``"""
    hypf = _psi_lift_concepts(psi)
    target = ForallInd(psi.params[0], psi.body)
    avoid = _names(psi, hypf)
    x = fresh_name("x", avoid)
    v = fresh_name("v", avoid | {x})
    Ex = concept_of(Var(x))
    up_E = imp_e(forall2_e(hyp("h", hypf), Ex), delta(x).proof)  # exists v. E_x(v) & psi(v)
    k = open_exists(concl(up_E), v)
    K = hyp("k", k)
    psi_x = _transport_back(and_e1(K), x, v, psi, and_e2(K))
    p = forall_i(x, exists_e(up_E, v, "k", psi_x))
    return Built(p, Judgment({"h": hypf}, target))


def prop2_1a(phi: SecondOrderAbstraction = DEFAULT_PHI) -> Built:
    """``exists x. phi_down(x) |- exists X. C(X) & phi(X)``"""
    hypf = exists_lower(phi)
    target = exists_concepts(phi)
    avoid = _names(phi, hypf, target)
    x = fresh_name("x", avoid)
    W = fresh_name("W", avoid)
    k = open_exists(hypf, x)
    d = open_exists2(k, W)
    D = hyp("d", d)
    witness = and_i(and_e1(and_e1(D)), and_e2(D))
    inner = exists2_e(hyp("k", k), W, 1, "d", exists2_i(witness, identity_abstraction(W, 1), target))
    p = exists_e(hyp("h", hypf), x, "k", inner)
    return Built(p, Judgment({"h": hypf}, target))


def prop2_1b(phi: SecondOrderAbstraction = DEFAULT_PHI) -> Built:
    """``exists X. C(X) & phi(X) |- exists x. phi_down(x)``, via named parts

    ``alpha``: C(W), ``beta``: W(z), ``gamma``: phi(W), all under the
    opened hypotheses ``d: C(W) & phi(W)`` and ``wz: W(z)``.
    """
    hypf = exists_concepts(phi)
    target = exists_lower(phi)
    avoid = _names(phi, hypf, target)
    W = fresh_name("W", avoid)
    z = fresh_name("z", avoid | {W})
    d = open_exists2(hypf, W)
    D = hyp("d", d)
    wz = Atom(PredVar(W, 1), (Var(z),))
    alpha = and_e1(D)
    beta = hyp("wz", wz)
    gamma = and_e2(D)
    down_z = subst_term(target.body, target.var, Var(z))
    witness = exists2_i(and_i(and_i(alpha, beta), gamma), identity_abstraction(W, 1), down_z)
    inner = exists_e(and_e2(alpha), z, "wz", exists_i(witness, Var(z), target))
    p = exists2_e(hyp("h", hypf), W, 1, "d", inner)
    return Built(p, Judgment({"h": hypf}, target), {"alpha": alpha, "beta": beta, "gamma": gamma})


def _psi_exists_concepts(psi: PredAbstraction, strict: bool = True) -> Formula:
    return exists_concepts(lift(psi), strict)


def prop2_2a(psi: PredAbstraction = DEFAULT_PSI, strict: bool = True) -> Built:
    """``exists x. psi(x) |- exists X. C(X) & psi_up(X)``"""
    hypf = ExistsInd(psi.params[0], psi.body)
    target = _psi_exists_concepts(psi, strict)
    x = fresh_name("x", _names(psi, target))
    Ex = concept_of(Var(x))
    inst = subst_pred(target.body, target.var, 1, Ex)  # C(E_x) & exists v. E_x(v) & psi(v)
    up = inst.right
    k = psi.apply(Var(x))
    up_p = exists_i(and_i(reflexivity(x), hyp("k", k)), Var(x), up)
    body = exists2_i(and_i(delta(x, strict).proof, up_p), Ex, target)
    p = exists_e(hyp("h", hypf), x, "k", body)
    return Built(p, Judgment({"h": hypf}, target))


def prop2_2b(psi: PredAbstraction = DEFAULT_PSI) -> Built:
    """``exists X. C(X) & psi_up(X) |- exists x. psi(x)``"""
    hypf = _psi_exists_concepts(psi)
    target = ExistsInd(psi.params[0], psi.body)
    avoid = _names(psi, hypf)
    W = fresh_name("W", avoid)
    v = fresh_name("v", avoid | {W})
    d = open_exists2(hypf, W)
    up = d.right
    e = open_exists(up, v)
    inner = exists_e(and_e2(hyp("d", d)), v, "e", exists_i(and_e2(hyp("e", e)), Var(v), target))
    p = exists2_e(hyp("h", hypf), W, 1, "d", inner)
    return Built(p, Judgment({"h": hypf}, target))


def weak_1(phi: SecondOrderAbstraction = DEFAULT_PHI) -> Built:
    return prop1_1b(phi, strict=False)


def weak_2(psi: PredAbstraction = DEFAULT_PSI) -> Built:
    return prop2_2a(psi, strict=False)


# ------------------------------------------------------------- equality


def eq_refl() -> Built:
    target = ForallInd("x", leibniz_eq(Var("x"), Var("x")))
    return Built(forall_i("x", reflexivity("x")), Judgment({}, target))


def eq_sym() -> Built:
    """``|- forall x. forall y. x = y -> y = x``, by reductio."""
    x, y = Var("x"), Var("y")
    exy, eyx = leibniz_eq(x, y), leibniz_eq(y, x)
    X = PredVar("X", 1)
    Xx, Xy = Atom(X, (x,)), Atom(X, (y,))
    neg = PredAbstraction(("u",), Not(Atom(X, (Var("u"),))))
    # x = y at  u |-> ~X(u):  ~X(x) -> ~X(y)
    not_y = imp_e(forall2_e(hyp("e", exy), neg), hyp("n", Not(Xx)))
    xx = raa("n", Not(Xx), not_e(hyp("xy", Xy), not_y))
    p = forall_i("x", forall_i("y", imp_i("e", exy, forall2_i("X", 1, imp_i("xy", Xy, xx)))))
    return Built(p, Judgment({}, ForallInd("x", ForallInd("y", Implies(exy, eyx)))))


def excluded_middle(name: str = "A") -> Built:
    A = Atom(PredConst(name, 0), ())
    target = Or(A, Not(A))
    n = Not(target)
    not_a = not_i("a", A, not_e(or_i1(hyp("a", A), Not(A)), hyp("n", n)))
    p = raa("n", n, not_e(or_i2(not_a, A), hyp("n", n)))
    return Built(p, Judgment({}, target))


def comprehension(a: PredAbstraction = COMPREHENSION_ABS) -> Built:
    p = derive_comprehension(a)
    return Built(p, Judgment({}, concl(p)))


# -------------------------------------------------------------- Henkin


def henkin_roundtrip(sig: HenkinSignature = HenkinSignature()) -> Built:
    """``H |- H`` through the direct Henkin rules."""
    H = expand_henkin(sig)
    taken = sig.names() | {H.var, H.body.var}
    A = fresh_name("R", taken)
    B = fresh_name("S", taken | {A})
    Psi = build_Psi(PredVar(A, 2), PredVar(B, 2), sig)
    hp = hyp("psi", Psi)
    intro = henkin_intro(
        and_e1(and_e1(hp)),
        and_e2(and_e1(hp)),
        and_e2(hp),
        identity_abstraction(A, 2),
        identity_abstraction(B, 2),
        sig,
    )
    p = henkin_elim(hyp("H", H), intro, A, B, "psi", sig)
    return Built(p, Judgment({"H": H}, H))


# ------------------------------------------------- connective definability


def _prop(name: str) -> Atom:
    return Atom(PredConst(name, 0), ())


def _iff_proof(left: Formula, right: Formula, to_right: Proof, to_left: Proof) -> Proof:
    return and_i(imp_i("l", left, to_right), imp_i("r", right, to_left))


def _pv(name: str = "P") -> Atom:
    return Atom(PredVar(name, 0), ())


def _lam0(f: Formula) -> PredAbstraction:
    return PredAbstraction((), f)


def def_bot() -> Built:
    """``|- bot <-> forall P:0. P``"""
    allp = ForallPred("P", 0, _pv())
    to_right = bot_e(hyp("l", BOT), allp)
    to_left = forall2_e(hyp("r", allp), _lam0(BOT))
    return Built(_iff_proof(BOT, allp, to_right, to_left), Judgment({}, Iff(BOT, allp)))


def def_not(name: str = "A") -> Built:
    """``|- ~A <-> (A -> forall P:0. P)``"""
    A = _prop(name)
    allp = ForallPred("P", 0, _pv())
    rhs = Implies(A, allp)
    to_right = imp_i("a", A, bot_e(not_e(hyp("a", A), hyp("l", Not(A))), allp))
    to_left = not_i("a", A, forall2_e(imp_e(hyp("r", rhs), hyp("a", A)), _lam0(BOT)))
    return Built(_iff_proof(Not(A), rhs, to_right, to_left), Judgment({}, Iff(Not(A), rhs)))


def def_and(a: str = "A", b: str = "B") -> Built:
    """``|- A & B <-> forall P:0. (A -> B -> P) -> P``"""
    A, B, P = _prop(a), _prop(b), _pv()
    body = Implies(Implies(A, Implies(B, P)), P)
    rhs = ForallPred("P", 0, body)
    k = Implies(A, Implies(B, P))
    lhs = And(A, B)
    to_right = forall2_i(
        "P", 0, imp_i("k", k, imp_e(imp_e(hyp("k", k), and_e1(hyp("l", lhs))), and_e2(hyp("l", lhs))))
    )
    pair = imp_i("a", A, imp_i("b", B, and_i(hyp("a", A), hyp("b", B))))
    to_left = imp_e(forall2_e(hyp("r", rhs), _lam0(lhs)), pair)
    return Built(_iff_proof(lhs, rhs, to_right, to_left), Judgment({}, Iff(lhs, rhs)))


def def_or(a: str = "A", b: str = "B") -> Built:
    """``|- A | B <-> forall P:0. (A -> P) -> (B -> P) -> P``"""
    A, B, P = _prop(a), _prop(b), _pv()
    ka, kb = Implies(A, P), Implies(B, P)
    rhs = ForallPred("P", 0, Implies(ka, Implies(kb, P)))
    lhs = Or(A, B)
    cases = or_e(
        hyp("l", lhs),
        "a",
        imp_e(hyp("ka", ka), hyp("a", A)),
        "b",
        imp_e(hyp("kb", kb), hyp("b", B)),
    )
    to_right = forall2_i("P", 0, imp_i("ka", ka, imp_i("kb", kb, cases)))
    inl = imp_i("a", A, or_i1(hyp("a", A), B))
    inr = imp_i("b", B, or_i2(hyp("b", B), A))
    to_left = imp_e(imp_e(forall2_e(hyp("r", rhs), _lam0(lhs)), inl), inr)
    return Built(_iff_proof(lhs, rhs, to_right, to_left), Judgment({}, Iff(lhs, rhs)))


def def_exists(name: str = "Q") -> Built:
    """``|- (exists x. Q(x)) <-> forall P:0. (forall x. Q(x) -> P) -> P``"""
    Q = PredConst(name, 1)
    x = Var("x")
    Qx = Atom(Q, (x,))
    P = _pv()
    lhs = ExistsInd("x", Qx)
    k = ForallInd("x", Implies(Qx, P))
    rhs = ForallPred("P", 0, Implies(k, P))
    use = exists_e(hyp("l", lhs), "x", "q", imp_e(forall_e(hyp("k", k), x), hyp("q", Qx)))
    to_right = forall2_i("P", 0, imp_i("k", k, use))
    intro = forall_i("x", imp_i("q", Qx, exists_i(hyp("q", Qx), x, lhs)))
    to_left = imp_e(forall2_e(hyp("r", rhs), _lam0(lhs)), intro)
    return Built(_iff_proof(lhs, rhs, to_right, to_left), Judgment({}, Iff(lhs, rhs)))


# ------------------------------------------------------------- registry

# name -> (builder, description)
ENTRIES = {
    "delta": (lambda: delta("x"), "being equal to x is an individual concept"),
    "prop1-1a": (prop1_1a, "universal over individuals of phi-down gives universal over concepts of phi"),
    "prop1-1b": (prop1_1b, "universal over concepts of phi gives universal over individuals of phi-down"),
    "prop1-2a": (prop1_2a, "universal over individuals of psi gives universal over concepts of psi-up"),
    "prop1-2b": (prop1_2b, "universal over concepts of psi-up gives universal over individuals of psi"),
    "prop2-1a": (prop2_1a, "existential over individuals of phi-down gives existential over concepts of phi"),
    "prop2-1b": (prop2_1b, "existential over concepts of phi gives existential over individuals of phi-down"),
    "prop2-2a": (prop2_2a, "existential over individuals of psi gives existential over concepts of psi-up"),
    "prop2-2b": (prop2_2b, "existential over concepts of psi-up gives existential over individuals of psi"),
    "comprehension": (comprehension, "comprehension for (x,y) |-> P(x,y) & Q(y,a)"),
    "eq-refl": (eq_refl, "Leibniz equality is reflexive"),
    "eq-sym": (eq_sym, "Leibniz equality is symmetric, classically"),
    "excluded-middle": (excluded_middle, "excluded middle by reductio"),
    "weak-1": (weak_1, "possibly empty concepts: universal over concepts gives universal over individuals"),
    "weak-2": (weak_2, "possibly empty concepts: existential over individuals gives existential over concepts"),
    "henkin-roundtrip": (henkin_roundtrip, "branching quantifier introduced and eliminated"),
    "def-bot": (def_bot, "falsity from universal propositional quantification"),
    "def-not": (def_not, "negation from implication and falsity"),
    "def-and": (def_and, "conjunction by second-order propositional encoding"),
    "def-or": (def_or, "disjunction by second-order propositional encoding"),
    "def-exists": (def_exists, "existential by second-order propositional encoding"),
}


def build(name: str) -> Built:
    return ENTRIES[name][0]()
