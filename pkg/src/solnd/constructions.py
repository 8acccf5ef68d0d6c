"""Builders for defined notions: Leibniz equality, individual concepts,
the down/up translations, Dedekind finiteness and the Henkin encodings.

Bound names are deterministic (``x``, ``x'``, ``y``, ``y'``, ``z``, ``X``,
``F``, ``G``), suffixed with a number only when they would clash.
"""

from __future__ import annotations

from dataclasses import dataclass

from .syntax import (
    And,
    ArityMismatch,
    Atom,
    ExistsInd,
    ExistsPred,
    ForallInd,
    ForallPred,
    Formula,
    Implies,
    PredAbstraction,
    PredConst,
    PredRef,
    PredVar,
    SecondOrderAbstraction,
    Term,
    Var,
    conj,
    fresh_name,
    free_ind_vars,
    free_pred_vars,
    identity_abstraction,
    term_vars,
)


@dataclass(frozen=True)
class HenkinSignature:
    """Team, board and knows-each-other predicates of the branching sentence."""

    T: PredRef = PredConst("T", 1)
    B: PredRef = PredConst("B", 1)
    K: PredRef = PredConst("K", 2)

    def __post_init__(self):
        for ref, ar in ((self.T, 1), (self.B, 1), (self.K, 2)):
            if not isinstance(ref, PredConst):
                raise TypeError(f"{ref} must be a predicate constant")
            if ref.arity != ar:
                raise ArityMismatch(f"{ref.name} must have arity {ar}")

    @classmethod
    def named(cls, t: str, b: str, k: str) -> "HenkinSignature":
        return cls(PredConst(t, 1), PredConst(b, 1), PredConst(k, 2))

    def names(self) -> set[str]:
        return {self.T.name, self.B.name, self.K.name}


# ------------------------------------------------------------ equality


def leibniz_eq(t: Term, u: Term, var: str = "X") -> Formula:
    """``t = u`` as ``forall X. X(t) -> X(u)``."""
    X = PredVar(var, 1)
    return ForallPred(var, 1, Implies(Atom(X, (t,)), Atom(X, (u,))))


def concept_of(t: Term) -> PredAbstraction:
    """``E_t``: the property of being equal to ``t``."""
    y = fresh_name("y", term_vars(t))
    return PredAbstraction((y,), leibniz_eq(t, Var(y)))


# ----------------------------------------------------- individual concepts


def is_concept(abs_: PredAbstraction, strict: bool = True) -> Formula:
    """``C(abs_)``: at most one instance, and (strict only) at least one."""
    if abs_.arity != 1:
        raise ArityMismatch("individual concepts are unary")
    avoid = abs_.free_ind_vars()
    x = fresh_name("x", avoid)
    y = fresh_name("y", avoid | {x})
    eqvar = fresh_name("Z", {n for n, _ in abs_.free_pred_vars()})
    unique = ForallInd(
        x,
        ForallInd(
            y,
            Implies(And(abs_.apply(Var(x)), abs_.apply(Var(y))), leibniz_eq(Var(x), Var(y), eqvar)),
        ),
    )
    if not strict:
        return unique
    z = fresh_name("z", avoid)
    return And(unique, ExistsInd(z, abs_.apply(Var(z))))


def is_concept_var(name: str, strict: bool = True) -> Formula:
    return is_concept(identity_abstraction(name, 1, base="v"), strict)


def lower(phi: SecondOrderAbstraction, strict: bool = True) -> PredAbstraction:
    """``phi↓(x) := exists X. C(X) & X(x) & phi(X)``."""
    X = _concept_var(phi)
    fv = free_ind_vars(phi.body)
    x = fresh_name("x", fv)
    XV = PredVar(X, 1)
    body = ExistsPred(
        X,
        1,
        conj(is_concept_var(X, strict), Atom(XV, (Var(x),)), phi.apply(identity_abstraction(X, 1))),
    )
    return PredAbstraction((x,), body)


def lift(psi: PredAbstraction, param: str = "X") -> SecondOrderAbstraction:
    """``psi↑(X) := exists x. X(x) & psi(x)``."""
    if psi.arity != 1:
        raise ArityMismatch("lift expects a unary abstraction")
    x = fresh_name("x", psi.free_ind_vars())
    if (param, 1) in psi.free_pred_vars():
        param = fresh_name(param, {n for n, _ in psi.free_pred_vars()})
    return SecondOrderAbstraction(param, ExistsInd(x, And(Atom(PredVar(param, 1), (Var(x),)), psi.apply(Var(x)))))


def forall_concepts(phi: SecondOrderAbstraction, strict: bool = True) -> Formula:
    """``forall X. C(X) -> phi(X)``."""
    X = _concept_var(phi)
    return ForallPred(X, 1, Implies(is_concept_var(X, strict), phi.apply(identity_abstraction(X, 1))))


def exists_concepts(phi: SecondOrderAbstraction, strict: bool = True) -> Formula:
    """``exists X. C(X) & phi(X)``."""
    X = _concept_var(phi)
    return ExistsPred(X, 1, And(is_concept_var(X, strict), phi.apply(identity_abstraction(X, 1))))


def _concept_var(phi: SecondOrderAbstraction) -> str:
    others = {n for n, _ in free_pred_vars(phi.body)} - {phi.param}
    return fresh_name("X", others)


def forall_lower(phi: SecondOrderAbstraction, strict: bool = True) -> Formula:
    """``forall x. phi↓(x)``."""
    d = lower(phi, strict)
    return ForallInd(d.params[0], d.body)


def exists_lower(phi: SecondOrderAbstraction, strict: bool = True) -> Formula:
    d = lower(phi, strict)
    return ExistsInd(d.params[0], d.body)


# ----------------------------------------------------------- finiteness


def dedekind_finiteness(total: bool = False) -> Formula:
    """Every injective functional binary relation is onto.

    As written the hypothesis does not ask ``X`` to be total, so the empty
    relation already falsifies the formula on every domain.  ``total=True``
    adds ``forall x. exists y. X(x,y)`` to the hypothesis, which yields the
    reading that holds on all finite domains.
    """
    X = PredVar("X", 2)
    x, y, z, w, u = (Var(n) for n in "xyzwu")

    def eq(a, b):
        return leibniz_eq(a, b, "Y")

    functional = ForallInd(
        "x", ForallInd("y", ForallInd("z", Implies(And(Atom(X, (x, y)), Atom(X, (x, z))), eq(y, z))))
    )
    injective = ForallInd(
        "x", ForallInd("y", ForallInd("z", Implies(And(Atom(X, (y, x)), Atom(X, (z, x))), eq(y, z))))
    )
    onto = ForallInd("w", ExistsInd("u", Atom(X, (u, w))))
    hyp = And(functional, injective)
    if total:
        hyp = And(hyp, ForallInd("x", ExistsInd("y", Atom(X, (x, y)))))
    return ForallPred("X", 2, Implies(hyp, onto))


# --------------------------------------------------------------- Henkin

_X, _XP, _Y, _YP = "x", "x'", "y", "y'"


def _check_binary(*refs: PredRef) -> None:
    for r in refs:
        if r.arity != 2:
            raise ArityMismatch(f"{r.name} must be binary")


def build_Phi(F: PredRef, G: PredRef, sig: HenkinSignature = HenkinSignature()) -> Formula:
    """``T(x) & B(y) & F(x,x') & G(y,y') -> K(x',y')``."""
    _check_binary(F, G)
    x, xp, y, yp = (Var(n) for n in (_X, _XP, _Y, _YP))
    return Implies(
        conj(Atom(sig.T, (x,)), Atom(sig.B, (y,)), Atom(F, (x, xp)), Atom(G, (y, yp))),
        Atom(sig.K, (xp, yp)),
    )


def henkin_conjuncts(F: PredRef, G: PredRef, sig: HenkinSignature = HenkinSignature()) -> tuple[Formula, Formula, Formula]:
    """The three conjuncts of ``Psi(F, G)``."""
    _check_binary(F, G)
    x, xp, y, yp = (Var(n) for n in (_X, _XP, _Y, _YP))
    left = ForallInd(_X, ExistsInd(_XP, Implies(Atom(sig.T, (x,)), Atom(F, (x, xp)))))
    right = ForallInd(_Y, ExistsInd(_YP, Implies(Atom(sig.B, (y,)), Atom(G, (y, yp)))))
    closure = ForallInd(_X, ForallInd(_XP, ForallInd(_Y, ForallInd(_YP, build_Phi(F, G, sig)))))
    return left, right, closure


def build_Psi(F: PredRef, G: PredRef, sig: HenkinSignature = HenkinSignature()) -> Formula:
    left, right, closure = henkin_conjuncts(F, G, sig)
    return conj(left, right, closure)


def selector_names(sig: HenkinSignature) -> tuple[str, str]:
    F = fresh_name("F", sig.names())
    G = fresh_name("G", sig.names() | {F})
    return F, G


def expand_henkin(sig: HenkinSignature = HenkinSignature(), variant: str = "plain") -> Formula:
    """The branching reading as ``exists F. exists G. Psi(F, G)``.

    ``variant="sorted"`` additionally requires the selected representatives
    to lie in ``T`` (resp. ``B``).
    """
    F, G = selector_names(sig)
    FV, GV = PredVar(F, 2), PredVar(G, 2)
    if variant == "plain":
        body = build_Psi(FV, GV, sig)
    elif variant == "sorted":
        body = _sorted_psi(FV, GV, sig)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return ExistsPred(F, 2, ExistsPred(G, 2, body))


def _sorted_psi(F: PredRef, G: PredRef, sig: HenkinSignature) -> Formula:
    x, xp, y, yp = (Var(n) for n in (_X, _XP, _Y, _YP))
    T, B, K = sig.T, sig.B, sig.K
    left = ForallInd(_X, ExistsInd(_XP, Implies(Atom(T, (x,)), And(Atom(F, (x, xp)), Atom(T, (xp,))))))
    right = ForallInd(_Y, ExistsInd(_YP, Implies(Atom(B, (y,)), And(Atom(G, (y, yp)), Atom(B, (yp,))))))
    matrix = Implies(
        conj(
            Atom(T, (x,)), Atom(T, (xp,)), Atom(B, (y,)), Atom(B, (yp,)), Atom(F, (x, xp)), Atom(G, (y, yp))
        ),
        Atom(K, (xp, yp)),
    )
    closure = ForallInd(_X, ForallInd(_XP, ForallInd(_Y, ForallInd(_YP, matrix))))
    return conj(left, right, closure)


def linear_readings(sig: HenkinSignature = HenkinSignature()) -> tuple[Formula, Formula]:
    """The two linear prefix orders over ``T(x) & B(y) -> K(x',y')``."""
    x, xp, y, yp = (Var(n) for n in (_X, _XP, _Y, _YP))
    matrix = Implies(And(Atom(sig.T, (x,)), Atom(sig.B, (y,))), Atom(sig.K, (xp, yp)))
    first = ForallInd(_X, ExistsInd(_XP, ForallInd(_Y, ExistsInd(_YP, matrix))))
    second = ForallInd(_Y, ExistsInd(_YP, ForallInd(_X, ExistsInd(_XP, matrix))))
    return first, second
