"""Terms, formulas and predicate abstractions of the second-order language.

The language has individual variables and constants (no function symbols),
predicate constants and predicate variables of fixed arity, the usual
connectives and both individual and predicate quantifiers.  All values are
immutable; identity of formulas is alpha-equivalence (see :func:`alpha_eq`).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_'′]*$")


class SyntaxKindError(ValueError):
    """A value violates a structural invariant of the syntax."""


class ArityMismatch(SyntaxKindError):
    pass


class FreshnessError(RuntimeError):
    pass


def _check_name(name: str) -> None:
    if not isinstance(name, str) or not _IDENT.match(name):
        raise SyntaxKindError(f"not an identifier: {name!r}")


# --------------------------------------------------------------------- terms


@dataclass(frozen=True, slots=True)
class Var:
    name: str

    def __post_init__(self):
        _check_name(self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True, slots=True)
class Const:
    name: str

    def __post_init__(self):
        _check_name(self.name)

    def __str__(self):
        return self.name


Term = Union[Var, Const]


@dataclass(frozen=True, slots=True)
class PredConst:
    name: str
    arity: int

    def __post_init__(self):
        _check_name(self.name)
        if self.arity < 0:
            raise SyntaxKindError("negative arity")


@dataclass(frozen=True, slots=True)
class PredVar:
    name: str
    arity: int

    def __post_init__(self):
        _check_name(self.name)
        if self.arity < 0:
            raise SyntaxKindError("negative arity")


PredRef = Union[PredConst, PredVar]


# ------------------------------------------------------------------ formulas


class Formula:
    """Base class of formula nodes."""

    __slots__ = ()

    def __str__(self):
        from .parser import pretty

        return pretty(self)


@dataclass(frozen=True, slots=True, repr=False)
class Atom(Formula):
    pred: PredRef
    args: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) != self.pred.arity:
            raise ArityMismatch(
                f"{self.pred.name}/{self.pred.arity} applied to {len(self.args)} arguments"
            )
        for t in self.args:
            if not isinstance(t, (Var, Const)):
                raise SyntaxKindError(f"not a term: {t!r}")

    def __repr__(self):
        return f"Atom({self.pred!r}, {list(self.args)!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Bot(Formula):
    def __repr__(self):
        return "Bot()"


@dataclass(frozen=True, slots=True, repr=False)
class Not(Formula):
    body: Formula

    def __repr__(self):
        return f"Not({self.body!r})"


@dataclass(frozen=True, slots=True, repr=False)
class And(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"And({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Or(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"Or({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class Implies(Formula):
    left: Formula
    right: Formula

    def __repr__(self):
        return f"Implies({self.left!r}, {self.right!r})"


@dataclass(frozen=True, slots=True, repr=False)
class ForallInd(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        _check_name(self.var)

    def __repr__(self):
        return f"ForallInd({self.var!r}, {self.body!r})"


@dataclass(frozen=True, slots=True, repr=False)
class ExistsInd(Formula):
    var: str
    body: Formula

    def __post_init__(self):
        _check_name(self.var)

    def __repr__(self):
        return f"ExistsInd({self.var!r}, {self.body!r})"


@dataclass(frozen=True, slots=True, repr=False)
class ForallPred(Formula):
    var: str
    arity: int
    body: Formula

    def __post_init__(self):
        _check_name(self.var)
        if self.arity < 0:
            raise SyntaxKindError("negative arity")

    def __repr__(self):
        return f"ForallPred({self.var!r}, {self.arity}, {self.body!r})"


@dataclass(frozen=True, slots=True, repr=False)
class ExistsPred(Formula):
    var: str
    arity: int
    body: Formula

    def __post_init__(self):
        _check_name(self.var)
        if self.arity < 0:
            raise SyntaxKindError("negative arity")

    def __repr__(self):
        return f"ExistsPred({self.var!r}, {self.arity}, {self.body!r})"


BOT = Bot()
IndQuant = (ForallInd, ExistsInd)
PredQuant = (ForallPred, ExistsPred)
Binary = (And, Or, Implies)


def Iff(a: Formula, b: Formula) -> Formula:
    """``a <-> b``, which is shorthand for a conjunction of two implications."""
    return And(Implies(a, b), Implies(b, a))


def conj(*fs: Formula) -> Formula:
    """Left-nested conjunction of one or more formulas."""
    if not fs:
        raise ValueError("empty conjunction")
    out = fs[0]
    for f in fs[1:]:
        out = And(out, f)
    return out


def forall_all(names: Iterable[str], body: Formula) -> Formula:
    for v in reversed(list(names)):
        body = ForallInd(v, body)
    return body


def atom(name: str, *args: Term, var: bool = False) -> Atom:
    """Build an atom; ``var=True`` makes the predicate a predicate variable."""
    ref = PredVar(name, len(args)) if var else PredConst(name, len(args))
    return Atom(ref, args)


# -------------------------------------------------------------- abstractions


@dataclass(frozen=True, slots=True)
class PredAbstraction:
    """``λ(x1..xn). body``: the payload of second-order instantiation."""

    params: tuple
    body: Formula

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(self.params))
        for p in self.params:
            _check_name(p)
        if len(set(self.params)) != len(self.params):
            raise SyntaxKindError(f"repeated parameter in {self.params}")

    @property
    def arity(self) -> int:
        return len(self.params)

    def apply(self, *args: Term) -> Formula:
        if len(args) != self.arity:
            raise ArityMismatch(f"abstraction of arity {self.arity} given {len(args)} arguments")
        return _subst(self.body, dict(zip(self.params, args)), {})

    def free_ind_vars(self) -> set[str]:
        return free_ind_vars(self.body) - set(self.params)

    def free_pred_vars(self) -> set[tuple[str, int]]:
        return free_pred_vars(self.body)


@dataclass(frozen=True, slots=True)
class SecondOrderAbstraction:
    """A property of unary predicates: ``body`` with ``param`` a free unary predicate variable."""

    param: str
    body: Formula

    def __post_init__(self):
        _check_name(self.param)
        for name, ar in _pred_var_occurrence_names(self.body):
            if name == self.param and ar != 1:
                raise ArityMismatch(f"{self.param} used with arity {ar}")

    def apply(self, abs_: PredAbstraction) -> Formula:
        return subst_pred(self.body, self.param, 1, abs_)

    def apply_var(self, name: str) -> Formula:
        return self.apply(identity_abstraction(name, 1))


def identity_abstraction(name: str, arity: int, base: str = "u") -> PredAbstraction:
    params = tuple(f"{base}{i}" for i in range(1, arity + 1))
    return PredAbstraction(params, Atom(PredVar(name, arity), tuple(Var(p) for p in params)))


def _pred_var_occurrence_names(f: Formula):
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            if isinstance(g.pred, PredVar):
                yield g.pred.name, g.pred.arity
        elif isinstance(g, Not):
            stack.append(g.body)
        elif isinstance(g, Binary):
            stack.append(g.left)
            stack.append(g.right)
        elif isinstance(g, (IndQuant + PredQuant)):
            stack.append(g.body)


# ------------------------------------------------------------ free variables


def term_vars(t: Term) -> set[str]:
    return {t.name} if isinstance(t, Var) else set()


def free_ind_vars(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {t.name for t in f.args if isinstance(t, Var)}
    if isinstance(f, Bot):
        return set()
    if isinstance(f, Not):
        return free_ind_vars(f.body)
    if isinstance(f, Binary):
        return free_ind_vars(f.left) | free_ind_vars(f.right)
    if isinstance(f, IndQuant):
        return free_ind_vars(f.body) - {f.var}
    if isinstance(f, PredQuant):
        return free_ind_vars(f.body)
    raise TypeError(f"not a formula: {f!r}")


def free_pred_vars(f: Formula) -> set[tuple[str, int]]:
    if isinstance(f, Atom):
        return {(f.pred.name, f.pred.arity)} if isinstance(f.pred, PredVar) else set()
    if isinstance(f, Bot):
        return set()
    if isinstance(f, Not):
        return free_pred_vars(f.body)
    if isinstance(f, Binary):
        return free_pred_vars(f.left) | free_pred_vars(f.right)
    if isinstance(f, IndQuant):
        return free_pred_vars(f.body)
    if isinstance(f, PredQuant):
        return free_pred_vars(f.body) - {(f.var, f.arity)}
    raise TypeError(f"not a formula: {f!r}")


def constants(f: Formula) -> set[str]:
    if isinstance(f, Atom):
        return {t.name for t in f.args if isinstance(t, Const)}
    if isinstance(f, Bot):
        return set()
    if isinstance(f, Not):
        return constants(f.body)
    if isinstance(f, Binary):
        return constants(f.left) | constants(f.right)
    return constants(f.body)


def pred_consts(f: Formula) -> set[tuple[str, int]]:
    if isinstance(f, Atom):
        return {(f.pred.name, f.pred.arity)} if isinstance(f.pred, PredConst) else set()
    if isinstance(f, Bot):
        return set()
    if isinstance(f, Not):
        return pred_consts(f.body)
    if isinstance(f, Binary):
        return pred_consts(f.left) | pred_consts(f.right)
    return pred_consts(f.body)


def all_names(f: Formula) -> set[str]:
    """Every identifier in ``f``, bound or free, of any kind."""
    out: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Atom):
            out.add(g.pred.name)
            out.update(t.name for t in g.args)
        elif isinstance(g, Not):
            stack.append(g.body)
        elif isinstance(g, Binary):
            stack.extend((g.left, g.right))
        elif isinstance(g, (IndQuant + PredQuant)):
            out.add(g.var)
            stack.append(g.body)
    return out


def is_closed(f: Formula) -> bool:
    return not free_ind_vars(f) and not free_pred_vars(f)


# ------------------------------------------------------------- fresh names

_SUFFIX = re.compile(r"\d+$")


def fresh_name(base: str, avoid: Iterable[str]) -> str:
    """``base`` itself if unused, else ``base`` with the first free numeric suffix."""
    avoid = set(avoid)
    if base not in avoid:
        return base
    stem = _SUFFIX.sub("", base) or base
    i = 1
    while f"{stem}{i}" in avoid:
        i += 1
    return f"{stem}{i}"


# ------------------------------------------------------------- substitution


def _subst_term_in_term(t: Term, ind: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return ind.get(t.name, t)
    return t


def _subst(f: Formula, ind: Mapping[str, Term], pred: Mapping[tuple[str, int], PredAbstraction]) -> Formula:
    """Simultaneous capture-avoiding substitution of individual and predicate variables."""
    if not ind and not pred:
        return f
    if isinstance(f, Atom):
        args = tuple(_subst_term_in_term(t, ind) for t in f.args)
        if isinstance(f.pred, PredVar):
            a = pred.get((f.pred.name, f.pred.arity))
            if a is not None:
                return _subst(a.body, dict(zip(a.params, args)), {})
        if args == f.args:
            return f
        return Atom(f.pred, args)
    if isinstance(f, Bot):
        return f
    if isinstance(f, Not):
        return Not(_subst(f.body, ind, pred))
    if isinstance(f, Binary):
        return type(f)(_subst(f.left, ind, pred), _subst(f.right, ind, pred))

    fv_ind = free_ind_vars(f.body)
    fv_pred = free_pred_vars(f.body)
    if isinstance(f, IndQuant):
        ind2 = {k: v for k, v in ind.items() if k != f.var and k in fv_ind}
        pred2 = {k: v for k, v in pred.items() if k in fv_pred}
        danger = _danger_ind(ind2, pred2)
        var = f.var
        if var in danger:
            var = fresh_name(var, danger | fv_ind | set(ind2))
            ind2[f.var] = Var(var)
        return type(f)(var, _subst(f.body, ind2, pred2))

    key = (f.var, f.arity)
    ind2 = {k: v for k, v in ind.items() if k in fv_ind}
    pred2 = {k: v for k, v in pred.items() if k != key and k in fv_pred}
    danger = set()
    for a in pred2.values():
        danger.update(n for n, ar in free_pred_vars(a.body) if ar == f.arity)
    var = f.var
    if var in danger:
        avoid = danger | {n for n, _ in fv_pred} | {n for n, _ in pred2}
        var = fresh_name(var, avoid)
        pred2[key] = identity_abstraction(var, f.arity)
    return type(f)(var, f.arity, _subst(f.body, ind2, pred2))


def _danger_ind(ind: Mapping[str, Term], pred: Mapping[tuple[str, int], PredAbstraction]) -> set[str]:
    out: set[str] = set()
    for t in ind.values():
        out |= term_vars(t)
    for a in pred.values():
        out |= a.free_ind_vars()
    return out


def subst_term(f: Formula, x: str, t: Term) -> Formula:
    """Replace the free occurrences of individual variable ``x`` by ``t``."""
    return _subst(f, {x: t}, {})


def subst_terms(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    return _subst(f, dict(mapping), {})


def subst_preds(f: Formula, mapping: Mapping[tuple[str, int], PredAbstraction]) -> Formula:
    """Simultaneous version of :func:`subst_pred`, keyed by ``(name, arity)``."""
    for (name, n), a in mapping.items():
        if a.arity != n:
            raise ArityMismatch(f"abstraction of arity {a.arity} for {name}/{n}")
    return _subst(f, {}, dict(mapping))


def subst_pred(f: Formula, X: str, n: int, abs_: PredAbstraction) -> Formula:
    """Replace every free ``X/n`` atom by ``abs_`` applied to that atom's arguments."""
    if abs_.arity != n:
        raise ArityMismatch(f"abstraction of arity {abs_.arity} for {X}/{n}")
    return _subst(f, {}, {(X, n): abs_})


# ------------------------------------------------------------ alpha-equality


def alpha_eq(f: Formula, g: Formula) -> bool:
    """True iff ``f`` and ``g`` differ only in the names of bound variables."""
    return _alpha(f, g, {}, {}, {}, {}, 0)


def _alpha(f, g, li, ri, lp, rp, depth) -> bool:
    if type(f) is not type(g):
        return False
    if isinstance(f, Atom):
        if len(f.args) != len(g.args) or type(f.pred) is not type(g.pred):
            return False
        if f.pred.arity != g.pred.arity:
            return False
        if isinstance(f.pred, PredVar):
            k = (f.pred.name, f.pred.arity)
            a, b = lp.get(k), rp.get((g.pred.name, g.pred.arity))
            if a != b or (a is None and f.pred.name != g.pred.name):
                return False
        elif f.pred.name != g.pred.name:
            return False
        for s, t in zip(f.args, g.args):
            if type(s) is not type(t):
                return False
            if isinstance(s, Var):
                a, b = li.get(s.name), ri.get(t.name)
                if a != b or (a is None and s.name != t.name):
                    return False
            elif s.name != t.name:
                return False
        return True
    if isinstance(f, Bot):
        return True
    if isinstance(f, Not):
        return _alpha(f.body, g.body, li, ri, lp, rp, depth)
    if isinstance(f, Binary):
        return _alpha(f.left, g.left, li, ri, lp, rp, depth) and _alpha(
            f.right, g.right, li, ri, lp, rp, depth
        )
    if isinstance(f, IndQuant):
        return _alpha(f.body, g.body, {**li, f.var: depth}, {**ri, g.var: depth}, lp, rp, depth + 1)
    if f.arity != g.arity:
        return False
    return _alpha(
        f.body,
        g.body,
        li,
        ri,
        {**lp, (f.var, f.arity): depth},
        {**rp, (g.var, g.arity): depth},
        depth + 1,
    )


def abstraction_alpha_eq(a: PredAbstraction, b: PredAbstraction) -> bool:
    if a.arity != b.arity:
        return False
    return alpha_eq(_close(a), _close(b))


def _close(a: PredAbstraction) -> Formula:
    out = a.body
    for p in reversed(a.params):
        out = ForallInd(p, out)
    return out


def size(f: Formula) -> int:
    if isinstance(f, (Atom, Bot)):
        return 1
    if isinstance(f, Not):
        return 1 + size(f.body)
    if isinstance(f, Binary):
        return 1 + size(f.left) + size(f.right)
    return 1 + size(f.body)
