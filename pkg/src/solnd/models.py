"""Finite standard models, formula evaluation and model enumeration.

Predicate variables range over the full powerset of ``D^n``.  Extensions
are handled internally as bitmasks: bit ``i`` of an ``n``-ary extension
is the ``i``-th tuple of ``D^n`` in lexicographic order.

Evaluation compiles a formula once per domain size into closures that
compute, for every assignment of the individual variables in scope at
once, a bitmask of satisfying assignments.  Second-order quantifiers
enumerate candidate extensions; when the quantified variable occurs only
positively in some conjuncts and only negatively in the others, the
enumeration skips supersets that can no longer help (see
``_Compiler.second_order``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping

from .parser import Signature, SourceSpan, SyntaxError
from .syntax import (
    And,
    Atom,
    Bot,
    Const,
    ExistsInd,
    ExistsPred,
    ForallInd,
    ForallPred,
    Formula,
    Implies,
    Not,
    Or,
    PredConst,
    PredVar,
    Var,
    conj,
    constants,
    free_ind_vars,
    free_pred_vars,
    pred_consts,
)

DEFAULT_BUDGET = 10**8


class EvalError(Exception):
    pass


class UnboundSymbol(EvalError):
    pass


class ResourceLimit(EvalError):
    pass


class SignatureError(EvalError):
    pass


# ------------------------------------------------------------------ models


def tuple_index(t: tuple, n: int) -> int:
    """Lexicographic rank of ``t`` in ``D^len(t)`` for ``D = range(n)``."""
    i = 0
    for v in t:
        i = i * n + v
    return i


def index_tuple(i: int, n: int, arity: int) -> tuple:
    out = []
    for _ in range(arity):
        i, r = divmod(i, n)
        out.append(r)
    return tuple(reversed(out))


def to_mask(ext: Iterable[tuple], n: int) -> int:
    m = 0
    for t in ext:
        m |= 1 << tuple_index(tuple(t), n)
    return m


def from_mask(mask: int, n: int, arity: int) -> frozenset:
    return frozenset(index_tuple(i, n, arity) for i in range(n**arity) if (mask >> i) & 1)


@dataclass(frozen=True)
class Model:
    """A finite structure over the domain ``0 .. size-1``."""

    size: int
    consts: Mapping[str, int] = field(default_factory=dict)
    preds: Mapping[tuple[str, int], frozenset] = field(default_factory=dict)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("domains are nonempty")
        object.__setattr__(self, "consts", dict(self.consts))
        preds = {}
        for (name, arity), ext in self.preds.items():
            ext = frozenset(tuple(t) for t in ext)
            for t in ext:
                if len(t) != arity or any(not (0 <= v < self.size) for v in t):
                    raise ValueError(f"tuple {t} does not fit {name}/{arity} over size {self.size}")
            preds[(name, arity)] = ext
        object.__setattr__(self, "preds", preds)
        for c, v in self.consts.items():
            if not (0 <= v < self.size):
                raise ValueError(f"constant {c} = {v} outside the domain")

    @property
    def domain(self) -> list[int]:
        return list(range(self.size))

    def mask(self, name: str, arity: int) -> int:
        return to_mask(self.preds[(name, arity)], self.size)

    @classmethod
    def from_masks(cls, size: int, consts: Mapping[str, int], masks: Mapping[tuple[str, int], int]) -> "Model":
        return cls(size, consts, {k: from_mask(m, size, k[1]) for k, m in masks.items()})


@dataclass(frozen=True)
class Assignment:
    ind: Mapping[str, int] = field(default_factory=dict)
    pred: Mapping[tuple[str, int], frozenset] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "ind", dict(self.ind))
        object.__setattr__(self, "pred", {k: frozenset(tuple(t) for t in v) for k, v in self.pred.items()})


# -------------------------------------------------------------- compilation


class _Budget:
    __slots__ = ("limit", "steps")

    def __init__(self, limit: int):
        self.limit = limit
        self.steps = 0

    def charge(self, k: int = 1) -> None:
        self.steps += k
        if self.steps > self.limit:
            raise ResourceLimit(f"evaluation budget of {self.limit} steps exceeded")


def _ckey(name: str, arity: int):
    return ("c", name, arity)


def _vkey(name: str, arity: int):
    return ("v", name, arity)


def _polarity(f: Formula, key, sign: int, out: set) -> None:
    """Collect the signs of the free occurrences of predicate variable ``key``."""
    if isinstance(f, Atom):
        if isinstance(f.pred, PredVar) and _vkey(f.pred.name, f.pred.arity) == key:
            out.add(sign)
    elif isinstance(f, Not):
        _polarity(f.body, key, -sign, out)
    elif isinstance(f, Implies):
        _polarity(f.left, key, -sign, out)
        _polarity(f.right, key, sign, out)
    elif isinstance(f, (And, Or)):
        _polarity(f.left, key, sign, out)
        _polarity(f.right, key, sign, out)
    elif isinstance(f, (ForallInd, ExistsInd)):
        _polarity(f.body, key, sign, out)
    elif isinstance(f, (ForallPred, ExistsPred)):
        if _vkey(f.var, f.arity) != key:
            _polarity(f.body, key, sign, out)


def _mentions(f: Formula, key) -> bool:
    s: set = set()
    _polarity(f, key, 1, s)
    return bool(s)


def _items(f: Formula, sign: int) -> list[Formula]:
    """Split ``f`` (or its negation) into conjuncts, miniscoping second-order existentials."""
    if isinstance(f, Not):
        return _items(f.body, -sign)
    if sign > 0 and isinstance(f, And):
        return _items(f.left, 1) + _items(f.right, 1)
    if sign < 0 and isinstance(f, Or):
        return _items(f.left, -1) + _items(f.right, -1)
    if sign < 0 and isinstance(f, Implies):
        return _items(f.left, 1) + _items(f.right, -1)
    if (sign > 0 and isinstance(f, ExistsPred)) or (sign < 0 and isinstance(f, ForallPred)):
        key = _vkey(f.var, f.arity)
        inner = _items(f.body, 1 if sign > 0 else -1)
        out = [g for g in inner if not _mentions(g, key)]
        keep = [g for g in inner if _mentions(g, key)]
        if keep:
            out.append(ExistsPred(f.var, f.arity, conj(*keep)))
        return out
    return [f] if sign > 0 else [Not(f)]


class _Compiler:
    def __init__(self, n: int, fixed: Mapping[str, int], budget: _Budget):
        self.n = n
        self.fixed = fixed
        self.budget = budget

    def full(self, k: int) -> int:
        return (1 << (self.n**k)) - 1

    def compile(self, f: Formula, scope: tuple) -> Callable[[dict], int]:
        n = self.n
        k = len(scope)
        full = self.full(k)
        if isinstance(f, Atom):
            return self.atom(f, scope)
        if isinstance(f, Bot):
            return lambda env: 0
        if isinstance(f, Not):
            b = self.compile(f.body, scope)
            return lambda env: full ^ b(env)
        if isinstance(f, And):
            l, r = self.compile(f.left, scope), self.compile(f.right, scope)

            def and_(env):
                m = l(env)
                return m & r(env) if m else 0

            return and_
        if isinstance(f, Or):
            l, r = self.compile(f.left, scope), self.compile(f.right, scope)

            def or_(env):
                m = l(env)
                return m | r(env) if m != full else m

            return or_
        if isinstance(f, Implies):
            l, r = self.compile(f.left, scope), self.compile(f.right, scope)

            def imp(env):
                m = full ^ l(env)
                return m | r(env) if m != full else m

            return imp
        if isinstance(f, (ForallInd, ExistsInd)):
            body = self.compile(f.body, scope + (f.var,))
            block = n**k
            shifts = [j * block for j in range(n)]
            if isinstance(f, ExistsInd):

                def ex(env):
                    m = body(env)
                    r = 0
                    for s in shifts:
                        r |= m >> s
                    return r & full

                return ex

            def fa(env):
                m = body(env)
                r = full
                for s in shifts:
                    r &= m >> s
                    if not r:
                        return 0
                return r

            return fa
        if isinstance(f, ExistsPred):
            return self.second_order(f.var, f.arity, f.body, scope)
        if isinstance(f, ForallPred):
            inner = self.second_order(f.var, f.arity, Not(f.body), scope)
            return lambda env: full ^ inner(env)
        raise TypeError(f"not a formula: {f!r}")

    def atom(self, f: Atom, scope: tuple) -> Callable[[dict], int]:
        n, k = self.n, len(scope)
        ref = f.pred
        key = _vkey(ref.name, ref.arity) if isinstance(ref, PredVar) else _ckey(ref.name, ref.arity)
        full = self.full(k)
        if ref.arity == 0:
            return lambda env: full if env[key] & 1 else 0
        places = []
        for t in f.args:
            if isinstance(t, Var) and t.name in scope:
                places.append(("slot", len(scope) - 1 - scope[::-1].index(t.name)))
            elif t.name in self.fixed:
                places.append(("fix", self.fixed[t.name]))
            else:
                kind = "constant" if isinstance(t, Const) else "variable"
                raise UnboundSymbol(f"{kind} {t.name} is not interpreted")
        cyl = [0] * (n**ref.arity)
        for idx in range(n**k):
            j = 0
            for kind, v in places:
                j = j * n + ((idx // n**v) % n if kind == "slot" else v)
            cyl[j] |= 1 << idx
        cache: dict[int, int] = {}

        def at(env):
            m = env[key]
            r = cache.get(m)
            if r is None:
                r = 0
                i = 0
                mm = m
                while mm:
                    if mm & 1:
                        r |= cyl[i]
                    mm >>= 1
                    i += 1
                cache[m] = r
            return r

        return at

    def conj_of(self, fs: list[Formula], scope: tuple) -> Callable[[dict], int]:
        full = self.full(len(scope))
        cs = [self.compile(g, scope) for g in fs]
        if not cs:
            return lambda env: full
        if len(cs) == 1:
            return cs[0]

        def all_(env):
            m = full
            for c in cs:
                m &= c(env)
                if not m:
                    return 0
            return m

        return all_

    def definition(self, items: list[Formula], key, arity: int):
        """Spot a conjunct ``forall v1..vm. (phi <-> X(vs))`` with X absent from phi.

        Such a conjunct pins X down to one extension, which is returned as
        a closure over the environment.  Only used at the top level.
        """
        for g in items:
            vs = []
            body = g
            while isinstance(body, ForallInd):
                vs.append(body.var)
                body = body.body
            if not (isinstance(body, And) and isinstance(body.left, Implies) and isinstance(body.right, Implies)):
                continue
            a, b = body.left.left, body.left.right
            if not (body.right.left == b and body.right.right == a):
                continue
            for atom_side, other in ((a, b), (b, a)):
                if not (
                    isinstance(atom_side, Atom)
                    and isinstance(atom_side.pred, PredVar)
                    and _vkey(atom_side.pred.name, atom_side.pred.arity) == key
                    and not _mentions(other, key)
                ):
                    continue
                names = [t.name if isinstance(t, Var) else None for t in atom_side.args]
                if None in names or len(set(names)) != arity or sorted(names) != sorted(vs):
                    continue
                n = self.n
                phi = self.compile(other, tuple(vs))
                where = [vs.index(v) for v in names]
                table = []
                for j in range(n**arity):
                    t = index_tuple(j, n, arity)
                    idx = 0
                    for pos, slot in enumerate(where):
                        idx += t[pos] * n**slot
                    table.append(idx)

                def definer(env, phi=phi, table=table):
                    m = phi(env)
                    ext = 0
                    for j, idx in enumerate(table):
                        if (m >> idx) & 1:
                            ext |= 1 << j
                    return ext

                return definer
        return None

    def second_order(self, var: str, arity: int, body: Formula, scope: tuple) -> Callable[[dict], int]:
        """``exists var/arity. body`` over every subset of ``D^arity``."""
        key = _vkey(var, arity)
        nbits = self.n**arity
        full = self.full(len(scope))
        budget = self.budget
        items = _items(body, 1)
        zero_items, pos_items, neg_items, mixed = [], [], [], []
        for g in items:
            s: set = set()
            _polarity(g, key, 1, s)
            if not s:
                zero_items.append(g)
            elif s == {1}:
                pos_items.append(g)
            elif s == {-1}:
                neg_items.append(g)
            else:
                mixed.append(g)
        Z = self.conj_of(zero_items, scope)
        top = (1 << nbits) - 1

        def bound(env, fn):
            had = key in env
            old = env.get(key)
            try:
                return fn()
            finally:
                if had:
                    env[key] = old
                else:
                    env.pop(key, None)

        if mixed and not scope:
            definer = self.definition(items, key, arity)
            if definer is not None:
                whole = self.conj_of(items, scope)

                def defined(env):
                    def go():
                        budget.charge()
                        env[key] = definer(env)
                        return whole(env)

                    return bound(env, go)

                return defined

        if mixed:
            whole = self.conj_of(items, scope)

            def brute(env):
                def go():
                    r = 0
                    for m in range(top + 1):
                        budget.charge()
                        env[key] = m
                        r |= whole(env)
                        if r == full:
                            break
                    return r

                return bound(env, go)

            return brute

        P = self.conj_of(pos_items, scope)
        N = self.conj_of(neg_items, scope)
        if not neg_items:
            # monotone: the full extension is the best candidate
            rest = self.conj_of(zero_items + pos_items, scope)

            def mono_up(env):
                budget.charge()
                env_val = top

                def go():
                    env[key] = env_val
                    return rest(env)

                return bound(env, go)

            return mono_up
        if not pos_items:
            rest = self.conj_of(zero_items + neg_items, scope)

            def mono_down(env):
                budget.charge()

                def go():
                    env[key] = 0
                    return rest(env)

                return bound(env, go)

            return mono_down

        def pruned(env):
            def go():
                env[key] = 0
                live = Z(env)
                if not live:
                    return 0
                res = 0

                # subsets in set-enumeration-tree order; the negative part is
                # antitone, so a tuple failing it at S fails at every superset
                def dfs(start, S, live):
                    nonlocal res
                    budget.charge()
                    env[key] = S
                    nm = N(env) & live
                    if not nm:
                        return
                    pm = P(env) & nm
                    if pm:
                        res |= pm
                        nm &= ~pm
                    for e in range(start, nbits):
                        nm &= ~res
                        if not nm:
                            return
                        dfs(e + 1, S | (1 << e), nm)

                dfs(0, 0, live)
                return res

            return bound(env, go)

        return pruned


@dataclass
class CompiledFormula:
    """A formula compiled for one domain size and one placement of constants.

    ``scope`` lists the free individual variables; calling the object with
    a predicate environment returns the mask of satisfying assignments to
    them (slot ``i`` has weight ``size**i``).
    """

    formula: Formula
    size: int
    fixed: Mapping[str, int]
    scope: tuple = ()
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        self._budget = _Budget(self.budget)
        self._fn = _Compiler(self.size, dict(self.fixed), self._budget).compile(self.formula, tuple(self.scope))
        self.full = (1 << (self.size ** len(self.scope))) - 1

    @property
    def steps(self) -> int:
        return self._budget.steps

    def __call__(self, env: dict) -> int:
        return self._fn(dict(env))


def _env_for(m: Model, a: Assignment, f: Formula) -> dict:
    env = {}
    for (name, arity) in pred_consts(f):
        if (name, arity) not in m.preds:
            raise UnboundSymbol(f"predicate {name}/{arity} is not interpreted")
        env[_ckey(name, arity)] = to_mask(m.preds[(name, arity)], m.size)
    for (name, arity) in free_pred_vars(f):
        if (name, arity) not in a.pred:
            raise UnboundSymbol(f"predicate variable {name}/{arity} is not assigned")
        ext = a.pred[(name, arity)]
        if any(len(t) != arity or not all(0 <= v < m.size for v in t) for t in ext):
            raise ValueError(f"assignment to {name}/{arity} leaves the domain")
        env[_vkey(name, arity)] = to_mask(ext, m.size)
    return env


def evaluate(f: Formula, m: Model, a: Assignment | None = None, budget: int = DEFAULT_BUDGET) -> bool:
    """Classical satisfaction of ``f`` in the standard model ``m`` under ``a``."""
    a = a or Assignment()
    fixed = dict(m.consts)
    for x in free_ind_vars(f):
        if x not in a.ind:
            raise UnboundSymbol(f"variable {x} is not assigned")
        if not (0 <= a.ind[x] < m.size):
            raise ValueError(f"variable {x} assigned outside the domain")
        fixed[x] = a.ind[x]
    for c in constants(f):
        if c not in m.consts:
            raise UnboundSymbol(f"constant {c} is not interpreted")
    env = _env_for(m, a, f)
    cf = CompiledFormula(f, m.size, fixed, (), budget)
    return bool(cf(env) & 1)


# ------------------------------------------------------------ naive oracle


def evaluate_naive(f: Formula, m: Model, a: Assignment | None = None) -> bool:
    """Direct Tarskian evaluation, one assignment at a time, no pruning.

    Kept as an independent reference for :func:`evaluate`.
    """
    a = a or Assignment()
    ind = dict(a.ind)
    pred = {k: frozenset(v) for k, v in a.pred.items()}
    return _naive(f, m, ind, pred)


def _naive(f, m: Model, ind: dict, pred: dict) -> bool:
    if isinstance(f, Atom):
        vals = []
        for t in f.args:
            if isinstance(t, Var) and t.name in ind:
                vals.append(ind[t.name])
            elif isinstance(t, Const) and t.name in m.consts:
                vals.append(m.consts[t.name])
            else:
                raise UnboundSymbol(t.name)
        key = (f.pred.name, f.pred.arity)
        ext = pred.get(key) if isinstance(f.pred, PredVar) else m.preds.get(key)
        if ext is None:
            raise UnboundSymbol(f.pred.name)
        return tuple(vals) in ext
    if isinstance(f, Bot):
        return False
    if isinstance(f, Not):
        return not _naive(f.body, m, ind, pred)
    if isinstance(f, And):
        return _naive(f.left, m, ind, pred) and _naive(f.right, m, ind, pred)
    if isinstance(f, Or):
        return _naive(f.left, m, ind, pred) or _naive(f.right, m, ind, pred)
    if isinstance(f, Implies):
        return (not _naive(f.left, m, ind, pred)) or _naive(f.right, m, ind, pred)
    if isinstance(f, (ForallInd, ExistsInd)):
        results = (_naive(f.body, m, {**ind, f.var: d}, pred) for d in range(m.size))
        return all(results) if isinstance(f, ForallInd) else any(results)
    if isinstance(f, (ForallPred, ExistsPred)):
        tuples = list(itertools.product(range(m.size), repeat=f.arity))
        key = (f.var, f.arity)

        def exts():
            for bits in range(1 << len(tuples)):
                yield frozenset(t for i, t in enumerate(tuples) if (bits >> i) & 1)

        results = (_naive(f.body, m, ind, {**pred, key: e}) for e in exts())
        return all(results) if isinstance(f, ForallPred) else any(results)
    raise TypeError(f)


# ------------------------------------------------------------ enumeration


@dataclass(frozen=True)
class Valid:
    models_checked: int = 0

    def __bool__(self):
        return True


@dataclass(frozen=True)
class Countermodel:
    model: Model
    assignment: Assignment

    def __bool__(self):
        return False


def signature_of(f: Formula) -> Signature:
    return Signature(tuple(sorted(constants(f))), dict(sorted(pred_consts(f))), dict(sorted(free_pred_vars(f))))


def _check_signature(f: Formula, sig: Signature) -> None:
    for c in constants(f):
        if c not in sig.constants:
            raise SignatureError(f"constant {c} not in the signature")
    for name, arity in pred_consts(f):
        if sig.preds.get(name) != arity:
            raise SignatureError(f"predicate {name}/{arity} not in the signature")


def enumerate_models(sig: Signature, size: int) -> Iterator[tuple[tuple, tuple]]:
    """Constant placements and predicate masks over ``sig`` at one size.

    Order: constants in declaration order (first is most significant),
    then predicates in declaration order, each extension counting up as a
    binary number over lexicographically ordered tuples.
    """
    preds = sig.pred_list()
    for placement in itertools.product(range(size), repeat=len(sig.constants)):
        for masks in itertools.product(*(range(1 << (size**a)) for _, a in preds)):
            yield placement, masks


def count_models(sig: Signature, size: int) -> int:
    total = size ** len(sig.constants)
    for _, a in sig.pred_list():
        total *= 1 << (size**a)
    return total


def check_validity(
    f: Formula,
    signature: Signature | None = None,
    max_size: int = 3,
    budget: int = DEFAULT_BUDGET,
    min_size: int = 1,
) -> Valid | Countermodel:
    """Search models of sizes ``min_size..max_size`` for a falsifying one.

    Every free variable of ``f`` is universally read: all assignments are
    tried.  The first countermodel in enumeration order is returned (sizes
    ascending, then :func:`enumerate_models` order, then predicate-variable
    assignments in the same counter order, then individual assignments).
    """
    sig = signature if signature is not None else signature_of(f)
    _check_signature(f, sig)
    preds = sig.pred_list()
    ivars = tuple(sorted(free_ind_vars(f)))
    pvars = sorted(free_pred_vars(f))
    b = _Budget(budget)
    checked = 0
    for size in range(min_size, max_size + 1):
        cf_cache: dict[tuple, Callable] = {}
        full = (1 << (size ** len(ivars))) - 1
        for placement, masks in enumerate_models(sig, size):
            fixed = dict(zip(sig.constants, placement))
            fn = cf_cache.get(placement)
            if fn is None:
                fn = _Compiler(size, fixed, b).compile(f, ivars)
                cf_cache[placement] = fn
            env = {_ckey(name, a): m for (name, a), m in zip(preds, masks)}
            for pmasks in itertools.product(*(range(1 << (size**a)) for _, a in pvars)):
                b.charge()
                checked += 1
                for (name, a), m in zip(pvars, pmasks):
                    env[_vkey(name, a)] = m
                r = fn(env)
                if r != full:
                    bad = (~r) & full
                    idx = (bad & -bad).bit_length() - 1
                    ind = {v: (idx // size**i) % size for i, v in enumerate(ivars)}
                    model = Model.from_masks(size, fixed, dict(zip(((n, a) for n, a in preds), masks)))
                    asg = Assignment(ind, {k: from_mask(m, size, k[1]) for k, m in zip(pvars, pmasks)})
                    return Countermodel(model, asg)
    return Valid(checked)


def random_model(sig: Signature, size: int, rng) -> Model:
    consts = {c: rng.randrange(size) for c in sig.constants}
    masks = {(name, a): rng.getrandbits(size**a) for name, a in sig.pred_list()}
    return Model.from_masks(size, consts, masks)


def random_assignment(f: Formula, size: int, rng) -> Assignment:
    ind = {x: rng.randrange(size) for x in free_ind_vars(f)}
    pred = {k: from_mask(rng.getrandbits(size ** k[1]), size, k[1]) for k in free_pred_vars(f)}
    return Assignment(ind, pred)


# ------------------------------------------------------------- text format

_LINE = re.compile(r"^\s*(domain|const|pred|var|predvar)\s+(.*)$")
_TUPLE = re.compile(r"\(([^()]*)\)|(\d+)")


def format_model(m: Model, a: Assignment | None = None) -> str:
    lines = [f"domain {m.size}"]
    for c, v in m.consts.items():
        lines.append(f"const {c} = {v}")
    for (name, arity), ext in m.preds.items():
        lines.append(f"pred {name}/{arity} = {_fmt_ext(ext)}")
    if a is not None:
        for x, v in sorted(a.ind.items()):
            lines.append(f"var {x} = {v}")
        for (name, arity), ext in sorted(a.pred.items()):
            lines.append(f"predvar {name}/{arity} = {_fmt_ext(ext)}")
    return "\n".join(lines) + "\n"


def _fmt_ext(ext) -> str:
    return "{" + ",".join("(" + ",".join(str(v) for v in t) + ")" for t in sorted(ext)) + "}"


def _parse_ext(text: str, arity: int, file: str, lineno: int) -> frozenset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise SyntaxError("extension must be written {...}", SourceSpan(file, lineno, 1))
    inner = text[1:-1].strip()
    out = set()
    if not inner:
        return frozenset()
    for m in _TUPLE.finditer(inner):
        if m.group(1) is not None:
            parts = [p.strip() for p in m.group(1).split(",") if p.strip()]
            out.add(tuple(int(p) for p in parts))
        else:
            out.add((int(m.group(2)),))
    for t in out:
        if len(t) != arity:
            raise SyntaxError(f"tuple {t} does not have arity {arity}", SourceSpan(file, lineno, 1))
    return frozenset(out)


def parse_model(text: str, file: str = "<model>") -> tuple[Model, Assignment]:
    """Read the line-oriented model format (see :func:`format_model`)."""
    size = None
    consts: dict[str, int] = {}
    preds: dict = {}
    ind: dict[str, int] = {}
    pvars: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _LINE.match(line)
        if not m:
            raise SyntaxError(f"cannot read model line {line!r}", SourceSpan(file, lineno, 1))
        kind, rest = m.group(1), m.group(2).strip()
        try:
            if kind == "domain":
                size = int(rest)
            elif kind in ("const", "var"):
                name, val = (s.strip() for s in rest.split("=", 1))
                (consts if kind == "const" else ind)[name] = int(val)
            else:
                head, ext = rest.split("=", 1)
                name, arity = head.strip().split("/")
                (preds if kind == "pred" else pvars)[(name, int(arity))] = _parse_ext(ext, int(arity), file, lineno)
        except ValueError as e:
            raise SyntaxError(f"malformed {kind} line: {e}", SourceSpan(file, lineno, 1)) from None
    if size is None:
        raise SyntaxError("missing 'domain' line", SourceSpan(file, 1, 1))
    try:
        return Model(size, consts, preds), Assignment(ind, pvars)
    except ValueError as e:
        raise SyntaxError(str(e), SourceSpan(file, 1, 1)) from None
