"""Generalized quantifiers and the direct semantics of the branching prefix."""

from __future__ import annotations

from enum import Enum

from . import kernels
from .constructions import HenkinSignature
from .models import EvalError, Model, UnboundSymbol, to_mask


class TypeMismatch(EvalError):
    pass


class NotFound(EvalError):
    pass


class GQ(str, Enum):
    EXISTS = "Exists"
    FORALL = "Forall"
    AT_LEAST_2 = "AtLeast2"
    MOST = "Most"
    FORALL_C = "ForallC"
    EXISTS_C = "ExistsC"


_TYPE = {
    GQ.EXISTS: 1,
    GQ.FORALL: 1,
    GQ.AT_LEAST_2: 1,
    GQ.MOST: 2,
    GQ.FORALL_C: 2,
    GQ.EXISTS_C: 2,
}


def eval_gq(q: GQ | str, sets, m: Model) -> bool:
    """Apply a type <1> or <1,1> quantifier to subsets of ``m``'s domain."""
    q = GQ(q)
    sets = [frozenset(s) for s in sets]
    if len(sets) != _TYPE[q]:
        raise TypeMismatch(f"{q.value} takes {_TYPE[q]} set argument(s), got {len(sets)}")
    dom = set(m.domain)
    for s in sets:
        if not s <= dom:
            raise TypeMismatch(f"{set(s - dom)} not in the domain")
    if q is GQ.EXISTS:
        return bool(sets[0])
    if q is GQ.FORALL:
        return sets[0] == dom
    if q is GQ.AT_LEAST_2:
        return len(sets[0]) >= 2
    a, b = sets
    if q is GQ.MOST:
        return len(a & b) > len(a - b)
    if q is GQ.FORALL_C:
        return a <= b
    return bool(a & b)


def _masks(m: Model, sig: HenkinSignature) -> tuple[int, int, int]:
    out = []
    for ref in (sig.T, sig.B, sig.K):
        key = (ref.name, ref.arity)
        if key not in m.preds:
            raise UnboundSymbol(f"predicate {ref.name}/{ref.arity} is not interpreted")
        out.append(to_mask(m.preds[key], m.size))
    return tuple(out)


def eval_henkin_direct(m: Model, sig: HenkinSignature = HenkinSignature(), mode: str = "functions") -> bool:
    """Truth of the branching prefix over ``T(x) & B(y) -> K(x',y')``.

    ``functions`` picks witnesses with total functions ``D -> D``;
    ``relations`` with binary relations left-total on ``T`` and ``B``.
    """
    T, B, K = _masks(m, sig)
    if mode == "functions":
        return kernels.henkin_functions(m.size, T, B, K)
    if mode == "relations":
        return kernels.henkin_relations(m.size, T, B, K)
    raise ValueError(f"unknown mode {mode!r}")


def eval_linear(m: Model, sig: HenkinSignature = HenkinSignature()) -> tuple[bool, bool]:
    """Truth of the two linear readings, in the order of ``linear_readings``."""
    T, B, K = _masks(m, sig)
    return kernels.linear_first(m.size, T, B, K), kernels.linear_second(m.size, T, B, K)


def model_from_masks(n: int, T: int, B: int, K: int, sig: HenkinSignature = HenkinSignature()) -> Model:
    return Model.from_masks(n, {}, {(sig.T.name, 1): T, (sig.B.name, 1): B, (sig.K.name, 2): K})


def find_branching_separator(max_size: int, sig: HenkinSignature = HenkinSignature()) -> Model:
    """First model (sizes ascending, then T, B, K as counters) where both
    linear readings hold and the branching reading fails."""
    if max_size < 1:
        raise ValueError("max_size must be positive")
    hit = kernels.separator_search(1, max_size)
    if hit is None:
        raise NotFound(f"no separating model of size <= {max_size}")
    return model_from_masks(*hit, sig=sig)
