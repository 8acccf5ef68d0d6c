"""Proof scripts (``.solp``): parenthesized prefix terms for :class:`Proof`.

A script is a sequence of forms::

    ; comment
    (constants a b)
    (preds (T 1) (K 2))          ; optional, fixes predicate-constant arities
    (predvars (Y 1) (A 2))       ; free predicate variables
    (declare h "P(x) -> Q(x)")   ; formula of hypothesis label h
    (define alpha <proof>)       ; named sub-proof, used as (ref alpha)
    <proof>                      ; the last proof form is the result

A proof node is ``(rule item ...)``.  List items headed by a rule keyword
or ``ref`` are premises, in order; all other items are the payload, in the
order given by :data:`solnd.kernel.RULES`.  Payload items:

* label, individual variable, predicate variable: a symbol
* nat: a decimal numeral
* term: a symbol (a constant if declared, otherwise a variable)
* formula: a quoted infix string, ``bot``, or an s-expression such as
  ``(and (P x y) (not (Q y)))``, ``(forall x f)``, ``(exists2 X 1 f)``
* abstraction: ``(lam (x y) formula)``
* Henkin signature: ``(sig T B K)``

A formula that directly follows a label may be omitted when the label has
a ``declare`` form; the declared formula is used.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .constructions import HenkinSignature
from .kernel import RULES, Proof
from .parser import ParseError, SourceSpan, SyntaxError, parse_formula, pretty
from .syntax import (
    BOT,
    And,
    Atom,
    Const,
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
    Var,
    alpha_eq,
    constants as formula_constants,
    free_pred_vars,
    pred_consts,
)


class UnknownRule(ParseError):
    pass


class MalformedPayload(ParseError):
    pass


# ------------------------------------------------------------------ reader


@dataclass
class _Sym:
    text: str
    span: SourceSpan


@dataclass
class _Str:
    text: str
    span: SourceSpan


@dataclass
class _List:
    items: list
    span: SourceSpan

    @property
    def head(self) -> str | None:
        return self.items[0].text if self.items and isinstance(self.items[0], _Sym) else None


_SEXP_TOKEN = re.compile(r'\s+|;[^\n]*|\(|\)|"(?:[^"\\]|\\.)*"|"|[^\s()";]+')


def _read_all(text: str, file: str) -> list:
    line_starts = [0] + [m.end() for m in re.finditer("\n", text)]

    def span(pos: int) -> SourceSpan:
        lo, hi = 0, len(line_starts) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if line_starts[mid] <= pos:
                lo = mid
            else:
                hi = mid - 1
        return SourceSpan(file, lo + 1, pos - line_starts[lo] + 1)

    stack: list[list] = [[]]
    opens: list[int] = []
    pos = 0
    for m in _SEXP_TOKEN.finditer(text):
        if m.start() != pos:
            raise SyntaxError("unexpected character", span(pos))
        pos = m.end()
        tok = m.group(0)
        if tok[0].isspace() or tok[0] == ";":
            continue
        if tok == "(":
            stack.append([])
            opens.append(m.start())
        elif tok == ")":
            if not opens:
                raise SyntaxError("unbalanced ')'", span(m.start()))
            items = stack.pop()
            stack[-1].append(_List(items, span(opens.pop())))
        elif tok == '"':
            raise SyntaxError("unterminated string", span(m.start()))
        elif tok[0] == '"':
            stack[-1].append(_Str(tok[1:-1].replace('\\"', '"').replace("\\\\", "\\"), span(m.start() + 1)))
        else:
            stack[-1].append(_Sym(tok, span(m.start())))
    if pos != len(text):
        raise SyntaxError("unexpected character", span(pos))
    if opens:
        raise SyntaxError("unbalanced '('", span(opens[-1]))
    return stack[0]


# ------------------------------------------------------------------ parser

_FORMULA_HEADS = {"bot", "not", "and", "or", "imp", "iff", "forall", "exists", "forall2", "exists2"}
_HEADER = {"constants", "preds", "predvars", "declare", "define"}


@dataclass
class Script:
    proof: Proof
    constants: tuple = ()
    preds: dict = field(default_factory=dict)
    predvars: dict = field(default_factory=dict)
    declarations: dict = field(default_factory=dict)
    definitions: dict = field(default_factory=dict)


class _ScriptParser:
    def __init__(self, file: str):
        self.file = file
        self.constants: list[str] = []
        self.pred_arities: dict[str, int] = {}
        self.predvars: dict[str, int] = {}
        self.decls: dict[str, Formula] = {}
        self.defs: dict[str, Proof] = {}

    # -- entry
    def run(self, forms: list) -> Script:
        result = None
        for form in forms:
            if isinstance(form, _List) and form.head in _HEADER:
                getattr(self, "_h_" + form.head)(form)
            else:
                result = self.proof(form)
        if result is None:
            raise SyntaxError("script contains no proof", SourceSpan(self.file, 1, 1))
        return Script(
            result,
            tuple(self.constants),
            dict(self.pred_arities),
            dict(self.predvars),
            dict(self.decls),
            dict(self.defs),
        )

    # -- headers
    def _h_constants(self, form: _List) -> None:
        for it in form.items[1:]:
            self.constants.append(self.sym(it, "constant name"))

    def _arity_pairs(self, form: _List):
        for it in form.items[1:]:
            if not (isinstance(it, _List) and len(it.items) == 2):
                raise SyntaxError("expected (Name arity)", it.span)
            yield self.sym(it.items[0], "predicate name"), self.nat(it.items[1])

    def _h_preds(self, form: _List) -> None:
        for name, n in self._arity_pairs(form):
            self.pred_arities[name] = n

    def _h_predvars(self, form: _List) -> None:
        for name, n in self._arity_pairs(form):
            self.predvars[name] = n

    def _h_declare(self, form: _List) -> None:
        if len(form.items) != 3:
            raise SyntaxError("expected (declare label formula)", form.span)
        self.decls[self.sym(form.items[1], "label")] = self.formula(form.items[2], {})

    def _h_define(self, form: _List) -> None:
        if len(form.items) != 3:
            raise SyntaxError("expected (define name proof)", form.span)
        self.defs[self.sym(form.items[1], "name")] = self.proof(form.items[2])

    # -- atoms
    def sym(self, it, what: str) -> str:
        if not isinstance(it, _Sym):
            raise MalformedPayload(f"expected {what}", it.span)
        return it.text

    def nat(self, it) -> int:
        if not (isinstance(it, _Sym) and it.text.isdigit()):
            raise MalformedPayload("expected a natural number", it.span)
        return int(it.text)

    def term(self, it, bound: dict):
        name = self.sym(it, "term")
        if not name[:1].islower() and name[:1] != "_":
            raise MalformedPayload(f"{name!r} is not a term", it.span)
        return Const(name) if name in self.constants and name not in bound else Var(name)

    # -- formulas
    def formula(self, it, bound_preds: dict, bound_inds: frozenset = frozenset()) -> Formula:
        if isinstance(it, _Str):
            return parse_formula(
                it.text,
                [c for c in self.constants if c not in bound_inds],
                {**self.predvars, **bound_preds},
                file=self.file,
                line=it.span.line,
                column=it.span.column,
                pred_arities=self.pred_arities,
            )
        if isinstance(it, _Sym):
            if it.text == "bot":
                return BOT
            if it.text[:1].isupper():
                return self.atom(it.text, [], bound_preds, bound_inds, it.span)
            raise MalformedPayload(f"expected a formula, got {it.text!r}", it.span)
        if not isinstance(it, _List) or not it.items:
            raise MalformedPayload("expected a formula", it.span)
        head = it.head
        args = it.items[1:]

        def sub(x, bp=bound_preds, bi=bound_inds):
            return self.formula(x, bp, bi)

        if head == "bot" and not args:
            return BOT
        if head == "not" and len(args) == 1:
            return Not(sub(args[0]))
        if head in ("and", "or") and len(args) >= 2:
            ctor = And if head == "and" else Or
            out = sub(args[0])
            for a in args[1:]:
                out = ctor(out, sub(a))
            return out
        if head in ("imp", "iff") and len(args) == 2:
            return (Implies if head == "imp" else Iff)(sub(args[0]), sub(args[1]))
        if head in ("forall", "exists") and len(args) == 2:
            v = self.sym(args[0], "variable")
            body = sub(args[1], bound_preds, bound_inds | {v})
            return (ForallInd if head == "forall" else ExistsInd)(v, body)
        if head in ("forall2", "exists2") and len(args) == 3:
            v = self.sym(args[0], "predicate variable")
            n = self.nat(args[1])
            body = sub(args[2], {**bound_preds, v: n}, bound_inds)
            return (ForallPred if head == "forall2" else ExistsPred)(v, n, body)
        if head and head[:1].isupper():
            return self.atom(head, args, bound_preds, bound_inds, it.span)
        raise MalformedPayload(f"cannot read formula form {head!r}", it.span)

    def atom(self, name, args, bound_preds, bound_inds, span) -> Formula:
        from .parser import ArityError

        terms = tuple(self.term(a, {v: 1 for v in bound_inds}) for a in args)
        n = len(terms)
        if name in bound_preds or name in self.predvars:
            want = bound_preds.get(name, self.predvars.get(name))
            if want != n:
                raise ArityError(f"{name} has arity {want}, used with {n} arguments", span)
            return Atom(PredVar(name, n), terms)
        if self.pred_arities.setdefault(name, n) != n:
            raise ArityError(f"{name} has arity {self.pred_arities[name]}, used with {n} arguments", span)
        return Atom(PredConst(name, n), terms)

    def abstraction(self, it) -> PredAbstraction:
        if not (isinstance(it, _List) and it.head == "lam" and len(it.items) == 3 and isinstance(it.items[1], _List)):
            raise MalformedPayload("expected (lam (params) formula)", it.span)
        params = tuple(self.sym(p, "parameter") for p in it.items[1].items)
        if len(set(params)) != len(params):
            raise MalformedPayload("abstraction parameters must be distinct", it.span)
        body = self.formula(it.items[2], {}, frozenset(params))
        return PredAbstraction(params, body)

    def signature(self, it) -> HenkinSignature:
        if not (isinstance(it, _List) and it.head == "sig" and len(it.items) == 4):
            raise MalformedPayload("expected (sig T B K)", it.span)
        names = [self.sym(x, "predicate name") for x in it.items[1:]]
        for name, n in zip(names, (1, 1, 2)):
            if self.pred_arities.setdefault(name, n) != n:
                raise MalformedPayload(f"{name} must have arity {n}", it.span)
        return HenkinSignature.named(*names)

    # -- proofs
    def is_premise(self, it) -> bool:
        return isinstance(it, _List) and (it.head in RULES or it.head == "ref")

    def proof(self, it) -> Proof:
        if not isinstance(it, _List) or not it.items:
            raise SyntaxError("expected a proof term", it.span)
        head = it.head
        if head == "ref":
            name = self.sym(it.items[1], "name") if len(it.items) == 2 else None
            if name is None or name not in self.defs:
                raise MalformedPayload(f"unknown sub-proof {name!r}", it.span)
            return self.defs[name]
        if head not in RULES:
            raise UnknownRule(f"unknown rule {head!r}", it.span)
        kinds, npremises = RULES[head]
        items = it.items[1:]
        premises = [self.proof(x) for x in items if self.is_premise(x)]
        raw = [x for x in items if not self.is_premise(x)]
        if len(premises) != npremises:
            raise MalformedPayload(f"{head} takes {npremises} premise(s), got {len(premises)}", it.span)
        payload = []
        i = 0
        for j, kind in enumerate(kinds):
            if kind == "formula" and i >= len(raw) or (
                kind == "formula" and j > 0 and kinds[j - 1] == "label" and len(raw) < len(kinds)
            ):
                label = payload[-1] if j > 0 and kinds[j - 1] == "label" else None
                if label in self.decls:
                    payload.append(self.decls[label])
                    continue
                found = _leaf_formula(premises, label) if label is not None else None
                if found is not None:
                    payload.append(found)
                    continue
                raise MalformedPayload(f"{head} needs a {kind}", it.span)
            if i >= len(raw):
                raise MalformedPayload(f"{head} needs a {kind}", it.span)
            x = raw[i]
            i += 1
            if kind in ("label", "ivar", "pvar"):
                payload.append(self.sym(x, kind))
            elif kind == "nat":
                payload.append(self.nat(x))
            elif kind == "term":
                payload.append(self.term(x, {}))
            elif kind == "formula":
                payload.append(self.formula(x, {}))
            elif kind == "abs":
                payload.append(self.abstraction(x))
            elif kind == "sig":
                payload.append(self.signature(x))
        if i != len(raw):
            raise MalformedPayload(f"{head} has {len(raw) - i} unexpected payload item(s)", raw[i].span)
        return Proof(head, tuple(payload), tuple(premises))


def _leaf_formula(premises, label):
    for q in premises:
        for _, node in q.nodes():
            if node.rule == "hyp" and node.payload[0] == label:
                return node.payload[1]
    return None


def parse_script(text: str, file: str = "<script>") -> Script:
    return _ScriptParser(file).run(_read_all(text, file))


def parse_proof(text: str, file: str = "<script>") -> Proof:
    return parse_script(text, file).proof


def read_script(path) -> Script:
    with open(path, encoding="utf-8") as fh:
        return parse_script(fh.read(), str(path))


# ----------------------------------------------------------------- printer


def _payload_formulas(p: Proof):
    kinds = RULES[p.rule][0]
    for k, v in zip(kinds, p.payload):
        if k == "formula":
            yield v
        elif k == "abs":
            yield v.body


def _all_formulas(p: Proof):
    for _, node in p.nodes():
        yield from _payload_formulas(node)


def _sig_preds(p: Proof):
    for _, node in p.nodes():
        for k, v in zip(RULES[node.rule][0], node.payload):
            if k == "sig":
                yield v


def _eigen_preds(p: Proof):
    for _, node in p.nodes():
        if node.rule in ("forall2I", "exists2E"):
            yield node.payload[0], node.payload[1]
        elif node.rule == "henkinE":
            yield node.payload[1], 2
            yield node.payload[2], 2


def _label_formulas(p: Proof) -> dict:
    """label -> formula when every use of the label agrees (up to alpha), else None."""
    out: dict = {}
    for _, node in p.nodes():
        kinds = RULES[node.rule][0]
        for j, k in enumerate(kinds):
            if k == "label" and j + 1 < len(kinds) and kinds[j + 1] == "formula":
                label, f = node.payload[j], node.payload[j + 1]
                if label not in out:
                    out[label] = f
                elif out[label] is not None and not (out[label] == f):
                    out[label] = None
    return {k: v for k, v in out.items() if v is not None}


def _q(f: Formula) -> str:
    return '"' + pretty(f) + '"'


def format_proof(p: Proof, definitions: dict | None = None, extra_predvars: dict | None = None) -> str:
    """Script text for ``p``; :func:`parse_proof` reads it back to an equal tree.

    Hypothesis formulas are hoisted into ``declare`` forms when every use
    of a label carries the same formula.  ``definitions`` maps names to
    sub-proofs that are emitted as ``define`` forms and cited by ``ref``.
    """
    definitions = dict(definitions or {})
    trees = [p, *definitions.values()]
    consts: list[str] = []
    preds: dict[str, int] = {}
    pvars: dict[str, int] = dict(extra_predvars or {})
    for t in trees:
        for f in _all_formulas(t):
            for c in sorted(formula_constants(f)):
                if c not in consts:
                    consts.append(c)
            for name, n in sorted(pred_consts(f)):
                preds.setdefault(name, n)
            for name, n in sorted(free_pred_vars(f)):
                pvars.setdefault(name, n)
        for sig in _sig_preds(t):
            for ref in (sig.T, sig.B, sig.K):
                preds.setdefault(ref.name, ref.arity)
        for name, n in _eigen_preds(t):
            pvars.setdefault(name, n)
        for _, node in t.nodes():
            for k, v in zip(RULES[node.rule][0], node.payload):
                if k == "term" and isinstance(v, Const) and v.name not in consts:
                    consts.append(v.name)
    decls: dict = {}
    for t in trees:
        for label, f in _label_formulas(t).items():
            if label in decls and decls[label] != f:
                decls[label] = None
            else:
                decls.setdefault(label, f)
    decls = {k: v for k, v in decls.items() if v is not None}

    lines = []
    if consts:
        lines.append("(constants " + " ".join(consts) + ")")
    if preds:
        lines.append("(preds " + " ".join(f"({n} {a})" for n, a in preds.items()) + ")")
    if pvars:
        lines.append("(predvars " + " ".join(f"({n} {a})" for n, a in sorted(pvars.items())) + ")")
    for label, f in decls.items():
        lines.append(f"(declare {label} {_q(f)})")
    done: dict = {}
    for name, sub in definitions.items():
        lines.append(f"(define {name}\n" + _fmt(sub, decls, {**done}, 1) + ")")
        done[name] = sub
    lines.append(_fmt(p, decls, done, 0))
    return "\n".join(lines) + "\n"


def _fmt(p: Proof, decls: dict, defs: dict, depth: int) -> str:
    for name, sub in defs.items():
        if sub == p:
            return "  " * depth + f"(ref {name})"
    kinds = RULES[p.rule][0]
    parts = [p.rule]
    for j, (k, v) in enumerate(zip(kinds, p.payload)):
        if k == "formula":
            if j > 0 and kinds[j - 1] == "label" and decls.get(p.payload[j - 1]) == v:
                continue
            parts.append(_q(v))
        elif k == "abs":
            parts.append("(lam (" + " ".join(v.params) + ") " + _q(v.body) + ")")
        elif k == "sig":
            parts.append(f"(sig {v.T.name} {v.B.name} {v.K.name})")
        elif k == "term":
            parts.append(v.name)
        else:
            parts.append(str(v))
    head = "  " * depth + "(" + " ".join(parts)
    if not p.premises:
        return head + ")"
    return head + "\n" + "\n".join(_fmt(q, decls, defs, depth + 1) for q in p.premises) + ")"


# --------------------------------------------------------------- judgments


def parse_judgment(text: str, file: str = "<judgment>"):
    """Read an expected judgment.

    Header lines as in ``.sol`` files (``const``, ``pred``, ``predvar``),
    then ``hyp label: formula`` lines, then one ``|- formula`` line.
    """
    from .kernel import Judgment
    from .parser import parse_sol

    header, hyps, goal = [], [], None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        header.append("")
        if not stripped:
            continue
        if stripped.startswith("hyp "):
            label, _, rest = stripped[4:].partition(":")
            if not rest:
                raise SyntaxError("expected 'hyp label: formula'", SourceSpan(file, lineno, 1))
            hyps.append((label.strip(), rest, lineno, line.index(":") + 2))
        elif stripped.startswith("|-"):
            goal = (stripped[2:], lineno, line.index("|-") + 3)
        else:
            header[-1] = line
    if goal is None:
        raise SyntaxError("missing '|- formula' line", SourceSpan(file, 1, 1))
    sig = parse_sol("\n".join(header + ["bot"]), file).signature
    arities = dict(sig.preds)

    def read(src, lineno, col):
        return parse_formula(src, sig.constants, sig.predvars, file=file, line=lineno, column=col, pred_arities=arities)

    return Judgment({lab: read(src, ln, c) for lab, src, ln, c in hyps}, read(*goal))


def format_judgment(j) -> str:
    formulas = [*j.hypotheses.values(), j.conclusion]
    consts = sorted(set().union(*(formula_constants(f) for f in formulas)))
    pvars = dict(sorted(set().union(*(free_pred_vars(f) for f in formulas))))
    lines = []
    if consts:
        lines.append("const " + ", ".join(consts))
    if pvars:
        lines.append("predvar " + ", ".join(f"{n}/{a}" for n, a in pvars.items()))
    for label, f in j.hypotheses.items():
        lines.append(f"hyp {label}: {pretty(f)}")
    lines.append(f"|- {pretty(j.conclusion)}")
    return "\n".join(lines) + "\n"
