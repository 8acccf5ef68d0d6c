"""Concrete syntax: infix formulas, ``.sol`` signature files, and printing.

Lowercase identifiers are individual variables unless declared as
constants; uppercase identifiers are predicates.  A predicate name bound by
``forall2``/``exists2`` (or declared as a predicate variable) is a predicate
variable, otherwise a predicate constant whose arity is fixed by its first
use.  Precedence, loosest first: quantifiers (body extends as far right as
possible), ``->`` (right associative), ``|``, ``&``, ``~``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .syntax import (
    BOT,
    And,
    ArityMismatch,
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
)


@dataclass(frozen=True)
class SourceSpan:
    file: str
    line: int
    column: int

    def __str__(self):
        return f"{self.file}:{self.line}:{self.column}"


class ParseError(Exception):
    """Base class of concrete-syntax errors; always carries a span."""

    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span}: {message}")
        self.message = message
        self.span = span


class SyntaxError(ParseError):  # noqa: A001 - named after the error kind
    pass


class ArityError(ParseError):
    pass


_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<arrow>->|→)
  | (?P<iff><->|↔)
  | (?P<op>[().,:&|~∧∨¬])
  | (?P<uni>[∀∃⊥])
  | (?P<nat>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_'′]*)
    """,
    re.VERBOSE,
)

_UNI = {"∧": "&", "∨": "|", "¬": "~", "→": "->", "↔": "<->", "⊥": "bot"}
KEYWORDS = {"forall", "exists", "forall2", "exists2", "bot"}


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _offset_to_linecol(text: str, pos: int, line0: int, col0: int) -> tuple[int, int]:
    before = text[:pos]
    nl = before.count("\n")
    if nl == 0:
        return line0, col0 + pos
    return line0 + nl, pos - before.rfind("\n")


def _tokenize(text: str, file: str, line0: int = 1, col0: int = 1) -> list[_Tok]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _offset_to_linecol(text, pos, line0, col0)
            raise SyntaxError(f"unexpected character {text[pos]!r}", SourceSpan(file, line, col))
        kind = m.lastgroup
        s = m.group()
        if kind != "ws":
            line, col = _offset_to_linecol(text, pos, line0, col0)
            s = _UNI.get(s, s)
            if kind == "uni":
                kind = "ident" if s == "bot" else "quant"
            if kind == "ident" and s in ("forall", "exists", "forall2", "exists2"):
                kind = "quant"
            toks.append(_Tok(kind, s, line, col))
        pos = m.end()
    line, col = _offset_to_linecol(text, pos, line0, col0)
    toks.append(_Tok("eof", "", line, col))
    return toks


class _FormulaParser:
    def __init__(self, text, *, constants, predvars, file, line0=1, col0=1, pred_arities=None):
        self.toks = _tokenize(text, file, line0, col0)
        self.i = 0
        self.file = file
        self.constants = set(constants)
        # free predicate variables: name -> arity
        self.predvars = dict(predvars)
        # predicate constants seen so far: name -> arity
        self.pred_arities = pred_arities if pred_arities is not None else {}
        self.bound_preds: list[tuple[str, int]] = []

    # -- helpers
    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def span(self, t: _Tok) -> SourceSpan:
        return SourceSpan(self.file, t.line, t.col)

    def expect(self, text: str) -> _Tok:
        t = self.peek()
        if t.text != text or t.kind == "eof":
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise SyntaxError(f"expected {text!r}, found {found}", self.span(t))
        return self.next()

    # -- grammar
    def parse(self) -> Formula:
        f = self.formula()
        t = self.peek()
        if t.kind != "eof":
            raise SyntaxError(f"unexpected {t.text!r}", self.span(t))
        return f

    def formula(self) -> Formula:
        t = self.peek()
        if t.kind == "quant":
            return self.quant()
        return self.impl()

    def quant(self) -> Formula:
        q = self.next()
        kw = {"∀": "forall", "∃": "exists"}.get(q.text, q.text)
        name_tok = self.next()
        if name_tok.kind != "ident" or name_tok.text in KEYWORDS:
            raise SyntaxError("expected a variable after quantifier", self.span(name_tok))
        name = name_tok.text
        second = kw.endswith("2") or name[0].isupper()
        if second:
            if not name[0].isupper():
                raise SyntaxError("predicate variables start uppercase", self.span(name_tok))
            self.expect(":")
            n = self.next()
            if n.kind != "nat":
                raise SyntaxError("expected an arity", self.span(n))
            arity = int(n.text)
            self.expect(".")
            self.bound_preds.append((name, arity))
            try:
                body = self.formula()
            finally:
                self.bound_preds.pop()
            cls = ForallPred if kw.startswith("forall") else ExistsPred
            return cls(name, arity, body)
        if not name[0].islower() and name[0] != "_":
            raise SyntaxError("individual variables start lowercase", self.span(name_tok))
        if name in self.constants:
            raise SyntaxError(f"cannot bind constant {name!r}", self.span(name_tok))
        self.expect(".")
        body = self.formula()
        return (ForallInd if kw == "forall" else ExistsInd)(name, body)

    def impl(self) -> Formula:
        left = self.disj()
        if self.peek().text == "->":
            self.next()
            return Implies(left, self.formula())
        if self.peek().text == "<->":
            self.next()
            right = self.formula()
            return And(Implies(left, right), Implies(right, left))
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek().text == "|":
            self.next()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.neg()
        while self.peek().text == "&":
            self.next()
            f = And(f, self.neg())
        return f

    def neg(self) -> Formula:
        if self.peek().text == "~":
            self.next()
            return Not(self.neg())
        return self.atom()

    def atom(self) -> Formula:
        t = self.peek()
        if t.text == "(" and t.kind == "op":
            self.next()
            f = self.formula()
            self.expect(")")
            return f
        if t.kind == "ident" and t.text == "bot":
            self.next()
            return BOT
        if t.kind == "quant":
            raise SyntaxError("quantifier must be parenthesised here", self.span(t))
        if t.kind != "ident":
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise SyntaxError(f"expected a formula, found {found}", self.span(t))
        if not t.text[0].isupper():
            raise SyntaxError(f"predicate names start uppercase: {t.text!r}", self.span(t))
        self.next()
        args = []
        if self.peek().text == "(":
            self.next()
            if self.peek().text != ")":
                args.append(self.term())
                while self.peek().text == ",":
                    self.next()
                    args.append(self.term())
            self.expect(")")
        return Atom(self.resolve_pred(t, len(args)), tuple(args))

    def term(self):
        t = self.next()
        if t.kind != "ident" or t.text in KEYWORDS:
            found = "end of input" if t.kind == "eof" else repr(t.text)
            raise SyntaxError(f"expected a term, found {found}", self.span(t))
        if not (t.text[0].islower() or t.text[0] == "_"):
            raise SyntaxError(f"terms start lowercase: {t.text!r}", self.span(t))
        return Const(t.text) if t.text in self.constants else Var(t.text)

    def resolve_pred(self, t: _Tok, n: int):
        name = t.text
        for bname, barity in reversed(self.bound_preds):
            if bname == name:
                if barity != n:
                    raise ArityError(
                        f"{name} bound with arity {barity} but applied to {n} arguments", self.span(t)
                    )
                return PredVar(name, n)
        if name in self.predvars:
            if self.predvars[name] != n:
                raise ArityError(
                    f"{name} declared with arity {self.predvars[name]} but applied to {n} arguments",
                    self.span(t),
                )
            return PredVar(name, n)
        known = self.pred_arities.setdefault(name, n)
        if known != n:
            raise ArityError(f"{name} used with arities {known} and {n}", self.span(t))
        return PredConst(name, n)


def parse_formula(
    text: str,
    constants: Iterable[str] = (),
    predvars: Mapping[str, int] | Iterable[tuple[str, int]] = (),
    *,
    file: str = "<string>",
    line: int = 1,
    column: int = 1,
    pred_arities: dict | None = None,
) -> Formula:
    """Parse infix concrete syntax.

    ``constants`` names the individual constants, ``predvars`` the free
    predicate variables with their arities.
    """
    pv = dict(predvars.items() if isinstance(predvars, Mapping) else predvars)
    p = _FormulaParser(
        text, constants=constants, predvars=pv, file=file, line0=line, col0=column, pred_arities=pred_arities
    )
    return p.parse()


# ----------------------------------------------------------------- printing

_PREC_IMPL, _PREC_OR, _PREC_AND, _PREC_NOT = 1, 2, 3, 4


def pretty(f: Formula) -> str:
    """Canonical ASCII concrete syntax; ``parse_formula`` reads it back."""
    return _pp(f, 0, True)


def _pp(f: Formula, ctx: int, tail: bool) -> str:
    # ctx: binding strength demanded by the context; tail: formula position
    if isinstance(f, Atom):
        if not f.args:
            return f.pred.name
        return f"{f.pred.name}({','.join(t.name for t in f.args)})"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, Not):
        return "~" + _pp(f.body, _PREC_NOT, False)
    if isinstance(f, (ForallInd, ExistsInd, ForallPred, ExistsPred)):
        if isinstance(f, (ForallInd, ExistsInd)):
            kw = "forall" if isinstance(f, ForallInd) else "exists"
            head = f"{kw} {f.var}. "
        else:
            kw = "forall2" if isinstance(f, ForallPred) else "exists2"
            head = f"{kw} {f.var}:{f.arity}. "
        s = head + _pp(f.body, 0, True)
        return s if tail else f"({s})"
    if isinstance(f, Implies):
        s = _pp(f.left, _PREC_OR, False) + " -> " + _pp(f.right, _PREC_IMPL, tail or ctx > _PREC_IMPL)
        return s if ctx <= _PREC_IMPL else f"({s})"
    if isinstance(f, Or):
        s = _pp(f.left, _PREC_OR, False) + " | " + _pp(f.right, _PREC_AND, False)
        return s if ctx <= _PREC_OR else f"({s})"
    if isinstance(f, And):
        s = _pp(f.left, _PREC_AND, False) + " & " + _pp(f.right, _PREC_NOT, False)
        return s if ctx <= _PREC_AND else f"({s})"
    raise TypeError(f"not a formula: {f!r}")


# -------------------------------------------------------------- .sol files


@dataclass
class Signature:
    """Symbols a formula may use: constants, predicate constants, free predicate variables."""

    constants: tuple = ()
    preds: dict = field(default_factory=dict)  # name -> arity, declaration order
    predvars: dict = field(default_factory=dict)

    def pred_list(self) -> list[tuple[str, int]]:
        return list(self.preds.items())


@dataclass
class SolFile:
    formula: Formula
    signature: Signature


_DECL = re.compile(r"^\s*(const|pred|predvar)\b(.*)$")


def _parse_decl_items(kind: str, rest: str, file: str, lineno: int, col: int):
    items = [s.strip() for s in rest.replace(",", " ").split()]
    out = []
    for it in items:
        if kind == "const":
            if not re.match(r"^[a-z_][A-Za-z0-9_'′]*$", it):
                raise SyntaxError(f"bad constant name {it!r}", SourceSpan(file, lineno, col))
            out.append(it)
        else:
            m = re.match(r"^([A-Z][A-Za-z0-9_'′]*)/(\d+)$", it)
            if not m:
                raise SyntaxError(f"expected Name/arity, found {it!r}", SourceSpan(file, lineno, col))
            out.append((m.group(1), int(m.group(2))))
    return out


def parse_sol(text: str, file: str = "<string>") -> SolFile:
    """Parse a ``.sol`` file: declaration lines then the formula text.

    Declarations: ``const a, b``; ``pred T/1, K/2``; ``predvar Y/1``.
    ``#`` starts a comment.
    """
    consts: list[str] = []
    preds: dict[str, int] = {}
    predvars: dict[str, int] = {}
    body_lines = []
    first_body_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        m = _DECL.match(line)
        if m and first_body_line is None:
            kind, rest = m.group(1), m.group(2)
            items = _parse_decl_items(kind, rest, file, lineno, m.start(2) + 1)
            if kind == "const":
                consts.extend(items)
            elif kind == "pred":
                preds.update(items)
            else:
                predvars.update(items)
            continue
        if first_body_line is None:
            if not line.strip():
                continue
            first_body_line = lineno
        body_lines.append(line)
    if first_body_line is None:
        raise SyntaxError("no formula", SourceSpan(file, max(1, len(text.splitlines())), 1))
    arities = dict(preds)
    f = parse_formula("\n".join(body_lines), consts, predvars, file=file, line=first_body_line, pred_arities=arities)
    return SolFile(f, Signature(tuple(consts), arities, predvars))


def read_sol(path: str | Path) -> SolFile:
    path = Path(path)
    return parse_sol(path.read_text(encoding="utf-8"), str(path))


def format_sol(f: Formula, sig: Signature | None = None) -> str:
    from .syntax import constants as consts_of, free_pred_vars, pred_consts

    lines = []
    cs = list(sig.constants) if sig else sorted(consts_of(f))
    if cs:
        lines.append("const " + ", ".join(cs))
    preds = sig.preds if sig else dict(sorted(pred_consts(f)))
    if preds:
        lines.append("pred " + ", ".join(f"{n}/{a}" for n, a in preds.items()))
    pv = sig.predvars if sig else dict(sorted(free_pred_vars(f)))
    if pv:
        lines.append("predvar " + ", ".join(f"{n}/{a}" for n, a in pv.items()))
    lines.append(pretty(f))
    return "\n".join(lines) + "\n"
