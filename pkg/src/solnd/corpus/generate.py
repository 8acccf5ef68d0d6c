"""Regenerate the corpus scripts and manifest from the builders.

    python -m solnd.corpus.generate [output-dir]
"""

from __future__ import annotations

import sys
from pathlib import Path

from ..constructions import exists_concepts, exists_lower, forall_concepts, forall_lower
from ..parser import Signature, format_sol, parse_formula, pretty
from ..scripts import format_proof
from ..syntax import Implies, SecondOrderAbstraction, constants, free_pred_vars
from . import CORPUS_DIR
from .builders import ENTRIES, build


def _toml_str(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def entry_files(name: str) -> tuple[str, str]:
    """Script text and manifest block for one entry."""
    b = build(name)
    stmt = b.statement
    formulas = [*stmt.hypotheses.values(), stmt.conclusion]
    consts = sorted(set().union(*(constants(f) for f in formulas)))
    pvars = dict(sorted(set().union(*(free_pred_vars(f) for f in formulas))))
    script = f"; {ENTRIES[name][1]}\n" + format_proof(b.proof, b.definitions)
    lines = [
        "[[entry]]",
        f"name = {_toml_str(name)}",
        f"script = {_toml_str('scripts/' + name + '.solp')}",
        f"description = {_toml_str(ENTRIES[name][1])}",
    ]
    if consts:
        lines.append("constants = [" + ", ".join(_toml_str(c) for c in consts) + "]")
    if pvars:
        lines.append("predvars = { " + ", ".join(f"{k} = {v}" for k, v in pvars.items()) + " }")
    lines.append(f"conclusion = {_toml_str(pretty(stmt.conclusion))}")
    if stmt.hypotheses:
        lines.append("[entry.hypotheses]")
        for k, v in stmt.hypotheses.items():
            lines.append(f"{k} = {_toml_str(pretty(v))}")
    return script, "\n".join(lines)


def countermodel_files() -> dict[str, str]:
    """``.sol`` files for the two non-entailments with possibly empty concepts."""
    some = SecondOrderAbstraction("X", parse_formula("exists z. X(z)", predvars={"X": 1}))
    none = SecondOrderAbstraction("X", parse_formula("forall z. ~X(z)", predvars={"X": 1}))
    f1 = Implies(forall_lower(some, strict=False), forall_concepts(some, strict=False))
    f2 = Implies(exists_concepts(none, strict=False), exists_lower(none, strict=False))
    return {
        "weak-entailment.sol": format_sol(f1, Signature()),
        "weak-entailment-exists.sol": format_sol(f2, Signature()),
        "excluded-middle.sol": format_sol(parse_formula("A | ~A"), Signature((), {"A": 0})),
    }


def generate(out: Path = CORPUS_DIR) -> None:
    scripts = out / "scripts"
    scripts.mkdir(parents=True, exist_ok=True)
    blocks = ["# Generated by `python -m solnd.corpus.generate`; edit the builders instead."]
    for name in ENTRIES:
        script, block = entry_files(name)
        (scripts / f"{name}.solp").write_text(script, encoding="utf-8")
        blocks.append(block)
    (out / "manifest.toml").write_text("\n\n".join(blocks) + "\n", encoding="utf-8")
    for fname, text in countermodel_files().items():
        (scripts / fname).write_text(text, encoding="utf-8")


if __name__ == "__main__":
    generate(Path(sys.argv[1]) if len(sys.argv) > 1 else CORPUS_DIR)
