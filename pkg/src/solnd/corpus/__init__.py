"""Regression corpus of checked proof scripts.

``manifest.toml`` lists the entries; each names a ``.solp`` script and the
judgment it must prove.  :func:`run_corpus` checks every script as written
and again after :func:`solnd.kernel.elaborate`.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover
    import tomli as tomllib

from ..kernel import CheckError, Judgment, check, check_against, elaborate, format_location
from ..parser import ParseError, parse_formula
from ..scripts import read_script

CORPUS_DIR = Path(__file__).parent
DEFAULT_MANIFEST = CORPUS_DIR / "manifest.toml"


@dataclass
class CorpusEntry:
    name: str
    statement: Judgment
    script: Path
    description: str = ""
    constants: tuple = ()
    predvars: dict = field(default_factory=dict)


@dataclass
class EntryResult:
    name: str
    passed: bool
    elaborated: bool
    detail: str = ""
    seconds: float = 0.0


@dataclass
class CorpusReport:
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed and r.elaborated for r in self.results)

    def table(self) -> str:
        w = max([len(r.name) for r in self.results] + [5])
        lines = [f"{'entry':<{w}}  check  elaborated  detail"]
        for r in self.results:
            lines.append(
                f"{r.name:<{w}}  {'pass' if r.passed else 'FAIL':<5}  {'pass' if r.elaborated else 'FAIL':<10}  {r.detail}".rstrip()
            )
        lines.append(f"{sum(r.passed and r.elaborated for r in self.results)}/{len(self.results)} entries pass")
        return "\n".join(lines)


def load_manifest(path: str | Path = DEFAULT_MANIFEST) -> list[CorpusEntry]:
    path = Path(path)
    with open(path, "rb") as fh:
        data = tomllib.load(fh)
    out = []
    for e in data.get("entry", []):
        consts = tuple(e.get("constants", ()))
        pvars = dict(e.get("predvars", {}))
        arities: dict = {}

        def parse(text: str):
            return parse_formula(text, consts, pvars, file=str(path), pred_arities=arities)

        hyps = {k: parse(v) for k, v in e.get("hypotheses", {}).items()}
        stmt = Judgment(hyps, parse(e["conclusion"]))
        out.append(
            CorpusEntry(e["name"], stmt, path.parent / e["script"], e.get("description", ""), consts, pvars)
        )
    return out


def run_entry(entry: CorpusEntry) -> EntryResult:
    t0 = time.perf_counter()
    try:
        proof = read_script(entry.script).proof
        ok = check_against(proof, entry.statement)
        detail = "" if ok else f"proves {check(proof)}"
        ok_e = check_against(elaborate(proof), entry.statement) if ok else False
    except CheckError as e:
        ok, ok_e, detail = False, False, f"{e.kind.value} at {format_location(e.location)}: {e.detail}"
    except (ParseError, OSError) as e:
        ok, ok_e, detail = False, False, str(e)
    return EntryResult(entry.name, ok, ok_e, detail, time.perf_counter() - t0)


def run_corpus(entries: list[CorpusEntry] | None = None) -> CorpusReport:
    if entries is None:
        entries = load_manifest()
    return CorpusReport([run_entry(e) for e in entries])
