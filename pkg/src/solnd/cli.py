"""Command-line interface.

Exit codes: 0 success, 1 negative result (rejected proof, false formula,
countermodel found, failing corpus), 2 usage or parse error, 3 resource
limit.  With ``--json`` each command prints one JSON object per result.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from . import kernels
from .constructions import HenkinSignature, expand_henkin, linear_readings
from .corpus import DEFAULT_MANIFEST, load_manifest, run_corpus
from .gq import NotFound, find_branching_separator
from .kernel import CheckError, check, format_location
from .models import (
    DEFAULT_BUDGET,
    Countermodel,
    EvalError,
    ResourceLimit,
    UnboundSymbol,
    check_validity,
    evaluate,
    format_model,
    parse_model,
)
from .parser import ParseError, pretty, read_sol
from .scripts import parse_judgment, read_script
from .syntax import ArityMismatch

OK, NEGATIVE, USAGE, RESOURCE = 0, 1, 2, 3


def _emit(as_json: bool, record: dict, text: str) -> None:
    if as_json:
        click.echo(json.dumps(record, sort_keys=True))
    else:
        click.echo(text)


def _fail(as_json: bool, code: int, kind: str, message: str) -> None:
    _emit(as_json, {"status": "error", "error": kind, "message": message}, f"error: {message}")
    sys.exit(code)


def _model_record(m, a=None) -> dict:
    rec = {
        "domain": m.size,
        "consts": dict(m.consts),
        "preds": {f"{n}/{k}": sorted(list(t) for t in ext) for (n, k), ext in m.preds.items()},
    }
    if a is not None:
        rec["vars"] = dict(a.ind)
        rec["predvars"] = {f"{n}/{k}": sorted(list(t) for t in ext) for (n, k), ext in a.pred.items()}
    return rec


json_option = click.option("--json", "as_json", is_flag=True, help="Emit one JSON record per result.")


@click.group()
@click.version_option(package_name="solnd")
def main() -> None:
    """Check second-order natural deduction proofs and evaluate formulas on finite models."""


@main.command("check")
@click.argument("proof_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("expected", required=False, type=click.Path(exists=True, dir_okay=False))
@json_option
def cmd_check(proof_file: str, expected: str | None, as_json: bool) -> None:
    """Check PROOF_FILE (.solp); optionally compare with an EXPECTED judgment file."""
    try:
        proof = read_script(proof_file).proof
        want = parse_judgment(Path(expected).read_text(encoding="utf-8"), expected) if expected else None
    except (ParseError, ArityMismatch) as e:
        _fail(as_json, USAGE, type(e).__name__, str(e))
    try:
        got = check(proof)
    except CheckError as e:
        loc = format_location(e.location)
        _emit(
            as_json,
            {"status": "rejected", "kind": e.kind.value, "location": loc, "detail": e.detail},
            f"{e.kind.value} at {loc}: {e.detail}",
        )
        sys.exit(NEGATIVE)
    record = {"status": "ok", "judgment": str(got)}
    if want is not None and not got.alpha_equal(want):
        record.update(status="mismatch", expected=str(want))
        _emit(as_json, record, f"{got}\nexpected: {want}")
        sys.exit(NEGATIVE)
    _emit(as_json, record, str(got))


@main.command("eval")
@click.argument("formula_file", type=click.Path(exists=True, dir_okay=False))
@click.argument("model_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True, help="Evaluation step limit.")
@json_option
def cmd_eval(formula_file: str, model_file: str, budget: int, as_json: bool) -> None:
    """Evaluate the formula in FORMULA_FILE (.sol) on MODEL_FILE."""
    try:
        sol = read_sol(formula_file)
        model, asg = parse_model(Path(model_file).read_text(encoding="utf-8"), model_file)
        value = evaluate(sol.formula, model, asg, budget=budget)
    except ResourceLimit as e:
        _fail(as_json, RESOURCE, "ResourceLimit", str(e))
    except (ParseError, UnboundSymbol, ValueError) as e:
        _fail(as_json, USAGE, type(e).__name__, str(e))
    _emit(as_json, {"status": "ok", "value": value}, "true" if value else "false")
    sys.exit(OK if value else NEGATIVE)


def _signature(names: tuple[str, ...], as_json: bool) -> HenkinSignature:
    if len(names) != 3:
        _fail(as_json, USAGE, "UsageError", "expected three predicate names: T B K")
    if len(set(names)) != 3 or not all(n[:1].isupper() for n in names):
        _fail(as_json, USAGE, "UsageError", "predicate names must be distinct and start uppercase")
    try:
        return HenkinSignature.named(*names)
    except (ValueError, TypeError) as e:
        _fail(as_json, USAGE, "UsageError", str(e))


@main.command("expand")
@click.argument("names", nargs=-1)
@click.option("--variant", type=click.Choice(["plain", "sorted"]), default="plain", show_default=True)
@click.option("--linear", is_flag=True, help="Print the two linear readings instead.")
@json_option
def cmd_expand(names: tuple[str, ...], variant: str, linear: bool, as_json: bool) -> None:
    """Print the second-order encoding of the branching quantifier over T B K."""
    sig = _signature(names or ("T", "B", "K"), as_json)
    if linear:
        first, second = linear_readings(sig)
        _emit(as_json, {"status": "ok", "linear": [pretty(first), pretty(second)]}, f"{pretty(first)}\n{pretty(second)}")
    else:
        f = expand_henkin(sig, variant)
        _emit(as_json, {"status": "ok", "variant": variant, "formula": pretty(f)}, pretty(f))


@main.command("countermodel")
@click.argument("formula_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-size", default=3, show_default=True, type=click.IntRange(1, None))
@click.option("--budget", default=DEFAULT_BUDGET, show_default=True)
@json_option
def cmd_countermodel(formula_file: str, max_size: int, budget: int, as_json: bool) -> None:
    """Search models up to --max-size for one falsifying the formula."""
    try:
        sol = read_sol(formula_file)
        result = check_validity(sol.formula, sol.signature, max_size, budget)
    except ResourceLimit as e:
        _fail(as_json, RESOURCE, "ResourceLimit", str(e))
    except (ParseError, EvalError) as e:
        _fail(as_json, USAGE, type(e).__name__, str(e))
    if isinstance(result, Countermodel):
        _emit(
            as_json,
            {"status": "countermodel", "model": _model_record(result.model, result.assignment)},
            format_model(result.model, result.assignment).rstrip("\n"),
        )
        sys.exit(NEGATIVE)
    _emit(as_json, {"status": "valid", "max_size": max_size}, f"valid up to size {max_size}")


@main.command("separator")
@click.option("--max-size", default=3, show_default=True, type=click.IntRange(1, None))
@json_option
def cmd_separator(max_size: int, as_json: bool) -> None:
    """Search for a model where both linear readings hold but the branching one fails."""
    try:
        m = find_branching_separator(max_size)
    except NotFound as e:
        _emit(as_json, {"status": "not-found", "max_size": max_size, "kernels": kernels.IMPLEMENTATION}, str(e))
        sys.exit(NEGATIVE)
    except ValueError as e:
        _fail(as_json, USAGE, "UsageError", str(e))
    _emit(as_json, {"status": "found", "model": _model_record(m)}, format_model(m).rstrip("\n"))


@main.command("corpus")
@click.argument("manifest", required=False, type=click.Path(exists=True, dir_okay=False))
@json_option
def cmd_corpus(manifest: str | None, as_json: bool) -> None:
    """Check every entry of the corpus MANIFEST (default: the bundled one)."""
    try:
        entries = load_manifest(manifest or DEFAULT_MANIFEST)
    except (ParseError, OSError, KeyError, ValueError) as e:
        _fail(as_json, USAGE, type(e).__name__, str(e))
    report = run_corpus(entries)
    if as_json:
        for r in report.results:
            click.echo(
                json.dumps(
                    {"entry": r.name, "check": r.passed, "elaborated": r.elaborated, "detail": r.detail},
                    sort_keys=True,
                )
            )
    else:
        click.echo(report.table())
    sys.exit(OK if report.passed else NEGATIVE)


if __name__ == "__main__":  # pragma: no cover
    main()
