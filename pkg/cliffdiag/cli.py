"""Command-line interface: classify, canon, group and table."""
import json
import logging
from typing import Callable, NoReturn, Optional, Sequence, TypeVar

import click

from cliffdiag import texts
from cliffdiag.constants import (
    ENUMERATION_LIMIT,
    EXIT_DISAGREEMENT,
    EXIT_USAGE,
    LOG_LEVEL,
    LevelSpec,
)
from cliffdiag.errors import NotInHierarchy, TooLarge
from cliffdiag.functions import canon as canon_
from cliffdiag.functions import classify as classify_
from cliffdiag.functions import gate_spec
from cliffdiag.functions import group as group_
from cliffdiag.functions import table as table_

logger = logging.getLogger("cliffdiag")
RT = TypeVar("RT")

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]


def gate_options(func: Callable[..., RT]) -> Callable[..., RT]:
    """Adds the options that describe a gate."""
    options = [
        click.option("--p", "p", type=int, help="Prime qudit dimension."),
        click.option("--n", "n", type=int, help="Number of qudits."),
        click.option("--gate", help="Named gate: Z, S, T, CZ, CS, CCZ, Um:a or Pk:m."),
        click.option("--uma", help="Generator U_{m,a} as m:a1,a2,..."),
        click.option("--phase-gate", help="Phase gate P_k^(m) as k:m."),
        click.option("--phases", help="Comma-separated phases in turns (0,1/3,0)."),
        click.option(
            "--term",
            "terms",
            multiple=True,
            help="Polynomial term coeff:den_exp:e1,e2,... (repeatable).",
        ),
        click.option("--global-phase", help="Global phase added to --term gates."),
        click.option(
            "--spec",
            "spec_file",
            type=click.Path(exists=True, dir_okay=False),
            help="JSON gate specification.",
        ),
        click.option("--json", "as_json", is_flag=True, help="Print JSON."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def build_spec(
    p: Optional[int],
    n: Optional[int],
    gate: Optional[str],
    uma: Optional[str],
    phase_gate: Optional[str],
    phases: Optional[str],
    terms: Sequence[str],
    global_phase: Optional[str],
    spec_file: Optional[str],
) -> gate_spec.GateSpec:
    try:
        return gate_spec.from_options(
            p, n, gate, uma, phase_gate, phases, terms, global_phase, spec_file
        )
    except ValueError as e:
        raise click.UsageError(str(e))


def fail(message: str, code: int = EXIT_USAGE) -> NoReturn:
    click.echo(message, err=True)
    raise SystemExit(code)


def dump(data: dict) -> str:
    return json.dumps(data)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=LOG_LEVEL,
    show_default=True,
)
def main(log_level: str) -> None:
    """Clifford hierarchy levels of diagonal qudit gates."""
    logging.basicConfig(format="%(asctime)s - %(levelname)s - %(message)s")
    logger.setLevel(log_level.upper())


@main.command()
@gate_options
@click.option("--verify", is_flag=True, help="Run every classifier and compare.")
def classify(as_json: bool, verify: bool, **options) -> None:
    """Finds the hierarchy level of a gate."""
    spec = build_spec(**options)
    try:
        report = classify_.classify(spec, verify)
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(dump(report.to_json()) if as_json else report.to_text())
    if not report.agreed:
        raise SystemExit(EXIT_DISAGREEMENT)


@main.command()
@gate_options
def canon(as_json: bool, **options) -> None:
    """Prints the canonical phase polynomial of a gate."""
    spec = build_spec(**options)
    try:
        poly = canon_.canonical_form(spec)
    except NotInHierarchy as e:
        fail(texts["errors"]["not_in_hierarchy"].format(error=e))
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(dump(canon_.canon_json(poly)) if as_json else canon_.canon_text(poly))


@main.command()
@click.option("--p", "p", type=int, required=True, help="Prime qudit dimension.")
@click.option("--n", "n", type=int, default=1, show_default=True)
@click.option("--w", "w", type=int, required=True, help="Level.")
@click.option("--enumerate", "enumerate_gates", is_flag=True)
@click.option(
    "--uncorrected",
    is_flag=True,
    help="Use floor((w - wt(a))/(p-1)) without the +1 shift.",
)
@click.option("--limit", type=int, default=ENUMERATION_LIMIT, show_default=True)
@click.option("--json", "as_json", is_flag=True, help="Print JSON.")
def group(
    p: int,
    n: int,
    w: int,
    enumerate_gates: bool,
    uncorrected: bool,
    limit: int,
    as_json: bool,
) -> None:
    """Decomposes a level of diagonal gates into cyclic groups."""
    try:
        spec = LevelSpec(p, n, w)
        report = group_.group(spec, enumerate_gates, not uncorrected, limit)
    except TooLarge as e:
        fail(texts["errors"]["too_large"].format(error=e))
    except ValueError as e:
        raise click.UsageError(str(e))
    click.echo(dump(report.to_json()) if as_json else report.to_text())
    if not report.ok:
        raise SystemExit(EXIT_DISAGREEMENT)


@main.command()
@click.option("--p", "p", type=int, required=True, help="Prime qudit dimension.")
@click.option("--n", "n", type=int, default=1, show_default=True)
@click.option("--w-max", "w_max", type=int, required=True, help="Highest level.")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["csv", "json"]),
    default="csv",
    show_default=True,
)
def table(p: int, n: int, w_max: int, output_format: str) -> None:
    """Lists the generators of each level up to --w-max."""
    try:
        if output_format == "json":
            click.echo(table_.table_json(p, n, w_max))
        else:
            click.echo(table_.table_csv(p, n, w_max), nl=False)
    except ValueError as e:
        raise click.UsageError(str(e))


if __name__ == "__main__":
    main()
