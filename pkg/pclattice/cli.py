from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import NoReturn, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.table import Table

from pclattice.core.errors import LatticeError, OutOfRange
from pclattice.core.io import dump_lattice, load_lattice
from pclattice.database.database import DEFAULT_DB_PATH, DatabaseManager
from pclattice.database.repository import ReportRepository
from pclattice.generators.corpus import CorpusSpec
from pclattice.generators.divisors import divisor_lattice
from pclattice.generators.fixtures import fixture
from pclattice.generators.random_lattice import random_lattice
from pclattice.groups.abelian import DEFAULT_MAX_ORDER, AbelianGroupSpec, subgroup_lattice
from pclattice.groups.theorem3 import theorem3_report
from pclattice.patterns.harness import CorpusRun, run_corpus
from pclattice.patterns.theorem1 import theorem1_report
from pclattice.reporters.console import render_report, render_summary
from pclattice.reporters.dot import hasse_dot
from pclattice.reporters.models import AnalysisReport, report_to_json

app = typer.Typer(add_completion=False)
console = Console()

EXIT_VIOLATION = 1
EXIT_INVALID = 2


def _fail(message: str) -> NoReturn:
    console.print(f"[red]{escape(message)}[/red]")
    raise typer.Exit(code=EXIT_INVALID)


def _store(report: AnalysisReport, db_path: Path, quiet: bool) -> None:
    with DatabaseManager(db_path=db_path).session() as db:
        report_id = ReportRepository(db).store_report(report)
    if not quiet:
        console.print(f"[blue]Stored report in database: {report_id}[/blue]")


def _emit(report: AnalysisReport, as_json: bool, witness: bool) -> None:
    if as_json:
        typer.echo(report_to_json(report, include_witnesses=witness))
    else:
        render_report(report, console, show_witnesses=witness)


@app.callback(invoke_without_command=True)
def main(
    ctx: typer.Context,
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log search details."),
):
    """
    Pseudocomplemented modular lattices: checks, generators and corpus runs.
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )
    if ctx.invoked_subcommand is None:
        typer.echo("Use 'pc-lattice --help' to see available commands.")
        raise typer.Exit()


@app.command()
def check(
    path: Path = typer.Argument(..., help="Lattice file (JSON cover list)."),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON."),
    witness: bool = typer.Option(False, "--witness", help="Include full embeddings and triples."),
    store: bool = typer.Option(False, "--store", help="Store the report in the history database."),
    db_path: Path = typer.Option(Path(DEFAULT_DB_PATH), "--db", help="History database file."),
):
    """
    Check one lattice: modularity, distributivity and the three equivalent conditions.
    """
    try:
        lattice = load_lattice(path)
        report = theorem1_report(lattice, subject=path.name)
    except (LatticeError, ValidationError) as e:
        _fail(f"{path}: {e}")
    _emit(report, as_json, witness)
    if store:
        _store(report, db_path, quiet=as_json)


@app.command()
def group(
    factors: str = typer.Argument(..., help="Cyclic factor orders, comma separated (e.g. 2,4)."),
    max_order: int = typer.Option(DEFAULT_MAX_ORDER, "--max-order", help="Largest group order accepted."),
    dot: Optional[Path] = typer.Option(None, "--dot", help="Also write the subgroup lattice as DOT."),
    as_json: bool = typer.Option(False, "--json", help="Print the report as JSON."),
    witness: bool = typer.Option(False, "--witness", help="Include full embeddings and triples."),
    store: bool = typer.Option(False, "--store", help="Store the report in the history database."),
    db_path: Path = typer.Option(Path(DEFAULT_DB_PATH), "--db", help="History database file."),
):
    """
    Check a finite abelian group: the five equivalent conditions on G and L(G).
    """
    try:
        spec = AbelianGroupSpec.parse(factors, max_order=max_order)
        report = theorem3_report(spec)
        if dot is not None:
            dot.parent.mkdir(parents=True, exist_ok=True)
            dot.write_text(hasse_dot(subgroup_lattice(spec), name=f"L({spec.name})"), encoding="utf-8")
    except (LatticeError, ValidationError) as e:
        _fail(str(e))
    _emit(report, as_json, witness)
    if dot is not None and not as_json:
        console.print(f"[green]Wrote DOT to {dot}[/green]")
    if store:
        _store(report, db_path, quiet=as_json)


@app.command()
def gen(
    name: Optional[str] = typer.Argument(None, help="Fixture: M3, M23, N5, chain(k) or boolean(k)."),
    divisors: Optional[int] = typer.Option(None, "--divisors", help="Divisor lattice of N."),
    random: bool = typer.Option(False, "--random", help="Seeded random lattice."),
    size: int = typer.Option(30, "--size", help="Size of the random lattice."),
    seed: int = typer.Option(0, "--seed", help="Seed of the random lattice."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write to file instead of stdout."),
):
    """
    Emit a lattice in the JSON cover-list format.
    """
    chosen = sum([name is not None, divisors is not None, random])
    if chosen != 1:
        _fail("give exactly one of NAME, --divisors or --random")
    try:
        if name is not None:
            lattice = fixture(name)
        elif divisors is not None:
            lattice = divisor_lattice(divisors)
        else:
            lattice = random_lattice(size, seed)
    except LatticeError as e:
        _fail(str(e))

    data = dump_lattice(lattice)
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(data, encoding="utf-8")
        console.print(f"[green]Wrote {lattice.size}-element lattice to {output}[/green]")
    else:
        typer.echo(data)


def _dump_failures(run: CorpusRun, path: Path) -> None:
    entries = []
    for failure in run.failures:
        entries.append({
            "source": failure.item.source,
            "name": failure.item.name,
            "lattice": json.loads(dump_lattice(failure.item.lattice)),
            "report": failure.report.model_dump(mode="json") if failure.report else None,
            "error": failure.error,
        })
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(entries, indent=2), encoding="utf-8")


@app.command()
def corpus(
    max_size: Optional[int] = typer.Option(None, "--max-size", help="Enumerate all lattices up to this size (<= 8)."),
    divisors: int = typer.Option(0, "--divisors", help="Divisor lattices of 1..N."),
    random: int = typer.Option(0, "--random", help="Number of random lattices."),
    modular: int = typer.Option(0, "--modular", help="Number of random modular lattices."),
    size: int = typer.Option(30, "--size", help="Largest random (and random modular) lattice size."),
    seed: int = typer.Option(0, "--seed", help="Seed of the first random lattice."),
    groups: int = typer.Option(0, "--groups", help="Subgroup lattices of all abelian groups up to this order."),
    dump: Path = typer.Option(Path("corpus-failures.json"), "--dump", help="Where failing lattices are written."),
    as_json: bool = typer.Option(False, "--json", help="Print the summary as JSON."),
):
    """
    Run the three-way check over a corpus. Exit 1 if any modular lattice disagrees.
    """
    if max_size is None:
        max_size = 0 if (divisors or random or modular or groups) else 7
    try:
        spec = CorpusSpec.checked(
            max_exhaustive_size=max_size,
            random_count=random,
            modular_count=modular,
            random_size=size,
            seed=seed,
            divisor_limit=divisors,
            group_order_limit=groups,
        )
    except OutOfRange as e:
        _fail(str(e))

    columns = [SpinnerColumn(), TextColumn("{task.description}"), BarColumn(), MofNCompleteColumn(), TimeElapsedColumn()]
    with Progress(*columns, console=console, transient=True, disable=as_json) as progress:
        task = progress.add_task("corpus", total=None)

        def advance(item, report):
            progress.update(task, advance=1, description=f"{item.source}: {item.name}")

        try:
            run = run_corpus(spec, on_item=advance)
        except LatticeError as e:
            _fail(str(e))

    if as_json:
        typer.echo(run.summary.model_dump_json(indent=2))
    else:
        render_summary(run.summary, console)

    if not run.ok:
        _dump_failures(run, dump)
        if not as_json:
            console.print(f"[red]Wrote {len(run.failures)} failing lattices to {dump}[/red]")
        raise typer.Exit(code=EXIT_VIOLATION)


@app.command()
def export(
    path: Path = typer.Argument(..., help="Lattice file (JSON cover list)."),
    fmt: str = typer.Option("dot", "--format", "-f", help="Output format: dot."),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write to file instead of stdout."),
):
    """
    Export a lattice's Hasse diagram.
    """
    if fmt.lower() != "dot":
        _fail(f"unsupported format {fmt!r}; expected dot")
    try:
        lattice = load_lattice(path)
    except (LatticeError, ValidationError) as e:
        _fail(f"{path}: {e}")

    data = hasse_dot(lattice, name=path.stem)
    if output:
        output.parent.mkdir(parents=True, exist_ok=True)
        output.write_text(data, encoding="utf-8")
        console.print(f"[green]Wrote DOT to {output}[/green]")
    else:
        typer.echo(data, nl=False)


@app.command()
def history(
    db_path: Path = typer.Option(Path(DEFAULT_DB_PATH), "--db", help="History database file."),
    limit: int = typer.Option(20, "--limit", help="Number of reports listed."),
    kind: Optional[str] = typer.Option(None, "--kind", help="Only lattice or group reports."),
    show: Optional[str] = typer.Option(None, "--show", help="Print one stored report by id."),
    as_json: bool = typer.Option(False, "--json", help="Print as JSON."),
):
    """
    List stored reports.
    """
    with DatabaseManager(db_path=db_path).session() as db:
        repo = ReportRepository(db)
        if show is not None:
            report = repo.report_by_id(show)
            if report is None:
                _fail(f"no stored report {show}")
            _emit(report, as_json, witness=True)
            return

        summaries = repo.recent_reports(limit=limit, kind=kind)
        stats = repo.history_stats()

    if as_json:
        typer.echo(json.dumps({
            "stats": stats.model_dump(mode="json"),
            "reports": [s.model_dump(mode="json") for s in summaries],
        }, indent=2))
        return

    table = Table(show_header=True, header_style="bold")
    for column in ("Id", "When", "Subject", "Kind", "Size", "Agree"):
        table.add_column(column)
    for s in summaries:
        table.add_row(s.report_id[:8], s.created_at.strftime("%Y-%m-%d %H:%M"), s.subject, s.kind,
                      str(s.size), "[green]yes[/green]" if s.agreement else "[red]no[/red]")
    console.print(table)
    console.print(f"{stats.total_reports} stored, {stats.violations} violations")


if __name__ == "__main__":
    app()
