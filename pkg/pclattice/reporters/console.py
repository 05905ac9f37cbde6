"""
Rich rendering of analysis reports and corpus summaries.
"""
from __future__ import annotations

from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from .models import AnalysisReport, ConditionResult, CorpusSummary


def _verdict(holds: bool) -> str:
    return "[green]yes[/green]" if holds else "[red]no[/red]"


def _witness_text(result: ConditionResult, show_witnesses: bool) -> str:
    if result.witness is None:
        return ""
    shown = result.witness_labels or [str(x) for x in result.witness]
    if not show_witnesses and len(shown) > 4:
        shown = shown[:4] + [f"... ({len(result.witness)} total)"]
    text = escape(", ".join(shown))
    return f"{result.detail}: {text}" if result.detail else text


def render_report(report: AnalysisReport, console: Console, show_witnesses: bool = False) -> None:
    heading = f"[bold]{escape(report.subject)}[/bold]"
    if report.kind == "group":
        subtitle = f"order {report.order}, {report.size} subgroups"
    else:
        subtitle = f"{report.size} elements"
    console.print(Panel.fit(heading, subtitle=subtitle))

    table = Table(show_header=True, header_style="bold")
    table.add_column("Condition")
    table.add_column("Holds", justify="center")
    table.add_column("Witness", overflow="fold")
    for result in report.conditions:
        table.add_row(result.label, _verdict(result.holds), _witness_text(result, show_witnesses))
    console.print(table)

    if not report.in_hypothesis:
        console.print("[yellow]Not modular: outside the equivalence hypothesis.[/yellow]")
    if report.agreement:
        console.print("[green]Conditions agree.[/green]")
    elif report.in_hypothesis:
        console.print("[bold red]Conditions disagree on a modular lattice.[/bold red]")
    else:
        console.print("Conditions disagree.")
    if report.classification:
        console.print(f"Ternary witness generates [bold]{report.classification}[/bold].")
    console.print(f"[dim]{report.elapsed_ms:.1f} ms[/dim]")


def render_summary(summary: CorpusSummary, console: Console) -> None:
    table = Table(title="Corpus", show_header=True, header_style="bold")
    table.add_column("Outcome")
    table.add_column("Count", justify="right")
    for source, count in summary.by_source.items():
        table.add_row(f"source: {source}", str(count))
    rows = [
        ("lattices", summary.total),
        ("modular", summary.modular),
        ("distributive", summary.distributive),
        ("pseudocomplemented", summary.pseudocomplemented),
        ("with ternary witness", summary.with_ternary_witness),
        ("witness generates M3", summary.classified_m3),
        ("witness generates M23", summary.classified_m23),
    ]
    for name, count in rows:
        table.add_row(name, str(count))
    table.add_row("violations", f"[red]{summary.violations}[/red]" if summary.violations else "0")
    table.add_row("errors", f"[red]{summary.errors}[/red]" if summary.errors else "0")
    console.print(table)
    for subject in summary.failing_subjects:
        console.print(f"  [red]•[/red] {escape(subject)}")
    console.print(f"[dim]{summary.elapsed_ms / 1000.0:.2f} s[/dim]")
