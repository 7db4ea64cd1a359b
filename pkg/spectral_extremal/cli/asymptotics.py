"""
Limit tables of the scaled gap and the counterexample search.
"""

from pathlib import Path

import click

from ..analysis import LIMIT_CSV_HEADER, find_counterexample, limit_report
from ..util import dumps_csv, dumps_json
from .util import check, echo_json, effective_config, parse_int_list, usage_errors


@click.command()
@click.option("--delta", "-d", type=int, required=True, help="Maximum degree.")
@click.option(
    "--ns",
    required=True,
    help="Strictly increasing orders, comma separated, e.g. 201,401,801,1601.",
)
@click.option("--threads", "-t", type=int, default=None, help="Worker processes.")
@click.option("--band", type=float, default=None, help="Relative tolerance band.")
@click.option(
    "--verdict-json",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write the verdict as JSON to this file.",
)
@click.pass_context
@usage_errors
def limits(ctx, delta, ns, threads, band, verdict_json):
    """
    Prints the CSV table of n^2 (Delta - lambda_1), normalized, against the known
    limit or lim sup bound, and fails when the verdict is negative.
    """
    cfg = effective_config(ctx, threads=threads)
    if band is not None:
        cfg = cfg.updated(limit_bands={**cfg.limit_bands, "limit": band})
    report = limit_report(delta, parse_int_list(ns), cfg=cfg)
    click.echo(dumps_csv(LIMIT_CSV_HEADER, report.csv_rows()), nl=False)
    if verdict_json:
        doc = {
            "delta": report.delta,
            "kind": report.kind,
            "target": report.target,
            "band": report.band,
            "monotone": report.monotone,
            "within_band": report.within_band,
            "verdict": report.verdict,
        }
        Path(verdict_json).write_text(dumps_json(doc) + "\n")
    check(
        report.verdict,
        f"[red]The {report.kind} check for delta={delta} failed.[/]",
    )


@click.command()
@click.option("--delta", "-d", type=int, default=53, show_default=True)
@click.option(
    "--ks",
    default="200,350,500",
    show_default=True,
    help="Numbers of cliques to try, comma separated.",
)
@usage_errors
def counterexample(delta, ks):
    """
    Searches the pendant coalescence family for a graph with Delta - lambda_1 below
    sqrt(Delta - delta) / (n D) and prints its report as JSON.
    """
    report = find_counterexample(delta, parse_int_list(ks))
    check(report is not None, f"[red]No violation for delta={delta} and k in {ks}.[/]")
    echo_json(report)
    check(report.diameter_bound_holds, "[red]The diameter bound does not hold.[/]")


def add_command(cli_group):
    cli_group.add_command(limits)
    cli_group.add_command(counterexample)
