"""
Numerical certificates: polynomial signs and the quadratic form identities.
"""

import click
from rich.table import Table

from ..certificates import (
    delta3_pair_report,
    identity_suite,
    pattern_hosts,
    polynomial_suite,
    quadratic_form_identities,
)
from ..util import model_to_dict
from .util import check, console, echo_json, usage_errors

# Largest identity residual that still counts as exact.
IDENTITY_TOL = 1e-8


@click.command()
@usage_errors
def polysuite():
    """
    Evaluates the sign claims on f, g and h and the maximum degree 3 coefficient
    comparison, and prints the reports as JSON.
    """
    reports = polynomial_suite()
    pair = delta3_pair_report()
    holds = all(r.holds for r in reports) and pair.holds
    echo_json(
        {
            "polynomials": [r.to_dict() for r in reports],
            "delta3_pair": pair.to_dict(),
            "all_hold": holds,
        }
    )
    check(holds, "[red]A sign claim does not hold.[/]")


@click.command()
@click.option(
    "--pattern",
    type=click.Choice(["D2", "M1", "M2", "M3", "M4"]),
    default=None,
    help="Only this pattern; all of them by default.",
)
@click.option("--table", is_flag=True, help="Print a table instead of JSON.")
@usage_errors
def identities(pattern, table):
    """
    Checks the quadratic form identities of the replacements on the built-in
    hosts.
    """
    if pattern is None:
        reports = identity_suite()
    else:
        reports = [quadratic_form_identities(h) for h in pattern_hosts(pattern)]
    if table:
        t = Table(title="Identity residuals", show_lines=False)
        for column in ("pattern", "host", "lambda_1", "max residual", "norm excess"):
            t.add_column(column)
        for r in reports:
            t.add_row(
                r.name,
                r.variant,
                f"{r.lambda1:.12f}",
                f"{r.max_residual:.2e}",
                f"{r.norm_excess:.3e}",
            )
        console.print(t)
    else:
        echo_json({"reports": [model_to_dict(r) for r in reports]})
    for r in reports:
        check(r.hypothesis_met, f"[red]{r.name}/{r.variant}: label classes differ.[/]")
        check(
            r.max_residual <= IDENTITY_TOL,
            f"[red]{r.name}/{r.variant}: residual {r.max_residual:.2e}.[/]",
        )


def add_command(cli_group):
    cli_group.add_command(polysuite)
    cli_group.add_command(identities)
