"""
The exhaustive oracle and the structural audit of a single graph.
"""

import click
from loguru import logger

from ..certificates import audit_forbidden
from ..constructions import extremal_graph
from ..constructions.families import DELTA3_MIN_N, DELTA4_MIN_N
from ..graph import is_isomorphic, read_graph
from ..oracle import audit_report, enumerate_extremal
from ..util import model_to_dict
from .util import check, echo_json, effective_config, usage_errors


def _known_extremal(delta: int, n: int):
    if (delta == 3 and n >= DELTA3_MIN_N) or (delta == 4 and n >= DELTA4_MIN_N):
        return extremal_graph(delta, n)
    return None


@click.command()
@click.option("--delta", "-d", type=int, required=True, help="Maximum degree.")
@click.option("--n", "-n", "n", type=int, required=True, help="Order.")
@click.option("--threads", "-t", type=int, default=None, help="Worker processes.")
@click.option(
    "--force",
    is_flag=True,
    help="Run above the configured cap. The search grows very fast with n.",
)
@click.option(
    "--verify",
    is_flag=True,
    help=(
        "Fail unless the witnesses pass the lemma audit and, where the extremal"
        " graph is known, are isomorphic to it."
    ),
)
@click.pass_context
@usage_errors
def oracle(ctx, delta, n, threads, force, verify):
    """
    Enumerates the connected nonregular graphs of order n and maximum degree delta
    and prints the largest spectral radius with all graphs attaining it, up to
    isomorphism, as JSON.
    """
    cfg = effective_config(ctx, threads=threads)
    report = enumerate_extremal(n, delta, cfg=cfg, force=force)
    echo_json(report.to_dict())
    if not verify:
        return
    graphs = report.witness_graphs()
    for g in graphs:
        audit = audit_report(g, delta)
        check(
            audit.lemmas.all_hold(),
            f"[red]Witness fails the lemma audit:[/] {audit.lemmas.details}",
        )
    known = _known_extremal(delta, n)
    if known is not None:
        check(
            len(graphs) == 1 and is_isomorphic(graphs[0], known),
            "[red]The witnesses differ from the extremal construction.[/]",
        )
        logger.info(f"oracle n={n} delta={delta}: witness matches the construction")


@click.command()
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=click.Choice(["graph6", "edges"]), default=None)
@click.option("--delta", "-d", type=int, default=None, help="Defaults to the max degree.")
@click.option(
    "--strict",
    is_flag=True,
    help="Fail when a forbidden pattern occurs or a lemma does not hold.",
)
@usage_errors
def audit(in_path, fmt, delta, strict):
    """
    Scans a graph for the forbidden patterns of its maximum degree (3 or 4) and
    runs the lemma audit on it.
    """
    g = read_graph(in_path, fmt)
    delta = g.max_degree if delta is None else delta
    violations = audit_forbidden(g, delta) if delta in (3, 4) else []
    report = audit_report(g, delta)
    doc = model_to_dict(report)
    doc["violations"] = [model_to_dict(v) for v in violations]
    doc["patterns_checked"] = delta in (3, 4)
    echo_json(doc)
    if strict:
        check(not violations, "[red]Forbidden patterns found.[/]")
        check(report.lemmas.all_hold(), "[red]A structural lemma does not hold.[/]")


def add_command(cli_group):
    cli_group.add_command(oracle)
    cli_group.add_command(audit)
