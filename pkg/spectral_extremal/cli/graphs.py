"""
Commands that build graphs, compute spectral radii and check single moves.
"""

from typing import List, Optional

import click
from loguru import logger

from ..constructions import extremal_graph, family_spec, g_family, h_family
from ..errors import DomainError, GraphInputError
from ..graph import degree_profile, is_connected, read_graph, write_graph
from ..spectral import compare_lambda, gap_from_perron, perron, spectral_radius_dense
from ..switching import (
    RotationMove,
    SwitchMove,
    is_proper_rotation,
    is_proper_switch,
    local_switch,
    rotate,
)
from ..util import model_to_dict
from .util import check, console, echo_json, effective_config, parse_int_list, usage_errors

_FORMATS = click.Choice(["graph6", "edges"])


@click.command()
@click.option("--delta", "-d", type=int, required=True, help="Maximum degree.")
@click.option("--n", "-n", "n", type=int, default=None, help="Order of the graph.")
@click.option(
    "--family",
    type=click.Choice(["extremal", "h", "spine"]),
    default="extremal",
    show_default=True,
    help=(
        "extremal: the extremal graph for delta 3 or 4; h: the near-regular"
        " coalescence family; spine: the clique chain with k cut vertices."
    ),
)
@click.option("--k", "-k", type=int, default=None, help="Number of cuts (spine only).")
@click.option("--p", "-p", type=int, default=None, help="Split of the spine cliques.")
@click.option("--out", "-o", type=click.Path(dir_okay=False), required=True)
@click.option("--format", "fmt", type=_FORMATS, default=None, help="Output format.")
@usage_errors
def construct(delta, n, family, k, p, out, fmt):
    """
    Builds one of the constructions and writes it as graph6 or edge list. The
    format follows the file suffix (.g6 for graph6) unless --format is given.
    """
    if family == "spine":
        if k is None:
            raise GraphInputError("The spine needs --k")
        g = g_family(family_spec(delta, p=p, k=k))
    else:
        if n is None:
            raise GraphInputError(f"The {family} family needs --n")
        g = extremal_graph(delta, n) if family == "extremal" else h_family(delta, n, p=p)
    write_graph(g, out, fmt)
    logger.debug(f"wrote {family} graph with n={g.n}, m={g.m} to {out}")
    console.print(f"Wrote a graph with [green]{g.n}[/] vertices and {g.m} edges to {out}.")


@click.command(name="lambda")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=_FORMATS, default=None, help="Input format.")
@click.option("--tol", type=float, default=None, help="Residual tolerance.")
@click.option(
    "--method",
    type=click.Choice(["auto", "power", "inverse"]),
    default="auto",
    show_default=True,
)
@click.pass_context
@usage_errors
def lambda_command(ctx, in_path, fmt, tol, method):
    """
    Prints lambda_1, the Perron vector summary and Delta - lambda_1 as JSON.
    """
    cfg = effective_config(ctx, tol=tol)
    g = read_graph(in_path, fmt)
    pd = perron(
        g,
        tol=cfg.tol,
        max_iters=cfg.max_iters,
        method=method,
        handoff_iters=cfg.power_handoff_iters,
    )
    doc = pd.to_dict()
    doc.update(
        n=g.n,
        m=g.m,
        degree_profile=model_to_dict(degree_profile(g)),
        gap=gap_from_perron(g, pd),
    )
    echo_json(doc)


def _radius(g) -> float:
    try:
        return perron(g).lambda1
    except DomainError:
        return spectral_radius_dense(g)


def _move(switch: Optional[str], rotation: Optional[str]):
    if (switch is None) == (rotation is None):
        raise GraphInputError("Give exactly one of --switch and --rotation")
    if switch is not None:
        values: List[int] = parse_int_list(switch)
        if len(values) != 4:
            raise GraphInputError("--switch takes s,t,v,u", value=switch)
        return SwitchMove(s=values[0], t=values[1], v=values[2], u=values[3])
    values = parse_int_list(rotation)
    if len(values) != 3:
        raise GraphInputError("--rotation takes u,v,w", value=rotation)
    return RotationMove(u=values[0], v=values[1], w=values[2])


@click.command(name="check-switch")
@click.option("--in", "in_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--format", "fmt", type=_FORMATS, default=None, help="Input format.")
@click.option("--switch", default=None, help="A local switching s,t,v,u.")
@click.option("--rotation", default=None, help="A rotation u,v,w.")
@click.pass_context
@usage_errors
def check_switch(ctx, in_path, fmt, switch, rotation):
    """
    Applies one local switching (remove uv, st; add sv, tu) or rotation (remove
    uv; add uw) and reports whether it is proper and how lambda_1 moved. A proper
    move that lowers lambda_1 fails the check.
    """
    cfg = effective_config(ctx)
    g = read_graph(in_path, fmt)
    move = _move(switch, rotation)
    pd = perron(g, tol=cfg.tol)
    if isinstance(move, SwitchMove):
        proper = is_proper_switch(pd, move, cfg.tie_tol)
        after = local_switch(g, move)
    else:
        proper = is_proper_rotation(pd, move, cfg.tie_tol)
        after = rotate(g, move)
    lambda_after = _radius(after)
    echo_json(
        {
            "proper": proper,
            "lambda_before": pd.lambda1,
            "lambda_after": lambda_after,
            "degrees_preserved": after.degrees() == g.degrees(),
            "connected_after": is_connected(after),
        }
    )
    check(
        not proper or compare_lambda(lambda_after, pd.lambda1, cfg.lambda_tol) >= 0,
        "[red]A proper move decreased lambda_1.[/]",
    )


def add_command(cli_group):
    cli_group.add_command(construct)
    cli_group.add_command(lambda_command)
    cli_group.add_command(check_switch)
