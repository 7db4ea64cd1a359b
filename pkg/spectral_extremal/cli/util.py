"""
Common utilities for the CLI.
"""

import functools
import sys
from typing import Any, List, Optional

import click
from loguru import logger
from rich.console import Console

from ..config import Config, load_config
from ..errors import CapabilityError, DomainError, GraphInputError
from ..util import dumps_json


console = Console(highlight=False)

# Exit code for usage errors, matching click's own.
USAGE_ERROR = 2


def click_group(*args, **kwargs):
    """
    A wrapper around click.group that allows for command shorthands as long as
    they are unambiguous. For example, `spx poly` resolves to `spx polysuite` as
    `poly` uniquely identifies that command.
    """

    class ClickAliasedGroup(click.Group):
        def get_command(self, ctx, cmd_name):
            rv = click.Group.get_command(self, ctx, cmd_name)
            if rv is not None:
                return rv

            def is_abbrev(x, y):
                # first char must match
                if x[0] != y[0]:
                    return False
                it = iter(y)
                return all(any(c == ch for c in it) for ch in x)

            matches = [x for x in self.list_commands(ctx) if is_abbrev(cmd_name, x)]

            if not matches:
                return None
            elif len(matches) == 1:
                return click.Group.get_command(self, ctx, matches[0])
            ctx.fail(f"'{cmd_name}' is ambiguous: {', '.join(sorted(matches))}")

        def resolve_command(self, ctx, args):
            # always return the full command name
            _, cmd, args = super().resolve_command(ctx, args)
            return cmd.name, cmd, args

    return click.group(*args, cls=ClickAliasedGroup, **kwargs)


def check(condition: Any, message: str) -> None:
    """
    Checks a condition and prints a message if the condition is false.

    :param condition: The condition to check.
    :param message: The message to print if the condition is false.
    """
    if not condition:
        console.print(message)
        sys.exit(1)


def usage_errors(f):
    """
    Turns input and capability errors raised by the library into exit code 2 with
    the error printed in red.
    """

    @functools.wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (CapabilityError, DomainError, FileNotFoundError, ValueError) as e:
            # GraphInputError is a ValueError
            console.print(f"[red]Error:[/] {e}")
            sys.exit(USAGE_ERROR)

    return wrapper


def effective_config(ctx: click.Context, **overrides) -> Config:
    """
    The config loaded by the group, with the command line flags that were given
    applied on top.
    """
    path = ctx.find_root().params.get("config_path")
    logger.trace(f"loading config from {path}")
    return load_config(path).updated(**overrides)


def echo_json(obj: Any) -> None:
    click.echo(dumps_json(obj))


def parse_int_list(text: Optional[str]) -> List[int]:
    """
    Parses "201,401,801" into [201, 401, 801].
    """
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise GraphInputError("Expected a comma separated list of integers", value=text)
