import click

import spectral_extremal
import spectral_extremal._internal.logging as internal_logging
from . import asymptotics
from . import certify
from . import graphs
from . import search
from .util import click_group, echo_json, effective_config, usage_errors

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])


@click.version_option(spectral_extremal.__version__, "-v", "--version")
@click_group(context_settings=CONTEXT_SETTINGS)
@click.option(
    "--config",
    "config_path",
    type=click.Path(dir_okay=False),
    default=None,
    help=(
        "YAML config file. Defaults to the file named by SPECTRAL_EXTREMAL_CONFIG."
        " Command line flags override its values."
    ),
)
def spx(config_path):
    """
    Spx builds, searches for and certifies the connected nonregular graphs with
    maximum degree Delta that have the largest spectral radius. Reports go to
    standard output as JSON or CSV, graphs go to files.
    """
    # no-op unless SPECTRAL_EXTREMAL_ENABLE_INTERNAL_LOG is set
    internal_logging.enable()


# Add subcommands
graphs.add_command(spx)
search.add_command(spx)
asymptotics.add_command(spx)
certify.add_command(spx)


@spx.command(name="config")
@click.pass_context
@usage_errors
def config_command(ctx):
    """
    Prints the effective configuration as JSON.
    """
    echo_json(effective_config(ctx).to_dict())


if __name__ == "__main__":
    spx()
