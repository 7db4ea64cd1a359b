# flake8: noqa
"""
The command line interface. Installing the library gives a tool called `spx` that
builds the constructions, runs the oracle and the limit checks, and evaluates the
certificates.
"""

from .cli import spx
