"""Presentation file language: parser, builder and command runner."""

from .ast import PresentationFile
from .builder import Workspace, build, parse_order_clause
from .commands import CommandRunner, RunOptions, overall_exit, render_report, select_commands
from .parser import parse, parse_expression, parse_file

__all__ = [
    "PresentationFile",
    "Workspace",
    "build",
    "parse_order_clause",
    "CommandRunner",
    "RunOptions",
    "overall_exit",
    "render_report",
    "select_commands",
    "parse",
    "parse_expression",
    "parse_file",
]
