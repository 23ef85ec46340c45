"""Shared consoles: results on stdout, errors and spinners on stderr."""

import argparse

from rich.console import Console
from rich.markup import escape

# markup and highlighting off so results stay byte-stable
console = Console(highlight=False, markup=False, emoji=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)


def emit(text: str = "") -> None:
    console.print(text)


def emit_field(key: str, value) -> None:
    """`key: value`, or a bare `key:` when the value prints empty."""
    text = str(value)
    emit(f"{key}: {text}" if text else f"{key}:")


def emit_block(text: str) -> None:
    """Print text that already ends in a newline."""
    console.print(text, end="")


def error(message: str) -> None:
    err_console.print(f"[bold red]Error:[/] {escape(message)}")


def non_negative_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}")
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {number}")
    return number
