"""Canonical textual form of soft numbers: ``<a>z0 + <b>``.

The printer always emits both terms (``0z0 + 3``, ``2z0 + 0``); the parser
additionally accepts a lone real term (``3``), a lone soft term (``2z0``),
optional whitespace, and a ``-`` joiner folding into the real term's sign.
"""

from __future__ import annotations

import re

from .core import SoftNumber


class SoftParseError(ValueError):
    """Malformed soft-number text; ``position`` is the 0-based offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def format_coefficient(value: float) -> str:
    """Shortest round-trip decimal; integral values drop the trailing '.0'."""
    if value == 0.0:
        return "0"
    if value == int(value) and abs(value) < 1e16:
        return str(int(value))
    return repr(value)


def format_soft_number(p: SoftNumber) -> str:
    return f"{format_coefficient(p.soft)}z0 + {format_coefficient(p.real)}"


_NUMBER = r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_NUMBER_RE = re.compile(_NUMBER)
_WS_RE = re.compile(r"\s*")


def parse_soft_number(text: str) -> SoftNumber:
    """Parse the canonical form and its accepted variants."""
    pos = _WS_RE.match(text).end()
    m = _NUMBER_RE.match(text, pos)
    if m is None:
        raise SoftParseError("expected a decimal coefficient", pos)
    first = float(m.group())
    pos = _WS_RE.match(text, m.end()).end()

    if not text.startswith("z0", pos):
        # Lone real term.
        if pos != len(text):
            raise SoftParseError("unexpected trailing text", pos)
        return SoftNumber(0.0, first)

    pos = _WS_RE.match(text, pos + 2).end()
    if pos == len(text):
        return SoftNumber(first, 0.0)

    joiner = text[pos]
    if joiner not in "+-":
        raise SoftParseError("expected '+' or '-' before the real term", pos)
    pos = _WS_RE.match(text, pos + 1).end()
    m = _NUMBER_RE.match(text, pos)
    if m is None:
        raise SoftParseError("expected a decimal real term", pos)
    real = float(m.group())
    if joiner == "-":
        real = -real
    pos = _WS_RE.match(text, m.end()).end()
    if pos != len(text):
        raise SoftParseError("unexpected trailing text", pos)
    return SoftNumber(first, real)
