"""The repo's canonical edge-list text format.

Layout: the first non-comment line is ``n m``; the next ``m`` non-comment
lines are edges ``u v`` with ``0 <= u < v < n``.  A ``#`` starts a comment
anywhere on a line.  ASCII only; LF or CRLF line endings.  Duplicate edges,
loops, and out-of-order endpoints are parse errors rather than silently
repaired input.
"""

from __future__ import annotations

import os
from .errors import ParseError
from .graph import Graph


def parse(text: str) -> Graph:
    """Parse edge-list ``text`` into a Graph, raising ParseError with position."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        hash_at = raw.find("#")
        body = raw if hash_at < 0 else raw[:hash_at]
        if not body.strip():
            continue
        fields = body.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {len(fields)} fields", lineno, 1)
        a = _int_field(fields[0], raw, lineno)
        b = _int_field(fields[1], raw, lineno)
        if header is None:
            if a < 0 or b < 0:
                raise ParseError("vertex and edge counts must be non-negative", lineno, 1)
            header = (a, b)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edges", lineno, 1)
        if a == b:
            raise ParseError(f"loop edge at vertex {a}", lineno, 1)
        if a > b:
            raise ParseError(f"edge must be written with u < v, got {a} {b}", lineno, 1)
        if not 0 <= a < n or not b < n:
            raise ParseError(f"edge ({a}, {b}) outside 0..{n - 1}", lineno, 1)
        if (a, b) in seen:
            raise ParseError(f"duplicate edge ({a}, {b})", lineno, 1)
        seen.add((a, b))
        edges.append((a, b))
    if header is None:
        raise ParseError("missing `n m` header line", 1, 1)
    if len(edges) != header[1]:
        raise ParseError(f"declared {header[1]} edges but found {len(edges)}", 1, 1)
    return Graph.from_edges(header[0], edges)


def _int_field(token: str, raw: str, lineno: int) -> int:
    try:
        if not token.isascii():
            raise ValueError
        return int(token, 10)
    except ValueError:
        col = raw.index(token) + 1
        raise ParseError(f"not a decimal integer: {token!r}", lineno, col) from None


def serialize(g: Graph, comments: tuple[str, ...] = ()) -> str:
    """Canonical text for ``g``: header then sorted edges, LF endings."""
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.edge_count}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def load(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        try:
            text = fh.read()
        except UnicodeDecodeError as exc:
            raise ParseError(f"not ASCII: {exc.reason}", 1, 1) from None
    return parse(text)


def dump(g: Graph, path: str | os.PathLike, comments: tuple[str, ...] = ()) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize(g, comments))
