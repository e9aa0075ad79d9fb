"""
Text formats for hypergraphs and witnesses.

Hypergraph file ("kuh 1"):
    kuh 1
    k n m
    one line per edge: k increasing ids, lines in increasing colex rank

Witness file ("kuw 1"):
    kuw 1
    k
    one line per part: its size, then its increasing ids

Lines end with "\\n" and carry no trailing whitespace. Parsing is strict.
"""

from __future__ import annotations

import re
from typing import TYPE_CHECKING, TextIO

import numpy as np

from src.core.combinatorics import binomial, colex_rank
from src.core.errors import FormatError, InstanceTooLarge, InvalidArguments
from src.core.hypergraph import Hypergraph


if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence


HYPERGRAPH_MAGIC = "kuh 1"
WITNESS_MAGIC = "kuw 1"

_DECIMAL = re.compile(r"^(0|[1-9]\d*)$")


def _naturals(line: str, number: int, expected: int | None = None) -> list[int]:
    """Split a line into decimal naturals separated by single spaces."""
    fields = line.split(" ")
    if any(not _DECIMAL.match(field) for field in fields):
        raise FormatError(f"expected space-separated decimals, got {line!r}", number)
    if expected is not None and len(fields) != expected:
        raise FormatError(f"expected {expected} numbers, got {len(fields)}", number)
    return [int(field) for field in fields]


def _lines(text: str) -> list[str]:
    if not text.endswith("\n"):
        raise FormatError("input must end with a newline")
    return text[:-1].split("\n")


def iter_hypergraph_lines(hypergraph: Hypergraph) -> Iterable[str]:
    """Yield the lines of a hypergraph file without newlines."""
    yield HYPERGRAPH_MAGIC
    yield f"{hypergraph.k} {hypergraph.n} {hypergraph.m}"
    for rows in hypergraph.iter_edge_rows():
        for row in rows.tolist():
            yield " ".join(map(str, row))


def write_hypergraph(hypergraph: Hypergraph, stream: TextIO) -> None:
    """Write a hypergraph file to an open text stream."""
    for line in iter_hypergraph_lines(hypergraph):
        stream.write(line + "\n")


def render_hypergraph(hypergraph: Hypergraph) -> str:
    """Render a hypergraph file as a string."""
    return "".join(line + "\n" for line in iter_hypergraph_lines(hypergraph))


def parse_hypergraph(text: str, backend: str | None = None) -> Hypergraph:
    """
    Parse a hypergraph file.

    Args:
        text: File contents
        backend: Storage backend override

    Returns:
        The hypergraph

    Raises:
        FormatError: On any deviation from the format, including duplicate,
            out-of-range or out-of-order edge lines
    """
    lines = _lines(text)
    if lines[0] != HYPERGRAPH_MAGIC:
        raise FormatError(f"expected magic {HYPERGRAPH_MAGIC!r}", 1)
    if len(lines) < 2:
        raise FormatError("missing header line", 2)

    k, n, m = _naturals(lines[1], 2, expected=3)
    if k < 1:
        raise FormatError("uniformity must be at least 1", 2)
    try:
        Hypergraph.check_shape(n, k)
    except (InvalidArguments, InstanceTooLarge) as e:
        raise FormatError(str(e), 2) from e
    if m > binomial(n, k):
        raise FormatError(f"m={m} exceeds binom({n},{k})", 2)
    if len(lines) != m + 2:
        raise FormatError(f"header announces {m} edges, found {len(lines) - 2}")

    ranks = np.empty(m, dtype=np.int64)
    previous = -1
    for offset, line in enumerate(lines[2:]):
        number = offset + 3
        row = _naturals(line, number, expected=k)
        if row[-1] >= n:
            raise FormatError(f"vertex {row[-1]} out of range for n={n}", number)
        if any(a >= b for a, b in zip(row, row[1:], strict=False)):
            raise FormatError("ids must be strictly increasing", number)
        rank = colex_rank(row)
        if rank == previous:
            raise FormatError("duplicate edge", number)
        if rank < previous:
            raise FormatError("edges must be sorted by colex rank", number)
        ranks[offset] = rank
        previous = rank

    try:
        return Hypergraph.from_ranks(n, k, ranks, backend)
    except (InvalidArguments, InstanceTooLarge) as e:
        raise FormatError(str(e), 2) from e


def render_witness(parts: Sequence[Sequence[int]]) -> str:
    """Render a witness file as a string."""
    lines = [WITNESS_MAGIC, str(len(parts))]
    for part in parts:
        ids = sorted(part)
        lines.append(" ".join(map(str, [len(ids), *ids])))
    return "".join(line + "\n" for line in lines)


def parse_witness(text: str) -> list[tuple[int, ...]]:
    """
    Parse a witness file.

    Overlapping parts are syntactically valid; the verifier reports them.

    Args:
        text: File contents

    Returns:
        The parts, in file order

    Raises:
        FormatError: On any deviation from the format
    """
    lines = _lines(text)
    if lines[0] != WITNESS_MAGIC:
        raise FormatError(f"expected magic {WITNESS_MAGIC!r}", 1)
    if len(lines) < 2:
        raise FormatError("missing part count", 2)

    (k,) = _naturals(lines[1], 2, expected=1)
    if len(lines) != k + 2:
        raise FormatError(f"header announces {k} parts, found {len(lines) - 2}")

    parts: list[tuple[int, ...]] = []
    for offset, line in enumerate(lines[2:]):
        number = offset + 3
        size, *ids = _naturals(line, number)
        if size != len(ids):
            raise FormatError(f"part announces {size} ids, found {len(ids)}", number)
        if any(a >= b for a, b in zip(ids, ids[1:], strict=False)):
            raise FormatError("ids must be strictly increasing", number)
        parts.append(tuple(ids))
    return parts
