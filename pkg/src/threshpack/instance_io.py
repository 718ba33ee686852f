"""Plain-text BPPC instance files.

Layout (whitespace separated, one record per line)::

    n B
    i w_i c_1 c_2 ... c_m      (one line per item i = 1..n)

``c_*`` are the items in conflict with ``i`` that have a larger index, so each
conflict appears exactly once.  The canonical writer uses single spaces,
ascending conflict lists and LF line endings.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .bppc import BppcInstance
from .graph import Graph

__all__ = ["InstanceFormatError", "format_instance", "parse_instance", "read_instance", "write_instance"]


class InstanceFormatError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_instance(inst: BppcInstance) -> str:
    adj = inst.graph.adjacency
    out = [f"{inst.n} {inst.capacity}"]
    for i in range(inst.n):
        later = np.flatnonzero(adj[i, i + 1 :]) + i + 2
        fields = [str(i + 1), str(inst.weights[i])] + [str(int(c)) for c in later]
        out.append(" ".join(fields))
    return "\n".join(out) + "\n"


def _ints(tokens: list[str], line: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceFormatError(line, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> BppcInstance:
    """Parse an instance; malformed input raises :class:`InstanceFormatError` naming the line."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise InstanceFormatError(1, "empty file")
    header = _ints(lines[0].split(), 1)
    if len(header) != 2:
        raise InstanceFormatError(1, "header must be 'n B'")
    n, capacity = header
    if n < 0 or capacity < 0:
        raise InstanceFormatError(1, "n and B must be nonnegative")
    if len(lines) != n + 1:
        raise InstanceFormatError(min(len(lines), n + 1) + 1 if len(lines) <= n else n + 2,
                                  f"expected {n} item lines, found {len(lines) - 1}")

    weights = []
    adj = np.zeros((n, n), dtype=bool)
    for i in range(1, n + 1):
        lineno = i + 1
        values = _ints(lines[i].split(), lineno)
        if len(values) < 2:
            raise InstanceFormatError(lineno, "item line needs 'i w_i'")
        if values[0] != i:
            raise InstanceFormatError(lineno, f"expected item {i}, found {values[0]}")
        w = values[1]
        if w < 0 or w > capacity:
            raise InstanceFormatError(lineno, f"weight {w} outside [0, {capacity}]")
        weights.append(w)
        for c in values[2:]:
            if not i < c <= n:
                raise InstanceFormatError(lineno, f"conflict {c} must lie in {i + 1}..{n}")
            if adj[i - 1, c - 1]:
                raise InstanceFormatError(lineno, f"conflict {c} listed twice")
            adj[i - 1, c - 1] = adj[c - 1, i - 1] = True
    return BppcInstance(Graph._trusted(adj), tuple(weights), capacity)


def read_instance(path: str | os.PathLike) -> BppcInstance:
    return parse_instance(Path(path).read_text(encoding="utf-8"))


def write_instance(inst: BppcInstance, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_instance(inst))
