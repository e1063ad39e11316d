"""Edge-list and graph6 readers and writers.

Edge-list format: first non-comment line ``n m``, then exactly ``m`` lines
``u v`` with ``0 <= u < v < n``. Lines starting with ``#`` are ignored.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Iterable, Iterator, Union

from graphpow.graph import Graph, from_edges

PathLike = Union[str, os.PathLike]

GRAPH6_HEADER = ">>graph6<<"


class FormatError(ValueError):
    """Malformed graph file; the message names the offending line."""


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def write_edge_list(g: Graph, path: PathLike) -> None:
    Path(path).write_text(format_edge_list(g), encoding="ascii")


def _ints(text: str, lineno: int, count: int) -> list[int]:
    parts = text.split(" ")
    if len(parts) != count or not all(p.isdigit() for p in parts):
        raise FormatError(f"line {lineno}: expected {count} non-negative integers separated by single spaces, got {text!r}")
    return [int(p) for p in parts]


def parse_edge_list(text: str) -> Graph:
    header = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\r")
        if line.startswith("#") or not line.strip():
            continue
        if header is None:
            header = _ints(line, lineno, 2)
            continue
        n, m = header
        u, v = _ints(line, lineno, 2)
        if u >= v:
            raise FormatError(f"line {lineno}: edge {u} {v} must satisfy u < v")
        if v >= n:
            raise FormatError(f"line {lineno}: vertex {v} out of range for n={n}")
        if (u, v) in seen:
            raise FormatError(f"line {lineno}: duplicate edge {u} {v}")
        if len(edges) == m:
            raise FormatError(f"line {lineno}: more edges than the declared m={m}")
        seen.add((u, v))
        edges.append((u, v))
    if header is None:
        raise FormatError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise FormatError(f"line {lineno if text else 1}: header declares m={m} but {len(edges)} edges follow")
    return from_edges(n, edges)


def read_edge_list(path: PathLike) -> Graph:
    try:
        text = Path(path).read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not an ascii edge list ({exc})") from None
    try:
        return parse_edge_list(text)
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


# --- graph6 ----------------------------------------------------------------------

def _size_bytes(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative vertex count")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"graph6 cannot encode n={n}")


def encode_graph6(g: Graph) -> str:
    """graph6 string (no header, no newline); padding bits are zero."""
    n = g.n
    out = bytearray(_size_bytes(n))
    acc = 0
    nbits = 0
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def decode_graph6(line: str, lineno: int = 1) -> Graph:
    s = line.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii", errors="replace")
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise FormatError(f"line {lineno}: byte {byte!r} at position {pos} outside [63, 126]")
    if not data:
        raise FormatError(f"line {lineno}: empty graph6 record")
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError(f"line {lineno}: truncated size header")
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        if len(vals) < 4:
            raise FormatError(f"line {lineno}: truncated size header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    need = n * (n - 1) // 2
    if len(body) * 6 < need:
        raise FormatError(f"line {lineno}: truncated bit vector ({len(body) * 6} bits, need {need})")
    if len(body) > (need + 5) // 6:
        raise FormatError(f"line {lineno}: {len(body) - (need + 5) // 6} trailing bytes after bit vector")
    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if body[bit // 6] >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    return Graph(n, rows, _trusted=True)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for lineno, line in enumerate(lines, start=1):
        if line.strip():
            yield decode_graph6(line, lineno)


def read_graph6(path: PathLike) -> list[Graph]:
    """All graphs in a graph6 file, one per line; an empty file gives ``[]``."""
    with open(path, encoding="ascii", errors="replace") as fh:
        try:
            return list(iter_graph6(fh))
        except FormatError as exc:
            raise FormatError(f"{path}: {exc}") from None


def write_graph6(graphs: Union[Graph, Iterable[Graph]], path: PathLike) -> None:
    if isinstance(graphs, Graph):
        graphs = [graphs]
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


def read_graph(path: PathLike) -> Graph:
    """Read a single graph, picking the format from the suffix (``.g6`` = graph6)."""
    if str(path).endswith((".g6", ".graph6")):
        graphs = read_graph6(path)
        if len(graphs) != 1:
            raise FormatError(f"{path}: expected exactly one graph, found {len(graphs)}")
        return graphs[0]
    return read_edge_list(path)


def write_graph(g: Graph, path: PathLike) -> None:
    if str(path).endswith((".g6", ".graph6")):
        write_graph6(g, path)
    else:
        write_edge_list(g, path)
