"""DIMACS-style instance files.

::

    c optional comments, anywhere
    p ecoc <n> <m> <l> <k>
    e <u> <v>        (m lines, 1-based vertex ids)

Internally vertex ``i`` is file vertex ``i + 1``. When a graph whose ids are
not ``0..n-1`` is written (a kernel, typically), its vertices are renumbered
in ascending order and ``c vertex <new> <old>`` comments record the mapping.
"""

from __future__ import annotations

from .graph import Graph, Instance


class InstanceParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _ints(tokens: list[str], lineno: int, what: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InstanceParseError(lineno, f"non-integer field in {what}") from None


def parse_instance(text: str) -> Instance:
    header = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c":
            continue
        tokens = line.split()
        tag = tokens[0]
        if tag == "p":
            if header is not None:
                raise InstanceParseError(lineno, f"second header (first on line {header_line})")
            if len(tokens) != 6 or tokens[1] != "ecoc":
                raise InstanceParseError(lineno, "malformed header, expected 'p ecoc <n> <m> <l> <k>'")
            n, m, l, k = _ints(tokens[2:], lineno, "header")
            if n < 0 or m < 0:
                raise InstanceParseError(lineno, "n and m must be non-negative")
            if l < 1:
                raise InstanceParseError(lineno, f"l must be at least 1, got {l}")
            if k < 0:
                raise InstanceParseError(lineno, f"k must be non-negative, got {k}")
            header = (n, m, l, k)
            header_line = lineno
        elif tag == "e":
            if header is None:
                raise InstanceParseError(lineno, "edge line before the 'p ecoc' header")
            if len(tokens) != 3:
                raise InstanceParseError(lineno, "malformed edge, expected 'e <u> <v>'")
            u, v = _ints(tokens[1:], lineno, "edge")
            n = header[0]
            for w in (u, v):
                if not 1 <= w <= n:
                    raise InstanceParseError(lineno, f"vertex id {w} outside 1..{n}")
            if u == v:
                raise InstanceParseError(lineno, f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InstanceParseError(lineno, f"duplicate edge {u}-{v}")
            seen.add(key)
            edges.append((u - 1, v - 1))
        else:
            raise InstanceParseError(lineno, f"unknown line type {tag!r}")
    if header is None:
        raise InstanceParseError(max(lineno, 1), "missing 'p ecoc' header")
    n, m, l, k = header
    if len(edges) != m:
        raise InstanceParseError(max(lineno, 1), f"header declares {m} edges, found {len(edges)}")
    return Instance(Graph.from_edges(n, edges), k, l)


def emit_instance(inst: Instance) -> str:
    g = inst.graph
    order = {v: i + 1 for i, v in enumerate(g.vertices)}
    edges = sorted((order[u], order[v]) for u, v in g.edges())
    lines = [f"p ecoc {g.n} {len(edges)} {inst.l} {inst.k}"]
    if any(v != i for i, v in enumerate(g.vertices)):
        lines.extend(f"c vertex {new} {v + 1}" for v, new in order.items())
    lines.extend(f"e {u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
