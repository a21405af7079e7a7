"""Simple undirected graphs on 1-indexed vertices, plus the named families.

Provides the paired-clique graphs T_k, circulant graphs, seeded random
graphs, and an edge-list file format.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import ParseError, UnknownStateError, ValidationError
from .f2linalg import F2Matrix


@dataclass(frozen=True)
class Graph:
    """Graph on vertices 1..n stored as a symmetric GF(2) adjacency matrix."""

    n: int
    adjacency: F2Matrix

    def __post_init__(self):
        a = self.adjacency
        if self.n < 1:
            raise ValidationError("graph needs at least one vertex")
        if a.n_rows != self.n or a.n_cols != self.n:
            raise ValidationError("adjacency must be n x n")
        for i in range(self.n):
            if (a.rows[i] >> i) & 1:
                raise ValidationError(f"self-loop at vertex {i + 1}")
            for j in range(i + 1, self.n):
                if ((a.rows[i] >> j) & 1) != ((a.rows[j] >> i) & 1):
                    raise ValidationError("adjacency must be symmetric")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted (u, v) pairs with u < v, lexicographic order."""
        out = []
        for i in range(self.n):
            row = self.adjacency.rows[i] >> (i + 1)
            j = i + 1
            while row:
                if row & 1:
                    out.append((i + 1, j + 1))
                row >>= 1
                j += 1
        return tuple(out)

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValidationError(f"vertex {v} out of range")
        return self.adjacency.rows[v - 1].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency.get(u, v))

    def with_edge_toggled(self, u: int, v: int) -> Graph:
        """Copy with edge {u, v} flipped. Used by the hill climber."""
        if u == v:
            raise ValidationError("cannot toggle a self-loop")
        rows = list(self.adjacency.rows)
        rows[u - 1] ^= 1 << (v - 1)
        rows[v - 1] ^= 1 << (u - 1)
        return Graph(self.n, F2Matrix(self.n, self.n, tuple(rows)))


def graph_from_edges(n: int, edges) -> Graph:
    """Graph from an iterable of (u, v) pairs; rejects loops and duplicates."""
    rows = [0] * n
    seen = set()
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValidationError(f"edge ({u}, {v}) out of range 1..{n}")
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValidationError(f"duplicate edge {key}")
        seen.add(key)
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, F2Matrix(n, n, tuple(rows)))


def make_turan_pair_graph(k: int) -> Graph:
    """Two k-cliques joined by a perfect matching.

    Vertices 1..k form one clique, k+1..2k the other, and vertex i is
    matched to vertex k+i.  The adjacency matrix is [[J-I, I], [I, J-I]].
    """
    if k < 2:
        raise ValidationError("paired-clique graph needs k >= 2")
    edges = []
    for i in range(1, k + 1):
        for j in range(i + 1, k + 1):
            edges.append((i, j))
            edges.append((k + i, k + j))
        edges.append((i, k + i))
    return graph_from_edges(2 * k, edges)


def make_circulant(n: int, connections) -> Graph:
    """Circulant graph: i ~ j iff the circular distance of i, j is listed.

    Each connection d must satisfy 1 <= d <= n/2; d and n-d give the same
    edges, and d = n/2 (even n) contributes a perfect matching.
    """
    dists = sorted(set(connections))
    for d in dists:
        if not (1 <= d <= n / 2):
            raise ValidationError(f"connection {d} outside 1..n/2 for n={n}")
    edges = set()
    for i in range(1, n + 1):
        for d in dists:
            j = (i - 1 + d) % n + 1
            if i != j:
                edges.add((min(i, j), max(i, j)))
    return graph_from_edges(n, sorted(edges))


def make_random_graph(n: int, seed: int) -> Graph:
    """G(n, 1/2): every pair independently an edge with probability 1/2.

    Pairs are visited in lexicographic order with one fair bit each, so a
    seed pins down the graph exactly.
    """
    if n < 1:
        raise ValidationError("graph needs at least one vertex")
    rng = random.Random(seed)
    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            if rng.getrandbits(1):
                edges.append((u, v))
    return graph_from_edges(n, edges)


def named_graph(name: str) -> Graph:
    """Resolve the graph-backed part of the named-state grammar.

    Accepts ``tk<k>``, ``circulant:<n>:<d1,d2,...>`` and
    ``random:<n>:<seed>``; anything else raises UnknownStateError.
    """
    if name.startswith("tk") and name[2:].isdigit():
        return make_turan_pair_graph(int(name[2:]))
    if name.startswith("circulant:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise UnknownStateError(f"bad circulant spec {name!r}")
        try:
            n = int(parts[1])
            dists = [int(d) for d in parts[2].split(",") if d]
        except ValueError as exc:
            raise UnknownStateError(f"bad circulant spec {name!r}") from exc
        return make_circulant(n, dists)
    if name.startswith("random:"):
        parts = name.split(":")
        if len(parts) != 3:
            raise UnknownStateError(f"bad random-graph spec {name!r}")
        try:
            return make_random_graph(int(parts[1]), int(parts[2]))
        except ValueError as exc:
            raise UnknownStateError(f"bad random-graph spec {name!r}") from exc
    raise UnknownStateError(f"unknown graph name {name!r}")


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header ``n <count>``, body ``u v`` lines.

    ``#`` starts a comment; blank lines are ignored; CRLF is tolerated.
    Errors carry the offending 1-based line number.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be positive", lineno)
            continue
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from None
        if u == v:
            raise ParseError(f"self-loop {u} {v}", lineno)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex out of range in {line!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        seen.add(key)
        edges.append(key)
    if n is None:
        raise ParseError("missing header 'n <count>'", 1)
    return graph_from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; parse(serialize(g)) reproduces g."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
