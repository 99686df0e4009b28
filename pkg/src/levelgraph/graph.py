"""Simple undirected graphs on dense integer vertices, plus planarity predicates."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable

import networkx as nx

Edge = tuple[int, int]


class GraphError(ValueError):
    """Malformed graph input or invalid graph parameters."""


def _canon_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..vertex_count-1``.

    Edges are stored as a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]] = ()):
        if vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        canon = set()
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            canon.add(_canon_edge(u, v))
        adj: list[set[int]] = [set() for _ in range(vertex_count)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.vertex_count))
        h.add_edges_from(self.edges)
        return h

    @classmethod
    def from_networkx(cls, h: nx.Graph) -> "Graph":
        """Relabel ``h``'s nodes to ``0..n-1`` in sorted order."""
        nodes = sorted(h.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls(len(nodes), ((index[u], index[v]) for u, v in h.edges()))

    def render(self) -> str:
        """Edge-list text with an explicit vertex-count header."""
        lines = [f"n {self.vertex_count}"]
        lines.extend(f"{u} {v}" for u, v in self.edges)
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment and ``n <count>`` fixes the size.

    Without a header the vertex count is one more than the largest id seen.
    Duplicate edges collapse.
    """
    header: int | None = None
    edges: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise GraphError(f"line {lineno}: malformed header {raw!r}")
            header = int(tokens[1])
            continue
        if len(tokens) != 2 or not all(t.isdigit() for t in tokens):
            raise GraphError(f"line {lineno}: expected two non-negative integers, got {raw!r}")
        u, v = int(tokens[0]), int(tokens[1])
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    n = 1 + max((max(e) for e in edges), default=-1)
    if header is not None:
        if header < n:
            raise GraphError(f"header declares {header} vertices but edges use id {n - 1}")
        n = header
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with its integer parameters.

    ``kind`` is one of ``complete``, ``complete-bipartite``, ``cycle``,
    ``path`` or ``moebius-ladder``.
    """

    kind: str
    params: tuple[int, ...]

    _ARITY = {"complete": 1, "complete-bipartite": 2, "cycle": 1, "path": 1, "moebius-ladder": 1}

    def __post_init__(self):
        arity = self._ARITY.get(self.kind)
        if arity is None:
            raise GraphError(f"unknown family {self.kind!r}")
        if len(self.params) != arity or any(p < 1 for p in self.params):
            raise GraphError(f"{self.kind} needs {arity} positive integer parameter(s), got {self.params}")
        if self.kind == "cycle" and self.params[0] < 3:
            raise GraphError("cycle needs at least 3 vertices")
        if self.kind == "moebius-ladder":
            size = self.params[0]
            if size < 4 or size % 2:
                raise GraphError(f"moebius-ladder size must be even and >= 4, got {size}")

    def __str__(self) -> str:
        prefix = {"complete": "K", "complete-bipartite": "K", "cycle": "C", "path": "P", "moebius-ladder": "M"}
        return prefix[self.kind] + ",".join(map(str, self.params))


_FAMILY_RE = re.compile(r"^([KCPM])(\d+)(?:,(\d+))?$")


def parse_family(text: str) -> FamilySpec:
    """Parse shorthand like ``K5``, ``K3,3``, ``C7``, ``P4`` or ``M16``."""
    m = _FAMILY_RE.match(text.strip())
    if not m:
        raise GraphError(f"unknown family string {text!r}")
    letter, a, b = m.group(1), int(m.group(2)), m.group(3)
    if b is not None:
        if letter != "K":
            raise GraphError(f"unknown family string {text!r}")
        return FamilySpec("complete-bipartite", (a, int(b)))
    kind = {"K": "complete", "C": "cycle", "P": "path", "M": "moebius-ladder"}[letter]
    return FamilySpec(kind, (a,))


def generate(spec: FamilySpec) -> Graph:
    kind, p = spec.kind, spec.params
    if kind == "complete":
        n = p[0]
        return Graph(n, combinations(range(n), 2))
    if kind == "complete-bipartite":
        m, n = p
        return Graph(m + n, ((i, m + j) for i in range(m) for j in range(n)))
    if kind == "cycle":
        n = p[0]
        return Graph(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "path":
        n = p[0]
        return Graph(n, ((i, i + 1) for i in range(n - 1)))
    size = p[0]
    k = size // 2
    ring = [(i, (i + 1) % size) for i in range(size)]
    rungs = [(i, i + k) for i in range(k)]
    return Graph(size, ring + rungs)


def complete(n: int) -> Graph:
    return generate(FamilySpec("complete", (n,)))


def complete_bipartite(m: int, n: int) -> Graph:
    return generate(FamilySpec("complete-bipartite", (m, n)))


def cycle(n: int) -> Graph:
    return generate(FamilySpec("cycle", (n,)))


def path(n: int) -> Graph:
    return generate(FamilySpec("path", (n,)))


def moebius_ladder(size: int) -> Graph:
    return generate(FamilySpec("moebius-ladder", (size,)))


def disjoint_union(a: Graph, b: Graph, bridges: Iterable[Edge] = ()) -> Graph:
    """``a`` followed by ``b`` relabelled after it; ``bridges`` use the combined ids."""
    off = a.vertex_count
    edges = list(a.edges) + [(u + off, v + off) for u, v in b.edges] + list(bridges)
    return Graph(a.vertex_count + b.vertex_count, edges)


# ---------------------------------------------------------------------------
# Planarity
# ---------------------------------------------------------------------------


def add_apex(g: Graph, targets: Iterable[int]) -> Graph:
    """Return ``g`` plus a new vertex ``g.vertex_count`` adjacent to ``targets``."""
    targets = set(targets)
    for t in targets:
        if not 0 <= t < g.vertex_count:
            raise GraphError(f"apex target {t} out of range")
    apex = g.vertex_count
    return Graph(apex + 1, list(g.edges) + [(t, apex) for t in sorted(targets)])


def edges_planar(edges: Iterable[Edge]) -> bool:
    """Planarity of the graph spanned by ``edges`` (isolated vertices are irrelevant)."""
    return _planar_canon(tuple(sorted(_canon_edge(u, v) for u, v in edges)))


@lru_cache(maxsize=1 << 16)
def _planar_canon(edges: tuple[Edge, ...]) -> bool:
    verts = {v for e in edges for v in e}
    n, m = len(verts), len(edges)
    if n <= 4:
        return True
    if m > 3 * n - 6:
        return False
    h = nx.Graph(edges)
    # cyclomatic number below 4 cannot host a K_{3,3} or K_5 subdivision
    if m - n + nx.number_connected_components(h) <= 3:
        return True
    planar, _ = nx.check_planarity(h)
    return planar


def is_planar(g: Graph) -> bool:
    return edges_planar(g.edges)


def is_outerplanar(g: Graph) -> bool:
    return is_planar(add_apex(g, range(g.vertex_count)))
