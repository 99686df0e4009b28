"""Spines (cycles), their fragments, and the conflict relation between fragments."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graph import Edge, Graph, GraphError, edges_planar


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate so the smallest vertex leads, then pick the orientation with the smaller second entry."""
    seq = list(seq)
    if len(seq) < 3:
        return tuple(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


@dataclass(frozen=True)
class Spine:
    """A cycle of a host graph, stored in canonical cyclic form."""

    vertices: tuple[int, ...]
    _pos: dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Sequence[int]):
        verts = canonical_cycle(vertices)
        if len(verts) < 3:
            raise GraphError("a spine needs at least 3 vertices")
        if len(set(verts)) != len(verts):
            raise GraphError(f"spine repeats a vertex: {list(vertices)}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "_pos", {v: i for i, v in enumerate(verts)})

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self._pos

    def position(self, v: int) -> int:
        return self._pos[v]

    def edges(self) -> list[Edge]:
        vs = self.vertices
        return [tuple(sorted((vs[i], vs[(i + 1) % len(vs)]))) for i in range(len(vs))]

    def check_in(self, g: Graph) -> None:
        """Raise unless this spine is a cycle of ``g``."""
        for v in self.vertices:
            if not 0 <= v < g.vertex_count:
                raise GraphError(f"spine vertex {v} not in graph")
        for u, v in self.edges():
            if not g.has_edge(u, v):
                raise GraphError(f"spine edge ({u}, {v}) is not an edge of the graph")


# ---------------------------------------------------------------------------
# Cycle enumeration
# ---------------------------------------------------------------------------


class CycleStream:
    """Iterator over canonical cycles; ``truncated`` turns true once a cap cut the stream short."""

    def __init__(self, source: Iterator[tuple[int, ...]], cap: int | None = None):
        self._source = source
        self._cap = cap
        self.emitted = 0
        self.truncated = False

    def __iter__(self) -> "CycleStream":
        return self

    def __next__(self) -> Spine:
        if self._cap is not None and self.emitted >= self._cap:
            if not self.truncated and next(self._source, None) is not None:
                self.truncated = True
            raise StopIteration
        cyc = next(self._source)
        self.emitted += 1
        return Spine(cyc)


def _cycles_of_length(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    # start = minimum vertex of the cycle; path[1] < path[-1] removes the mirror copy
    adj = [sorted(g.neighbors(v)) for v in range(g.vertex_count)]
    for s in range(g.vertex_count):
        path = [s]
        on_path = {s}

        def extend() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            if len(path) == length:
                if s in g.neighbors(last) and path[1] < last:
                    yield tuple(path)
                return
            for w in adj[last]:
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from extend()
                    path.pop()
                    on_path.discard(w)

        yield from extend()


def _all_cycles(g: Graph) -> Iterator[tuple[int, ...]]:
    for length in range(3, g.vertex_count + 1):
        yield from _cycles_of_length(g, length)


def enumerate_cycles(g: Graph, cap: int | None = None) -> CycleStream:
    """Every cycle of ``g`` once, shortest first and lexicographic within a length."""
    return CycleStream(_all_cycles(g), cap)


def enumerate_hamiltonian_cycles(g: Graph) -> Iterator[Spine]:
    if g.vertex_count < 3:
        return iter(())
    return (Spine(c) for c in _cycles_of_length(g, g.vertex_count))


# ---------------------------------------------------------------------------
# Fragments
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Fragment:
    """A bridge of the spine: a component of G - C with its attachment edges, or a chord.

    ``attachments`` holds sorted spine positions, not vertex ids.
    """

    internal_vertices: tuple[int, ...]
    internal_edges: tuple[Edge, ...]
    attachment_edges: tuple[Edge, ...]
    attachments: tuple[int, ...]

    @property
    def is_chord(self) -> bool:
        return not self.internal_vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.internal_edges + self.attachment_edges

    def sort_key(self) -> tuple:
        return (self.attachments, len(self.internal_vertices), self.internal_vertices, self.attachment_edges)


def fragments(g: Graph, c: Spine) -> list[Fragment]:
    c.check_in(g)
    spine_edges = set(c.edges())
    found: list[Fragment] = []
    for u, v in g.edges:
        if u in c and v in c and (u, v) not in spine_edges:
            pos = tuple(sorted((c.position(u), c.position(v))))
            found.append(Fragment((), (), ((u, v),), pos))

    seen: set[int] = set()
    for start in range(g.vertex_count):
        if start in c or start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            for w in g.neighbors(stack.pop()):
                if w not in c and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        internal, attach = [], []
        touched = set()
        for u, v in g.edges:
            if u in comp and v in comp:
                internal.append((u, v))
            elif u in comp or v in comp:
                attach.append((u, v))
                touched.add(c.position(v if u in comp else u))
        found.append(Fragment(tuple(sorted(comp)), tuple(internal), tuple(attach), tuple(sorted(touched))))

    found.sort(key=Fragment.sort_key)
    return found


# ---------------------------------------------------------------------------
# Conflicts
# ---------------------------------------------------------------------------


def alternate(p: Sequence[int], q: Sequence[int]) -> bool:
    """True iff some a, b in ``p`` and x, y in ``q`` sit in cyclic order a, x, b, y.

    Inputs are positions on one cyclic order; all four points must be distinct.
    This is the single interleaving kernel shared by conflicts and book thickness.
    """
    if len(p) < 2 or len(q) < 2:
        return False
    ps = sorted(set(p))
    for x, y in combinations(sorted(set(q)), 2):
        inside = outside = False
        for a in ps:
            if x < a < y:
                inside = True
            elif a < x or a > y:
                outside = True
        if inside and outside:
            return True
    return False


def chords_interleave(e: tuple[int, int], f: tuple[int, int]) -> bool:
    """Strict interleaving of two chords given by their endpoint positions."""
    a, b = sorted(e)
    x, y = sorted(f)
    return (a < x < b < y) or (x < a < y < b)


def conflicts(f: Fragment, h: Fragment, c: Spine | None = None) -> bool:
    """Fragments conflict when attachments alternate or they share three or more attachments.

    ``c`` is accepted for API symmetry; attachments are already spine positions.
    """
    if len(set(f.attachments) & set(h.attachments)) >= 3:
        return True
    if f.is_chord and h.is_chord:
        return chords_interleave(f.attachments, h.attachments)
    return alternate(f.attachments, h.attachments)


@dataclass(frozen=True)
class ConflictGraph:
    fragments: tuple[Fragment, ...]
    adjacency: frozenset[tuple[int, int]]

    @property
    def order(self) -> int:
        return len(self.fragments)

    def neighbors(self) -> list[set[int]]:
        nbrs: list[set[int]] = [set() for _ in self.fragments]
        for i, j in self.adjacency:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return nbrs

    def adjacent(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.adjacency


def conflict_graph_of(frags: Sequence[Fragment]) -> ConflictGraph:
    adj = frozenset(
        (i, j) for i, j in combinations(range(len(frags)), 2) if conflicts(frags[i], frags[j])
    )
    return ConflictGraph(tuple(frags), adj)


def conflict_graph(g: Graph, c: Spine) -> ConflictGraph:
    return conflict_graph_of(fragments(g, c))


# ---------------------------------------------------------------------------
# Disk embeddability
# ---------------------------------------------------------------------------


def fragment_disk_embeddable(f: Fragment, c: Spine, literal: bool = False) -> bool:
    """Whether ``f`` fits in a disk bounded by the spine with its attachments in place.

    That holds iff ``f`` together with the spine cycle is planar.  With
    ``literal=True`` only the fragment itself has to be planar.
    """
    if f.is_chord:
        return True
    if literal:
        return edges_planar(f.edges)
    return edges_planar(list(f.edges) + c.edges())


def jointly_disk_embeddable(fs: Iterable[Fragment], c: Spine) -> bool:
    """Whether all of ``fs`` fit together inside one disk bounded by the spine.

    An apex joined to every spine vertex occupies the other side of the cycle.
    """
    edges = c.edges()
    for f in fs:
        edges.extend(f.edges)
    apex = -1
    edges.extend((apex, v) for v in c.vertices)
    return edges_planar(edges)
