"""Slow, independent reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx

from levelgraph.graph import Graph


def set_partitions_with_trash(n: int, max_blocks: int):
    """Assignments vertex -> -1 (deleted) or block id, block ids in first-use order."""
    labels = [0] * n

    def rec(i: int, blocks: int):
        if i == n:
            yield labels[:], blocks
            return
        labels[i] = -1
        yield from rec(i + 1, blocks)
        for b in range(min(blocks + 1, max_blocks)):
            labels[i] = b
            yield from rec(i + 1, max(blocks, b + 1))

    yield from rec(0, 0)


def _connected(g: Graph, verts: list[int]) -> bool:
    vs = set(verts)
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        for w in g.neighbors(stack.pop()):
            if w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vs)


def has_kuratowski_minor(g: Graph) -> bool:
    """Exhaustive search for K5 or K3,3 branch sets."""
    n = g.vertex_count
    if n < 5:
        return False
    for labels, blocks in set_partitions_with_trash(n, 6):
        if blocks not in (5, 6):
            continue
        members = [[v for v in range(n) if labels[v] == b] for b in range(blocks)]
        if not all(_connected(g, m) for m in members):
            continue
        adj = set()
        for u, v in g.edges:
            a, b = labels[u], labels[v]
            if a >= 0 and b >= 0 and a != b:
                adj.add((min(a, b), max(a, b)))
        if blocks == 5 and len(adj) == 10:
            return True
        if blocks == 6 and len(adj) >= 9:
            for side in combinations(range(1, 6), 2):
                left = (0,) + side
                right = [b for b in range(6) if b not in left]
                if all((min(a, b), max(a, b)) in adj for a in left for b in right):
                    return True
    return False


def brute_cycles(g: Graph) -> set[tuple[int, ...]]:
    """All cycles as canonical tuples, by trying every vertex sequence."""
    found = set()
    for k in range(3, g.vertex_count + 1):
        for sub in combinations(range(g.vertex_count), k):
            first, rest = sub[0], sub[1:]
            for perm in permutations(rest):
                seq = (first,) + perm
                if perm[0] > perm[-1]:
                    continue
                if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                    found.add(seq)
    return found


def alternate_4tuples(p, q) -> bool:
    """Cyclic order a, x, b, y with a, b from p and x, y from q, all distinct."""
    for a, b in permutations(set(p), 2):
        for x, y in permutations(set(q), 2):
            if len({a, b, x, y}) < 4:
                continue
            # rotate so that a is first; then need a < x < b < y in rotated order
            pts = sorted({a, b, x, y})
            i = pts.index(a)
            rot = pts[i:] + pts[:i]
            if rot == [a, x, b, y]:
                return True
    return False


def atlas_graphs(max_vertices: int = 7, connected: bool = True) -> list[tuple[str, Graph]]:
    """Every graph (up to isomorphism) on at most ``max_vertices`` vertices from the networkx atlas."""
    out = []
    for idx, h in enumerate(nx.graph_atlas_g()):
        n = h.number_of_nodes()
        if n == 0 or n > max_vertices:
            continue
        if connected and not nx.is_connected(h):
            continue
        out.append((f"G{idx}", Graph.from_networkx(h)))
    return out


def is_hamiltonian_brute(g: Graph) -> bool:
    n = g.vertex_count
    if n < 3:
        return False
    for perm in permutations(range(1, n)):
        seq = (0,) + perm
        if all(g.has_edge(seq[i], seq[(i + 1) % n]) for i in range(n)):
            return True
    return False
