"""Exact vertex coloring: DSATUR branch and bound with a greedy clique bound."""

from __future__ import annotations

from typing import Sequence


def _masks(adj: Sequence[set[int]]) -> list[int]:
    return [sum(1 << w for w in nbrs) for nbrs in adj]


def greedy_clique(adj: Sequence[set[int]]) -> list[int]:
    """A maximal clique grown greedily from each vertex; the largest one wins."""
    n = len(adj)
    masks = _masks(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    best: list[int] = []
    for start in order:
        clique = [start]
        cand = masks[start]
        while cand:
            # candidate with most neighbours among remaining candidates
            v = max(
                (w for w in order if cand >> w & 1),
                key=lambda w: bin(masks[w] & cand).count("1"),
            )
            clique.append(v)
            cand &= masks[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_greedy(adj: Sequence[set[int]]) -> list[int]:
    n = len(adj)
    colors = [-1] * n
    sat = [0] * n
    for _ in range(n):
        v = max(
            (w for w in range(n) if colors[w] < 0),
            key=lambda w: (bin(sat[w]).count("1"), len(adj[w]), -w),
        )
        c = 0
        while sat[v] >> c & 1:
            c += 1
        colors[v] = c
        for w in adj[v]:
            sat[w] |= 1 << c
    return colors


def chromatic_number(adj: Sequence[set[int]], lower_bound: int = 0) -> tuple[int, list[int]]:
    """Exact chromatic number and an optimal coloring (colors ``0..k-1``).

    ``adj`` lists neighbour sets.  The result is deterministic for a given input.
    """
    n = len(adj)
    if n == 0:
        return 0, []
    clique = greedy_clique(adj)
    lb = max(len(clique), lower_bound)
    best = dsatur_greedy(adj)
    best_k = max(best) + 1
    if best_k <= lb:
        return best_k, best

    colors = [-1] * n
    sat = [0] * n  # bitmask of colours seen among coloured neighbours
    for c, v in enumerate(clique):
        colors[v] = c
        for w in adj[v]:
            sat[w] |= 1 << c
    uncolored = {v for v in range(n) if colors[v] < 0}

    def search(used: int) -> bool:
        nonlocal best, best_k
        if not uncolored:
            best, best_k = colors[:], used
            return best_k <= lb
        v = max(uncolored, key=lambda w: (bin(sat[w]).count("1"), len(adj[w]), -w))
        uncolored.discard(v)
        for c in range(min(used + 1, best_k - 1)):
            if sat[v] >> c & 1:
                continue
            colors[v] = c
            touched = [w for w in adj[v] if colors[w] < 0 and not sat[w] >> c & 1]
            for w in touched:
                sat[w] |= 1 << c
            done = search(max(used, c + 1))
            for w in touched:
                sat[w] &= ~(1 << c)
            colors[v] = -1
            if done:
                uncolored.add(v)
                return True
        uncolored.add(v)
        return False

    search(len(clique))
    return best_k, best


def is_proper(adj: Sequence[set[int]], colors: Sequence[int]) -> bool:
    return all(colors[v] != colors[w] for v in range(len(adj)) for w in adj[v])
