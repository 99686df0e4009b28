"""Level numbers of abstract graphs with checkable certificates.

A spine's level count is the least number of classes into which its
fragments split so that every class fits in one disk bounded by the spine.
The level number minimises this over all cycles; the hamiltonian level
number over hamiltonian cycles only.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coloring import chromatic_number, greedy_clique
from .crossings import level_structure_violations, stacking_relation
from .graph import Graph, GraphError, is_outerplanar, is_planar
from .spine import (
    ConflictGraph,
    Fragment,
    Spine,
    conflict_graph_of,
    enumerate_cycles,
    enumerate_hamiltonian_cycles,
    fragment_disk_embeddable,
    fragments,
    jointly_disk_embeddable,
)

INFINITE = math.inf
ORACLE_LIMIT = 12


@dataclass(frozen=True)
class LevelCertificate:
    spine: Spine
    fragments: tuple[Fragment, ...]
    levels: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.levels, default=0)

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for i, lv in enumerate(self.levels):
            out[lv - 1].append(i)
        return out


@dataclass(frozen=True)
class LevelResult:
    value: float  # an int, or INFINITE
    certificate: LevelCertificate | None = None
    exact: bool = True

    @property
    def finite(self) -> bool:
        return self.value != INFINITE


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise GraphError("graph must be connected")


# ---------------------------------------------------------------------------
# Fixed spine
# ---------------------------------------------------------------------------


def relayer(cert: LevelCertificate, cg: ConflictGraph) -> LevelCertificate:
    """Push every fragment down as far as the stacking order allows.

    Level order is read as stacking order; a fragment lands one above the
    highest conflicting fragment stacked beneath it.
    """
    levels = cert.levels
    if len(levels) != cg.order:
        raise GraphError("certificate and conflict graph disagree on fragment count")
    nbrs = cg.neighbors()
    for i, j in cg.adjacency:
        if levels[i] == levels[j]:
            raise GraphError(f"conflicting fragments {i} and {j} share level {levels[i]}")
    new = [0] * len(levels)
    for i in sorted(range(len(levels)), key=lambda f: levels[f]):
        new[i] = 1 + max((new[j] for j in nbrs[i] if levels[j] < levels[i]), default=0)
    return LevelCertificate(cert.spine, cert.fragments, tuple(new))


def _min_partition(frags: Sequence[Fragment], c: Spine, cg: ConflictGraph, start: int) -> list[int] | None:
    """Fewest jointly embeddable classes, trying k = start, start+1, ...; colours are 0-based."""
    n = len(frags)
    nbrs = cg.neighbors()
    order = sorted(range(n), key=lambda f: (-len(nbrs[f]), f))
    for k in range(max(start, 1), n + 1):
        assign = [-1] * n
        classes: list[list[int]] = [[] for _ in range(k)]

        def place(idx: int, used: int) -> bool:
            if idx == n:
                return True
            f = order[idx]
            for col in range(min(used + 1, k)):
                if any(assign[j] == col for j in nbrs[f]):
                    continue
                members = classes[col] + [f]
                if not jointly_disk_embeddable([frags[m] for m in members], c):
                    continue
                classes[col].append(f)
                assign[f] = col
                if place(idx + 1, max(used, col + 1)):
                    return True
                classes[col].pop()
                assign[f] = -1
            return False

        if place(0, 0):
            return assign
    return None


def _solve_spine(g: Graph, c: Spine, bound: float = INFINITE, literal: bool = False) -> LevelResult | None:
    """Level count of one spine, or None when a clique shows it cannot beat ``bound``."""
    frags = fragments(g, c)
    if not frags:
        return LevelResult(0, LevelCertificate(c, (), ()))
    if not all(fragment_disk_embeddable(f, c, literal=literal) for f in frags):
        return LevelResult(INFINITE)
    cg = conflict_graph_of(frags)
    nbrs = cg.neighbors()
    if len(greedy_clique(nbrs)) >= bound:
        return None
    k, colors = chromatic_number(nbrs)
    classes: list[list[int]] = [[] for _ in range(k)]
    for f, col in enumerate(colors):
        classes[col].append(f)
    if not all(jointly_disk_embeddable([frags[f] for f in cls], c) for cls in classes):
        colors = _min_partition(frags, c, cg, k)
        if colors is None:
            # only reachable under the literal test: some fragment fits no disk at all
            return LevelResult(INFINITE)
        k = max(colors) + 1
    cert = LevelCertificate(c, tuple(frags), tuple(col + 1 for col in colors))
    stacked = relayer(cert, cg)
    if all(jointly_disk_embeddable([frags[f] for f in cls], c) for cls in stacked.classes()):
        cert = stacked
    return LevelResult(k, cert)


def spine_level_number(g: Graph, c: Spine, literal: bool = False) -> LevelResult:
    c.check_in(g)
    return _solve_spine(g, c, literal=literal)


def brute_force_min_levels(g: Graph, c: Spine, limit: int = ORACLE_LIMIT) -> float:
    """Smallest partition of the fragments into jointly disk-embeddable blocks.

    Walks set partitions in restricted-growth order; a block that fails the
    disk test is abandoned together with all its supersets.
    """
    frags = fragments(g, c)
    n = len(frags)
    if n > limit:
        raise GraphError(f"{n} fragments exceed the oracle limit of {limit}")
    if n == 0:
        return 0
    if not all(jointly_disk_embeddable([f], c) for f in frags):
        return INFINITE
    memo: dict[frozenset[int], bool] = {}

    def ok(block: frozenset[int]) -> bool:
        if block not in memo:
            memo[block] = jointly_disk_embeddable([frags[i] for i in block], c)
        return memo[block]

    best = n
    blocks: list[frozenset[int]] = []

    def walk(i: int) -> None:
        nonlocal best
        if len(blocks) >= best:
            return
        if i == n:
            best = len(blocks)
            return
        for b in range(len(blocks)):
            grown = blocks[b] | {i}
            if ok(grown):
                blocks[b] = grown
                walk(i + 1)
                blocks[b] = grown - {i}
        blocks.append(frozenset({i}))
        walk(i + 1)
        blocks.pop()

    walk(0)
    return best


# ---------------------------------------------------------------------------
# Minimising over spines
# ---------------------------------------------------------------------------


def _floor(g: Graph, hamiltonian: bool) -> int:
    """A value no spine can beat; reaching it ends the search."""
    if g.edge_count == g.vertex_count:
        return 0
    if not hamiltonian:
        return 1 if is_planar(g) else 2
    if is_outerplanar(g):
        return 1
    return 2 if is_planar(g) else 3


def _minimise(g: Graph, spines: Iterable[Spine], floor: int, literal: bool) -> LevelResult:
    best = LevelResult(INFINITE)
    for c in spines:
        res = _solve_spine(g, c, bound=best.value, literal=literal)
        if res is not None and res.value < best.value:
            best = res
            if best.value <= floor:
                break
    return best


def _solve_chunk(args) -> tuple[int, LevelResult] | None:
    g, chunk, literal = args
    best: tuple[int, LevelResult] | None = None
    for idx, c in chunk:
        res = _solve_spine(g, c, bound=INFINITE if best is None else best[1].value, literal=literal)
        if res is not None and (best is None or res.value < best[1].value):
            best = (idx, res)
    return best


def _minimise_parallel(g: Graph, spines: Iterable[Spine], workers: int, literal: bool) -> LevelResult:
    indexed = list(enumerate(spines))
    chunks = [indexed[i::workers] for i in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        found = [r for r in pool.map(_solve_chunk, [(g, ch, literal) for ch in chunks]) if r is not None]
    if not found:
        return LevelResult(INFINITE)
    # canonical order breaks ties, so the answer is independent of scheduling
    return min(found, key=lambda r: (r[1].value, r[0]))[1]


def hamiltonian_level_number(
    g: Graph, workers: int = 1, prune_floor: bool = True
) -> LevelResult:
    """Fewest levels over hamiltonian spines; INFINITE when ``g`` has no hamiltonian cycle.

    ``prune_floor`` stops as soon as the planarity-based lower bound is met.
    """
    _require_connected(g)
    spines = enumerate_hamiltonian_cycles(g)
    if workers > 1:
        return _minimise_parallel(g, spines, workers, literal=False)
    floor = _floor(g, hamiltonian=True) if prune_floor else -1
    return _minimise(g, spines, floor, literal=False)


def level_number(
    g: Graph,
    cap: int | None = None,
    workers: int = 1,
    literal: bool = False,
    prune_floor: bool = True,
) -> LevelResult:
    """Fewest levels over all spines; at most ``cap`` cycles are examined when given."""
    _require_connected(g)
    stream = enumerate_cycles(g, cap)
    if workers > 1:
        best = _minimise_parallel(g, stream, workers, literal)
    else:
        floor = _floor(g, hamiltonian=False) if prune_floor and not literal else -1
        best = _minimise(g, stream, floor, literal)
        if best.finite and best.value <= floor:
            return best
    return LevelResult(best.value, best.certificate, exact=not stream.truncated)


def has_leveled_embedding(g: Graph, literal: bool = False) -> tuple[bool, Spine | None]:
    _require_connected(g)
    for c in enumerate_cycles(g):
        if all(fragment_disk_embeddable(f, c, literal=literal) for f in fragments(g, c)):
            return True, c
    return False, None


# ---------------------------------------------------------------------------
# Certificate checking
# ---------------------------------------------------------------------------


def certificate_problems(g: Graph, cert: LevelCertificate) -> list[str]:
    """Everything wrong with ``cert`` as a level certificate for ``g``; empty means valid."""
    try:
        cert.spine.check_in(g)
    except GraphError as exc:
        return [str(exc)]
    frags = fragments(g, cert.spine)
    if list(cert.fragments) != frags:
        return ["fragments do not match the spine's decomposition of the graph"]
    if len(cert.levels) != len(frags):
        return [f"{len(cert.levels)} levels given for {len(frags)} fragments"]
    if any(lv < 1 for lv in cert.levels):
        return ["levels must be positive"]
    problems = []
    cg = conflict_graph_of(frags)
    for i, j in sorted(cg.adjacency):
        if cert.levels[i] == cert.levels[j]:
            problems.append(f"conflicting fragments {i} and {j} share level {cert.levels[i]}")
    for lv, cls in enumerate(cert.classes(), start=1):
        if cls and not jointly_disk_embeddable([frags[f] for f in cls], cert.spine):
            problems.append(f"level {lv} does not fit in one disk")
    if problems:
        return problems
    stacked = relayer(cert, cg)
    if stacked.k > cert.k:
        problems.append("relayering increased the number of levels")
    over = stacking_relation(cg.adjacency, stacked.levels)
    problems.extend(level_structure_violations(over, stacked.levels))
    return problems


def verify_certificate(g: Graph, cert: LevelCertificate) -> bool:
    return not certificate_problems(g, cert)
