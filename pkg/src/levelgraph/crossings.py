"""Level partitions from an abstract crosses-over relation between fragments.

The relation is taken at face value: ``(i, j)`` means fragment ``i`` crosses
over fragment ``j``.  Either the fragments stack into levels, or there is a
cyclic chain of under-crossings, which is reported in reduced form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence


class CrossingError(ValueError):
    pass


@dataclass(frozen=True)
class CrossRelation:
    count: int
    over: frozenset[tuple[int, int]]

    def __init__(self, count: int, over: Iterable[tuple[int, int]]):
        pairs = frozenset((int(i), int(j)) for i, j in over)
        for i, j in pairs:
            if not (0 <= i < count and 0 <= j < count):
                raise CrossingError(f"pair ({i}, {j}) out of range for {count} fragments")
            if i == j:
                raise CrossingError(f"fragment {i} crosses over itself")
            if (j, i) in pairs:
                raise CrossingError(f"fragments {i} and {j} cross over and under each other")
        object.__setattr__(self, "count", count)
        object.__setattr__(self, "over", pairs)

    def crosses_over(self, i: int) -> list[int]:
        return sorted(j for a, j in self.over if a == i)

    def crosses_under(self, i: int) -> list[int]:
        return sorted(a for a, j in self.over if j == i)


@dataclass(frozen=True)
class LayeringOutcome:
    """Exactly one of ``levels`` (fragment -> 1..n) or ``witness`` is set."""

    levels: tuple[int, ...] | None = None
    witness: tuple[int, ...] | None = None

    @property
    def is_partition(self) -> bool:
        return self.levels is not None


def level_partition_from_crossings(r: CrossRelation) -> LayeringOutcome:
    """Longest-path layering when the relation is acyclic, else a reduced witness cycle."""
    below = [r.crosses_over(i) for i in range(r.count)]
    level = [0] * r.count
    state = [0] * r.count  # 0 new, 1 on stack, 2 done

    # iterative DFS along over-edges, lowest index first
    for root in range(r.count):
        if state[root]:
            continue
        stack = [(root, 0)]
        path = [root]
        state[root] = 1
        while stack:
            v, k = stack[-1]
            if k < len(below[v]):
                stack[-1] = (v, k + 1)
                w = below[v][k]
                if state[w] == 1:
                    # over-chain path[idx] > ... > v > w closes; reverse it to read as under-crossings
                    cyc = path[path.index(w):]
                    witness = [cyc[0]] + cyc[:0:-1]
                    return LayeringOutcome(witness=reduce_witness(r, witness))
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, 0))
                    path.append(w)
            else:
                stack.pop()
                path.pop()
                state[v] = 2
                level[v] = 1 + max((level[w] for w in below[v]), default=0)
    return LayeringOutcome(levels=tuple(level))


def _under(r: CrossRelation, a: int, b: int) -> bool:
    return (b, a) in r.over


def _check_cycle(r: CrossRelation, seq: Sequence[int]) -> None:
    if len(seq) < 3 or len(set(seq)) != len(seq):
        raise CrossingError(f"not a cyclic sequence of distinct fragments: {list(seq)}")
    for i, a in enumerate(seq):
        b = seq[(i + 1) % len(seq)]
        if not _under(r, a, b):
            raise CrossingError(f"fragment {a} does not cross under {b}")


def reduce_witness(r: CrossRelation, cycle: Sequence[int]) -> tuple[int, ...]:
    """Shortcut a cyclic under-crossing chain until each member crosses under only its successor."""
    seq = list(cycle)
    _check_cycle(r, seq)
    changed = True
    while changed:
        changed = False
        t = len(seq)
        for i in range(t):
            for k in range(t):
                if k == i or k == (i + 1) % t or not _under(r, seq[i], seq[k]):
                    continue
                # drop everything strictly between position i and position k
                seq = seq[: i + 1] + seq[k:] if k > i else seq[k : i + 1]
                changed = True
                break
            if changed:
                break
    return tuple(seq)


def is_consecutive_only(r: CrossRelation, seq: Sequence[int]) -> bool:
    t = len(seq)
    members = set(seq)
    for i, a in enumerate(seq):
        succ = seq[(i + 1) % t]
        for b in members:
            if b != succ and _under(r, a, b):
                return False
    return True


def level_structure_violations(over: Iterable[tuple[int, int]], levels: Sequence[int]) -> list[str]:
    """Problems with ``levels`` as a level partition under ``over``; empty means valid.

    Level 1 fragments cross over nothing; a level-i fragment crosses over some
    level i-1 fragment and only over fragments of lower levels.
    """
    below: dict[int, list[int]] = {}
    for i, j in over:
        below.setdefault(i, []).append(j)
    problems = []
    for f, lv in enumerate(levels):
        under = [levels[j] for j in below.get(f, [])]
        if lv < 1:
            problems.append(f"fragment {f} has level {lv} < 1")
        elif lv == 1 and under:
            problems.append(f"level-1 fragment {f} crosses over another fragment")
        elif lv > 1:
            if any(x >= lv for x in under):
                problems.append(f"fragment {f} at level {lv} crosses over a fragment at level >= {lv}")
            if lv - 1 not in under:
                problems.append(f"fragment {f} at level {lv} crosses over nothing at level {lv - 1}")
    return problems


def stacking_relation(adjacency: Iterable[tuple[int, int]], levels: Mapping[int, int] | Sequence[int]) -> set[tuple[int, int]]:
    """Over-relation implied by stacking: the higher of two conflicting fragments crosses over the lower."""
    over = set()
    for i, j in adjacency:
        if levels[i] > levels[j]:
            over.add((i, j))
        elif levels[j] > levels[i]:
            over.add((j, i))
    return over
