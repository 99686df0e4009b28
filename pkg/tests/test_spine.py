import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from levelgraph.graph import Graph, GraphError, complete, complete_bipartite, cycle, moebius_ladder
from levelgraph.spine import (
    Fragment,
    Spine,
    alternate,
    canonical_cycle,
    chords_interleave,
    conflict_graph,
    conflicts,
    enumerate_cycles,
    enumerate_hamiltonian_cycles,
    fragment_disk_embeddable,
    fragments,
    jointly_disk_embeddable,
)

from oracles import alternate_4tuples, atlas_graphs, brute_cycles, has_kuratowski_minor


def chord(a, b, spine):
    c = Spine(spine)
    u, v = sorted((a, b))
    return Fragment((), (), ((u, v),), tuple(sorted((c.position(a), c.position(b)))))


# -- canonical form ----------------------------------------------------------


def test_canonical_form():
    assert canonical_cycle([2, 3, 0, 1]) == (0, 1, 2, 3)
    assert canonical_cycle([0, 3, 2, 1]) == (0, 1, 2, 3)
    assert Spine([3, 1, 0]).vertices == (0, 1, 3)


@given(st.permutations(range(7)), st.integers(0, 6), st.booleans())
def test_canonical_form_is_rotation_reflection_invariant(perm, shift, flip):
    seq = list(perm)
    other = seq[shift:] + seq[:shift]
    if flip:
        other.reverse()
    assert canonical_cycle(seq) == canonical_cycle(other)


def test_spine_rejects_repeats():
    with pytest.raises(GraphError):
        Spine([0, 1, 0])


# -- cycle enumeration -------------------------------------------------------


def test_cycle_counts():
    assert len(list(enumerate_cycles(cycle(5)))) == 1
    assert len(list(enumerate_cycles(complete(4)))) == 7
    assert all(len(c) % 2 == 0 for c in enumerate_cycles(complete_bipartite(3, 3)))


def test_k4_cycles_match_brute_force():
    assert {c.vertices for c in enumerate_cycles(complete(4))} == brute_cycles(complete(4))


def test_cycles_match_brute_force_and_order():
    for name, g in atlas_graphs(6):
        got = [c.vertices for c in enumerate_cycles(g)]
        assert len(got) == len(set(got)), name
        assert set(got) == brute_cycles(g), name
        assert got == sorted(got, key=lambda c: (len(c), c)), name


def test_cycle_cap_reports_truncation():
    stream = enumerate_cycles(complete(5), cap=4)
    assert len(list(stream)) == 4
    assert stream.truncated
    exact = enumerate_cycles(complete(4), cap=7)
    assert len(list(exact)) == 7
    assert not exact.truncated


def test_hamiltonian_counts():
    assert len(list(enumerate_hamiltonian_cycles(complete(4)))) == 3
    assert len(list(enumerate_hamiltonian_cycles(cycle(6)))) == 1
    assert len(list(enumerate_hamiltonian_cycles(complete_bipartite(3, 3)))) == 6
    for n in (2, 3, 4):
        expected = math.factorial(n) * math.factorial(n - 1) // 2
        assert len(list(enumerate_hamiltonian_cycles(complete_bipartite(n, n)))) == expected
    assert list(enumerate_hamiltonian_cycles(complete_bipartite(3, 2))) == []


def test_hamiltonian_cycles_match_brute_force():
    for name, g in atlas_graphs(6):
        got = [c.vertices for c in enumerate_hamiltonian_cycles(g)]
        expected = {c for c in brute_cycles(g) if len(c) == g.vertex_count}
        assert sorted(got) == got and set(got) == expected, name


# -- fragments ---------------------------------------------------------------


def test_k4_fragments_are_the_diagonals():
    fs = fragments(complete(4), Spine([0, 1, 2, 3]))
    assert [f.attachment_edges for f in fs] == [((0, 2),), ((1, 3),)]
    assert all(f.is_chord for f in fs)


def test_cycle_has_no_fragments():
    assert fragments(cycle(6), Spine(range(6))) == []


def test_k33_hamiltonian_spine_has_three_chords():
    g = complete_bipartite(3, 3)
    for c in enumerate_hamiltonian_cycles(g):
        fs = fragments(g, c)
        assert len(fs) == 3 and all(f.is_chord for f in fs)


def test_fragment_with_internal_vertices():
    fs = fragments(complete(4), Spine([0, 1, 2]))
    assert len(fs) == 1
    (f,) = fs
    assert f.internal_vertices == (3,)
    assert f.attachments == (0, 1, 2)
    assert f.attachment_edges == ((0, 3), (1, 3), (2, 3))


def test_fragments_reject_non_cycle():
    with pytest.raises(GraphError):
        fragments(cycle(5), Spine([0, 1, 3]))


def _check_partition(g, c):
    fs = fragments(g, c)
    edges = list(c.edges())
    for f in fs:
        edges.extend(f.edges)
        assert f.attachments and all(0 <= p < len(c) for p in f.attachments)
        assert not set(f.internal_vertices) & set(c.vertices)
        if not f.is_chord:
            h = nx.Graph(f.internal_edges)
            h.add_nodes_from(f.internal_vertices)
            assert nx.is_connected(h)
    assert sorted(edges) == list(g.edges)
    assert fs == sorted(fs, key=Fragment.sort_key)


def test_fragment_partition_on_small_graphs():
    for name, g in atlas_graphs(6):
        for c in enumerate_cycles(g):
            _check_partition(g, c)


def test_fragment_partition_on_sampled_larger_graphs():
    rng = random.Random(7)
    samples = [g for _, g in atlas_graphs(7)]
    for g in rng.sample(samples, 60):
        for c in list(enumerate_cycles(g))[:40]:
            _check_partition(g, c)
    pairs = list(itertools.combinations(range(8), 2))
    for _ in range(15):
        g = Graph(8, [e for e in pairs if rng.random() < 0.4])
        if g.is_connected():
            for c in list(enumerate_cycles(g))[:40]:
                _check_partition(g, c)


# -- conflicts ---------------------------------------------------------------


def test_conflict_examples():
    assert conflicts(chord(0, 2, range(4)), chord(1, 3, range(4)))
    assert not conflicts(chord(0, 2, range(5)), chord(0, 3, range(5)))
    tripod_a = Fragment((6,), (), ((0, 6), (2, 6), (4, 6)), (0, 2, 4))
    tripod_b = Fragment((7,), (), ((0, 7), (2, 7), (4, 7)), (0, 2, 4))
    assert conflicts(tripod_a, tripod_b)


@given(
    st.sets(st.integers(0, 9), min_size=1, max_size=6),
    st.sets(st.integers(0, 9), min_size=1, max_size=6),
)
def test_alternation_matches_four_tuple_oracle(p, q):
    assert alternate(sorted(p), sorted(q)) == alternate_4tuples(p, q)
    assert alternate(sorted(p), sorted(q)) == alternate(sorted(q), sorted(p))


@given(st.sets(st.integers(0, 9), min_size=1, max_size=6), st.sets(st.integers(0, 9), min_size=1, max_size=6))
def test_conflict_is_closed_arc_test(p, q):
    # no conflict exactly when q fits in one closed arc between consecutive points of p
    fp = Fragment((90,), (), (), tuple(sorted(p)))
    fq = Fragment((91,), (), (), tuple(sorted(q)))
    ps = sorted(p)
    arcs = []
    for i, a in enumerate(ps):
        b = ps[(i + 1) % len(ps)]
        arcs.append((a, b))
    def in_arc(x, a, b):
        return a <= x <= b if a < b else (x >= a or x <= b)
    fits = len(ps) == 1 or any(all(in_arc(x, a, b) for x in q) for a, b in arcs)
    assert conflicts(fp, fq) == (not fits)


def test_conflicts_symmetric_on_small_graphs():
    for name, g in atlas_graphs(6):
        for c in enumerate_cycles(g):
            fs = fragments(g, c)
            for f, h in itertools.combinations(fs, 2):
                assert conflicts(f, h, c) == conflicts(h, f, c)


@pytest.mark.parametrize("n", range(4, 9))
def test_chord_conflicts_are_strict_interleaving(n):
    g = complete(n)
    for c in itertools.islice(enumerate_hamiltonian_cycles(g), 20):
        fs = fragments(g, c)
        for f, h in itertools.combinations(fs, 2):
            assert conflicts(f, h, c) == alternate_4tuples(f.attachments, h.attachments)
            assert conflicts(f, h, c) == chords_interleave(f.attachments, h.attachments)


def test_conflict_graph_examples():
    cg = conflict_graph(complete(4), Spine(range(4)))
    assert cg.order == 2 and cg.adjacency == {(0, 1)}
    assert conflict_graph(cycle(7), Spine(range(7))).order == 0

    cg = conflict_graph(complete(6), Spine(range(6)))
    assert cg.order == 9
    index = {f.attachment_edges[0]: i for i, f in enumerate(cg.fragments)}
    partners = {e for e, j in index.items() if cg.adjacent(index[(0, 3)], j) and e != (0, 3)}
    # brute-force alternation over all chords of the hexagon
    expected = {e for e in index if e != (0, 3) and alternate_4tuples((0, 3), e)}
    assert partners == expected == {(1, 4), (2, 4), (1, 5), (2, 5)}


def test_conflict_graph_irreflexive_symmetric():
    g = complete(6)
    cg = conflict_graph(g, Spine([0, 1, 2, 3]))
    assert all(i < j for i, j in cg.adjacency)
    for i, j in itertools.combinations(range(cg.order), 2):
        assert cg.adjacent(i, j) == cg.adjacent(j, i) == conflicts(cg.fragments[i], cg.fragments[j])


def cube():
    return Graph.from_networkx(nx.hypercube_graph(3))


@pytest.mark.parametrize("g", [complete(4), complete_bipartite(3, 3), moebius_ladder(8), moebius_ladder(12), cube()])
def test_cubic_hamiltonian_conflict_graph_is_circle_graph(g):
    for c in enumerate_hamiltonian_cycles(g):
        cg = conflict_graph(g, c)
        chords = [f.attachments for f in cg.fragments]
        model = {(i, j) for i, j in itertools.combinations(range(len(chords)), 2) if alternate_4tuples(chords[i], chords[j])}
        assert cg.adjacency == model


# -- disk embeddability ------------------------------------------------------


def test_chord_always_disk_embeddable():
    c = Spine(range(5))
    assert fragment_disk_embeddable(chord(0, 2, range(5)), c)


def test_twisted_tree_fragment_is_not_disk_embeddable():
    # spine order a, c, b, d = 0, 1, 2, 3; u1=4 joins a, b; u2=5 joins c, d
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4), (1, 5), (3, 5), (4, 5)])
    c = Spine([0, 1, 2, 3])
    (f,) = fragments(g, c)
    union = Graph(6, list(f.edges) + c.edges())
    assert union.edge_count == 9
    assert has_kuratowski_minor(union)
    assert nx.is_isomorphic(union.to_networkx(), nx.complete_bipartite_graph(3, 3))
    assert not fragment_disk_embeddable(f, c)
    assert fragment_disk_embeddable(f, c, literal=True)


def test_star_fragment_is_disk_embeddable():
    g = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(i, 6) for i in range(6)])
    c = Spine(range(6))
    (f,) = fragments(g, c)
    assert fragment_disk_embeddable(f, c)


def test_joint_examples():
    c5 = Spine(range(5))
    assert jointly_disk_embeddable([chord(0, 2, range(5)), chord(2, 4, range(5))], c5)
    c4 = Spine(range(4))
    assert not jointly_disk_embeddable([chord(0, 2, range(4)), chord(1, 3, range(4))], c4)
    g = complete_bipartite(3, 3)
    c = next(enumerate_hamiltonian_cycles(g))
    assert not jointly_disk_embeddable(fragments(g, c), c)


@pytest.mark.parametrize("n", range(3, 9))
def test_pairwise_compatible_chords_fit_one_disk(n):
    spine = Spine(range(n))
    all_chords = [chord(a, b, range(n)) for a, b in itertools.combinations(range(n), 2) if (b - a) % n not in (1, n - 1)]

    def grow(start, chosen):
        assert jointly_disk_embeddable(chosen, spine)
        for i in range(start, len(all_chords)):
            f = all_chords[i]
            if not any(conflicts(f, h) for h in chosen):
                grow(i + 1, chosen + [f])

    grow(0, [])


def test_joint_test_agrees_with_conflicts_for_chord_pairs():
    n = 7
    spine = Spine(range(n))
    cs = [chord(a, b, range(n)) for a, b in itertools.combinations(range(n), 2) if (b - a) % n not in (1, n - 1)]
    for f, h in itertools.combinations(cs, 2):
        assert jointly_disk_embeddable([f, h], spine) == (not conflicts(f, h))


def test_single_fragment_joint_equals_individual():
    for name, g in atlas_graphs(6):
        for c in enumerate_cycles(g):
            for f in fragments(g, c):
                assert jointly_disk_embeddable([f], c) == fragment_disk_embeddable(f, c), name
