import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bramblelink import (
    Digraph,
    Path,
    Walk,
    is_k_strong,
    reachable_from,
    reverse,
    shorten_walk,
    strong_components,
)
from instances import complete_bidirected, pinwheel, random_digraph


def test_edge_validation():
    with pytest.raises(ValueError):
        Digraph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Digraph(-1)


def test_loops_and_parallel_edges_are_stored_but_quotiented():
    g = Digraph(3, [(0, 1), (0, 1), (1, 1), (1, 2)])
    assert len(g.edges) == 4
    assert g.simple_edges() == {(0, 1), (1, 2)}
    assert g.successors(1) == (2,)


def test_reverse_empty_and_single_edge():
    assert reverse(Digraph(0)) == Digraph(0)
    assert reverse(Digraph(2, [(0, 1)])) == Digraph(2, [(1, 0)])


def test_reverse_two_source_fan():
    g = Digraph(3, [(0, 1), (0, 2)])
    assert reverse(g) == Digraph(3, [(1, 0), (2, 0)])


def test_reverse_is_involution_randomized():
    rng = random.Random(7)
    for _ in range(50):
        g = random_digraph(rng, rng.randint(0, 7), 0.4)
        assert reverse(reverse(g)) == g


def test_strong_components_cycle_and_path():
    assert strong_components(Digraph(3, [(0, 1), (1, 2), (2, 0)])) == [[0, 1, 2]]
    assert strong_components(Digraph(3, [(0, 1), (1, 2)])) == [[0], [1], [2]]


def test_strong_components_pinwheel_is_one_piece():
    g, _ = pinwheel()
    comps = strong_components(g)
    assert comps == [list(range(8))]
    # cross-check by BFS in both directions
    fwd = reachable_from(g, {0})
    bwd = reachable_from(reverse(g), {0})
    assert fwd == bwd == set(range(8))


def test_strong_components_is_a_partition_randomized():
    rng = random.Random(11)
    for _ in range(60):
        g = random_digraph(rng, rng.randint(1, 8), 0.3)
        comps = strong_components(g)
        flat = sorted(v for c in comps for v in c)
        assert flat == list(range(g.n))
        reach = {v: reachable_from(g, {v}) for v in range(g.n)}
        for comp in comps:
            for u in comp:
                for v in comp:
                    assert v in reach[u] and u in reach[v]
        for c1, c2 in itertools.combinations(comps, 2):
            u, v = c1[0], c2[0]
            assert not (v in reach[u] and u in reach[v])


def test_is_k_strong_examples():
    k5 = complete_bidirected(5)
    assert is_k_strong(k5, 4)
    assert not is_k_strong(k5, 5)  # needs at least k+1 vertices
    cycle4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert is_k_strong(cycle4, 1)
    assert not is_k_strong(cycle4, 2)


def test_is_k_strong_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        is_k_strong(Digraph(3), 0)


def _separator_by_enumeration(g: Digraph, k: int) -> bool:
    """True iff no vertex set of size < k is a separator."""
    if g.n < k + 1:
        return False
    for size in range(k):
        for combo in itertools.combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in combo]
            if len(rest) <= 1:
                continue
            sub = g.without_vertices(combo)
            if any(set(rest) - reachable_from(sub, {v}) for v in rest):
                return False
    return True


def test_is_k_strong_matches_enumeration():
    rng = random.Random(23)
    for _ in range(25):
        n = rng.randint(2, 6)
        g = random_digraph(rng, n, rng.choice([0.3, 0.5, 0.8]))
        for k in range(1, n + 1):
            assert is_k_strong(g, k) == _separator_by_enumeration(g, k), (g.edges, k)


def test_path_and_walk_validation():
    with pytest.raises(ValueError):
        Path(())
    with pytest.raises(ValueError):
        Path((1, 2, 1))
    with pytest.raises(ValueError):
        Walk(())
    p = Path((3, 1))
    assert p.source == 3 and p.sink == 1
    assert Path((2,)).is_valid_in(Digraph(3))
    assert not Path((5,)).is_valid_in(Digraph(3))


def test_shorten_walk_examples():
    g = Digraph(3, [(0, 1), (1, 0), (0, 2)])
    p = shorten_walk(Walk((0, 1, 0, 2)))
    assert p.vertices == (0, 2) and p.is_valid_in(g)
    assert shorten_walk(Walk((3,))).vertices == (3,)
    assert shorten_walk([0, 1, 2, 1, 3]).vertices == (0, 1, 3)


def test_shorten_walk_rejects_empty():
    with pytest.raises(ValueError):
        shorten_walk([])


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 6), min_size=1, max_size=12))
def test_shorten_walk_properties(verts):
    p = shorten_walk(verts)
    assert p.source == verts[0]
    assert p.sink == verts[-1]
    assert set(p.vertices) <= set(verts)
    assert len(set(p.vertices)) == len(p.vertices)


def test_shorten_walk_keeps_edge_consistency():
    rng = random.Random(5)
    for _ in range(80):
        g = random_digraph(rng, rng.randint(2, 7), 0.5)
        starts = [v for v in range(g.n) if g.successors(v)]
        if not starts:
            continue
        v = rng.choice(starts)
        walk = [v]
        for _ in range(rng.randint(1, 10)):
            nxt = g.successors(walk[-1])
            if not nxt:
                break
            walk.append(rng.choice(nxt))
        assert shorten_walk(walk).is_valid_in(g)
