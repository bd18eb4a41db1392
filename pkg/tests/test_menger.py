import random

import pytest

from bramblelink import (
    Digraph,
    brute_menger,
    menger,
    min_separator,
    min_separator_size,
    reachable_from,
)
from instances import complete_bidirected, random_digraph


def test_single_forced_path():
    cert = menger(Digraph(2, [(0, 1)]), {0}, {1})
    assert [p.vertices for p in cert.paths] == [(0, 1)]
    assert len(cert.separator) == 1


def test_shared_vertex_gives_single_vertex_path():
    g = Digraph(4, [(0, 1), (1, 2)])
    cert = menger(g, {1}, {1})
    assert [p.vertices for p in cert.paths] == [(1,)]
    assert cert.separator == {1}


def test_two_disjoint_paths():
    g = Digraph(4, [(0, 2), (1, 3), (0, 3)])
    cert = menger(g, {0, 1}, {2, 3})
    assert len(cert.paths) == 2
    assert len(cert.separator) == 2
    assert brute_menger(g, {0, 1}, {2, 3}) == (2, 2)


def test_empty_sides():
    g = Digraph(3, [(0, 1)])
    assert min_separator_size(g, set(), {1}) == 0
    assert min_separator_size(g, {0}, set()) == 0
    assert menger(g, set(), set()).paths == ()


def test_complete_bidirected_pairs():
    g = complete_bidirected(6)
    assert min_separator_size(g, {0, 1}, {4, 5}) == 2
    assert brute_menger(g, {0, 1}, {4, 5}) == (2, 2)


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        menger(Digraph(2), {0}, {5})
    with pytest.raises(ValueError):
        min_separator_size(Digraph(2), {-1}, {0})


def test_determinism():
    rng = random.Random(3)
    for _ in range(20):
        g = random_digraph(rng, 7, 0.35)
        a = frozenset(rng.sample(range(7), 3))
        b = frozenset(rng.sample(range(7), 3))
        first = menger(g, a, b)
        second = menger(g, a, b)
        assert first == second


def test_matches_enumeration_on_random_digraphs():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(1, 8)
        g = random_digraph(rng, n, rng.choice([0.15, 0.3, 0.5]))
        a = frozenset(rng.sample(range(n), rng.randint(0, min(4, n))))
        b = frozenset(rng.sample(range(n), rng.randint(0, min(4, n))))
        cert = menger(g, a, b)
        expected_paths, expected_cut = brute_menger(g, a, b)
        assert len(cert.paths) == expected_paths
        assert len(cert.separator) == expected_cut

        # certificate structure: disjoint a->b paths, separator kills the rest
        seen: set[int] = set()
        for path in cert.paths:
            assert path.is_valid_in(g)
            assert path.source in a and path.sink in b
            assert not seen & set(path.vertices)
            seen |= set(path.vertices)
        survivors = reachable_from(g, a - cert.separator, cert.separator)
        assert not survivors & (b - cert.separator)


def test_min_separator_matches_certificate():
    g = Digraph(5, [(0, 2), (2, 4), (1, 2), (2, 3)])
    assert min_separator(g, {0, 1}, {3, 4}) == menger(g, {0, 1}, {3, 4}).separator == {2}
