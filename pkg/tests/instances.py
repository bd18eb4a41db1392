"""Shared hand-built instances for the test suite.

The *fan* family: three little digraphs over a common universe of five
vertices (feeders 0, 1, 2 and hubs 3, 4), each feeder wired to one or both
hubs.  Small enough to enumerate everything by hand, rich enough that the
three sink disciplines give three different maxima (2, 2, and 3).

The *pinwheel*: an 8-vertex strongly connected digraph carrying a three-bag
family of congestion two whose minimum hitting set has two vertices.
"""

from __future__ import annotations

import random

from bramblelink import Digraph, DigraphSourceSequence, SetFamily

FEEDERS = (0, 1, 2)
HUBS = (3, 4)


def fan_graphs() -> tuple[Digraph, Digraph, Digraph]:
    g1 = Digraph(5, [(0, 3)])
    g2 = Digraph(5, [(1, 3), (1, 4)])
    g3 = Digraph(5, [(2, 4)])
    return g1, g2, g3


def fan_sequence() -> DigraphSourceSequence:
    g1, g2, g3 = fan_graphs()
    return DigraphSourceSequence([(g1, {0}), (g2, {1}), (g3, {2})])


def fan_union_graph() -> Digraph:
    return Digraph(5, [(0, 3), (1, 3), (1, 4), (2, 4)])


def fan_sequence_with_union() -> DigraphSourceSequence:
    """The three fans plus one entry holding the whole union, all feeders live."""
    g1, g2, g3 = fan_graphs()
    return DigraphSourceSequence(
        [(g1, {0}), (g2, {1}), (g3, {2}), (fan_union_graph(), {0, 1, 2})]
    )


def hub_bags() -> SetFamily:
    return SetFamily([{3}, {3, 4}, {4}])


# Hand-enumerated optima for the fan instances.
FAN_D_VALUE = 2  # only two hubs exist and sinks must be globally distinct
FAN_T_VALUE = 2  # same bottleneck, transversal or not
FAN_R_VALUE = 3  # hub 3 may serve entries 1 and 2 under different bags


def pinwheel() -> tuple[Digraph, SetFamily]:
    """Two directed triangles through a center plus a third triangle tied to
    the center by one edge in each direction; bags are the three triangles."""
    c, u1, u2, v1, v2, w1, w2, w3 = range(8)
    edges = [
        (c, u1), (u1, v1), (v1, c),
        (c, u2), (u2, v2), (v2, c),
        (w1, w2), (w2, w3), (w3, w1),
        (w1, c), (c, w2),
    ]
    bags = SetFamily([{c, u1, v1}, {c, u2, v2}, {w1, w2, w3}])
    return Digraph(8, edges), bags


def complete_bidirected(n: int) -> Digraph:
    return Digraph(n, [(u, v) for u in range(n) for v in range(n) if u != v])


def random_digraph(rng: random.Random, n: int, p: float) -> Digraph:
    return Digraph(
        n, [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    )
