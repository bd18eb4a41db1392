"""Brambles: families of strongly connected bags that pairwise touch.

Two bags *touch* when they share a vertex or the host digraph has edges
between them in both directions.  The congestion of a family is the largest
number of bags any single vertex belongs to; its order is the minimum size of
a hitting set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import ceil
from typing import Iterable

from .digraph import Digraph, strong_components
from .minmax import SetFamily
from .report import ScaleError, Verification, verification

MAX_HITTING_SET_VERTICES = 20


def _as_family(bags: SetFamily | Iterable[Iterable[int]]) -> SetFamily:
    return bags if isinstance(bags, SetFamily) else SetFamily(bags)


def _touches(g: Digraph, a: frozenset[int], b: frozenset[int]) -> bool:
    if a & b:
        return True
    edges = g.simple_edges()
    forward = any((u, v) in edges for u in a for v in b)
    if not forward:
        return False
    return any((v, u) in edges for u in a for v in b)


def validate(g: Digraph, bags: SetFamily | Iterable[Iterable[int]]) -> Verification:
    """Check strong connectivity of every bag and the pairwise touch condition."""
    fam = _as_family(bags)
    bad: list[str] = []
    for i, bag in enumerate(fam):
        outside = sorted(v for v in bag if not 0 <= v < g.n)
        if outside:
            bad.append(f"bag-outside-graph: bag {i} uses {outside}")
            continue
        if not bag:
            bad.append(f"empty-bag: bag {i} induces no subgraph")
            continue
        induced = g.without_vertices(set(range(g.n)) - bag)
        comps = [c for c in strong_components(induced) if set(c) & bag]
        if len(comps) != 1:
            bad.append(f"bag-not-strong: bag {i} splits into {len(comps)} components")
    for i, j in combinations(range(len(fam)), 2):
        a, b = fam[i], fam[j]
        if not a or not b or not a <= frozenset(range(g.n)) or not b <= frozenset(range(g.n)):
            continue
        if not _touches(g, a, b):
            bad.append(f"bags-not-touching: bags {i} and {j} neither meet nor have edges both ways")
    return verification(bad)


def congestion(bags: SetFamily | Iterable[Iterable[int]]) -> int:
    """Largest number of bags sharing one vertex."""
    fam = _as_family(bags)
    if not len(fam):
        raise ValueError("congestion of an empty family is undefined")
    counts: dict[int, int] = {}
    for bag in fam:
        for v in bag:
            counts[v] = counts.get(v, 0) + 1
    return max(counts.values(), default=0)


def min_hitting_set(g: Digraph, bags: SetFamily | Iterable[Iterable[int]]) -> frozenset[int]:
    """A minimum vertex set meeting every bag, by exhaustive search.

    Exponential; refuses hosts with more than 20 vertices.
    """
    fam = _as_family(bags)
    if g.n > MAX_HITTING_SET_VERTICES:
        raise ScaleError(f"hitting-set search is gated to {MAX_HITTING_SET_VERTICES} vertices")
    if any(not bag for bag in fam):
        raise ValueError("an empty bag cannot be hit")
    candidates = sorted(fam.universe)
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            chosen = frozenset(combo)
            if all(bag & chosen for bag in fam):
                return chosen
    raise AssertionError("unreachable: the full union hits every bag")


def order_lower_bound(bags: SetFamily | Iterable[Iterable[int]], c: int) -> int:
    """Every hitting set needs at least ceil(|family| / c) vertices when no
    vertex lies in more than ``c`` bags."""
    if c < 1:
        raise ValueError("congestion bound must be at least 1")
    fam = _as_family(bags)
    return ceil(len(fam) / c)


@dataclass(frozen=True, eq=False)
class Bramble:
    """A bag family tied to its host digraph."""

    host: Digraph
    bags: SetFamily

    def validate(self) -> Verification:
        return validate(self.host, self.bags)

    def congestion(self) -> int:
        return congestion(self.bags)

    def min_hitting_set(self) -> frozenset[int]:
        return min_hitting_set(self.host, self.bags)

    def order_lower_bound(self, c: int) -> int:
        return order_lower_bound(self.bags, c)
