"""Matroid route for recomputing the three path maxima independently.

Gammoids (independent sets = sink sets of disjoint path families) and
transversal matroids (independent sets = partial transversals) combine
through union and intersection to reproduce each solver value.  Everything
here is oracle-grade: union ranks and intersections are evaluated
exhaustively over subsets, gated to desk scale, because this module exists to
cross-check the flow route rather than to be fast.
"""

from __future__ import annotations

from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .digraph import Digraph
from .menger import min_separator_size
from .minmax import DigraphSourceSequence, SetFamily
from .report import ScaleError

DESK_SCALE = 16


class Matroid:
    """Ground set plus an independence oracle; rank falls out greedily."""

    def __init__(self, ground: Iterable[Hashable], indep=None) -> None:
        self.ground_set = frozenset(ground)
        self._indep = indep
        self._indep_memo: dict[frozenset, bool] = {}
        self._rank_memo: dict[frozenset, int] = {}

    def independent(self, subset: Iterable[Hashable]) -> bool:
        key = frozenset(subset)
        if not key <= self.ground_set:
            return False
        if key not in self._indep_memo:
            self._indep_memo[key] = self._independent(key)
        return self._indep_memo[key]

    def _independent(self, subset: frozenset) -> bool:
        if self._indep is None:
            raise NotImplementedError
        return self._indep(subset)

    def rank(self, subset: Iterable[Hashable]) -> int:
        key = frozenset(subset) & self.ground_set
        if key not in self._rank_memo:
            self._rank_memo[key] = self._rank(key)
        return self._rank_memo[key]

    def _rank(self, subset: frozenset) -> int:
        # Greedy over the oracle is exact for matroids.
        picked: set[Hashable] = set()
        for e in sorted(subset):
            if self.independent(picked | {e}):
                picked.add(e)
        return len(picked)


class Gammoid(Matroid):
    """Subsets of ``y`` reachable as sink sets of disjoint ``x -> y`` paths."""

    def __init__(self, host: Digraph, x: Iterable[int], y: Iterable[int]) -> None:
        self.host = host
        self.x = frozenset(x)
        super().__init__(frozenset(y))

    def _rank(self, subset: frozenset) -> int:
        if not subset:
            return 0
        return min_separator_size(self.host, self.x, subset)

    def _independent(self, subset: frozenset) -> bool:
        return self.rank(subset) == len(subset)


def gammoid_rank(gm: Gammoid, u: Iterable[int]) -> int:
    """Rank of ``u`` inside the gammoid: a minimum separator size."""
    u = frozenset(u)
    if not u <= gm.ground_set:
        raise ValueError(f"subset not within the ground set: {sorted(u - gm.ground_set)}")
    return gm.rank(u)


def _max_matching(bags: Sequence[frozenset], elements: Sequence[Hashable]) -> dict[Hashable, int]:
    """Maximum bag/element matching by augmenting paths; returns element -> bag."""
    index = {e: i for i, e in enumerate(elements)}
    match_of_bag: list[int] = [-1] * len(bags)
    match_of_elem: dict[Hashable, int] = {}

    def try_bag(j: int, seen: set[int]) -> bool:
        for e in sorted(bags[j] & set(index)):
            pos = index[e]
            if pos in seen:
                continue
            seen.add(pos)
            if e not in match_of_elem or try_bag(match_of_elem[e], seen):
                match_of_elem[e] = j
                match_of_bag[j] = pos
                return True
        return False

    for j in range(len(bags)):
        try_bag(j, set())
    return match_of_elem


class TransversalMatroid(Matroid):
    """Partial transversals of an indexed bag family."""

    def __init__(self, family: SetFamily | Iterable[Iterable[Hashable]]) -> None:
        self.family = family if isinstance(family, SetFamily) else None
        self.bags = tuple(frozenset(b) for b in (family.bags if isinstance(family, SetFamily) else family))
        ground: set[Hashable] = set()
        for bag in self.bags:
            ground |= bag
        super().__init__(ground)

    def _rank(self, subset: frozenset) -> int:
        return len(_max_matching(self.bags, sorted(subset)))

    def _independent(self, subset: frozenset) -> bool:
        return self.rank(subset) == len(subset)


def transversal_rank(tm: TransversalMatroid, u: Iterable[Hashable]) -> int:
    """Largest partial transversal inside ``u`` (a maximum matching size)."""
    return tm.rank(frozenset(u) & tm.ground_set)


class MatroidUnion(Matroid):
    """Union of matroids, ranked by exhaustive evaluation of the min-formula."""

    def __init__(self, matroids: Sequence[Matroid]) -> None:
        self.matroids = tuple(matroids)
        ground: set[Hashable] = set()
        for m in self.matroids:
            ground |= m.ground_set
        super().__init__(ground)

    def _rank(self, subset: frozenset) -> int:
        if len(subset) > DESK_SCALE:
            raise ScaleError(f"union rank is gated to {DESK_SCALE} elements")
        elems = sorted(subset)
        best = len(elems)  # T = empty set
        for r in range(1, len(elems) + 1):
            for combo in combinations(elems, r):
                t = frozenset(combo)
                total = len(subset) - r + sum(m.rank(t & m.ground_set) for m in self.matroids)
                if total < best:
                    best = total
        return best

    def _independent(self, subset: frozenset) -> bool:
        return self.rank(subset) == len(subset)


def union_rank(matroids: Sequence[Matroid], u: Iterable[Hashable]) -> int:
    """Rank of ``u`` in the union of the given matroids."""
    if not matroids:
        return 0
    return MatroidUnion(matroids).rank(frozenset(u))


def intersection_max(m1: Matroid, m2: Matroid) -> int:
    """Largest common independent set, cross-checked against the dual formula."""
    if m1.ground_set != m2.ground_set:
        raise ValueError("matroid intersection needs a shared ground set")
    ground = sorted(m1.ground_set)
    if len(ground) > DESK_SCALE:
        raise ScaleError(f"intersection search is gated to {DESK_SCALE} elements")

    best = 0
    upper = min(m1.rank(m1.ground_set), m2.rank(m2.ground_set))
    for size in range(upper, 0, -1):
        if size <= best:
            break
        for combo in combinations(ground, size):
            chosen = frozenset(combo)
            if m1.independent(chosen) and m2.independent(chosen):
                best = size
                break
        if best:
            break

    dual = min(
        m1.rank(frozenset(u)) + m2.rank(m2.ground_set - frozenset(u))
        for r in range(len(ground) + 1)
        for u in combinations(ground, r)
    )
    if best != dual:
        raise AssertionError(f"matroid intersection mismatch: search {best}, formula {dual}")
    return best


# ---------------------------------------------------------------------------
# The three values through the matroid route
# ---------------------------------------------------------------------------


def _entry_gammoids(seq: DigraphSourceSequence, targets: frozenset[int]) -> list[Gammoid]:
    return [Gammoid(g, sources, frozenset(v for v in targets if v < g.n)) for g, sources in seq]


def dpaths_value_via_matroids(seq: DigraphSourceSequence, b: Iterable[int]) -> int:
    """Distinct-sink maximum into ``b``: rank of ``b`` in the gammoid union."""
    b = frozenset(b)
    seq.check_universe(b, "target set")
    if len(b) > DESK_SCALE:
        raise ScaleError(f"matroid route is gated to {DESK_SCALE} targets")
    return union_rank(_entry_gammoids(seq, b), b)


def tpaths_value_via_matroids(seq: DigraphSourceSequence, fam: SetFamily) -> int:
    """Transversal maximum: gammoid-union intersected with the bag transversal matroid."""
    seq.check_universe(fam.universe, "bag family")
    universe = frozenset(fam.universe)
    if len(universe) > DESK_SCALE:
        raise ScaleError(f"matroid route is gated to {DESK_SCALE} elements")
    if not universe:
        return 0
    m1 = MatroidUnion(_entry_gammoids(seq, universe))
    m2 = TransversalMatroid(fam)
    # Both ground sets are the bag union: every member has a copy somewhere.
    return intersection_max(m1, m2)


class _TaggedGammoid(Matroid):
    """A gammoid re-labelled onto (entry, vertex) pairs of one entry."""

    def __init__(self, inner: Gammoid, tag: int) -> None:
        self.inner = inner
        self.tag = tag
        super().__init__(frozenset((tag, v) for v in inner.ground_set))

    def _rank(self, subset: frozenset) -> int:
        return self.inner.rank(frozenset(v for _, v in subset))

    def _independent(self, subset: frozenset) -> bool:
        return self.rank(subset) == len(subset)


def rpaths_value_via_matroids(seq: DigraphSourceSequence, fam: SetFamily) -> int:
    """Bag-assignment maximum, via per-entry copies of every bag member.

    Treating the entries as disjoint removes the cross-entry sink clashes,
    after which the transversal intersection matches the relaxed variant.
    """
    seq.check_universe(fam.universe, "bag family")
    universe = frozenset(fam.universe)
    tagged_ground = frozenset(
        (i, v) for i, (g, _) in enumerate(seq) for v in universe if v < g.n
    )
    if len(tagged_ground) > DESK_SCALE:
        raise ScaleError(f"matroid route is gated to {DESK_SCALE} elements")
    if not tagged_ground:
        return 0
    gammoids = [
        _TaggedGammoid(Gammoid(g, sources, frozenset(v for v in universe if v < g.n)), i)
        for i, (g, sources) in enumerate(seq)
    ]
    tagged_bags = [
        frozenset((i, v) for i, (g, _) in enumerate(seq) for v in bag if v < g.n)
        for bag in fam
    ]
    m1 = MatroidUnion(gammoids)
    m2 = TransversalMatroid(tagged_bags)
    return intersection_max(m1, m2)
