"""Congested linkage routing through a bramble.

Given k terminal pairs, a congestion bound c >= 2, and a validated bramble of
congestion at most c with at least ``g(k, c)`` bags, ``route`` either

* connects every pair with paths such that no vertex lies on more than c of
  them (a *solution*), or
* certifies a separator of at most k-1 vertices between the sources and a
  large sub-bramble, or symmetrically between a large sub-bramble and the
  sinks.

The machinery: run the relaxed bag-assignment duality on many forward copies
of the graph (sources) and as many reversed copies (sinks).  A small cut
yields the separator outcome.  Otherwise the found path system is trimmed so
that no path wanders through an unused bag, edges leaving unused bag vertices
outside the trimmed system are deleted, and a second duality application on
the reduced graphs is guaranteed to produce one path per terminal; gluing
source- and sink-side paths inside the strongly connected union of their two
assigned bags finishes the job, with the bag assignment bounding congestion.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Union

from . import bramble as bramble_mod
from .digraph import Digraph, Path, reachable_from, reverse, shorten_walk
from .minmax import DigraphSourceSequence, RespectingPathSet, SetFamily, solve_rpaths
from .report import Verification, verification


def g(k: int, c: int) -> int:
    """Bag count that makes routing k pairs at congestion c always resolvable."""
    if k < 2 or c < 2:
        raise ValueError("both the pair count and the congestion bound must be at least 2")
    return 2 * k * (c * k - c + 2) + c * (k - 1)


class RoutingInternalError(RuntimeError):
    """A step the underlying theory rules out happened; this is a bug, not an outcome."""


@dataclass(frozen=True, eq=False)
class DDPInstance:
    """k terminal pairs, a congestion bound, and a bramble as routing structure."""

    graph: Digraph
    s: tuple[int, ...]
    t: tuple[int, ...]
    c: int
    bramble: SetFamily

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", tuple(self.s))
        object.__setattr__(self, "t", tuple(self.t))
        if len(self.s) != len(self.t):
            raise ValueError("source and sink lists must have equal length")
        if len(self.s) < 2:
            raise ValueError("at least two terminal pairs are required")
        # Sources are a set, as are sinks; the two sets may overlap and
        # terminals may lie inside bramble bags.
        if len(set(self.s)) != len(self.s) or len(set(self.t)) != len(self.t):
            raise ValueError("terminals must be distinct within each side")
        for v in (*self.s, *self.t):
            if not 0 <= v < self.graph.n:
                raise ValueError(f"terminal {v} out of range")
        for bag in self.bramble:
            for v in bag:
                if not 0 <= v < self.graph.n:
                    raise ValueError(f"bag vertex {v} out of range")
        if self.c < 2:
            raise ValueError("congestion bound must be at least 2")
        if len(self.bramble) < g(self.k, self.c):
            raise ValueError(
                f"bramble has {len(self.bramble)} bags; routing needs {g(self.k, self.c)}"
            )

    @property
    def k(self) -> int:
        return len(self.s)


@dataclass(frozen=True)
class SeparatorAtSource:
    kept: tuple[int, ...]
    xs: frozenset[int]


@dataclass(frozen=True)
class SeparatorAtSink:
    kept: tuple[int, ...]
    xt: frozenset[int]


@dataclass(frozen=True)
class Solution:
    paths: tuple[Path, ...]


RoutingOutcome = Union[SeparatorAtSource, SeparatorAtSink, Solution]


@dataclass(frozen=True)
class RPathsFound:
    paths: RespectingPathSet


@dataclass(frozen=True)
class SmallCut:
    kept: frozenset[int]
    xs: frozenset[int]
    xt: frozenset[int]


def rpaths_or_small_cut(
    gs: Digraph,
    gt: Digraph,
    s: Iterable[int],
    t: Iterable[int],
    ell: int,
    fam: SetFamily,
) -> RPathsFound | SmallCut:
    """Either 2*ell*k bag-assigned paths or a collapsed two-sided small cut.

    The sequence is ``ell`` copies of (gs, s) followed by ``ell`` copies of
    (gt, t).  In the cut branch the kept subfamily is non-empty, the ``ell``
    source-side separators collapse to a single smallest one (likewise the
    sink side), and the two sides together have at most 2k-1 vertices.
    """
    s, t = frozenset(s), frozenset(t)
    if len(s) != len(t):
        raise ValueError("source and sink sets must have the same size")
    if ell < 1:
        raise ValueError("the copy count must be at least 1")
    k = len(s)
    if len(fam) < 2 * ell * k:
        raise ValueError(f"family has {len(fam)} bags; at least {2 * ell * k} required")

    seq = DigraphSourceSequence([(gs, s)] * ell + [(gt, t)] * ell)
    paths, cut = solve_rpaths(seq, fam)
    if paths.size() >= 2 * ell * k:
        sizes = {len(part) for part in paths.parts}
        assert sizes == {k}, "a full system has exactly k disjoint paths per copy"
        return RPathsFound(paths)

    if not cut.kept:
        raise RoutingInternalError("a small cut must keep at least one bag")

    def smallest(pieces):
        return min(pieces, key=lambda x: (len(x), sorted(x)))

    xs = smallest(cut.xs[:ell])
    xt = smallest(cut.xs[ell:])
    if len(xs) + len(xt) > 2 * k - 1:
        raise RoutingInternalError("collapsed separators exceed the 2k-1 budget")
    return SmallCut(cut.kept, xs, xt)


def make_b_minimal(paths: RespectingPathSet, fam: SetFamily) -> RespectingPathSet:
    """Truncate paths so no internal vertex lies in a bag outside the
    currently assigned destination bags.

    Scans paths in index order and vertices front to back; a truncation moves
    the path's assignment to the offending bag (smallest index), which can
    expose earlier vertices of other paths, so the scan repeats to a fixpoint.
    The assignment stays injective and every sink stays inside its bag.
    """
    parts = [list(part) for part in paths.parts]
    if paths.assignment is None:
        raise ValueError("a bag assignment is required")
    assign = [list(a) for a in paths.assignment]
    image = {m for row in assign for m in row}

    changed = True
    while changed:
        changed = False
        for i, part in enumerate(parts):
            for j, path in enumerate(part):
                for v in path.vertices[1:-1]:
                    outside = next(
                        (m for m in range(len(fam)) if m not in image and v in fam[m]),
                        None,
                    )
                    if outside is None:
                        continue
                    cutoff = path.vertices.index(v) + 1
                    parts[i][j] = Path(path.vertices[:cutoff])
                    image.discard(assign[i][j])
                    assign[i][j] = outside
                    image.add(outside)
                    changed = True
                    break
    return RespectingPathSet(
        tuple(tuple(p) for p in parts), tuple(tuple(a) for a in assign)
    )


def build_refined(
    gs: Digraph,
    gt: Digraph,
    paths: RespectingPathSet,
    fam: SetFamily,
    ell: int,
) -> tuple[Digraph, Digraph]:
    """Delete edges leaving bag vertices that the trimmed system does not use.

    The source side keeps the vertices of its paths (sinks excluded) plus all
    assigned source-side bags; every other bag vertex loses its out-edges.
    The sink side is symmetric.
    """
    if paths.assignment is None:
        raise ValueError("a bag assignment is required")
    union_all: set[int] = set()
    for bag in fam:
        union_all |= bag

    def side(parts, rows) -> set[int]:
        keep: set[int] = set()
        for part, row in zip(parts, rows):
            for path, bag_index in zip(part, row):
                keep.update(path.vertices[:-1])
                keep |= fam[bag_index]
        return keep

    v_s = side(paths.parts[:ell], paths.assignment[:ell])
    v_t = side(paths.parts[ell:], paths.assignment[ell:])
    return gs.without_out_edges(union_all - v_s), gt.without_out_edges(union_all - v_t)


def _bfs_path(graph: Digraph, start: int, goal: int, allowed: frozenset[int]) -> list[int] | None:
    """Shortest path inside the induced subgraph on ``allowed``; smallest-id ties."""
    if start == goal:
        return [start]
    parent = {start: -1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in graph.successors(v):
            if w in allowed and w not in parent:
                parent[w] = v
                if w == goal:
                    out = [w]
                    while out[-1] != start:
                        out.append(parent[out[-1]])
                    return out[::-1]
                queue.append(w)
    return None


def route(instance: DDPInstance) -> RoutingOutcome:
    """Produce a solution or a one-sided separator certificate.

    Raises ValueError for invalid instances and RoutingInternalError when an
    internal step contradicts what the construction guarantees.
    """
    fam = instance.bramble
    graph = instance.graph
    k, c = instance.k, instance.c

    check = bramble_mod.validate(graph, fam)
    if not check:
        raise ValueError("invalid bramble: " + "; ".join(check.violations))
    if bramble_mod.congestion(fam) > c:
        raise ValueError("bramble congestion exceeds the requested bound")

    rev = reverse(graph)
    ell = c * k - c + 1
    first = rpaths_or_small_cut(graph, rev, instance.s, instance.t, ell, fam)

    if isinstance(first, SmallCut):
        # One side fits the k-1 budget; prefer the source side when both do.
        if len(first.xs) <= k - 1:
            x = first.xs
            kept = tuple(m for m in range(len(fam)) if not fam[m] & x)
            return SeparatorAtSource(kept, x)
        if len(first.xt) > k - 1:
            raise RoutingInternalError("neither separator side fits the k-1 budget")
        x = first.xt
        kept = tuple(m for m in range(len(fam)) if not fam[m] & x)
        return SeparatorAtSink(kept, x)

    trimmed = make_b_minimal(first.paths, fam)
    refined_s, refined_t = build_refined(graph, rev, trimmed, fam, ell)
    used = {m for row in trimmed.assignment for m in row}
    rest = sorted(set(range(len(fam))) - used)
    second = rpaths_or_small_cut(
        refined_s, refined_t, instance.s, instance.t, 1, fam.subfamily(rest)
    )
    if isinstance(second, SmallCut):
        raise RoutingInternalError(
            "the refined instance returned a cut, which the construction excludes"
        )

    # One path per terminal on each side; sources are distinct, so each side
    # indexes cleanly by its terminal.
    by_source = {}
    by_sink = {}
    for path, local_bag in zip(second.paths.parts[0], second.paths.assignment[0]):
        by_source[path.source] = (path, rest[local_bag])
    for path, local_bag in zip(second.paths.parts[1], second.paths.assignment[1]):
        by_sink[path.source] = (path, rest[local_bag])
    if set(by_source) != set(instance.s) or set(by_sink) != set(instance.t):
        raise RoutingInternalError("terminal coverage is incomplete after refinement")

    solution: list[Path] = []
    for s_i, t_i in zip(instance.s, instance.t):
        head, head_bag = by_source[s_i]
        tail_rev, tail_bag = by_sink[t_i]
        tail = tuple(reversed(tail_rev.vertices))  # a path of the forward graph
        allowed = fam[head_bag] | fam[tail_bag]
        glue = _bfs_path(graph, head.sink, tail[0], allowed)
        if glue is None:
            raise RoutingInternalError("bag union is not strongly connected during gluing")
        walk = list(head.vertices) + glue[1:] + list(tail[1:])
        solution.append(shorten_walk(walk))

    usage: dict[int, int] = {}
    for path in solution:
        for v in path.vertices:
            usage[v] = usage.get(v, 0) + 1
    if usage and max(usage.values()) > c:
        raise RoutingInternalError("congestion bound violated by the glued paths")
    return Solution(tuple(solution))


def check_outcome(instance: DDPInstance, outcome: RoutingOutcome) -> Verification:
    """Re-verify a routing outcome from scratch; never raises."""
    bad: list[str] = []
    fam = instance.bramble
    graph = instance.graph
    k, c = instance.k, instance.c
    needed_bags = g(k, c) - c * (k - 1)

    if isinstance(outcome, Solution):
        if len(outcome.paths) != k:
            bad.append(f"wrong-path-count: {len(outcome.paths)} paths for {k} pairs")
            return verification(bad)
        usage: dict[int, int] = {}
        for i, path in enumerate(outcome.paths):
            if not path.is_valid_in(graph):
                bad.append(f"invalid-path: path {i} is not a path of the graph")
            if path.source != instance.s[i] or path.sink != instance.t[i]:
                bad.append(
                    f"endpoint-mismatch: path {i} runs {path.source}->{path.sink}"
                )
            for v in path.vertices:
                usage[v] = usage.get(v, 0) + 1
        over = sorted(v for v, cnt in usage.items() if cnt > c)
        if over:
            bad.append(f"congestion-exceeded: vertices {over} lie on more than {c} paths")
        return verification(bad)

    if isinstance(outcome, SeparatorAtSource):
        kept, x, label = outcome.kept, outcome.xs, "sources"
    else:
        kept, x, label = outcome.kept, outcome.xt, "sinks"
    if len(x) > k - 1:
        bad.append(f"separator-too-big: {len(x)} vertices exceed {k - 1}")
    if len(kept) < needed_bags:
        bad.append(f"kept-family-too-small: {len(kept)} bags, need {needed_bags}")
    union: set[int] = set()
    for m in kept:
        if not 0 <= m < len(fam):
            bad.append(f"bad-bag-index: {m}")
            continue
        if fam[m] & x:
            bad.append(f"kept-bag-hit: bag {m} meets the separator")
        union |= fam[m]
    if isinstance(outcome, SeparatorAtSource):
        reached = reachable_from(graph, set(instance.s) - x, forbidden=x)
        leaks = sorted(reached & union)
    else:
        reached = reachable_from(graph, union - x, forbidden=x)
        leaks = sorted(reached & (set(instance.t) - x))
    if leaks:
        bad.append(f"separator-leak: {label} side still connects via {leaks}")
    return verification(bad)
