"""Maximum vertex-disjoint path families and minimum vertex separators.

The classical equality between the maximum number of pairwise vertex-disjoint
``A -> B`` paths and the minimum size of an ``(A, B)``-separator, computed by
the vertex-splitting reduction to unit-capacity max-flow.  Separator vertices
may belong to ``A`` or ``B``; a vertex of ``A & B`` forces a single-vertex
path and a separator member.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .digraph import Digraph, Path

_BIG = 1 << 30


@dataclass(frozen=True)
class MengerCertificate:
    """A maximum disjoint path family together with a matching minimum separator."""

    paths: tuple[Path, ...]
    separator: frozenset[int]

    @property
    def value(self) -> int:
        return len(self.paths)


class _FlowNet:
    """Residual network with unit split-edges; everything else effectively uncapped."""

    __slots__ = ("adj", "to", "cap", "orig")

    def __init__(self, nodes: int) -> None:
        self.adj: list[list[int]] = [[] for _ in range(nodes)]
        self.to: list[int] = []
        self.cap: list[int] = []
        self.orig: list[int] = []

    def add(self, u: int, v: int, c: int) -> None:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.orig.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        self.orig.append(0)

    def max_flow(self, s: int, t: int) -> int:
        flow = 0
        parent_edge = [-1] * len(self.adj)
        while True:
            for i in range(len(parent_edge)):
                parent_edge[i] = -1
            parent_edge[s] = -2
            queue = deque([s])
            while queue and parent_edge[t] == -1:
                u = queue.popleft()
                for e in self.adj[u]:
                    w = self.to[e]
                    if self.cap[e] > 0 and parent_edge[w] == -1:
                        parent_edge[w] = e
                        queue.append(w)
            if parent_edge[t] == -1:
                return flow
            push = _BIG
            v = t
            while v != s:
                e = parent_edge[v]
                push = min(push, self.cap[e])
                v = self.to[e ^ 1]
            v = t
            while v != s:
                e = parent_edge[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                v = self.to[e ^ 1]
            flow += push

    def flow_on(self, e: int) -> int:
        return self.orig[e] - self.cap[e]

    def residual_reachable(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for e in self.adj[u]:
                w = self.to[e]
                if self.cap[e] > 0 and w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen


def _check_sets(g: Digraph, a: Iterable[int], b: Iterable[int]) -> tuple[frozenset[int], frozenset[int]]:
    a = frozenset(a)
    b = frozenset(b)
    for v in a | b:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for {g.n} vertices")
    return a, b


def _solve(g: Digraph, a: frozenset[int], b: frozenset[int], want_paths: bool):
    shared = sorted(a & b)
    forbidden = set(shared)
    n = g.n
    src, snk = 2 * n, 2 * n + 1
    net = _FlowNet(2 * n + 2)

    split_edge = [-1] * n
    for v in range(n):
        if v not in forbidden:
            split_edge[v] = len(net.to)
            net.add(2 * v, 2 * v + 1, 1)
    for u in range(n):
        if u in forbidden:
            continue
        for w in g.successors(u):
            if w not in forbidden:
                net.add(2 * u + 1, 2 * w, _BIG)
    source_edge: dict[int, int] = {}
    for v in sorted(a - forbidden):
        source_edge[v] = len(net.to)
        net.add(src, 2 * v, _BIG)
    for v in sorted(b - forbidden):
        net.add(2 * v + 1, snk, _BIG)

    value = net.max_flow(src, snk)

    reach = net.residual_reachable(src)
    cut = {
        v
        for v in range(n)
        if split_edge[v] >= 0 and (2 * v) in reach and (2 * v + 1) not in reach
    }
    separator = frozenset(shared) | cut

    paths: list[Path] = [Path((v,)) for v in shared]
    if want_paths and value:
        avail = [net.flow_on(e) for e in range(len(net.to))]
        for v in sorted(a - forbidden):
            if avail[source_edge[v]] < 1:
                continue
            avail[source_edge[v]] -= 1
            verts = [v]
            cur = v
            while True:
                picked = -1
                for e in net.adj[2 * cur + 1]:
                    if e % 2 == 0 and avail[e] > 0:
                        picked = e
                        break
                assert picked >= 0, "flow conservation violated while tracing"
                avail[picked] -= 1
                nxt = net.to[picked]
                if nxt == snk:
                    break
                cur = nxt // 2
                verts.append(cur)
            paths.append(Path(tuple(verts)))
    count = len(shared) + value
    assert len(separator) == count, "path count and separator size must agree"
    return paths, separator, count


def menger(g: Digraph, a: Iterable[int], b: Iterable[int]) -> MengerCertificate:
    """Maximum disjoint ``a -> b`` path family plus a minimum separator.

    Deterministic: augmenting paths are found by BFS over adjacency sorted by
    vertex id, and paths are traced from sources in ascending order, so
    identical inputs yield identical certificates.
    """
    a, b = _check_sets(g, a, b)
    paths, separator, _ = _solve(g, a, b, want_paths=True)
    return MengerCertificate(tuple(paths), separator)


def min_separator_size(g: Digraph, a: Iterable[int], b: Iterable[int]) -> int:
    """Size of a minimum ``(a, b)``-separator."""
    a, b = _check_sets(g, a, b)
    _, _, count = _solve(g, a, b, want_paths=False)
    return count


def min_separator(g: Digraph, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    """A minimum ``(a, b)``-separator (the canonical one, nearest the sources)."""
    a, b = _check_sets(g, a, b)
    _, separator, _ = _solve(g, a, b, want_paths=False)
    return separator


def min_internal_cut_size(g: Digraph, u: int, v: int) -> int:
    """Minimum number of vertices (other than ``u``/``v``) whose removal kills
    every ``u -> v`` path.

    Requires the edge ``(u, v)`` to be absent: with it present no such cut
    exists.
    """
    if g.has_edge(u, v):
        raise ValueError("no internal cut exists when the edge (u, v) is present")
    stripped = g.without_vertices((u, v))
    a = frozenset(w for w in g.successors(u) if w != v)
    b = frozenset(w for w in g.predecessors(v) if w != u)
    if not a or not b:
        return 0
    return min_separator_size(stripped, a, b)
