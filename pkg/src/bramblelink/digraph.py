"""Digraph representation and elementary graph procedures.

Vertices are dense integers ``0..n-1``.  Loops and parallel edges are stored
as given, but every path and separator algorithm in this package works on the
simple quotient (parallel edges collapsed, loops dropped): vertex-disjointness
is insensitive to multiplicity and no simple path uses a loop.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class Digraph:
    """An immutable digraph given by a vertex count and an edge multiset."""

    __slots__ = ("n", "edges", "_succ", "_pred", "_simple")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        edge_list = tuple((int(u), int(v)) for u, v in edges)
        for u, v in edge_list:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        self.n = n
        self.edges = edge_list
        self._succ: tuple[tuple[int, ...], ...] | None = None
        self._pred: tuple[tuple[int, ...], ...] | None = None
        self._simple: frozenset[tuple[int, int]] | None = None

    # -- simple-quotient views -------------------------------------------

    def simple_edges(self) -> frozenset[tuple[int, int]]:
        """Deduplicated, loop-free edge set."""
        if self._simple is None:
            self._simple = frozenset((u, v) for u, v in self.edges if u != v)
        return self._simple

    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._succ is None:
            out: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.simple_edges():
                out[u].add(v)
            self._succ = tuple(tuple(sorted(s)) for s in out)
        return self._succ

    def _radjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._pred is None:
            inc: list[set[int]] = [set() for _ in range(self.n)]
            for u, v in self.simple_edges():
                inc[v].add(u)
            self._pred = tuple(tuple(sorted(s)) for s in inc)
        return self._pred

    def successors(self, v: int) -> tuple[int, ...]:
        return self._adjacency()[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._radjacency()[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.simple_edges()

    # -- derived digraphs --------------------------------------------------

    def without_vertices(self, removed: Iterable[int]) -> "Digraph":
        """Same vertex range with every edge incident to ``removed`` dropped."""
        gone = set(removed)
        return Digraph(self.n, (e for e in self.edges if e[0] not in gone and e[1] not in gone))

    def without_out_edges(self, tails: Iterable[int]) -> "Digraph":
        """Same vertex range with every edge leaving a vertex of ``tails`` dropped."""
        gone = set(tails)
        return Digraph(self.n, (e for e in self.edges if e[0] not in gone))

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={len(self.edges)})"


@dataclass(frozen=True)
class Path:
    """A directed path, stored as its vertex sequence.

    All vertices are distinct and a single vertex is a valid path.  Whether
    consecutive vertices are actually joined by an edge depends on a host
    digraph; see :meth:`is_valid_in`.
    """

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a path has at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path vertices must be distinct")

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def sink(self) -> int:
        return self.vertices[-1]

    def __len__(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, g: Digraph) -> bool:
        if any(not 0 <= v < g.n for v in self.vertices):
            return False
        return all(g.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))


@dataclass(frozen=True)
class Walk:
    """A directed walk; vertex repetitions are allowed."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if not self.vertices:
            raise ValueError("a walk has at least one vertex")

    @property
    def source(self) -> int:
        return self.vertices[0]

    @property
    def sink(self) -> int:
        return self.vertices[-1]

    def is_valid_in(self, g: Digraph) -> bool:
        if any(not 0 <= v < g.n for v in self.vertices):
            return False
        return all(g.has_edge(u, v) for u, v in zip(self.vertices, self.vertices[1:]))


def reverse(g: Digraph) -> Digraph:
    """The digraph with every edge orientation flipped."""
    return Digraph(g.n, ((v, u) for u, v in g.edges))


def strong_components(g: Digraph) -> list[list[int]]:
    """Partition of the vertices into strongly connected components.

    Iterative Tarjan; components are returned sorted by smallest member and
    each component is sorted ascending, so the output is canonical.
    """
    adj = g._adjacency()
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0

    for root in range(g.n):
        if index[root] != -1:
            continue
        # Explicit DFS stack of (vertex, next-neighbor position).
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while i < len(adj[v]):
                w = adj[v][i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                components.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    components.sort(key=lambda c: c[0])
    return components


def is_strongly_connected(g: Digraph) -> bool:
    return g.n <= 1 or len(strong_components(g)) == 1


def reachable_from(g: Digraph, sources: Iterable[int], forbidden: Iterable[int] = ()) -> set[int]:
    """Vertices reachable from ``sources`` in ``g`` with ``forbidden`` deleted.

    Sources that survive the deletion are themselves reachable (paths of one
    vertex count).
    """
    blocked = set(forbidden)
    seen = {s for s in sources if s not in blocked}
    queue = deque(sorted(seen))
    adj = g._adjacency()
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen and w not in blocked:
                seen.add(w)
                queue.append(w)
    return seen


def is_k_strong(g: Digraph, k: int) -> bool:
    """True iff ``g`` has at least ``k+1`` vertices and no separator of size < k.

    A separator is a vertex set whose removal leaves a digraph that is not
    strongly connected or has a single vertex.  Computed through minimum
    vertex cuts between all non-adjacent ordered pairs, never by subset
    enumeration.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if g.n < k + 1:
        return False
    from .menger import min_internal_cut_size

    simple = g.simple_edges()
    found_pair = False
    for u in range(g.n):
        for v in range(g.n):
            if u == v or (u, v) in simple:
                continue
            found_pair = True
            if min_internal_cut_size(g, u, v) < k:
                return False
    if not found_pair:
        # Complete digraph: only leaving a single vertex disconnects it.
        return g.n - 1 >= k
    return True


def shorten_walk(w: Walk | Sequence[int]) -> Path:
    """Shorten a walk to a path between the same endpoints.

    Deterministic rule: repeatedly cut the segment between the first repeated
    occurrence of a vertex and its earlier occurrence.
    """
    verts = list(w.vertices if isinstance(w, Walk) else w)
    if not verts:
        raise ValueError("cannot shorten an empty walk")
    while True:
        seen: dict[int, int] = {}
        cut = None
        for j, v in enumerate(verts):
            if v in seen:
                cut = (seen[v], j)
                break
            seen[v] = j
        if cut is None:
            return Path(tuple(verts))
        i, j = cut
        verts = verts[: i + 1] + verts[j + 1 :]
