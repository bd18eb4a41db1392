"""Exhaustive ground-truth computations on tiny instances.

Everything here enumerates: simple paths by DFS, sink sets by subset,
cut candidates by direct evaluation of the per-variant minimization formula.
Size gates abort anything that would not finish at desk scale.  These
routines back every duality test; they share nothing with the auxiliary-graph
solvers except the digraph type and (for cut formulas) the separator
primitive, which has its own enumeration oracle below.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .digraph import Digraph, Path, reachable_from
from .menger import min_separator
from .minmax import (
    Cut,
    DCut,
    DigraphSourceSequence,
    RCut,
    RespectingPathSet,
    SetFamily,
    TCut,
)
from .report import ScaleError


@dataclass(frozen=True)
class ScaleGate:
    max_total_vertices: int = 10
    max_paths: int = 6
    max_bags: int = 5

    def __post_init__(self) -> None:
        if min(self.max_total_vertices, self.max_paths, self.max_bags) < 1:
            raise ValueError("gate limits must be positive")


DEFAULT_GATE = ScaleGate()


def _targets_of(target, variant: str) -> tuple[frozenset[int], SetFamily | None]:
    if variant == "d":
        return frozenset(target), None
    fam = target if isinstance(target, SetFamily) else SetFamily(target)
    return frozenset(fam.universe), fam


def _check_gate(seq: DigraphSourceSequence, target, variant: str, gate: ScaleGate) -> None:
    if seq.universe_size > gate.max_total_vertices:
        raise ScaleError(
            f"instance has {seq.universe_size} vertices; gate allows {gate.max_total_vertices}"
        )
    goal, fam = _targets_of(target, variant)
    if fam is not None and len(fam) > gate.max_bags:
        raise ScaleError(f"instance has {len(fam)} bags; gate allows {gate.max_bags}")
    ceiling = len(goal) if variant == "d" else (len(fam) if fam is not None else 0)
    ceiling = min(ceiling, sum(len(s) for _, s in seq))
    if ceiling > gate.max_paths:
        raise ScaleError(f"up to {ceiling} paths possible; gate allows {gate.max_paths}")


# ---------------------------------------------------------------------------
# Disjoint path packing by enumeration
# ---------------------------------------------------------------------------


def _pack_paths(
    g: Digraph, sources: frozenset[int], sinks: Sequence[int]
) -> list[Path] | None:
    """Pairwise disjoint paths from ``sources`` covering exactly ``sinks``.

    One path per requested sink, by exhaustive DFS with backtracking; returns
    None when no packing exists.
    """
    sinks = sorted(sinks)
    remaining = set(sinks)
    found: list[Path] = []

    def build(idx: int, used: set[int]) -> bool:
        if idx == len(sinks):
            return True
        goal = sinks[idx]
        remaining.discard(goal)
        # Other requested sinks stay off-limits: their own paths need them.
        blocked = used | remaining

        def dfs(v: int, trail: list[int]) -> bool:
            if v == goal:
                found.append(Path(tuple(trail)))
                if build(idx + 1, used | set(trail)):
                    return True
                found.pop()
                return False
            for w in g.successors(v):
                if w in blocked or w in trail:
                    continue
                trail.append(w)
                if dfs(w, trail):
                    return True
                trail.pop()
            return False

        for s in sorted(sources):
            if s in blocked:
                continue
            if dfs(s, [s]):
                return True
        remaining.add(goal)
        return False

    return found if build(0, set()) else None


def _achievable_sink_sets(
    g: Digraph, sources: frozenset[int], targets: frozenset[int]
) -> dict[frozenset[int], list[Path]]:
    """Every sink set coverable by a disjoint packing, with one witness each."""
    local = sorted(v for v in targets if v < g.n)
    out: dict[frozenset[int], list[Path]] = {}
    for size in range(len(local) + 1):
        for combo in combinations(local, size):
            witness = _pack_paths(g, sources, combo)
            if witness is not None:
                out[frozenset(combo)] = witness
    return out


def brute_menger(g: Digraph, a: Iterable[int], b: Iterable[int]) -> tuple[int, int]:
    """(max disjoint a->b paths, min separator size), both by enumeration."""
    a, b = frozenset(a), frozenset(b)
    best_paths = 0
    local = sorted(b)
    for size in range(len(local), -1, -1):
        if size <= best_paths:
            break
        for combo in combinations(local, size):
            if _pack_paths(g, a, combo) is not None:
                best_paths = size
                break
    vertices = sorted(range(g.n))
    for size in range(g.n + 1):
        for combo in combinations(vertices, size):
            removed = frozenset(combo)
            reached = reachable_from(g, a - removed, forbidden=removed)
            if not reached & (b - removed):
                return best_paths, size
    raise AssertionError("unreachable: removing every vertex separates anything")


# ---------------------------------------------------------------------------
# Maximum path systems
# ---------------------------------------------------------------------------


def _transversal_matching(
    fam: SetFamily, tagged_sinks: Sequence[tuple[int, int]]
) -> dict[tuple[int, int], int] | None:
    """Assign every tagged sink its own bag, or None if impossible."""
    match: dict[tuple[int, int], int] = {}
    taken: dict[int, tuple[int, int]] = {}

    def augment(item: tuple[int, int], seen: set[int]) -> bool:
        for j in range(len(fam)):
            if j in seen or item[1] not in fam[j]:
                continue
            seen.add(j)
            if j not in taken or augment(taken[j], seen):
                taken[j] = item
                match[item] = j
                return True
        return False

    for item in tagged_sinks:
        if not augment(item, set()):
            return None
    return match


def brute_max_paths(
    seq: DigraphSourceSequence,
    target,
    variant: str,
    gate: ScaleGate = DEFAULT_GATE,
) -> tuple[int, RespectingPathSet]:
    """Exact maximum path system by full enumeration, with a verified witness."""
    _check_gate(seq, target, variant, gate)
    goal, fam = _targets_of(target, variant)
    per_part = [
        _achievable_sink_sets(g, sources, goal) for g, sources in seq
    ]
    # Largest first helps the branch-and-bound cut off early.
    options = [sorted(p, key=lambda u: (-len(u), sorted(u))) for p in per_part]
    part_best = [max((len(u) for u in p), default=0) for p in per_part]

    best_size = -1
    best_choice: list[frozenset[int]] | None = None
    chosen: list[frozenset[int]] = []

    def feasible(extra: frozenset[int], part: int) -> bool:
        if variant == "d":
            used = set().union(*chosen) if chosen else set()
            return not (used & extra)
        tagged = [(i, v) for i, u in enumerate(chosen) for v in sorted(u)]
        tagged += [(part, v) for v in sorted(extra)]
        if variant == "t":
            flat = [v for _, v in tagged]
            if len(set(flat)) != len(flat):
                return False
        return _transversal_matching(fam, tagged) is not None

    def walk(part: int, size: int) -> None:
        nonlocal best_size, best_choice
        if part == len(options):
            if size > best_size:
                best_size = size
                best_choice = list(chosen)
            return
        if size + sum(part_best[part:]) <= best_size:
            return
        for u in options[part]:
            if not feasible(u, part):
                continue
            chosen.append(u)
            walk(part + 1, size + len(u))
            chosen.pop()

    walk(0, 0)
    assert best_choice is not None, "the all-empty choice is always feasible"

    parts = tuple(tuple(per_part[i][u]) for i, u in enumerate(best_choice))
    assignment = None
    if variant in ("t", "r"):
        tagged = [
            (i, path.sink) for i, part in enumerate(parts) for path in part
        ]
        match = _transversal_matching(fam, tagged)
        assert match is not None, "winning choice must stay matchable"
        assignment = tuple(
            tuple(match[(i, path.sink)] for path in part) for i, part in enumerate(parts)
        )
    witness = RespectingPathSet(parts, assignment)
    assert witness.size() == best_size
    return best_size, witness


# ---------------------------------------------------------------------------
# Minimum cuts: direct evaluation of the per-variant formulas
# ---------------------------------------------------------------------------


class _SeparatorCache:
    """Minimum (sources, target)-separators per entry, memoized."""

    def __init__(self, seq: DigraphSourceSequence) -> None:
        self.seq = seq
        self.memo: dict[tuple[int, frozenset[int]], frozenset[int]] = {}

    def get(self, i: int, target: frozenset[int]) -> frozenset[int]:
        g, sources = self.seq.entries[i]
        local = frozenset(v for v in target if v < g.n)
        key = (i, local)
        if key not in self.memo:
            if not local or not sources:
                self.memo[key] = frozenset()
            else:
                self.memo[key] = min_separator(g, sources, local)
        return self.memo[key]


def _subsets(items: Sequence) -> Iterable[tuple]:
    for size in range(len(items) + 1):
        yield from combinations(items, size)


def brute_min_cut(
    seq: DigraphSourceSequence,
    target,
    variant: str,
    gate: ScaleGate = DEFAULT_GATE,
) -> tuple[int, Cut]:
    """Exact minimum cut order by evaluating the defining minimization.

    Enumerates every kept subset (of the target set or the bag family) and
    prices the per-entry separators with the exact separator primitive.
    """
    _check_gate(seq, target, variant, gate)
    cache = _SeparatorCache(seq)
    goal, fam = _targets_of(target, variant)

    def dcut_for(b: frozenset[int]) -> tuple[int, DCut]:
        best: tuple[int, DCut] | None = None
        for kept in _subsets(sorted(b)):
            kept_set = frozenset(kept)
            xs = tuple(cache.get(i, kept_set) for i in range(len(seq)))
            cut = DCut(b - kept_set, xs)
            value = cut.order()
            if best is None or value < best[0]:
                best = (value, cut)
        assert best is not None
        return best

    if variant == "d":
        return dcut_for(goal)

    assert fam is not None
    best: tuple[int, Cut] | None = None
    for kept in _subsets(range(len(fam))):
        kept_set = frozenset(kept)
        union: set[int] = set()
        for m in kept_set:
            union |= fam[m]
        discarded = len(fam) - len(kept_set)
        if variant == "t":
            inner_value, inner = dcut_for(frozenset(union))
            value = discarded + inner_value
            cut: Cut = TCut(kept_set, inner, len(fam))
        else:
            xs = tuple(cache.get(i, frozenset(union)) for i in range(len(seq)))
            if not kept_set:
                xs = tuple(frozenset() for _ in range(len(seq)))
            cut = RCut(kept_set, xs, len(fam))
            value = cut.order()
        if best is None or value < best[0]:
            best = (value, cut)
    assert best is not None
    return best
