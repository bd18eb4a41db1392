"""Three min-max dualities for source-anchored path systems in digraphs.

A *digraph-source sequence* is an ordered list of (digraph, source-set)
pairs; a *respecting* path system provides pairwise vertex-disjoint paths per
entry, each starting in that entry's source set.  Three increasingly relaxed
sink disciplines are supported:

* ``d``: sinks are globally distinct and land in a fixed target set ``b``;
* ``t``: sinks are globally distinct and form a partial transversal of an
  indexed bag family (injective sink-to-bag assignment);
* ``r``: only the bag assignment stays injective; sinks in different entries
  may coincide.

Each variant has a dual cut notion whose minimum order equals the maximum
number of paths.  The solvers realize the equality constructively on an
auxiliary digraph (disjoint copies of the entries plus a target layer) by a
single max-flow computation, and return both optimal objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .digraph import Digraph, Path, reachable_from
from .menger import menger
from .report import Verification, verification

VARIANTS = ("d", "t", "r")


class DigraphSourceSequence:
    """Ordered entries of (digraph, source-set); entries may share vertex ids."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[tuple[Digraph, Iterable[int]]]) -> None:
        packed = []
        for g, sources in entries:
            sources = frozenset(sources)
            for s in sources:
                if not 0 <= s < g.n:
                    raise ValueError(f"source {s} out of range for {g.n} vertices")
            packed.append((g, sources))
        if not packed:
            raise ValueError("a digraph-source sequence has at least one entry")
        self.entries = tuple(packed)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[tuple[Digraph, frozenset[int]]]:
        return iter(self.entries)

    @property
    def universe_size(self) -> int:
        return max(g.n for g, _ in self.entries)

    def check_universe(self, vertices: Iterable[int], what: str) -> None:
        top = self.universe_size
        bad = sorted(v for v in vertices if not 0 <= v < top)
        if bad:
            raise ValueError(f"{what} not within the vertex universe: {bad}")


class SetFamily:
    """Indexed family of vertex sets; duplicates are distinct members."""

    __slots__ = ("bags",)

    def __init__(self, bags: Iterable[Iterable[int]] = ()) -> None:
        self.bags = tuple(frozenset(bag) for bag in bags)

    def __len__(self) -> int:
        return len(self.bags)

    def __iter__(self) -> Iterator[frozenset[int]]:
        return iter(self.bags)

    def __getitem__(self, index: int) -> frozenset[int]:
        return self.bags[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.bags == other.bags

    def __hash__(self) -> int:
        return hash(self.bags)

    def __repr__(self) -> str:
        return f"SetFamily({[sorted(b) for b in self.bags]})"

    @property
    def universe(self) -> frozenset[int]:
        out: set[int] = set()
        for bag in self.bags:
            out |= bag
        return frozenset(out)

    def subfamily(self, indices: Iterable[int]) -> "SetFamily":
        return SetFamily(self.bags[i] for i in sorted(indices))


@dataclass(frozen=True)
class RespectingPathSet:
    """Path system split by sequence entry, optionally with a bag assignment.

    ``assignment[i][j]`` is the bag index of ``parts[i][j]`` (``t``/``r``
    variants); it is ``None`` for the ``d`` variant.
    """

    parts: tuple[tuple[Path, ...], ...]
    assignment: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(tuple(p) for p in self.parts))
        if self.assignment is not None:
            assignment = tuple(tuple(a) for a in self.assignment)
            object.__setattr__(self, "assignment", assignment)
            if tuple(len(a) for a in assignment) != tuple(len(p) for p in self.parts):
                raise ValueError("assignment shape must match the parts")

    def size(self) -> int:
        return sum(len(p) for p in self.parts)

    def paths(self) -> Iterator[Path]:
        for part in self.parts:
            yield from part

    def assigned(self) -> Iterator[tuple[int, Path, int]]:
        """Yields (entry index, path, bag index); requires an assignment."""
        if self.assignment is None:
            raise ValueError("this path set carries no bag assignment")
        for i, part in enumerate(self.parts):
            for j, path in enumerate(part):
                yield i, path, self.assignment[i][j]


@dataclass(frozen=True)
class DCut:
    """``x0`` of target vertices plus one separator per sequence entry."""

    x0: frozenset[int]
    xs: tuple[frozenset[int], ...]

    def order(self) -> int:
        return len(self.x0) + sum(len(x) for x in self.xs)


@dataclass(frozen=True)
class TCut:
    """Discarded bags are paid per bag; the rest is a ``d``-style cut against
    the union of the kept bags."""

    kept: frozenset[int]
    inner: DCut
    family_size: int

    def order(self) -> int:
        return self.family_size - len(self.kept) + self.inner.order()


@dataclass(frozen=True)
class RCut:
    """Discarded bags plus one separator per entry against the kept union."""

    kept: frozenset[int]
    xs: tuple[frozenset[int], ...]
    family_size: int

    def order(self) -> int:
        return self.family_size - len(self.kept) + sum(len(x) for x in self.xs)


Cut = DCut | TCut | RCut


def order(cut: Cut) -> int:
    """Order of a cut certificate (the quantity matched by the path maximum)."""
    return cut.order()


# ---------------------------------------------------------------------------
# Auxiliary digraphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class AuxGraph:
    """A layered auxiliary digraph: entry copies, an optional middle layer of
    shared target vertices, then one vertex per target (set member or bag)."""

    graph: Digraph
    sources: frozenset[int]
    targets: frozenset[int]
    offsets: tuple[int, ...]
    sizes: tuple[int, ...]
    middle_base: int
    middle_labels: tuple[int, ...]
    target_base: int
    target_labels: tuple[int, ...]

    def copy_id(self, part: int, v: int) -> int:
        return self.offsets[part] + v

    def part_of(self, aux_id: int) -> int:
        for i in reversed(range(len(self.offsets))):
            if aux_id >= self.offsets[i]:
                return i
        raise ValueError(f"aux id {aux_id} is not a copy vertex")

    def original(self, aux_id: int) -> int:
        return aux_id - self.offsets[self.part_of(aux_id)]


def _copy_layer(seq: DigraphSourceSequence) -> tuple[list[int], list[tuple[int, int]], int]:
    offsets: list[int] = []
    edges: list[tuple[int, int]] = []
    total = 0
    for g, _ in seq:
        offsets.append(total)
        edges.extend((total + u, total + v) for u, v in sorted(g.simple_edges()))
        total += g.n
    return offsets, edges, total


def _copies_of(seq: DigraphSourceSequence, offsets: Sequence[int], v: int) -> list[int]:
    return [offsets[i] + v for i, (g, _) in enumerate(seq) if v < g.n]


def _source_ids(seq: DigraphSourceSequence, offsets: Sequence[int]) -> frozenset[int]:
    return frozenset(offsets[i] + s for i, (_, ss) in enumerate(seq) for s in ss)


def build_aux_d(seq: DigraphSourceSequence, b: Iterable[int]) -> AuxGraph:
    """Disjoint entry copies plus a fresh independent layer for ``b``; each
    copy of a ``b``-vertex points at its layer vertex."""
    b = frozenset(b)
    seq.check_universe(b, "target set")
    offsets, edges, total = _copy_layer(seq)
    labels = tuple(sorted(b))
    for pos, v in enumerate(labels):
        for c in _copies_of(seq, offsets, v):
            edges.append((c, total + pos))
    return AuxGraph(
        graph=Digraph(total + len(labels), edges),
        sources=_source_ids(seq, offsets),
        targets=frozenset(range(total, total + len(labels))),
        offsets=tuple(offsets),
        sizes=tuple(g.n for g, _ in seq),
        middle_base=total,
        middle_labels=(),
        target_base=total,
        target_labels=labels,
    )


def build_aux_t(seq: DigraphSourceSequence, fam: SetFamily) -> AuxGraph:
    """Copies, then one shared vertex per bag-union member, then one vertex
    per bag; bag vertices are fed only from the shared layer."""
    seq.check_universe(fam.universe, "bag family")
    offsets, edges, total = _copy_layer(seq)
    middle = tuple(sorted(fam.universe))
    position = {v: total + pos for pos, v in enumerate(middle)}
    for v in middle:
        for c in _copies_of(seq, offsets, v):
            edges.append((c, position[v]))
    target_base = total + len(middle)
    for j, bag in enumerate(fam):
        for v in sorted(bag):
            edges.append((position[v], target_base + j))
    return AuxGraph(
        graph=Digraph(target_base + len(fam), edges),
        sources=_source_ids(seq, offsets),
        targets=frozenset(range(target_base, target_base + len(fam))),
        offsets=tuple(offsets),
        sizes=tuple(g.n for g, _ in seq),
        middle_base=total,
        middle_labels=middle,
        target_base=target_base,
        target_labels=tuple(range(len(fam))),
    )


def build_aux_r(seq: DigraphSourceSequence, fam: SetFamily) -> AuxGraph:
    """Copies plus one vertex per bag; every copy of a bag member points at
    the bag vertex directly (no shared middle layer)."""
    seq.check_universe(fam.universe, "bag family")
    offsets, edges, total = _copy_layer(seq)
    for j, bag in enumerate(fam):
        for v in sorted(bag):
            for c in _copies_of(seq, offsets, v):
                edges.append((c, total + j))
    return AuxGraph(
        graph=Digraph(total + len(fam), edges),
        sources=_source_ids(seq, offsets),
        targets=frozenset(range(total, total + len(fam))),
        offsets=tuple(offsets),
        sizes=tuple(g.n for g, _ in seq),
        middle_base=total,
        middle_labels=(),
        target_base=total,
        target_labels=tuple(range(len(fam))),
    )


# ---------------------------------------------------------------------------
# Solvers
# ---------------------------------------------------------------------------


def _lift(aux: AuxGraph, seq: DigraphSourceSequence, verts: Sequence[int], tail: int):
    """Map an aux path back to an original path, dropping ``tail`` final hops."""
    core = verts[:-tail]
    part = aux.part_of(core[0])
    return part, Path(tuple(aux.original(x) for x in core))


def _split_separator(aux: AuxGraph, seq: DigraphSourceSequence, separator: frozenset[int]):
    """Per-entry separator pieces (as original ids) and the raw layer hits."""
    per_part: list[set[int]] = [set() for _ in seq]
    middle: set[int] = set()
    target_positions: set[int] = set()
    for x in separator:
        if x >= aux.target_base:
            target_positions.add(x - aux.target_base)
        elif x >= aux.middle_base:
            middle.add(aux.middle_labels[x - aux.middle_base])
        else:
            per_part[aux.part_of(x)].add(aux.original(x))
    return [frozenset(p) for p in per_part], frozenset(middle), target_positions


def _kept_bags(fam: SetFamily, surviving: Iterable[int]) -> frozenset[int]:
    # A bag stays available when the layer vertex of some surviving bag
    # dominates it, i.e. its members all feed that surviving vertex.
    alive = [fam[j] for j in surviving]
    return frozenset(m for m in range(len(fam)) if any(fam[m] <= bag for bag in alive))


def solve_dpaths(seq: DigraphSourceSequence, b: Iterable[int]) -> tuple[RespectingPathSet, DCut]:
    """Maximum distinct-sink path system into ``b`` and a minimum matching cut."""
    b = frozenset(b)
    aux = build_aux_d(seq, b)
    cert = menger(aux.graph, aux.sources, aux.targets)
    parts: list[list[Path]] = [[] for _ in seq]
    for p in cert.paths:
        part, lifted = _lift(aux, seq, p.vertices, tail=1)
        parts[part].append(lifted)
    xs, _, hit_positions = _split_separator(aux, seq, cert.separator)
    x0 = frozenset(aux.target_labels[pos] for pos in hit_positions)
    paths = RespectingPathSet(tuple(tuple(p) for p in parts))
    cut = DCut(x0, tuple(xs))
    assert cut.order() == paths.size(), "duality violated by construction"
    return paths, cut


def solve_tpaths(seq: DigraphSourceSequence, fam: SetFamily) -> tuple[RespectingPathSet, TCut]:
    """Maximum transversal-sink path system for ``fam`` and a minimum cut."""
    aux = build_aux_t(seq, fam)
    cert = menger(aux.graph, aux.sources, aux.targets)
    parts: list[list[Path]] = [[] for _ in seq]
    assignment: list[list[int]] = [[] for _ in seq]
    for p in cert.paths:
        part, lifted = _lift(aux, seq, p.vertices, tail=2)
        parts[part].append(lifted)
        assignment[part].append(p.vertices[-1] - aux.target_base)
    xs, middle_hits, hit_positions = _split_separator(aux, seq, cert.separator)
    surviving = [j for j in range(len(fam)) if j not in hit_positions]
    kept = _kept_bags(fam, surviving)
    kept_union: set[int] = set()
    for m in kept:
        kept_union |= fam[m]
    x0 = middle_hits & kept_union
    paths = RespectingPathSet(tuple(tuple(p) for p in parts), tuple(tuple(a) for a in assignment))
    cut = TCut(kept, DCut(x0, tuple(xs)), len(fam))
    assert cut.order() == paths.size(), "duality violated by construction"
    return paths, cut


def solve_rpaths(seq: DigraphSourceSequence, fam: SetFamily) -> tuple[RespectingPathSet, RCut]:
    """Maximum bag-assigned path system for ``fam`` and a minimum cut.

    Sinks in different entries may coincide; only the bag assignment is
    injective.
    """
    aux = build_aux_r(seq, fam)
    cert = menger(aux.graph, aux.sources, aux.targets)
    parts: list[list[Path]] = [[] for _ in seq]
    assignment: list[list[int]] = [[] for _ in seq]
    for p in cert.paths:
        part, lifted = _lift(aux, seq, p.vertices, tail=1)
        parts[part].append(lifted)
        assignment[part].append(p.vertices[-1] - aux.target_base)
    xs, _, hit_positions = _split_separator(aux, seq, cert.separator)
    surviving = [j for j in range(len(fam)) if j not in hit_positions]
    kept = _kept_bags(fam, surviving)
    if not kept:
        xs = [frozenset()] * len(seq.entries)
    paths = RespectingPathSet(tuple(tuple(p) for p in parts), tuple(tuple(a) for a in assignment))
    cut = RCut(kept, tuple(xs), len(fam))
    assert cut.order() == paths.size(), "duality violated by construction"
    return paths, cut


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


def _check_respecting(seq: DigraphSourceSequence, candidate: RespectingPathSet, bad: list[str]) -> None:
    if len(candidate.parts) != len(seq):
        bad.append(f"shape: expected {len(seq)} parts, got {len(candidate.parts)}")
        return
    for i, ((g, sources), part) in enumerate(zip(seq, candidate.parts)):
        seen: set[int] = set()
        for j, path in enumerate(part):
            if not path.is_valid_in(g):
                bad.append(f"invalid-path: part {i} path {j} is not a path of its digraph")
            if path.source not in sources:
                bad.append(f"bad-source: part {i} path {j} starts at {path.source}")
            overlap = seen.intersection(path.vertices)
            if overlap:
                bad.append(f"overlap: part {i} path {j} reuses vertices {sorted(overlap)}")
            seen.update(path.vertices)


def verify_paths(
    seq: DigraphSourceSequence,
    target: Iterable[int] | SetFamily,
    candidate: RespectingPathSet,
    variant: str,
) -> Verification:
    """Check every defining condition of the chosen variant; never raises."""
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    bad: list[str] = []
    _check_respecting(seq, candidate, bad)
    if bad and len(candidate.parts) != len(seq):
        return verification(bad)

    sinks = [p.sink for p in candidate.paths()]
    if variant in ("d", "t"):
        dupes = sorted({s for s in sinks if sinks.count(s) > 1})
        if dupes:
            bad.append(f"duplicate-sink: sinks {dupes} are shared")
    if variant == "d":
        b = frozenset(target)  # type: ignore[arg-type]
        outside = sorted(set(sinks) - b)
        if outside:
            bad.append(f"sink-outside-target: {outside}")
    else:
        fam = target if isinstance(target, SetFamily) else SetFamily(target)  # type: ignore[arg-type]
        if candidate.assignment is None:
            bad.append("missing-assignment: variant requires a sink-to-bag assignment")
            return verification(bad)
        used: set[int] = set()
        for i, path, bag_index in candidate.assigned():
            if not 0 <= bag_index < len(fam):
                bad.append(f"bad-bag-index: part {i} assigned to {bag_index}")
                continue
            if bag_index in used:
                bad.append(f"assignment-not-injective: bag {bag_index} used twice")
            used.add(bag_index)
            if path.sink not in fam[bag_index]:
                bad.append(f"sink-outside-bag: sink {path.sink} not in bag {bag_index}")
    return verification(bad)


def _check_separates(
    g: Digraph, sources: frozenset[int], blocker: frozenset[int], targets: set[int], label: str, bad: list[str]
) -> None:
    reached = reachable_from(g, sources, forbidden=blocker)
    hit = sorted(reached & targets)
    if hit:
        bad.append(f"not-a-separator: {label} still reaches {hit}")


def _check_dcut(seq: DigraphSourceSequence, b: frozenset[int], cut: DCut, bad: list[str]) -> None:
    if not cut.x0 <= b:
        bad.append(f"x0-outside-target: {sorted(cut.x0 - b)}")
    if len(cut.xs) != len(seq):
        bad.append(f"shape: expected {len(seq)} separators, got {len(cut.xs)}")
        return
    goal = b - cut.x0
    for i, ((g, sources), x) in enumerate(zip(seq, cut.xs)):
        outside = sorted(v for v in x if not 0 <= v < g.n)
        if outside:
            bad.append(f"separator-outside-graph: part {i} uses {outside}")
            continue
        _check_separates(g, sources, x, {v for v in goal if v < g.n}, f"part {i}", bad)


def verify_cut(
    seq: DigraphSourceSequence,
    target: Iterable[int] | SetFamily,
    candidate: Cut,
) -> Verification:
    """Re-check a cut certificate from scratch by reachability; never raises."""
    bad: list[str] = []
    if isinstance(candidate, DCut):
        _check_dcut(seq, frozenset(target), candidate, bad)  # type: ignore[arg-type]
        return verification(bad)

    fam = target if isinstance(target, SetFamily) else SetFamily(target)  # type: ignore[arg-type]
    invalid = sorted(m for m in candidate.kept if not 0 <= m < len(fam))
    if invalid:
        bad.append(f"bad-bag-index: kept bags {invalid}")
        return verification(bad)
    if candidate.family_size != len(fam):
        bad.append(f"family-size-mismatch: cut says {candidate.family_size}, family has {len(fam)}")
    kept_union: set[int] = set()
    for m in candidate.kept:
        kept_union |= fam[m]
    if isinstance(candidate, TCut):
        _check_dcut(seq, frozenset(kept_union), candidate.inner, bad)
        return verification(bad)

    if len(candidate.xs) != len(seq):
        bad.append(f"shape: expected {len(seq)} separators, got {len(candidate.xs)}")
        return verification(bad)
    if not candidate.kept and any(candidate.xs):
        bad.append("wasted-separator: no kept bags but non-empty separators")
    for i, ((g, sources), x) in enumerate(zip(seq, candidate.xs)):
        outside = sorted(v for v in x if not 0 <= v < g.n)
        if outside:
            bad.append(f"separator-outside-graph: part {i} uses {outside}")
            continue
        _check_separates(g, sources, x, {v for v in kept_union if v < g.n}, f"part {i}", bad)
    return verification(bad)
