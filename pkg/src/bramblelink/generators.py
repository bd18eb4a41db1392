"""Deterministic instance generators for the CLI and the test batteries.

Every generator is a pure function of its parameters and seed; identical
inputs yield identical instance documents (lists sorted, stable field order
left to the canonical JSON emitter).
"""

from __future__ import annotations

import random

from .linkage import g as linkage_threshold

MODELS = ("gnp", "complete", "two-island")


def _random_digraph(rng: random.Random, n: int, p: float) -> dict:
    edges = [[u, v] for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return {"n": n, "edges": edges}


def _gnp_instance(
    n: int,
    p: float,
    seed: int,
    max_parts: int = 3,
    max_b: int = 5,
    max_bags: int = 4,
    max_bag_size: int = 3,
    max_sources: int = 3,
) -> dict:
    rng = random.Random(("gnp", n, p, seed, max_parts, max_b, max_bags, max_bag_size, max_sources).__repr__())
    parts = rng.randint(1, max_parts)
    graphs = [_random_digraph(rng, n, p) for _ in range(parts)]
    sources = [
        sorted(rng.sample(range(n), rng.randint(0, min(max_sources, n))))
        for _ in range(parts)
    ]
    b = sorted(rng.sample(range(n), min(rng.randint(0, max_b), n)))
    bags = [
        sorted(rng.sample(range(n), rng.randint(0, min(max_bag_size, n))))
        for _ in range(rng.randint(0, max_bags))
    ]
    return {
        "kind": "sequence",
        "graphs": graphs,
        "sources": sources,
        "b": b,
        "bags": bags,
    }


def _complete_instance(n: int, k: int, c: int) -> dict:
    threshold = linkage_threshold(k, c)
    if n < 2 * k + threshold:
        raise ValueError(f"complete model needs at least {2 * k + threshold} vertices")
    edges = [[u, v] for u in range(n) for v in range(n) if u != v]
    bags = [[v] for v in range(2 * k, 2 * k + threshold)]
    return {
        "kind": "ddp",
        "graph": {"n": n, "edges": edges},
        "s": list(range(k)),
        "t": list(range(k, 2 * k)),
        "c": c,
        "bramble": bags,
    }


def _two_island_instance(n: int, seed: int, k: int, c: int) -> dict:
    """Sources on one island, bags and sinks on another.

    Island two reaches island one but not vice versa, except (depending on
    the seed) through one articulation vertex; routing must therefore produce
    a source-side separator of at most one vertex.
    """
    rng = random.Random(("two-island", n, seed, k, c).__repr__())
    threshold = linkage_threshold(k, c)
    cut_vertex = rng.random() < 0.5
    base = 2 * k + threshold + (1 if cut_vertex else 0)
    n = max(n, base)

    s = list(range(k))
    bag_lo, bag_hi = k, k + threshold
    t = list(range(bag_hi, bag_hi + k))
    island_two = list(range(k, bag_hi + k))

    edges: list[list[int]] = []
    for u in s:
        for v in s:
            if u != v:
                edges.append([u, v])
    for u in island_two:
        for v in island_two:
            if u != v:
                edges.append([u, v])
    # Backward links only: island two reaches the sources.
    for u in island_two:
        for v in s:
            if rng.random() < 0.5:
                edges.append([u, v])
    if cut_vertex:
        a = bag_hi + k
        edges.extend([v, a] for v in s)
        edges.extend([a, v] for v in island_two if rng.random() < 0.8 or v == island_two[0])
    # Padding vertices ride along inside island two.
    for v in range(base, n):
        anchor = rng.choice(island_two)
        edges.append([v, anchor])
        edges.append([anchor, v])

    edges = sorted({(u, v) for u, v in edges})
    return {
        "kind": "ddp",
        "graph": {"n": n, "edges": [list(e) for e in edges]},
        "s": s,
        "t": t,
        "c": c,
        "bramble": [[v] for v in range(bag_lo, bag_hi)],
    }


def generate(model: str, n: int, p: float = 0.0, seed: int = 0, k: int = 2, c: int = 2, **shape) -> dict:
    """Build an instance document for one of the named models."""
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}; choose from {MODELS}")
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("p must lie in [0, 1]")
    if model == "gnp":
        return _gnp_instance(n, p, seed, **shape)
    if model == "complete":
        return _complete_instance(n, k, c)
    return _two_island_instance(n, seed, k, c)
