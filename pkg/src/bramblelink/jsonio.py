"""JSON instance/result schemas and DOT export.

All files are UTF-8 JSON.  Emission is canonical: object keys sorted, vertex
lists sorted ascending, one trailing newline, so identical data always
produces identical bytes.  Parsing then emitting a result document is the
identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .digraph import Digraph, Path
from .linkage import (
    DDPInstance,
    RoutingOutcome,
    SeparatorAtSink,
    SeparatorAtSource,
    Solution,
)
from .menger import MengerCertificate
from .minmax import (
    AuxGraph,
    Cut,
    DCut,
    DigraphSourceSequence,
    RCut,
    RespectingPathSet,
    SetFamily,
    TCut,
)

INSTANCE_KINDS = ("digraph", "sequence", "bramble", "ddp")
RESULT_KINDS = ("menger", "minmax", "routing", "verify")


class SchemaError(ValueError):
    """The document does not match the expected schema."""


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _ids(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(v, int) for v in value):
        raise SchemaError(f"{what} must be a list of integers")
    return value


# ---------------------------------------------------------------------------
# Instances
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SequenceInstance:
    seq: DigraphSourceSequence
    b: frozenset[int] | None
    bags: SetFamily | None


@dataclass(frozen=True, eq=False)
class BrambleInstance:
    graph: Digraph
    bags: SetFamily


def digraph_from_json(doc: Any) -> Digraph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise SchemaError("digraph needs 'n' and 'edges'")
    if not isinstance(doc["n"], int):
        raise SchemaError("'n' must be an integer")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise SchemaError("'edges' must be a list of [tail, head] pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise SchemaError(f"bad edge entry: {e!r}")
        pairs.append((e[0], e[1]))
    try:
        return Digraph(doc["n"], pairs)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def digraph_to_json(g: Digraph) -> dict:
    return {"n": g.n, "edges": sorted([u, v] for u, v in g.edges)}


def _sequence_from_json(doc: dict) -> SequenceInstance:
    graphs_doc = doc.get("graphs")
    sources_doc = doc.get("sources")
    if not isinstance(graphs_doc, list) or not isinstance(sources_doc, list):
        raise SchemaError("sequence needs 'graphs' and 'sources' lists")
    if len(graphs_doc) != len(sources_doc):
        raise SchemaError("'graphs' and 'sources' must have the same length")
    graphs: list[Digraph] = []
    for i, entry in enumerate(graphs_doc):
        if isinstance(entry, dict) and "ref" in entry:
            ref = entry["ref"]
            if not isinstance(ref, int) or not 0 <= ref < i:
                raise SchemaError(f"'ref' at position {i} must point backward")
            base = graphs[ref]
            if entry.get("reverse", False):
                base = Digraph(base.n, ((v, u) for u, v in base.edges))
            graphs.append(base)
        else:
            graphs.append(digraph_from_json(entry))
    entries = []
    for g, src in zip(graphs, sources_doc):
        entries.append((g, _ids(src, "sources entry")))
    try:
        seq = DigraphSourceSequence(entries)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    b = frozenset(_ids(doc["b"], "'b'")) if "b" in doc else None
    bags = None
    if "bags" in doc:
        if not isinstance(doc["bags"], list):
            raise SchemaError("'bags' must be a list of vertex lists")
        bags = SetFamily(_ids(bag, "bag") for bag in doc["bags"])
    return SequenceInstance(seq, b, bags)


def parse_instance(doc: Any):
    """Typed object for an instance document; raises SchemaError on bad shape."""
    if not isinstance(doc, dict):
        raise SchemaError("instance document must be a JSON object")
    kind = doc.get("kind")
    if kind not in INSTANCE_KINDS:
        raise SchemaError(f"'kind' must be one of {INSTANCE_KINDS}")
    if kind == "digraph":
        return digraph_from_json(doc)
    if kind == "sequence":
        return _sequence_from_json(doc)
    if kind == "bramble":
        if "graph" not in doc or "bags" not in doc:
            raise SchemaError("bramble needs 'graph' and 'bags'")
        graph = digraph_from_json(doc["graph"])
        bags = SetFamily(_ids(bag, "bag") for bag in doc["bags"])
        return BrambleInstance(graph, bags)
    # ddp
    for key in ("graph", "s", "t", "c", "bramble"):
        if key not in doc:
            raise SchemaError(f"ddp instance needs '{key}'")
    graph = digraph_from_json(doc["graph"])
    if not isinstance(doc["c"], int):
        raise SchemaError("'c' must be an integer")
    try:
        return DDPInstance(
            graph=graph,
            s=tuple(_ids(doc["s"], "'s'")),
            t=tuple(_ids(doc["t"], "'t'")),
            c=doc["c"],
            bramble=SetFamily(_ids(bag, "bag") for bag in doc["bramble"]),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def load_instance(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"not valid JSON: {exc}") from exc
    return parse_instance(doc)


# ---------------------------------------------------------------------------
# Results
# ---------------------------------------------------------------------------


def menger_result(cert: MengerCertificate) -> dict:
    return {
        "kind": "menger",
        "value": len(cert.paths),
        "paths": [list(p.vertices) for p in cert.paths],
        "separator": sorted(cert.separator),
    }


def _cut_to_json(cut: Cut) -> dict:
    if isinstance(cut, DCut):
        return {"x0": sorted(cut.x0), "xs": [sorted(x) for x in cut.xs]}
    if isinstance(cut, TCut):
        return {
            "kept": sorted(cut.kept),
            "x0": sorted(cut.inner.x0),
            "xs": [sorted(x) for x in cut.inner.xs],
            "family_size": cut.family_size,
        }
    return {
        "kept": sorted(cut.kept),
        "xs": [sorted(x) for x in cut.xs],
        "family_size": cut.family_size,
    }


def _cut_from_json(doc: dict, variant: str) -> Cut:
    xs = tuple(frozenset(_ids(x, "separator")) for x in doc["xs"])
    if variant == "d":
        return DCut(frozenset(_ids(doc["x0"], "'x0'")), xs)
    kept = frozenset(_ids(doc["kept"], "'kept'"))
    size = doc["family_size"]
    if variant == "t":
        return TCut(kept, DCut(frozenset(_ids(doc["x0"], "'x0'")), xs), size)
    return RCut(kept, xs, size)


def minmax_result(variant: str, paths: RespectingPathSet, cut: Cut) -> dict:
    doc = {
        "kind": "minmax",
        "variant": variant,
        "value": paths.size(),
        "paths": [[list(p.vertices) for p in part] for part in paths.parts],
        "assignment": None
        if paths.assignment is None
        else [list(row) for row in paths.assignment],
        "cut": _cut_to_json(cut),
        "order": cut.order(),
    }
    return doc


def routing_result(outcome: RoutingOutcome) -> dict:
    if isinstance(outcome, Solution):
        return {
            "kind": "routing",
            "outcome": "solution",
            "paths": [list(p.vertices) for p in outcome.paths],
            "single_vertex_paths": [
                i for i, p in enumerate(outcome.paths) if len(p.vertices) == 1
            ],
        }
    if isinstance(outcome, SeparatorAtSource):
        return {
            "kind": "routing",
            "outcome": "separator_at_source",
            "kept": sorted(outcome.kept),
            "xs": sorted(outcome.xs),
        }
    return {
        "kind": "routing",
        "outcome": "separator_at_sink",
        "kept": sorted(outcome.kept),
        "xt": sorted(outcome.xt),
    }


def verify_result(routes: list[str], variants: dict[str, dict]) -> dict:
    return {
        "kind": "verify",
        "routes": sorted(routes),
        "variants": variants,
        "agree": all(v.get("agree", False) for v in variants.values()) if variants else True,
    }


def parse_result(doc: Any):
    """Typed objects for a result document (the emitters' inverse)."""
    if not isinstance(doc, dict) or doc.get("kind") not in RESULT_KINDS:
        raise SchemaError(f"'kind' must be one of {RESULT_KINDS}")
    kind = doc["kind"]
    if kind == "menger":
        cert = MengerCertificate(
            tuple(Path(tuple(p)) for p in doc["paths"]),
            frozenset(_ids(doc["separator"], "'separator'")),
        )
        if doc["value"] != len(cert.paths):
            raise SchemaError("'value' disagrees with the path count")
        return cert
    if kind == "minmax":
        variant = doc["variant"]
        paths = RespectingPathSet(
            tuple(tuple(Path(tuple(p)) for p in part) for part in doc["paths"]),
            None
            if doc.get("assignment") is None
            else tuple(tuple(row) for row in doc["assignment"]),
        )
        cut = _cut_from_json(doc["cut"], variant)
        if doc["value"] != doc["order"] or doc["value"] != paths.size() or cut.order() != doc["order"]:
            raise SchemaError("minmax result must have value == order")
        return variant, paths, cut
    if kind == "routing":
        outcome = doc["outcome"]
        if outcome == "solution":
            return Solution(tuple(Path(tuple(p)) for p in doc["paths"]))
        if outcome == "separator_at_source":
            return SeparatorAtSource(
                tuple(_ids(doc["kept"], "'kept'")), frozenset(_ids(doc["xs"], "'xs'"))
            )
        if outcome == "separator_at_sink":
            return SeparatorAtSink(
                tuple(_ids(doc["kept"], "'kept'")), frozenset(_ids(doc["xt"], "'xt'"))
            )
        raise SchemaError(f"unknown routing outcome {outcome!r}")
    return doc  # verify results are plain reports


def emit_result(obj) -> dict:
    """Inverse of parse_result for the typed results."""
    if isinstance(obj, MengerCertificate):
        return menger_result(obj)
    if isinstance(obj, tuple) and len(obj) == 3:
        return minmax_result(*obj)
    if isinstance(obj, (Solution, SeparatorAtSource, SeparatorAtSink)):
        return routing_result(obj)
    if isinstance(obj, dict):
        return obj
    raise SchemaError(f"cannot emit {type(obj).__name__} as a result")


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def digraph_to_dot(g: Digraph, name: str = "G") -> str:
    lines = [f"digraph {name} {{"]
    lines.extend(f"  v{v};" for v in range(g.n))
    lines.extend(f"  v{u} -> v{v};" for u, v in sorted(g.simple_edges()))
    lines.append("}")
    return "\n".join(lines) + "\n"


def aux_to_dot(aux: AuxGraph, name: str = "Aux") -> str:
    """DOT text for a layered auxiliary digraph with readable vertex names."""
    def label(x: int) -> str:
        if x >= aux.target_base:
            return f"t{x - aux.target_base}"
        if x >= aux.middle_base:
            return f"m{aux.middle_labels[x - aux.middle_base]}"
        part = aux.part_of(x)
        return f"p{part}_{aux.original(x)}"

    lines = [f"digraph {name} {{"]
    lines.extend(f"  {label(v)};" for v in range(aux.graph.n))
    lines.extend(
        f"  {label(u)} -> {label(v)};" for u, v in sorted(aux.graph.simple_edges())
    )
    lines.append("}")
    return "\n".join(lines) + "\n"
