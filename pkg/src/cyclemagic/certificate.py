"""Certificate files (line-oriented, sorted-key JSON) and DOT export."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .families import FamilySpec
from .graph import Graph, build_graph, edge_key
from .labeling import TotalLabeling

CUSTOM = "custom"


@dataclass
class Certificate:
    family: str
    params: dict[str, int]
    cycle_length: int
    mode: str
    vertex_labels: dict[str, int]
    edge_labels: list[tuple[str, str, int]]
    magic_constant: int | None
    valid: bool
    tool_version: str
    typo_corrections: list[str] = field(default_factory=list)
    graph_edges: list[tuple[str, str]] | None = None

    @classmethod
    def from_labeling(cls, spec: FamilySpec | None, lab: TotalLabeling, *, cycle_length: int, mode: str,
                      magic_constant: int | None, valid: bool, corrections=(), graph: Graph | None = None):
        from . import __version__

        return cls(
            family=spec.family.value if spec is not None else CUSTOM,
            params=dict(spec.params) if spec is not None else {},
            cycle_length=cycle_length,
            mode=mode,
            vertex_labels={u: lab.vertex_labels[u] for u in sorted(lab.vertex_labels)},
            edge_labels=[(a, b, lab.edge_labels[(a, b)]) for a, b in sorted(lab.edge_labels)],
            magic_constant=magic_constant,
            valid=valid,
            tool_version=__version__,
            typo_corrections=sorted(corrections),
            graph_edges=sorted(graph.edges) if spec is None and graph is not None else None,
        )

    @property
    def spec(self) -> FamilySpec | None:
        if self.family == CUSTOM:
            return None
        return FamilySpec.of(self.family, **self.params)

    def graph(self) -> Graph:
        if self.family == CUSTOM:
            if self.graph_edges is None:
                raise ValueError("custom certificate carries no graph_edges")
            return Graph.from_edges(self.graph_edges, self.vertex_labels)
        return build_graph(self.spec)

    def labeling(self) -> TotalLabeling:
        edges = {}
        for a, b, w in self.edge_labels:
            key = edge_key(a, b)
            if key in edges:
                raise ValueError(f"edge {key} listed twice")
            edges[key] = w
        return TotalLabeling(dict(self.vertex_labels), edges, tuple(self.typo_corrections))

    def to_obj(self) -> dict:
        obj = {
            "cycle_length": self.cycle_length,
            "edge_labels": [[a, b, w] for a, b, w in self.edge_labels],
            "family": self.family,
            "magic_constant": self.magic_constant,
            "mode": self.mode,
            "params": dict(sorted(self.params.items())),
            "tool_version": self.tool_version,
            "typo_corrections": list(self.typo_corrections),
            "valid": self.valid,
            "vertex_labels": dict(sorted(self.vertex_labels.items())),
        }
        if self.graph_edges is not None:
            obj["graph_edges"] = [[a, b] for a, b in self.graph_edges]
        return obj


def emit(cert: Certificate) -> str:
    """Serialise with sorted keys and one list/dict entry per line."""
    obj = cert.to_obj()
    lines = ["{"]
    keys = sorted(obj)
    for pos, key in enumerate(keys):
        value = obj[key]
        tail = "," if pos < len(keys) - 1 else ""
        head = f"  {json.dumps(key)}: "
        if isinstance(value, list) and value:
            items = [f"    {json.dumps(x, ensure_ascii=False)}" for x in value]
            lines.append(head + "[")
            lines.append(",\n".join(items))
            lines.append("  ]" + tail)
        elif isinstance(value, dict) and value and key != "params":
            items = [f"    {json.dumps(k)}: {json.dumps(v)}" for k, v in value.items()]
            lines.append(head + "{")
            lines.append(",\n".join(items))
            lines.append("  }" + tail)
        else:
            lines.append(head + json.dumps(value, sort_keys=True) + tail)
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse(text: str) -> Certificate:
    obj = json.loads(text)
    required = ("family", "params", "cycle_length", "mode", "vertex_labels", "edge_labels",
                "magic_constant", "valid", "tool_version")
    missing = [k for k in required if k not in obj]
    if missing:
        raise ValueError(f"certificate is missing {missing}")
    edges = []
    for item in obj["edge_labels"]:
        if len(item) != 3:
            raise ValueError(f"bad edge entry {item!r}")
        a, b, w = item
        edges.append((str(a), str(b), int(w)))
    graph_edges = obj.get("graph_edges")
    return Certificate(
        family=obj["family"],
        params={str(k): int(v) for k, v in obj["params"].items()},
        cycle_length=int(obj["cycle_length"]),
        mode=obj["mode"],
        vertex_labels={str(k): int(v) for k, v in obj["vertex_labels"].items()},
        edge_labels=edges,
        magic_constant=None if obj["magic_constant"] is None else int(obj["magic_constant"]),
        valid=bool(obj["valid"]),
        tool_version=str(obj["tool_version"]),
        typo_corrections=list(obj.get("typo_corrections", [])),
        graph_edges=None if graph_edges is None else [(a, b) for a, b in graph_edges],
    )


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(g: Graph, lab: TotalLabeling | None = None, name: str = "G") -> str:
    """Undirected DOT with nodes and edges in sorted order.

    With a labeling, each node and edge carries ``label="<value>"`` and nodes
    keep their identifier in ``xlabel``.
    """
    out = [f"graph {_q(name)} {{"]
    for u in g.sorted_vertices():
        if lab is None:
            out.append(f"  {_q(u)};")
        else:
            out.append(f"  {_q(u)} [label={_q(str(lab.vertex_labels[u]))}, xlabel={_q(u)}];")
    for a, b in g.sorted_edges():
        if lab is None:
            out.append(f"  {_q(a)} -- {_q(b)};")
        else:
            out.append(f"  {_q(a)} -- {_q(b)} [label={_q(str(lab.edge_labels[(a, b)]))}];")
    out.append("}")
    return "\n".join(out) + "\n"
