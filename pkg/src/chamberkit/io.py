"""Line-based text formats and JSON mirrors for graphs and complexes.

Graph format ('#' starts a comment):
    graph <name>
    vertex <id>
    edge <id> <u> <v> <length-units>

Complex format:
    complex <name>
    vertex <id>
    edge <id> <src> <dst>
    face <id> <edge>:<+|-> <angle> <edge>:<+|-> <angle> ...

Emitted files re-parse to equal objects; rationals elsewhere in reports are
always carried as {num, den} pairs.
"""

from __future__ import annotations

import json
from typing import Union

from .complexes import ComplexError, ShapeComplex
from .mgraph import GraphError, MetricGraph


def emit_graph(g: MetricGraph) -> str:
    lines = [f"graph {g.name or 'unnamed'}"]
    for v in g.vertices:
        lines.append(f"vertex {v}")
    for e in g.edges:
        lines.append(f"edge {e.eid} {e.u} {e.v} {e.length}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> MetricGraph:
    name = ""
    vertices: list[str] = []
    edges: list[tuple] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "graph":
            name = parts[1] if len(parts) > 1 else ""
        elif parts[0] == "vertex":
            if len(parts) != 2:
                raise GraphError(f"bad vertex line: {raw!r}")
            vertices.append(parts[1])
        elif parts[0] == "edge":
            if len(parts) != 5:
                raise GraphError(f"bad edge line: {raw!r}")
            edges.append((parts[1], parts[2], parts[3], int(parts[4])))
        else:
            raise GraphError(f"unknown directive: {raw!r}")
    return MetricGraph(vertices, edges, name=name)


def graph_to_json(g: MetricGraph) -> dict:
    return {
        "type": "graph",
        "name": g.name,
        "vertices": list(g.vertices),
        "edges": [{"id": e.eid, "u": e.u, "v": e.v, "length": e.length} for e in g.edges],
    }


def graph_from_json(data: dict) -> MetricGraph:
    return MetricGraph(data["vertices"],
                       [(e["id"], e["u"], e["v"], e["length"]) for e in data["edges"]],
                       name=data.get("name", ""))


def emit_complex(c: ShapeComplex) -> str:
    lines = [f"complex {c.name or 'unnamed'}"]
    for v in c.vertices:
        lines.append(f"vertex {v}")
    for e in c.edges:
        lines.append(f"edge {e.eid} {e.src} {e.dst}")
    for f in c.faces:
        bits = [f"face {f.fid}"]
        for (eid, o, a) in f.sides:
            bits.append(f"{eid}:{'+' if o == 1 else '-'} {a}")
        lines.append(" ".join(bits))
    return "\n".join(lines) + "\n"


def parse_complex(text: str) -> ShapeComplex:
    name = ""
    vertices: list[str] = []
    edges: list[tuple] = []
    faces: list[tuple] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "complex":
            name = parts[1] if len(parts) > 1 else ""
        elif parts[0] == "vertex":
            vertices.append(parts[1])
        elif parts[0] == "edge":
            if len(parts) != 4:
                raise ComplexError(f"bad edge line: {raw!r}")
            edges.append((parts[1], parts[2], parts[3]))
        elif parts[0] == "face":
            if len(parts) < 2 or (len(parts) - 2) % 2 != 0:
                raise ComplexError(f"bad face line: {raw!r}")
            fid = parts[1]
            sides = []
            for i in range(2, len(parts), 2):
                spec, angle = parts[i], parts[i + 1]
                if ":" not in spec or spec.rsplit(":", 1)[1] not in ("+", "-"):
                    raise ComplexError(f"bad side spec {spec!r} in face {fid!r}")
                eid, sign = spec.rsplit(":", 1)
                sides.append((eid, 1 if sign == "+" else -1, int(angle)))
            faces.append((fid, sides))
        else:
            raise ComplexError(f"unknown directive: {raw!r}")
    return ShapeComplex(vertices, edges, faces, name=name)


def complex_to_json(c: ShapeComplex) -> dict:
    return {
        "type": "complex",
        "name": c.name,
        "vertices": list(c.vertices),
        "edges": [{"id": e.eid, "src": e.src, "dst": e.dst} for e in c.edges],
        "faces": [{"id": f.fid,
                   "sides": [{"edge": eid, "orientation": "+" if o == 1 else "-", "angle": a}
                             for (eid, o, a) in f.sides]}
                  for f in c.faces],
    }


def complex_from_json(data: dict) -> ShapeComplex:
    return ShapeComplex(
        data["vertices"],
        [(e["id"], e["src"], e["dst"]) for e in data["edges"]],
        [(f["id"], [(s["edge"], 1 if s["orientation"] == "+" else -1, s["angle"])
                    for s in f["sides"]]) for f in data["faces"]],
        name=data.get("name", ""))


def load_any(text: str) -> Union[MetricGraph, ShapeComplex]:
    """Dispatch on the leading directive (or JSON type field)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        data = json.loads(text)
        if data.get("type") == "graph":
            return graph_from_json(data)
        if data.get("type") == "complex":
            return complex_from_json(data)
        raise ValueError("JSON input must carry type 'graph' or 'complex'")
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("graph"):
            return parse_graph(text)
        if line.startswith("complex"):
            return parse_complex(text)
        break
    raise ValueError("input is neither a graph nor a complex file")
