"""Serialization: Cayley tables as JSON, egg-box diagrams as DOT."""

from __future__ import annotations

import json

from .errors import ParseError
from .semigroup import FiniteSemigroup, from_table, greens, h_class_is_group
from .transformation import Transformation


def _element_to_json(e):
    if isinstance(e, Transformation):
        return list(e.images)
    return str(e)


def _element_from_json(e):
    if isinstance(e, list):
        return Transformation(tuple(e))
    return e


def cayley_to_json(s: FiniteSemigroup) -> str:
    doc = {
        "elements": [_element_to_json(e) for e in s.elements],
        "table": [list(row) for row in s.table],
        "generators": list(s.generators),
    }
    return json.dumps(doc, indent=2, sort_keys=True)


def cayley_from_json(text: str) -> FiniteSemigroup:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    for key in ("elements", "table"):
        if key not in doc:
            raise ParseError(f"missing key {key!r}")
    elements = tuple(_element_from_json(e) for e in doc["elements"])
    return from_table(elements, doc["table"], doc.get("generators"), validate=True)


def eggbox_dot(s: FiniteSemigroup, names=None) -> str:
    """Egg-box diagram: one cluster per D-class, H-class cells in an
    R-by-L grid, group H-classes shaded."""
    if names is None:
        names = [str(e) for e in s.elements]
    gr = greens(s)
    lines = ["digraph eggbox {", "  node [shape=box];"]
    node_id = 0
    for d, grid in enumerate(gr.eggbox):
        lines.append(f"  subgraph cluster_d{d} {{")
        lines.append(f'    label="D{d}";')
        for row in grid:
            row_ids = []
            for cell in row:
                label = ", ".join(names[x] for x in cell)
                style = ' style=filled fillcolor=lightgray' if h_class_is_group(s, cell) else ""
                lines.append(f'    h{node_id} [label="{label}"{style}];')
                row_ids.append(f"h{node_id}")
                node_id += 1
            lines.append("    { rank=same; " + "; ".join(row_ids) + "; }")
            for a, b in zip(row_ids, row_ids[1:]):
                lines.append(f"    {a} -> {b} [style=invis];")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
