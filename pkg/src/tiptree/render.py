"""DOT output for plane trees and labelled plane trees.

One node per vertex, edges parent -> child, child order preserved via the
``ordering=out`` graph attribute.  By default singleton leaves draw as open
circles and elder non-twin leaves as bold filled circles, mirroring the
usual way these trees are pictured.  Callers can override any attribute
per category through the style map.
"""

from __future__ import annotations

from typing import Mapping, Optional, Union

from .leaf_stats import LeafCategory, leaf_category
from .trees import LabelledPlaneTree, PlaneTree

StyleMap = Mapping[str, Mapping[str, str]]

_BASE_UNLABELLED = {
    "shape": "circle",
    "style": "filled",
    "fillcolor": "black",
    "width": "0.12",
    "label": "",
}
_BASE_LABELLED = {"shape": "circle", "style": "solid"}

_DEFAULT_OVERRIDES = {
    "singleton": {"style": "filled", "fillcolor": "white", "width": "0.18"},
    "elder_non_twin": {
        "style": "filled",
        "fillcolor": "black",
        "penwidth": "2",
        "width": "0.2",
    },
}
_LABELLED_OVERRIDES = {
    "singleton": {"style": "filled", "fillcolor": "white"},
    "elder_non_twin": {
        "style": "filled",
        "fillcolor": "black",
        "fontcolor": "white",
    },
}


def render_dot(
    t: Union[PlaneTree, LabelledPlaneTree],
    style: Optional[StyleMap] = None,
) -> str:
    """Emit a DOT digraph for ``t``."""
    if isinstance(t, LabelledPlaneTree):
        shape, labelled = t.shape, t
    else:
        shape, labelled = t, None

    categories: dict[int, LeafCategory] = {}
    if shape.edge_count >= 1:
        for v in shape.leaves():
            categories[v] = leaf_category(shape, v)

    base = dict(_BASE_LABELLED if labelled else _BASE_UNLABELLED)
    overrides = _LABELLED_OVERRIDES if labelled else _DEFAULT_OVERRIDES
    style = style or {}

    lines = ["digraph tiptree {", "  graph [ordering=out];"]
    for v in shape.vertices():
        attrs = dict(base)
        key = categories[v].value if v in categories else (
            "root" if v == shape.root else "interior"
        )
        attrs.update(overrides.get(key, {}))
        attrs.update(style.get("default", {}))
        attrs.update(style.get(key, {}))
        if labelled:
            attrs["label"] = str(labelled.label_of(v))
        body = ", ".join(f'{name}="{value}"' for name, value in attrs.items())
        lines.append(f"  n{v} [{body}];")
    for v in shape.vertices():
        for child in shape.children_of(v):
            lines.append(f"  n{v} -> n{child};")
    lines.append("}")
    return "\n".join(lines) + "\n"
