"""JSON and DOT serialization for quivers, sequences, and decompositions.

File formats:

* quiver: ``{"vertices": [...], "arrows": [{"from":, "to":, "mult":}],
  "frozen": [...]}`` with ``frozen`` optional (default empty),
* sequence: ``{"steps": [...], "order": "execution" | "composition"}``,
* decomposition: ``{"chains": [[labels, position 1 first], ...],
  "oblique": [{"from":, "to":}, ...]}``.

Labels are strings on output; numeric labels on input are accepted and
canonicalized to strings.  DOT output is sorted so exports are stable.
"""

from __future__ import annotations

from typing import Any, Union

from .quiver import (
    Color,
    IceQuiver,
    MutationSequence,
    Quiver,
    QuiverError,
    ZeroRowError,
    NotSignCoherentError,
    color,
    make_quiver,
)


def quiver_to_dict(q: Union[Quiver, IceQuiver]) -> dict[str, Any]:
    frozen: list[str] = []
    if isinstance(q, IceQuiver):
        frozen = sorted(q.frozen)
        q = q.quiver
    return {
        "vertices": list(q.vertices),
        "arrows": [
            {"from": u, "to": v, "mult": m} for u, v, m in q.arrows()
        ],
        "frozen": frozen,
    }


def quiver_from_dict(data: dict[str, Any]) -> Union[Quiver, IceQuiver]:
    """Parse a quiver dict; returns an IceQuiver when ``frozen`` is non-empty."""
    if "vertices" not in data:
        raise QuiverError("quiver JSON must have a 'vertices' field")
    arrows = [
        (a["from"], a["to"], int(a.get("mult", 1)))
        for a in data.get("arrows", [])
    ]
    q = make_quiver(data["vertices"], arrows)
    frozen = frozenset(str(f) for f in data.get("frozen", []))
    if frozen:
        return IceQuiver(q, frozen)
    return q


def sequence_to_dict(seq: MutationSequence, order: str = "execution") -> dict[str, Any]:
    if order == "execution":
        return {"steps": list(seq.steps), "order": "execution"}
    if order == "composition":
        return {"steps": list(seq.to_composition()), "order": "composition"}
    raise QuiverError(f"unknown sequence order {order!r}")


def sequence_from_dict(
    data: dict[str, Any], default_order: str = "execution"
) -> MutationSequence:
    steps = [str(s) for s in data.get("steps", [])]
    order = data.get("order", default_order)
    if order == "execution":
        return MutationSequence.from_execution(steps)
    if order == "composition":
        return MutationSequence.from_composition(steps)
    raise QuiverError(f"unknown sequence order {order!r}")


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(q: Union[Quiver, IceQuiver], name: str = "quiver") -> str:
    """Render to Graphviz DOT with stable (sorted) node and edge order.

    Mutable vertices are circles filled green or red according to the
    current ice-quiver state; frozen vertices are boxes.  Arrows with
    multiplicity above one carry the multiplicity as a label.
    """
    if isinstance(q, IceQuiver):
        iq: IceQuiver | None = q
        plain = q.quiver
    else:
        iq = None
        plain = q
    lines = [f"digraph {name} {{"]
    for v in plain.vertices:
        if iq is not None and v in iq.frozen:
            lines.append(f"  {_dot_quote(v)} [shape=box];")
            continue
        fill = ""
        if iq is not None:
            try:
                c = color(iq, v)
                fill = (
                    ' style=filled fillcolor="green"'
                    if c is Color.GREEN
                    else ' style=filled fillcolor="red"'
                )
            except (ZeroRowError, NotSignCoherentError):
                fill = ' style=filled fillcolor="gray"'
        lines.append(f"  {_dot_quote(v)} [shape=circle{fill}];")
    for u, v, m in plain.arrows():
        label = f' [label="{m}"]' if m > 1 else ""
        lines.append(f"  {_dot_quote(u)} -> {_dot_quote(v)}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"
