"""DOT rendering of the Hasse diagram, with field arrows highlighted.

Cells are nodes ranked by dimension.  Incidence arcs point from the
higher-dimensional cell to its facet; a matched pair is drawn reversed
(facet to coface) and highlighted, the arrow picture of a discrete
vector field.
"""

from __future__ import annotations


def export_dot(K, V=None):
    lines = [f'digraph "{K.name}" {{', "  rankdir=TB;"]
    for k in (2, 1, 0):
        cells = K.cells_of_dim(k)
        if not cells:
            continue
        names = " ".join(f'"{K.label(c)}"' for c in cells)
        lines.append(f"  {{ rank=same; {names} }}")
    for c in sorted(range(len(K)), key=lambda c: (-K.dim(c), c)):
        for d in sorted(K.facets(c)):
            if V is not None and V.upper_of(d) == c:
                lines.append(
                    f'  "{K.label(d)}" -> "{K.label(c)}" '
                    "[color=red, penwidth=2];")
            else:
                lines.append(f'  "{K.label(c)}" -> "{K.label(d)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
