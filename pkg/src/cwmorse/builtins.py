"""The five builtin surface complexes.

Labelling conventions (counts are the contract, labels are for
readability): vertices get digit labels, edges lowercase letters,
2-cells uppercase letters.

disk      triangle: vertices 0,1,2; edges a={0,1}, b={1,2}, c={0,2}; face A.
sphere    boundary of a tetrahedron on vertices 0..3.
cylinder  three quadrilaterals glued in a ring (two boundary circles).
mobius    the same strip glued with a half twist (one boundary circle).
torus     3x3 grid of squares with opposite sides identified.
"""

from __future__ import annotations

from .complexes import Cell, RegularComplex

BUILTIN_NAMES = ("disk", "sphere", "cylinder", "mobius", "torus")


def _assemble(name, vertices, edges, faces):
    """Build a complex from label-level data.

    vertices: list of vertex labels; edges: {label: (v, w)} by vertex
    label; faces: {label: [edge labels]}.  Ids are assigned vertices
    first, then edges, then faces, each in the given order.
    """
    cells = []
    ident = {}
    for v in vertices:
        ident[v] = len(cells)
        cells.append(Cell(len(cells), 0, v))
    for e in edges:
        ident[e] = len(cells)
        cells.append(Cell(len(cells), 1, e))
    for f in faces:
        ident[f] = len(cells)
        cells.append(Cell(len(cells), 2, f))
    facets = {ident[v]: set() for v in vertices}
    for e, (v, w) in edges.items():
        facets[ident[e]] = {ident[v], ident[w]}
    for f, es in faces.items():
        facets[ident[f]] = {ident[e] for e in es}
    return RegularComplex(name, cells, facets)


def _disk():
    return _assemble(
        "disk",
        ["0", "1", "2"],
        {"a": ("0", "1"), "b": ("1", "2"), "c": ("0", "2")},
        {"A": ["a", "b", "c"]},
    )


def _sphere():
    return _assemble(
        "sphere",
        ["0", "1", "2", "3"],
        {
            "a": ("0", "1"), "b": ("1", "2"), "c": ("0", "2"),
            "d": ("0", "3"), "e": ("1", "3"), "f": ("2", "3"),
        },
        {
            "A": ["a", "b", "c"],
            "B": ["a", "d", "e"],
            "C": ["b", "e", "f"],
            "D": ["c", "d", "f"],
        },
    )


def _cylinder():
    # bottom ring 0,1,2 / top ring 3,4,5; faces ride the verticals d,e,f
    return _assemble(
        "cylinder",
        ["0", "1", "2", "3", "4", "5"],
        {
            "a": ("0", "1"), "b": ("1", "2"), "c": ("0", "2"),
            "d": ("0", "3"), "e": ("1", "4"), "f": ("2", "5"),
            "g": ("3", "4"), "h": ("4", "5"), "i": ("3", "5"),
        },
        {
            "A": ["a", "d", "e", "g"],
            "B": ["b", "e", "f", "h"],
            "C": ["c", "d", "f", "i"],
        },
    )


def _mobius():
    # strip of three squares; the last square glues end to start with
    # the rows exchanged, so edge c runs from bottom vertex 2 to top
    # vertex 3 and edge i from top vertex 5 back to bottom vertex 0
    return _assemble(
        "mobius",
        ["0", "1", "2", "3", "4", "5"],
        {
            "a": ("0", "1"), "b": ("1", "2"), "c": ("2", "3"),
            "d": ("0", "3"), "e": ("1", "4"), "f": ("2", "5"),
            "g": ("3", "4"), "h": ("4", "5"), "i": ("0", "5"),
        },
        {
            "A": ["a", "d", "e", "g"],
            "B": ["b", "e", "f", "h"],
            "C": ["c", "d", "f", "i"],
        },
    )


def _torus():
    # 3x3 grid, opposite sides identified; vertex (i, j) -> label "i j"
    def v(i, j):
        return f"{i % 3}{j % 3}"

    vertices = [v(i, j) for j in range(3) for i in range(3)]
    edges = {}
    faces = {}
    for j in range(3):
        for i in range(3):
            edges[f"h{i}{j}"] = (v(i, j), v(i + 1, j))
            edges[f"v{i}{j}"] = (v(i, j), v(i, j + 1))
    for j in range(3):
        for i in range(3):
            faces[f"F{i}{j}"] = [
                f"h{i}{j}", f"h{i}{(j + 1) % 3}",
                f"v{i}{j}", f"v{(i + 1) % 3}{j}",
            ]
    return _assemble("torus", vertices, edges, faces)


_FACTORIES = {
    "disk": _disk,
    "sphere": _sphere,
    "cylinder": _cylinder,
    "mobius": _mobius,
    "torus": _torus,
}


def builtin(name):
    """Return one of the builtin complexes by name."""
    try:
        factory = _FACTORIES[name]
    except KeyError:
        from .complexes import UnknownBuiltin
        raise UnknownBuiltin(name) from None
    return factory()
