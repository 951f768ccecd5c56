"""Face-poset representation of regular CW complexes of dimension <= 2.

A complex is described purely combinatorially: a list of cells with
dimensions and, for each cell, the set of its codimension-1 faces
(facets).  Construction validates the strict regularity conditions that
make the face poset a complete description of the space.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class UnknownBuiltin(KeyError):
    """Requested builtin complex name is not recognized."""


class NonRegular(ValueError):
    """Cell data violates the regular-complex invariants.

    Carries the full list of violations, one human-readable string per
    failed check, naming the offending cells.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    label: str


class RegularComplex:
    """Immutable face poset of a regular CW complex of dimension <= 2."""

    __slots__ = ("name", "cells", "_facets", "_cofacets", "_by_label")

    def __init__(self, name, cells, facets):
        cells = tuple(cells)
        facet_map = {c.id: frozenset(facets.get(c.id, ())) for c in cells}
        violations = _validate(cells, facet_map)
        if violations:
            raise NonRegular(violations)
        cofacets = {c.id: set() for c in cells}
        for c in cells:
            for d in facet_map[c.id]:
                cofacets[d].add(c.id)
        self.name = name
        self.cells = cells
        self._facets = facet_map
        self._cofacets = {i: frozenset(s) for i, s in cofacets.items()}
        self._by_label = {c.label: c for c in cells}

    # -- basic queries -------------------------------------------------

    def __len__(self):
        return len(self.cells)

    def cell(self, cid):
        return self.cells[cid]

    def dim(self, cid):
        return self.cells[cid].dim

    def label(self, cid):
        return self.cells[cid].label

    def by_label(self, label):
        try:
            return self._by_label[label]
        except KeyError:
            raise KeyError(f"no cell labelled {label!r} in {self.name}") from None

    def facets(self, cid):
        """Codimension-1 faces of the given cell."""
        return self._facets[cid]

    def cofacets(self, cid):
        """Cells having the given cell as a facet."""
        return self._cofacets[cid]

    def cells_of_dim(self, k):
        return [c.id for c in self.cells if c.dim == k]

    def euler_characteristic(self):
        chi = 0
        for c in self.cells:
            chi += 1 if c.dim % 2 == 0 else -1
        return chi

    def boundary_edges(self):
        """Edges incident to fewer than two 2-cells."""
        return [c.id for c in self.cells
                if c.dim == 1 and len(self._cofacets[c.id]) < 2]

    def boundary_circle_count(self):
        """Number of connected cycles formed by the boundary edges."""
        edges = self.boundary_edges()
        if not edges:
            return 0
        incident = {}
        for e in edges:
            for v in self._facets[e]:
                incident.setdefault(v, set()).add(e)
        seen = set()
        circles = 0
        for e in edges:
            if e in seen:
                continue
            circles += 1
            stack = [e]
            seen.add(e)
            while stack:
                cur = stack.pop()
                for v in self._facets[cur]:
                    for nxt in incident[v]:
                        if nxt not in seen:
                            seen.add(nxt)
                            stack.append(nxt)
        return circles

    def closure(self, cid):
        """All cells <= cid in the face order, including cid."""
        out = {cid}
        frontier = [cid]
        while frontier:
            c = frontier.pop()
            for d in self._facets[c]:
                if d not in out:
                    out.add(d)
                    frontier.append(d)
        return frozenset(out)


def build_complex(name, cells, facets):
    """Validate raw cell data and return a RegularComplex.

    Raises NonRegular with the full list of invariant violations when
    the data does not describe a strictly regular complex.
    """
    return RegularComplex(name, cells, facets)


def _validate(cells, facet_map):
    violations = []
    n = len(cells)
    ids = [c.id for c in cells]
    if sorted(ids) != list(range(n)):
        violations.append(f"cell ids are not the dense range 0..{n - 1}")
        return violations
    if ids != list(range(n)):
        violations.append("cells are not listed in id order")
        return violations
    dims = {c.id: c.dim for c in cells}
    labels = {}
    for c in cells:
        if c.dim not in (0, 1, 2):
            violations.append(f"cell {c.label!r}: dimension {c.dim} not in {{0,1,2}}")
        if c.label in labels:
            violations.append(f"duplicate label {c.label!r} (ids {labels[c.label]} and {c.id})")
        labels[c.label] = c.id
    if violations:
        return violations

    by_label = {c.id: c.label for c in cells}
    for c in cells:
        for d in facet_map[c.id]:
            if d not in dims:
                violations.append(f"cell {by_label[c.id]!r}: unknown facet id {d}")
            elif dims[d] != c.dim - 1:
                violations.append(
                    f"cell {by_label[c.id]!r} (dim {c.dim}): facet "
                    f"{by_label[d]!r} has dim {dims[d]}, expected {c.dim - 1}")
        if c.dim == 0 and facet_map[c.id]:
            violations.append(f"vertex {by_label[c.id]!r} has facets")
        if c.dim == 1 and len(facet_map[c.id]) != 2:
            violations.append(
                f"edge {by_label[c.id]!r} has {len(facet_map[c.id])} "
                "endpoint vertices, expected 2")
    if violations:
        return violations

    for c in cells:
        if c.dim == 2:
            err = _check_boundary_cycle(c, facet_map, by_label)
            if err:
                violations.append(err)
    if violations:
        return violations

    # Strict regularity: closures of any two cells meet in the closure
    # of at most one cell.  Subsumes the no-doubled-edge rule.
    closures = {}
    for c in cells:
        cl = {c.id}
        frontier = [c.id]
        while frontier:
            x = frontier.pop()
            for d in facet_map[x]:
                if d not in cl:
                    cl.add(d)
                    frontier.append(d)
        closures[c.id] = frozenset(cl)
    for a, b in combinations(ids, 2):
        meet = closures[a] & closures[b]
        if not meet:
            continue
        if not any(closures[x] == meet for x in meet):
            violations.append(
                f"strict regularity: closures of {by_label[a]!r} and "
                f"{by_label[b]!r} meet in more than one cell")
    return violations


def _check_boundary_cycle(face, facet_map, by_label):
    edges = facet_map[face.id]
    verts = set()
    incident = {}
    for e in edges:
        for v in facet_map[e]:
            verts.add(v)
            incident.setdefault(v, []).append(e)
    if len(edges) < 3 or len(verts) < 3:
        return (f"2-cell {by_label[face.id]!r} boundary has {len(edges)} edges "
                f"and {len(verts)} vertices, need at least 3 of each")
    if len(verts) != len(edges):
        return (f"2-cell {by_label[face.id]!r} boundary is not a simple cycle "
                f"({len(edges)} edges, {len(verts)} vertices)")
    for v in verts:
        if len(incident[v]) != 2:
            return (f"2-cell {by_label[face.id]!r} boundary: vertex "
                    f"{by_label[v]!r} lies on {len(incident[v])} boundary edges, "
                    "expected 2")
    # single cycle: walk from one edge
    start = min(edges)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        for v in facet_map[cur]:
            for nxt in incident[v]:
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    if len(seen) != len(edges):
        return f"2-cell {by_label[face.id]!r} boundary is disconnected"
    return None
