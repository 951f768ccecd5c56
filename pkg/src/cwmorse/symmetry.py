"""Automorphisms of cell complexes and vector-field isomorphism.

An automorphism is a dimension- and incidence-preserving bijection of
the cells.  Under strict regularity an edge is determined by its
endpoints and a 2-cell by its facet edge set, so the group is found by
backtracking over vertex images and extending upward.  Groups here are
tiny (at most 72 elements for the builtins), so they are stored as
explicit element lists.
"""

from __future__ import annotations

from .fields import VectorField


class NotGroupClosed(ValueError):
    """Fixed-point average is non-integral: the field list was not
    closed under the group."""


class CellPermutation:
    """Bijection of cell ids, dimension- and incidence-preserving."""

    __slots__ = ("mapping",)

    def __init__(self, mapping):
        self.mapping = tuple(mapping)

    def __call__(self, cid):
        return self.mapping[cid]

    def __eq__(self, other):
        return isinstance(other, CellPermutation) and self.mapping == other.mapping

    def __hash__(self):
        return hash(self.mapping)

    def __repr__(self):
        return f"CellPermutation({self.mapping})"

    def compose(self, other):
        """self after other: (self.compose(other))(c) = self(other(c))."""
        return CellPermutation(tuple(self.mapping[m] for m in other.mapping))

    def inverse(self):
        inv = [0] * len(self.mapping)
        for i, m in enumerate(self.mapping):
            inv[m] = i
        return CellPermutation(inv)

    def is_identity(self):
        return all(i == m for i, m in enumerate(self.mapping))

    def cycle_type(self):
        """Sorted tuple of cycle lengths, fixed points included."""
        seen = [False] * len(self.mapping)
        lengths = []
        for i in range(len(self.mapping)):
            if seen[i]:
                continue
            ln = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = self.mapping[j]
                ln += 1
            lengths.append(ln)
        return tuple(sorted(lengths))

    @classmethod
    def identity(cls, n):
        return cls(range(n))


def _preserves_incidence(K, mapping):
    for c in range(len(K)):
        if K.dim(mapping[c]) != K.dim(c):
            return False
        if {mapping[d] for d in K.facets(c)} != set(K.facets(mapping[c])):
            return False
    return True


def automorphisms(K):
    """The full automorphism group of K, identity included, sorted by
    mapping tuple for deterministic iteration."""
    n = len(K)
    verts = K.cells_of_dim(0)
    edges = K.cells_of_dim(1)
    faces = K.cells_of_dim(2)
    adj = {v: set() for v in verts}
    edge_by_ends = {}
    for e in edges:
        a, b = sorted(K.facets(e))
        adj[a].add(b)
        adj[b].add(a)
        edge_by_ends[(a, b)] = e
    face_by_edges = {frozenset(K.facets(f)): f for f in faces}
    degree = {v: len(adj[v]) for v in verts}

    elements = []
    assign = {}

    def extend(idx):
        if idx == len(verts):
            mapping = list(range(n))
            for v in verts:
                mapping[v] = assign[v]
            for e in edges:
                a, b = sorted(assign[v] for v in K.facets(e))
                img = edge_by_ends.get((a, b))
                if img is None:
                    return
                mapping[e] = img
            for f in faces:
                img = face_by_edges.get(frozenset(mapping[e] for e in K.facets(f)))
                if img is None:
                    return
                mapping[f] = img
            if len(set(mapping)) == n and _preserves_incidence(K, mapping):
                elements.append(CellPermutation(mapping))
            return
        v = verts[idx]
        used = set(assign.values())
        for w in verts:
            if w in used or degree[w] != degree[v]:
                continue
            ok = True
            for u in verts[:idx]:
                if (u in adj[v]) != (assign[u] in adj[w]):
                    ok = False
                    break
            if ok:
                assign[v] = w
                extend(idx + 1)
                del assign[v]

    if verts:
        extend(0)
    else:
        elements.append(CellPermutation.identity(0))
    elements.sort(key=lambda g: g.mapping)
    return elements


def apply(g, V):
    """Image of a vector field under a cell permutation."""
    return VectorField((g(l), g(u)) for l, u in V.pairs)


def are_isomorphic_fields(K, V1, V2, group=None):
    """True when some complex automorphism carries V1's pairs onto V2's."""
    if group is None:
        group = automorphisms(K)
    return any(apply(g, V1) == V2 for g in group)


def canonical_form(K, V, group):
    """Lexicographically minimal sorted pair list over the orbit of V.

    Two fields are isomorphic exactly when their canonical forms agree.
    """
    return min(tuple(sorted((g(l), g(u)) for l, u in V.pairs)) for g in group)


def orbit(V, group):
    return {apply(g, V) for g in group}


def stabilizer_order(V, group):
    return sum(1 for g in group if apply(g, V) == V)


def vertex_orbits(K, group):
    """Partition of the vertices under the group action."""
    verts = K.cells_of_dim(0)
    orbits = []
    seen = set()
    for v in verts:
        if v in seen:
            continue
        o = sorted({g(v) for g in group})
        seen.update(o)
        orbits.append(o)
    return orbits


def vertex_stabilizer_order(K, group, v):
    return sum(1 for g in group if g(v) == v)


def burnside_class_count(K, group, fields):
    """Orbit count by fixed-point averaging over the group.

    fields must be closed under the group (the raw enumeration output
    is); a non-integral average raises NotGroupClosed.
    """
    pair_sets = [V.pairs for V in fields]
    index = set(pair_sets)
    if len(index) != len(pair_sets):
        raise NotGroupClosed("duplicate fields in list")
    total = 0
    for g in group:
        total += sum(
            1 for p in pair_sets
            if frozenset((g(l), g(u)) for l, u in p) == p)
    count, rem = divmod(total, len(group))
    if rem:
        raise NotGroupClosed(
            f"fixed-point sum {total} not divisible by group order {len(group)}")
    return count
