"""Discrete vector fields, gradient validation, V-paths and Morse functions.

A discrete vector field is a partial matching on the Hasse diagram of a
complex, pairing cells with facets of one dimension lower.  A field is a
gradient field when no V-path closes up; those are exactly the fields
that arise from discrete Morse functions, and both directions of that
correspondence are implemented here.
"""

from __future__ import annotations

import heapq
from fractions import Fraction


class InvalidField(ValueError):
    """A pair set is not a valid matching.

    violations is a list of dicts with a "kind" key, one of
    "invalid_pair" (bad incidence or dimension gap) and "cell_reused".
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(v["message"] for v in self.violations))


class DimensionMismatch(ValueError):
    pass


class NotCritical(ValueError):
    pass


class NotGradient(ValueError):
    pass


class NotMorse(ValueError):
    pass


class FunctionNotTotal(ValueError):
    pass


class VectorField:
    """An immutable set of (lower, upper) matched cell pairs."""

    __slots__ = ("pairs", "_up", "_down")

    def __init__(self, pairs):
        self.pairs = frozenset((int(l), int(u)) for l, u in pairs)
        self._up = {l: u for l, u in self.pairs}
        self._down = {u: l for l, u in self.pairs}

    def __eq__(self, other):
        return isinstance(other, VectorField) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"VectorField({sorted(self.pairs)})"

    def sorted_pairs(self):
        return tuple(sorted(self.pairs))

    def upper_of(self, cid):
        """The cell cid is matched upward with, or None."""
        return self._up.get(cid)

    def lower_of(self, cid):
        return self._down.get(cid)

    def matched(self, cid):
        return cid in self._up or cid in self._down

    def matched_cells(self):
        return set(self._up) | set(self._down)


def make_field(K, pairs):
    """Validate a pair list against K and return a VectorField.

    Raises InvalidField with one structured violation per bad pair or
    reused cell.
    """
    violations = []
    seen = {}
    pairs = [(int(l), int(u)) for l, u in pairs]
    n = len(K)
    for l, u in pairs:
        if not (0 <= l < n and 0 <= u < n):
            violations.append({
                "kind": "invalid_pair", "pair": (l, u),
                "message": f"pair ({l},{u}): cell id out of range"})
            continue
        if K.dim(u) != K.dim(l) + 1:
            violations.append({
                "kind": "invalid_pair", "pair": (l, u),
                "message": f"pair ({K.label(l)},{K.label(u)}): dims "
                           f"{K.dim(l)},{K.dim(u)} differ by more than one step"})
        elif l not in K.facets(u):
            violations.append({
                "kind": "invalid_pair", "pair": (l, u),
                "message": f"pair ({K.label(l)},{K.label(u)}): "
                           f"{K.label(l)} is not a facet of {K.label(u)}"})
        for c in (l, u):
            if c in seen and seen[c] != (l, u):
                violations.append({
                    "kind": "cell_reused", "cell": c,
                    "message": f"cell {K.label(c)} occurs in more than one pair"})
            seen[c] = (l, u)
    if violations:
        raise InvalidField(violations)
    return VectorField(pairs)


def critical_cells(K, V):
    """Cells in no pair of V; the index of each is its dimension."""
    return frozenset(range(len(K))) - V.matched_cells()


def _level_arcs(K, V, k):
    """Arcs of the dim-k V-path digraph: s -> s' when (s,t) in V and s'
    is another facet of t."""
    arcs = {}
    for l, u in V.pairs:
        if K.dim(l) != k:
            continue
        arcs[l] = sorted(d for d in K.facets(u) if d != l)
    return arcs


def closed_v_path(K, V):
    """A closed V-path of V on K as an alternating cell list, or None.

    The witness has the form [s0, t0, s1, t1, ..., s0].
    """
    for k in (0, 1):
        arcs = _level_arcs(K, V, k)
        color = {}
        for root in sorted(arcs):
            if root in color:
                continue
            stack = [(root, iter(arcs.get(root, ())))]
            color[root] = 1
            parent = {}
            while stack:
                node, it = stack[-1]
                advanced = False
                for nxt in it:
                    if color.get(nxt) == 1:
                        # unwind the cycle nxt -> ... -> node -> nxt
                        cyc = [node]
                        while cyc[-1] != nxt:
                            cyc.append(parent[cyc[-1]])
                        cyc.reverse()
                        out = []
                        for s in cyc:
                            out.append(s)
                            out.append(V.upper_of(s))
                        out.append(cyc[0])
                        return out
                    if nxt not in color and nxt in arcs:
                        color[nxt] = 1
                        parent[nxt] = node
                        stack.append((nxt, iter(arcs[nxt])))
                        advanced = True
                        break
                    color.setdefault(nxt, 2)
                if not advanced:
                    color[node] = 2
                    stack.pop()
    return None


def is_gradient(K, V):
    """True when V has no closed V-path (Forman acyclicity)."""
    return closed_v_path(K, V) is None


def v_paths(K, V, start, end, max_len=None):
    """All V-paths from start to end as alternating cell tuples.

    The one-cell path (start,) counts when start == end.  For gradient
    fields the search terminates on its own and max_len is ignored; a
    non-gradient field requires an explicit max_len cutoff (number of
    matched steps).
    """
    if K.dim(start) != K.dim(end):
        raise DimensionMismatch(
            f"start {K.label(start)} and end {K.label(end)} have different dims")
    if not is_gradient(K, V):
        if max_len is None:
            raise ValueError("non-gradient field: max_len cutoff required")
    else:
        max_len = None
    out = []
    path = [start]

    def walk(cell, steps):
        if cell == end:
            out.append(tuple(path))
        if max_len is not None and steps >= max_len:
            return
        t = V.upper_of(cell)
        if t is None:
            return
        for nxt in sorted(K.facets(t)):
            if nxt == cell:
                continue
            path.append(t)
            path.append(nxt)
            walk(nxt, steps + 1)
            path.pop()
            path.pop()

    walk(start, 0)
    return out


def count_connecting_paths(K, V, upper_critical, lower_critical):
    """Number of V-paths from a facet of the upper critical cell down to
    the lower critical cell."""
    crit = critical_cells(K, V)
    for c in (upper_critical, lower_critical):
        if c not in crit:
            raise NotCritical(f"cell {K.label(c)} is not critical")
    if K.dim(upper_critical) != K.dim(lower_critical) + 1:
        raise DimensionMismatch(
            "upper critical cell must be one dimension above the lower one")
    if not is_gradient(K, V):
        raise NotGradient("field has a closed V-path")
    total = 0
    for s in sorted(K.facets(upper_critical)):
        total += len(v_paths(K, V, s, lower_critical))
    return total


def is_discrete_morse(K, f):
    """Check the at-most-one-wrong-incidence condition at every cell."""
    for c in range(len(K)):
        if c not in f:
            raise FunctionNotTotal(f"no value for cell {K.label(c)}")
    for c in range(len(K)):
        bad = sum(1 for d in K.facets(c) if f[d] >= f[c])
        bad += sum(1 for d in K.cofacets(c) if f[d] <= f[c])
        if bad > 1:
            return False
    return True


def gradient_field_of(K, f):
    """The gradient field of a discrete Morse function: pairs (s, t)
    with s a facet of t and f(s) >= f(t)."""
    if not is_discrete_morse(K, f):
        raise NotMorse("function violates the discrete Morse condition")
    pairs = []
    for t in range(len(K)):
        for s in K.facets(t):
            if f[s] >= f[t]:
                pairs.append((s, t))
    return make_field(K, pairs)


def morse_function_from_field(K, V):
    """A simple discrete Morse function whose gradient field is V.

    Orient every facet incidence downward (larger value on the bigger
    cell) except matched pairs, which are reversed; the result is a DAG
    exactly when V is gradient, and ranking its cells by a deterministic
    topological order yields integer values with all the required
    inequalities strict.
    """
    if not is_gradient(K, V):
        raise NotGradient("field has a closed V-path")
    n = len(K)
    succ = {c: [] for c in range(n)}  # arc u -> v means f(u) > f(v)
    indeg = {c: 0 for c in range(n)}
    for t in range(n):
        for s in K.facets(t):
            if V.upper_of(s) == t:
                succ[s].append(t)
                indeg[t] += 1
            else:
                succ[t].append(s)
                indeg[s] += 1
    ready = [c for c in range(n) if indeg[c] == 0]
    heapq.heapify(ready)
    values = {}
    rank = n
    while ready:
        c = heapq.heappop(ready)
        rank -= 1
        values[c] = Fraction(rank)
        for d in succ[c]:
            indeg[d] -= 1
            if indeg[d] == 0:
                heapq.heappush(ready, d)
    if len(values) != n:
        raise NotGradient("field has a closed V-path")
    return values
