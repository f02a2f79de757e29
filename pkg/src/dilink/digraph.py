"""Immutable digraphs with dense integer vertex labels.

Vertices are always 0..n-1.  At most one arc per ordered pair, no loops;
(u, v) and (v, u) may coexist.  Digraphs are values: every operation that
"modifies" one returns a new object, so they can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import LabelOutOfRange, LoopArc

Arc = tuple[int, int]


class Digraph:
    """A loop-free digraph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "arcs", "_out", "_in", "_matrix", "_out_masks", "_in_masks")

    def __init__(self, n: int, arc_list: Iterable[Arc]):
        if not isinstance(n, int) or n < 0:
            raise LabelOutOfRange(f"vertex count must be a nonnegative int, got {n!r}")
        arcs: set[Arc] = set()
        for u, v in arc_list:
            if u == v:
                raise LoopArc(f"loop arc ({u}, {u}) is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise LabelOutOfRange(f"arc ({u}, {v}) outside 0..{n - 1}")
            arcs.add((int(u), int(v)))
        self.n = n
        self.arcs = frozenset(arcs)
        out: list[list[int]] = [[] for _ in range(n)]
        inn: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(arcs):
            out[u].append(v)
            inn[v].append(u)
        for lst in inn:
            lst.sort()
        self._out = tuple(tuple(vs) for vs in out)
        self._in = tuple(tuple(us) for us in inn)
        self._matrix = None
        self._out_masks = None
        self._in_masks = None

    # -- basic queries ---------------------------------------------------

    @property
    def arc_count(self) -> int:
        return len(self.arcs)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def out_degree(self, v: int) -> int:
        return len(self._out[v])

    def in_degree(self, v: int) -> int:
        return len(self._in[v])

    def vertices(self) -> range:
        return range(self.n)

    def reverse(self) -> "Digraph":
        """The digraph with every arc (u, v) replaced by (v, u)."""
        return Digraph(self.n, [(v, u) for u, v in self.arcs])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Digraph)
            and self.n == other.n
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"

    # -- cached dense views (internal accelerators) ----------------------

    def bool_matrix(self):
        """n x n numpy bool matrix M with M[u, v] true iff arc u->v."""
        if self._matrix is None:
            import numpy as np

            m = np.zeros((self.n, self.n), dtype=bool)
            for u, v in self.arcs:
                m[u, v] = True
            self._matrix = m
        return self._matrix

    def in_masks(self) -> tuple[int, ...]:
        """Per-vertex bitmask of in-neighbors (bit u set iff u->v)."""
        if self._in_masks is None:
            masks = [0] * self.n
            for u, v in self.arcs:
                masks[v] |= 1 << u
            self._in_masks = tuple(masks)
        return self._in_masks

    def out_masks(self) -> tuple[int, ...]:
        if self._out_masks is None:
            masks = [0] * self.n
            for u, v in self.arcs:
                masks[u] |= 1 << v
            self._out_masks = tuple(masks)
        return self._out_masks


def build_digraph(n: int, arc_list: Iterable[Arc]) -> Digraph:
    """Build a digraph, collapsing duplicate arcs and rejecting loops."""
    return Digraph(n, arc_list)


@dataclass(frozen=True)
class DegreeProfile:
    """Sorted degree sequences plus the degree minima of a digraph.

    out_sorted / in_sorted are nondecreasing; delta_min_total is the
    minimum over vertices of out-degree + in-degree (a per-vertex sum,
    not derivable from the two sorted sequences).
    """

    out_sorted: tuple[int, ...]
    in_sorted: tuple[int, ...]
    delta_plus: int
    delta_minus: int
    delta_zero: int
    delta_min_total: int


def degree_profile(D: Digraph) -> DegreeProfile:
    outs = sorted(D.out_degree(v) for v in D.vertices())
    ins = sorted(D.in_degree(v) for v in D.vertices())
    if D.n == 0:
        return DegreeProfile((), (), 0, 0, 0, 0)
    dplus = outs[0]
    dminus = ins[0]
    dtotal = min(D.out_degree(v) + D.in_degree(v) for v in D.vertices())
    return DegreeProfile(tuple(outs), tuple(ins), dplus, dminus, min(dplus, dminus), dtotal)


@dataclass(frozen=True)
class VertexRemoval:
    """Result of deleting a vertex set: the induced digraph plus both
    directions of the order-preserving relabelling."""

    digraph: Digraph
    old_to_new: dict[int, int]
    new_to_old: dict[int, int]


def remove_vertices(D: Digraph, removed: Iterable[int]) -> VertexRemoval:
    """Induced subdigraph on V(D) minus `removed`, relabelled to 0..k-1.

    The relabelling preserves the original label order.
    """
    gone = set(removed)
    for v in gone:
        if not (0 <= v < D.n):
            raise LabelOutOfRange(f"vertex {v} outside 0..{D.n - 1}")
    kept = [v for v in D.vertices() if v not in gone]
    old_to_new = {v: i for i, v in enumerate(kept)}
    arcs = [
        (old_to_new[u], old_to_new[v])
        for u, v in D.arcs
        if u not in gone and v not in gone
    ]
    sub = Digraph(len(kept), arcs)
    return VertexRemoval(sub, old_to_new, {i: v for v, i in old_to_new.items()})


def validate_path(D: Digraph, seq: Sequence[int]) -> bool:
    """True iff seq is a directed path of D: distinct labels in range,
    with an arc between each consecutive pair."""
    if len(seq) == 0:
        return False
    if len(set(seq)) != len(seq):
        return False
    for v in seq:
        if not (0 <= v < D.n):
            return False
    return all(D.has_arc(a, b) for a, b in zip(seq, seq[1:]))


def validate_cycle(D: Digraph, seq: Sequence[int]) -> bool:
    """True iff seq lists the vertices of a directed cycle in order.

    The closing arc seq[-1] -> seq[0] is implied, not repeated; digons
    (two-vertex cycles) are legal.
    """
    if len(seq) < 2:
        return False
    return validate_path(D, seq) and D.has_arc(seq[-1], seq[0])


def is_strongly_connected(D: Digraph) -> bool:
    if D.n <= 1:
        return True

    def reaches_all(neigh) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for w in neigh(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == D.n

    return reaches_all(D.out_neighbors) and reaches_all(D.in_neighbors)
