"""Coloured partitions, duality, and the rank-aligned standardised graph.

A colouring of span ``t`` partitions the vertices into classes ``C_0..C_t``
(some possibly empty — holes).  The *standardised graph* of a pair ``(g, c)``
keeps the vertex set and the partition but replaces the edge set with the
canonical one determined purely by the shape: rank the vertices of each class
by ascending id, then join rank ``i`` of class ``m`` with rank ``i`` of class
``p`` for every noncontiguous pair ``m < p - 1`` and every rank below both
class sizes.  Three facts make this the workhorse of the extremal theory:

* it never loses edges — in ``g`` each vertex had at most one neighbour in
  any other class and none in its own or adjacent classes, while the
  standardised graph gives it exactly one partner in every noncontiguous
  class that is large enough — so the edge count rises to exactly the shape's
  edge bound;

* the shape (hence the spread) is untouched;

* when ``c`` is optimal the span is preserved, so extremal questions about
  graphs reduce to integer questions about shapes.

Label reversal ``m -> t - m`` (the *dual*) preserves validity and span; it is
provided for colourings, partitions, and shapes alike because the sporadic
extremal families are closed under it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph
from .shapes import PartitionShape, dual_shape, edge_bound
from .solver import Colouring, is_lambda_colouring


@dataclass(frozen=True)
class ColouredPartition:
    """Ordered colour classes ``C_0..C_t`` (disjoint vertex sets, empties ok)."""

    t: int
    classes: tuple

    def __post_init__(self):
        if self.t < 0:
            raise ValueError("span must be non-negative")
        if len(self.classes) != self.t + 1:
            raise ValueError(
                f"expected {self.t + 1} classes, got {len(self.classes)}"
            )
        seen = set()
        for cl in self.classes:
            for v in cl:
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two classes")
                seen.add(v)

    @property
    def n(self) -> int:
        return sum(len(cl) for cl in self.classes)


def partition_of(g: Graph, c: Colouring) -> ColouredPartition:
    """The coloured partition of ``g`` under a valid colouring ``c``."""
    if not is_lambda_colouring(g, c):
        raise ValueError("colouring is not valid on the graph")
    t = c.span
    classes = [set() for _ in range(t + 1)]
    for v, x in enumerate(c.labels):
        classes[x].add(v)
    return ColouredPartition(t, tuple(frozenset(cl) for cl in classes))


def shape_of(cp: ColouredPartition) -> PartitionShape:
    """Class sizes of a partition."""
    return PartitionShape(tuple(len(cl) for cl in cp.classes))


def dual(obj):
    """Index-reversed counterpart of a shape, partition, or colouring.

    For colourings this is the relabelling ``u -> t - c(u)`` (``t`` the
    span), which is valid exactly when the original is, with equal span.
    An involution in all three cases.
    """
    if isinstance(obj, PartitionShape):
        return dual_shape(obj)
    if isinstance(obj, ColouredPartition):
        return ColouredPartition(obj.t, obj.classes[::-1])
    if isinstance(obj, Colouring):
        t = obj.span
        return Colouring(tuple(t - x for x in obj.labels))
    raise TypeError(f"no dual defined for {type(obj).__name__}")


# ---------------------------------------------------------------------------
# standardised graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StandardisedGraph:
    """The graph whose edges are a pure function of a shape.

    Vertices are numbered class-major: class ``m`` occupies the contiguous
    block starting at ``offset(m)``, with ranks ``0..c_m - 1``.  The edge set
    is the rank-aligned matching between every noncontiguous class pair, so
    the edge count is exactly the shape's edge bound.
    """

    shape: PartitionShape

    def __post_init__(self):
        if len(self.shape.sizes) < 4:
            raise ValueError("standardised graphs need span >= 3 (4 classes)")

    @cached_property
    def offsets(self) -> tuple:
        off = [0]
        for s in self.shape.sizes:
            off.append(off[-1] + s)
        return tuple(off)

    def vertex(self, m: int, i: int) -> int:
        """Vertex id of rank ``i`` within class ``m``."""
        if not 0 <= i < self.shape.sizes[m]:
            raise IndexError(f"rank {i} out of range for class {m}")
        return self.offsets[m] + i

    @cached_property
    def class_labels(self) -> tuple:
        """Class index of every vertex, in vertex order."""
        return tuple(
            m for m, size in enumerate(self.shape.sizes) for _ in range(size)
        )

    def graph(self) -> Graph:
        s = self.shape.sizes
        edges = set()
        for m in range(len(s) - 2):
            for p in range(m + 2, len(s)):
                for i in range(min(s[m], s[p])):
                    edges.add((self.vertex(m, i), self.vertex(p, i)))
        g = Graph(self.shape.n, frozenset(edges))
        assert g.m == edge_bound(self.shape)
        return g

    def partition(self) -> ColouredPartition:
        s = self.shape.sizes
        classes = tuple(
            frozenset(range(self.offsets[m], self.offsets[m] + s[m]))
            for m in range(len(s))
        )
        return ColouredPartition(self.shape.t, classes)


def edge_standardise(g: Graph, c: Colouring):
    """Standardise ``(g, c)``: returns the standardised graph + correspondence.

    ``c`` must be valid with span >= 3.  The correspondence maps each original
    vertex id to its id in the standardised graph's class-major numbering
    (rank by ascending original id within each class).  The result has the
    same shape and spread, and at least as many edges as ``g``.
    """
    if not is_lambda_colouring(g, c):
        raise ValueError("colouring is not valid on the graph")
    t = c.span
    if t < 3:
        raise ValueError(f"standardisation needs span >= 3, got {t}")
    classes = [[] for _ in range(t + 1)]
    for v, x in enumerate(c.labels):
        classes[x].append(v)
    shape = PartitionShape(tuple(len(cl) for cl in classes))
    sg = StandardisedGraph(shape)
    corr = [0] * g.n
    for m, members in enumerate(classes):
        for i, v in enumerate(members):
            corr[v] = sg.vertex(m, i)
    assert edge_bound(shape) >= g.m
    return sg, tuple(corr)
