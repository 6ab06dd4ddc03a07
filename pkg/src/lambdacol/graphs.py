"""Finite simple graphs, their text format, distances, and path covers.

Everything downstream works with labelled undirected graphs on vertex set
``{0, ..., n-1}`` with no loops or parallel edges.  Two graph-theoretic
quantities matter throughout:

* shortest-path distance ``d(u, v)``, with disconnected pairs reported as an
  explicit infinity (``INF``), because the colouring condition constrains
  pairs at distance one and two only;

* the path cover number: the least number of vertex-disjoint paths needed to
  cover every vertex, where a single vertex counts as a (length-zero) path.
  Its value on the *complement* of a graph controls the top of the colouring
  span, which is why it lives here next to ``complement``.

The text format is line oriented.  A graph file contains a header line
``p <n> <m>`` followed by exactly ``m`` edge lines ``e <u> <v>`` with
``0 <= u < v < n``.  Blank lines and lines starting with ``#`` are ignored.
Each distinct way a file can be malformed raises its own error class so that
callers (the command-line tool in particular) can point at the offending
line.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property

INF = math.inf

#: Hard ceiling for the exact path-cover dynamic programme; the state space is
#: ``2^n * n`` so anything much beyond this is hopeless anyway.
DEFAULT_PATH_COVER_CAP = 20


# ---------------------------------------------------------------------------
# errors
# ---------------------------------------------------------------------------

class GraphParseError(ValueError):
    """A graph or colouring file violated the line-oriented format."""


class MissingHeaderError(GraphParseError):
    """The first significant line was not a well-formed ``p <n> <m>`` header."""


class MalformedLineError(GraphParseError):
    """A line after the header was not a well-formed record."""


class SelfLoopError(GraphParseError):
    """An edge line joined a vertex to itself."""


class EndpointRangeError(GraphParseError):
    """An edge line mentioned a vertex outside ``0..n-1``."""


class DuplicateEdgeError(GraphParseError):
    """The same edge appeared on two lines."""


class CapExceededError(ValueError):
    """An exact computation was asked for on a graph above its size cap."""


# ---------------------------------------------------------------------------
# the graph type
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """An undirected simple graph on vertices ``0..n-1``.

    ``edges`` is a frozenset of pairs ``(u, v)`` with ``u < v``.  Instances
    are immutable and hashable; derived adjacency structure is computed once
    and cached.
    """

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n, edges) -> "Graph":
        """Build a graph from any iterable of pairs, normalising order."""
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges)
        return cls(n, norm)

    @cached_property
    def adjacency(self) -> tuple:
        """Neighbour sets, indexed by vertex."""
        nbrs = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_masks(self) -> tuple:
        """Neighbour sets as bitmasks (bit ``v`` set iff ``v`` adjacent)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def degree(self, v) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        """Largest vertex degree; 0 for the empty or edgeless graph."""
        if self.n == 0:
            return 0
        return max(len(a) for a in self.adjacency)

    def complement(self) -> "Graph":
        """The graph with exactly the missing pairs as edges."""
        comp = frozenset(
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        )
        return Graph(self.n, comp)


def is_subgraph(h: Graph, g: Graph) -> bool:
    """Return ``True`` when ``h`` sits inside ``g`` under the identity map.

    This is containment of labelled graphs: every vertex of ``h`` must be a
    vertex of ``g`` (``h.n <= g.n``) and every edge of ``h`` an edge of ``g``.
    No isomorphism search is performed.
    """
    return h.n <= g.n and h.edges <= g.edges


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric matrix of shortest-path distances.

    Disconnected pairs hold ``INF`` (``math.inf``); everything else is a
    non-negative int.  Index with ``dm[u, v]``.
    """

    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, pair):
        u, v = pair
        return self.entries[u][v]


def distances(g: Graph) -> DistanceMatrix:
    """All-pairs shortest-path distances by BFS from every vertex."""
    rows = []
    for s in range(g.n):
        dist = [INF] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for w in g.adjacency[u]:
                if dist[w] == INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        rows.append(tuple(dist))
    return DistanceMatrix(tuple(rows))


def is_connected(g: Graph) -> bool:
    """A graph on 0 or 1 vertices counts as connected."""
    if g.n <= 1:
        return True
    dist0 = distances(g).entries[0]
    return all(d != INF for d in dist0)


# ---------------------------------------------------------------------------
# path cover
# ---------------------------------------------------------------------------

def path_cover_number(g: Graph, cap: int = DEFAULT_PATH_COVER_CAP) -> int:
    """Minimum number of vertex-disjoint paths covering all of ``V(g)``.

    Isolated vertices are length-zero paths, so the answer is between 1 and
    ``n`` for any non-empty graph (and 0 for the empty one).  Exact dynamic
    programme over ``(covered set, endpoint of current path)`` states; raises
    :class:`CapExceededError` when ``n`` exceeds ``cap``.
    """
    if g.n > cap:
        raise CapExceededError(
            f"path cover limited to n <= {cap} vertices, got {g.n}"
        )
    n = g.n
    if n == 0:
        return 0
    adj = g.adj_masks
    full = (1 << n) - 1
    # dp[mask*n + v]: fewest paths covering exactly `mask`, the current path
    # ending at v.  0 doubles as "unreached" since every real value is >= 1.
    dp = bytearray((1 << n) * n)
    for v in range(n):
        dp[(1 << v) * n + v] = 1
    for mask in range(1, full + 1):
        base = mask * n
        best = 0
        m = mask
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            cur = dp[base + v]
            if not cur:
                continue
            if not best or cur < best:
                best = cur
            fm = adj[v] & ~mask
            while fm:
                ub = fm & -fm
                u = ub.bit_length() - 1
                fm ^= ub
                idx = (mask | ub) * n + u
                old = dp[idx]
                if not old or cur < old:
                    dp[idx] = cur
        if best and mask != full:
            nb = best + 1
            fm = ~mask & full
            while fm:
                ub = fm & -fm
                u = ub.bit_length() - 1
                fm ^= ub
                idx = (mask | ub) * n + u
                old = dp[idx]
                if not old or nb < old:
                    dp[idx] = nb
    return min(v for v in dp[full * n: full * n + n] if v)


# ---------------------------------------------------------------------------
# text format
# ---------------------------------------------------------------------------

def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_graph(text: str) -> Graph:
    """Parse the ``p``/``e`` line format into a :class:`Graph`.

    The header is ``p <n> <m>``; a bare ``p <n>`` is accepted with the edge
    count inferred from the lines that follow.  Raises a specific
    :class:`GraphParseError` subclass per defect, with the line number and
    offending token in the message.
    """
    lines = list(_significant_lines(text))
    if not lines:
        raise MissingHeaderError("no header line found")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) not in (2, 3) or fields[0] != "p":
        raise MissingHeaderError(f"line {lineno}: expected 'p <n> <m>', got {header!r}")
    try:
        counts = [int(x) for x in fields[1:]]
    except ValueError:
        raise MissingHeaderError(
            f"line {lineno}: header counts must be integers, got {header!r}"
        ) from None
    if any(x < 0 for x in counts):
        raise MissingHeaderError(f"line {lineno}: negative count in header {header!r}")
    n = counts[0]

    edge_lines = lines[1:]
    # An edge count in the header is a promise; 'p <n>' alone infers it.
    if len(counts) == 2 and len(edge_lines) != counts[1]:
        raise MalformedLineError(
            f"header promised {counts[1]} edge lines, found {len(edge_lines)}"
        )
    edges = set()
    for lineno, line in edge_lines:
        fields = line.split()
        if len(fields) != 3 or fields[0] != "e":
            raise MalformedLineError(
                f"line {lineno}: expected 'e <u> <v>', got {line!r}"
            )
        try:
            u, v = int(fields[1]), int(fields[2])
        except ValueError:
            raise MalformedLineError(
                f"line {lineno}: endpoints must be integers, got {line!r}"
            ) from None
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop at vertex {u}")
        if u > v:
            raise MalformedLineError(
                f"line {lineno}: endpoints must satisfy u < v, got {line!r}"
            )
        if not (0 <= u and v < n):
            raise EndpointRangeError(
                f"line {lineno}: vertex out of range 0..{n - 1} in {line!r}"
            )
        if (u, v) in edges:
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge {u} {v}")
        edges.add((u, v))
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    """Inverse of :func:`parse_graph`; edges sorted, newline terminated."""
    out = [f"p {g.n} {g.m}"]
    for u, v in g.sorted_edges():
        out.append(f"e {u} {v}")
    return "\n".join(out) + "\n"
