"""Exact minimum spans for distance-two colourings.

A *colouring* here is a total map ``c`` from vertices to non-negative integer
labels such that ``|c(u) - c(v)| + d(u, v) >= 3`` for every pair of distinct
vertices: adjacent vertices need labels at least 2 apart, vertices at distance
two need distinct labels, and pairs further apart (or disconnected) are
unconstrained.  The *span* of the graph is the least achievable maximum label
(minimum label normalised to 0), written ``lambda_number`` below.

The solver iterates candidate spans upward from a lower bound and decides
feasibility of each span by depth-first search over vertices in descending
degree order with forward checking on label domains (stored as bitmasks: a
chosen label ``x`` removes ``{x-1, x, x+1}`` from unassigned neighbours and
``{x}`` from unassigned vertices at distance two).  Once the span is known, a
second search in vertex-id order with ascending label choice produces the
lexicographically smallest optimal witness.

Three elementary lower bounds seed the iteration, each immediate from the
definition: ``max_degree + 1`` (a vertex and its neighbours need pairwise
distinct labels and the centre needs gap 2 to each), ``2*(omega - 1)`` for a
clique of size omega (pairwise gaps of 2), and ``n - 1`` when the graph has
diameter at most two (all labels distinct).
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    CapExceededError,
    DEFAULT_PATH_COVER_CAP,
    Graph,
    GraphParseError,
    MalformedLineError,
    path_cover_number,
)

#: Hard ceiling for the exact solver; configurable per call.
DEFAULT_SOLVER_CAP = 24


# ---------------------------------------------------------------------------
# colourings
# ---------------------------------------------------------------------------

class DuplicateVertexError(GraphParseError):
    """A colouring file labelled the same vertex twice."""


class MissingVertexError(GraphParseError):
    """A colouring file left some vertex unlabelled."""


class VertexRangeError(GraphParseError):
    """A colouring file mentioned a vertex outside ``0..n-1``."""


class NotNormalisedError(GraphParseError):
    """A colouring file's minimum label was not 0."""


@dataclass(frozen=True)
class Colouring:
    """A normalised total labelling: ``labels[v]`` is the label of vertex v.

    Labels are non-negative integers and the minimum over a non-empty graph
    is 0 (colourings are always presented shifted down to zero).
    """

    labels: tuple

    def __post_init__(self):
        for x in self.labels:
            if not isinstance(x, int) or x < 0:
                raise ValueError(f"labels must be non-negative integers, got {x!r}")
        if self.labels and min(self.labels) != 0:
            raise ValueError("colouring must be normalised: minimum label 0")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def span(self) -> int:
        """Largest label used (0 for the empty labelling)."""
        return max(self.labels) if self.labels else 0

    def __getitem__(self, v) -> int:
        return self.labels[v]


def find_violation(g: Graph, c: Colouring):
    """First pair breaking the distance-two condition, or ``None``.

    Returns ``(u, v, distance)`` with ``u < v`` for the lexicographically
    first offending pair: an edge whose labels differ by less than 2, or a
    distance-two pair with equal labels.
    """
    if len(c.labels) != g.n:
        raise ValueError(f"colouring covers {len(c.labels)} vertices, graph has {g.n}")
    lab = c.labels
    d1 = g.adj_masks
    for u in range(g.n):
        # second neighbourhood of u
        reach = 0
        m = d1[u]
        while m:
            b = m & -m
            m ^= b
            reach |= d1[b.bit_length() - 1]
        reach &= ~d1[u] & ~(1 << u)
        for v in range(u + 1, g.n):
            if d1[u] >> v & 1:
                if abs(lab[u] - lab[v]) < 2:
                    return (u, v, 1)
            elif reach >> v & 1:
                if lab[u] == lab[v]:
                    return (u, v, 2)
    return None


def is_lambda_colouring(g: Graph, c: Colouring) -> bool:
    """Return ``True`` when ``c`` satisfies the distance-two condition on ``g``.

    Gap >= 2 across every edge, distinct labels across every pair at distance
    exactly two; pairs at distance three or more (or disconnected) are free.
    """
    return find_violation(g, c) is None


def holes_of(c: Colouring) -> tuple:
    """Unused labels strictly between 0 and the largest used label."""
    used = set(c.labels)
    if not used:
        return ()
    top = max(used)
    return tuple(h for h in range(1, top) if h not in used)


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SolveReport:
    """Result of an exact solve: the span, one optimal witness, its holes."""

    lambda_value: int
    witness: Colouring
    holes: tuple


@dataclass(frozen=True)
class PathCoverBound:
    """What the path-cover number of the complement says about the span.

    ``path_cover`` is the cover number of the complement graph.  When it is at
    least 2 the span is determined exactly (``exact`` is ``True`` and ``value``
    is the span); when the complement has a Hamilton path the theorem only
    bounds the span by ``n - 1`` (``exact`` is ``False``, ``value`` is that
    bound).
    """

    path_cover: int
    exact: bool
    value: int


# ---------------------------------------------------------------------------
# bounds
# ---------------------------------------------------------------------------

def delta_lower_bound(g: Graph) -> int:
    """The bound span >= max_degree + 1; meaningless (error) without edges."""
    if not g.edges:
        raise ValueError("degree lower bound requires at least one edge")
    return g.max_degree() + 1


def _clique_number(adj) -> int:
    """Exact clique number from bitmask adjacency (branch and bound)."""
    n = len(adj)
    best = 0

    def expand(size, cand):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            b = cand & -cand
            v = b.bit_length() - 1
            expand(size + 1, cand & adj[v])
            cand ^= b

    expand(0, (1 << n) - 1)
    return best


def _second_neighbourhoods(adj):
    """Distance-two masks derived from distance-one masks."""
    n = len(adj)
    d2 = []
    for v in range(n):
        reach = 0
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            reach |= adj[b.bit_length() - 1]
        d2.append(reach & ~adj[v] & ~(1 << v))
    return tuple(d2)


def _lower_bound(n, d1, d2):
    """Best of the three elementary bounds for a graph with >= 1 edge."""
    lb = max(m.bit_count() for m in d1) + 1
    lb = max(lb, 2 * (_clique_number(d1) - 1))
    full = (1 << n) - 1
    if all((1 << v) | d1[v] | d2[v] == full for v in range(n)):
        lb = max(lb, n - 1)
    return lb


# ---------------------------------------------------------------------------
# search core (shared with the census)
# ---------------------------------------------------------------------------

def _search_masks(n, d1, d2, k, order, collect):
    """DFS with forward checking; returns a label list or None.

    ``collect`` False: pure feasibility (returns [] on success).  ``collect``
    True: returns the first (lexicographically smallest along ``order``)
    assignment found.
    """
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    later1 = [[u for u in _bits(d1[v]) if pos[u] > pos[v]] for v in range(n)]
    later2 = [[u for u in _bits(d2[v]) if pos[u] > pos[v]] for v in range(n)]
    full = (1 << (k + 1)) - 1
    dom = [full] * n
    labels = [0] * n

    def rec(i):
        if i == n:
            return True
        v = order[i]
        avail = dom[v]
        while avail:
            b = avail & -avail
            avail ^= b
            x = b.bit_length() - 1
            m3 = (7 << x) >> 1
            changed = []
            dead = False
            for u in later1[v]:
                old = dom[u]
                nd = old & ~m3
                if nd != old:
                    dom[u] = nd
                    changed.append((u, old))
                    if not nd:
                        dead = True
                        break
            if not dead:
                for u in later2[v]:
                    old = dom[u]
                    nd = old & ~b
                    if nd != old:
                        dom[u] = nd
                        changed.append((u, old))
                        if not nd:
                            dead = True
                            break
            if not dead:
                labels[v] = x
                if rec(i + 1):
                    return True
            for u, old in changed:
                dom[u] = old
        return False

    if rec(0):
        return labels if collect else []
    return None


def _bits(mask):
    while mask:
        b = mask & -mask
        mask ^= b
        yield b.bit_length() - 1


def _min_span_masks(n, d1, d2):
    """Smallest feasible span for bitmask adjacency with >= 1 edge."""
    order = sorted(range(n), key=lambda v: (-d1[v].bit_count(), v))
    k = _lower_bound(n, d1, d2)
    while True:
        if _search_masks(n, d1, d2, k, order, collect=False) is not None:
            return k
        k += 1
        if k > 2 * (n - 1):  # greedy labelling 0,2,4,... always works
            raise AssertionError("span search exceeded the trivial upper bound")


# ---------------------------------------------------------------------------
# the solver proper
# ---------------------------------------------------------------------------

def lambda_number(g: Graph, cap: int = DEFAULT_SOLVER_CAP) -> SolveReport:
    """Exact span of ``g`` with the lexicographically least optimal witness.

    Raises :class:`CapExceededError` when ``g.n`` exceeds ``cap`` and
    ``ValueError`` on the empty graph.
    """
    if g.n == 0:
        raise ValueError("span of the empty graph is undefined")
    if g.n > cap:
        raise CapExceededError(f"exact solver limited to n <= {cap}, got {g.n}")
    if not g.edges:
        c = Colouring((0,) * g.n)
        return SolveReport(0, c, ())
    d1 = g.adj_masks
    d2 = _second_neighbourhoods(d1)
    k = _min_span_masks(g.n, d1, d2)
    labels = _search_masks(g.n, d1, d2, k, list(range(g.n)), collect=True)
    assert labels is not None, "witness search must succeed at the optimal span"
    labels = _shift_consecutive_holes(g, labels)
    c = Colouring(tuple(labels))
    return SolveReport(k, c, holes_of(c))


def _shift_consecutive_holes(g, labels):
    """Collapse pairs of adjacent unused labels when revalidation allows.

    If labels ``h`` and ``h+1`` are both holes, every label above ``h+1`` is
    shifted down by one (pairs straddling the double gap had difference at
    least 3, so all separations survive), and validity is rechecked before
    accepting.  An optimal witness can never have consecutive holes (the shift
    would lower its span), so in practice this is a no-op kept as a guard.
    """
    labels = list(labels)
    while True:
        c = Colouring(tuple(labels))
        hs = holes_of(c)
        pair = next((h for h in hs if h + 1 in hs), None)
        if pair is None:
            return labels
        shifted = [x - 1 if x > pair + 1 else x for x in labels]
        if is_lambda_colouring(g, Colouring(tuple(shifted))):
            labels = shifted
        else:
            return labels


def iter_optimal_colourings(g: Graph, span: int):
    """Yield every valid colouring of ``g`` with labels in ``0..span``.

    Lexicographic order by label vector.  Includes colourings whose maximum is
    below ``span`` or minimum above 0; callers filter.  Intended for small
    graphs (exhaustive).
    """
    d1 = g.adj_masks
    d2 = _second_neighbourhoods(d1)
    n = g.n
    full = (1 << (span + 1)) - 1
    dom = [full] * n
    labels = [0] * n
    later1 = [[u for u in _bits(d1[v]) if u > v] for v in range(n)]
    later2 = [[u for u in _bits(d2[v]) if u > v] for v in range(n)]

    def rec(v):
        if v == n:
            yield tuple(labels)
            return
        avail = dom[v]
        while avail:
            b = avail & -avail
            avail ^= b
            x = b.bit_length() - 1
            m3 = (7 << x) >> 1
            changed = []
            dead = False
            for u in later1[v]:
                old = dom[u]
                nd = old & ~m3
                if nd != old:
                    dom[u] = nd
                    changed.append((u, old))
                    if not nd:
                        dead = True
                        break
            if not dead:
                for u in later2[v]:
                    old = dom[u]
                    nd = old & ~b
                    if nd != old:
                        dom[u] = nd
                        changed.append((u, old))
                        if not nd:
                            dead = True
                            break
            if not dead:
                labels[v] = x
                yield from rec(v + 1)
            for u, old in changed:
                dom[u] = old

    yield from rec(0)


def lambda_via_path_cover(
    g: Graph, cap: int = DEFAULT_PATH_COVER_CAP
) -> PathCoverBound:
    """Span via the path-cover number of the complement.

    The complement decomposes into ``t`` vertex-disjoint paths but not fewer
    exactly when the span is ``n + t - 2``, provided ``t >= 2``; when the
    complement has a Hamilton path (``t = 1``) the span is only bounded above
    by ``n - 1``.
    """
    if g.n == 0:
        raise ValueError("span of the empty graph is undefined")
    t = path_cover_number(g.complement(), cap=cap)
    if t >= 2:
        return PathCoverBound(t, True, g.n + t - 2)
    return PathCoverBound(t, False, g.n - 1)


# ---------------------------------------------------------------------------
# colouring files
# ---------------------------------------------------------------------------

def parse_colouring(text: str, n: int) -> Colouring:
    """Parse ``c <vertex> <label>`` lines into a total colouring of ``n``.

    Every vertex must appear exactly once; labels are non-negative integers
    with minimum 0.  Blank lines and ``#`` comments are ignored.
    """
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3 or fields[0] != "c":
            raise MalformedLineError(
                f"line {lineno}: expected 'c <vertex> <label>', got {line!r}"
            )
        try:
            v, x = int(fields[1]), int(fields[2])
        except ValueError:
            raise MalformedLineError(
                f"line {lineno}: fields must be integers, got {line!r}"
            ) from None
        if not 0 <= v < n:
            raise VertexRangeError(
                f"line {lineno}: vertex {v} out of range 0..{n - 1}"
            )
        if x < 0:
            raise MalformedLineError(f"line {lineno}: negative label {x}")
        if v in seen:
            raise DuplicateVertexError(f"line {lineno}: vertex {v} labelled twice")
        seen[v] = x
    missing = [v for v in range(n) if v not in seen]
    if missing:
        raise MissingVertexError(f"vertices {missing} not labelled")
    if n and min(seen.values()) != 0:
        raise NotNormalisedError(
            f"minimum label is {min(seen.values())}, colourings must start at 0"
        )
    return Colouring(tuple(seen[v] for v in range(n)))


def format_colouring(c: Colouring) -> str:
    """Inverse of :func:`parse_colouring`; one line per vertex, in order."""
    return "".join(f"c {v} {x}\n" for v, x in enumerate(c.labels))
