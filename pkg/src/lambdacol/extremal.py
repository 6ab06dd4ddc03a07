"""Maximum edge counts for a given order and span, and the classification.

Fix ``n`` and a target span ``t`` with ``n >= t + 1 >= 4``.  Standardisation
reduces "how many edges can an n-vertex graph of span t have" to integer
arithmetic: the answer is the maximum of the shape edge bound over all valid
shapes (standardised graphs on valid shapes do achieve span exactly ``t``).
:func:`max_edges` performs that maximisation — vectorised, since the shape
space at ``(n, t) = (30, 7)`` has several million points — and returns the
full attaining set.

The attaining shapes are completely classified:

* ``(t+1) | n``: only the all-equal shape survives;

* otherwise the near-equal (equitable) shapes whose large classes are spread
  out as much as possible (minimum count of adjacent large pairs) always
  attain the maximum;

* for spans 3 and 4 only, a handful of *sporadic* patterns with spread >= 2
  tie them — four one-parameter families at span 3, two at span 4, each
  closed under index reversal.  One further candidate pattern (tag ``h``)
  satisfies every necessary condition yet always falls short by exactly one
  edge; it is excluded.

A graph realising an attaining shape in the canonical way is *stationary*:
no edges inside a class or between adjacent classes, and every noncontiguous
class pair joined by a matching saturating the smaller class, with the shape
(or its reversal) equitable or one of the sporadic patterns.
:func:`verify_classification` checks the whole story per ``(n, t)`` against
the shape oracle, and — for tiny ``n`` — against a second, fully independent
oracle that enumerates every labelled graph and solves each one exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from .graphs import CapExceededError, Graph
from .solver import (
    Colouring,
    DEFAULT_SOLVER_CAP,
    _min_span_masks,
    _second_neighbourhoods,
    is_lambda_colouring,
    iter_optimal_colourings,
    lambda_number,
)
from .shapes import (
    PartitionShape,
    adjacent_max_pairs,
    dual_shape,
    edge_bound,
    is_valid_shape,
    spread,
)
from .standardise import (
    ColouredPartition,
    StandardisedGraph,
    partition_of,
    shape_of,
)

#: Refuse shape searches whose raw composition count exceeds this.
DEFAULT_MAX_SHAPES = 20_000_000

#: Largest n for the labelled-graph census (2^C(n,2) graphs).
CENSUS_CAP = 7


def _check_range(n, t):
    if t < 3:
        raise ValueError(f"need span t >= 3, got {t}")
    if n < t + 1:
        raise ValueError(f"need n >= t + 1 = {t + 1}, got {n}")


# ---------------------------------------------------------------------------
# shape enumeration
# ---------------------------------------------------------------------------

def valid_shapes(n, t):
    """Yield every valid shape for ``(n, t)`` once, lexicographically.

    Valid: length ``t + 1``, entries >= 0 summing to ``n``, both ends >= 1,
    no two consecutive zeros.
    """
    _check_range(n, t)

    def rec(prefix, remaining, idx):
        if idx == t:
            if remaining >= 1:
                yield prefix + (remaining,)
            return
        lo = 1 if idx == 0 else 0
        for v in range(lo, remaining + 1):
            if v == 0 and idx > 0 and prefix[-1] == 0:
                continue
            yield from rec(prefix + (v,), remaining - v, idx + 1)

    for sizes in rec((), n, 0):
        yield PartitionShape(sizes)


_COMP_CACHE = {}


def _compositions(total, length):
    """All non-negative int vectors of ``length`` summing to ``total`` (int8)."""
    key = (total, length)
    cached = _COMP_CACHE.get(key)
    if cached is not None:
        return cached
    if length == 1:
        arr = np.array([[total]], dtype=np.int8)
    else:
        blocks = []
        for v in range(total + 1):
            rest = _compositions(total - v, length - 1)
            block = np.empty((rest.shape[0], length), dtype=np.int8)
            block[:, 0] = v
            block[:, 1:] = rest
            blocks.append(block)
        arr = np.vstack(blocks)
    _COMP_CACHE[key] = arr
    return arr


def _valid_shape_rows(n, t):
    """The valid shapes for ``(n, t)`` as one int8 matrix (row per shape)."""
    assert n < 128, "int8 shape search assumes n < 128"
    blocks = []
    for c0 in range(1, n):
        for ct in range(1, n - c0 + 1):
            inner = _compositions(n - c0 - ct, t - 1)
            block = np.empty((inner.shape[0], t + 1), dtype=np.int8)
            block[:, 0] = c0
            block[:, 1:t] = inner
            block[:, t] = ct
            blocks.append(block)
    arr = np.vstack(blocks)
    keep = np.ones(len(arr), dtype=bool)
    for i in range(t):
        keep &= ~((arr[:, i] == 0) & (arr[:, i + 1] == 0))
    return arr[keep]


def _edge_bound_per_row(arr):
    cols = arr.shape[1]
    acc = np.zeros(len(arr), dtype=np.int32)
    for i in range(cols - 2):
        for j in range(i + 2, cols):
            acc += np.minimum(arr[:, i], arr[:, j])
    return acc


def _equitable_closed_form(shape):
    """Edge bound of a near-equal shape without the pair sum.

    With ``b = floor(n / (t+1))`` and ``r = n - (t+1) b`` large classes, the
    standardised graph is ``b`` stacked copies of the span-``t`` complete
    standardised layer plus an almost-complete graph on the ``r`` overflow
    vertices, missing one edge per adjacent large pair.
    """
    t, n = shape.t, shape.n
    b, r = divmod(n, t + 1)
    assert min(shape.sizes) == b and max(shape.sizes) == b + (1 if r else 0)
    large = frozenset(i for i, s in enumerate(shape.sizes) if s == b + 1)
    k = sum(1 for i in range(t) if i in large and i + 1 in large)
    return b * comb(t, 2) + comb(r, 2) - k


def max_edges(n, t, max_shapes=DEFAULT_MAX_SHAPES):
    """Largest edge count among valid shapes for ``(n, t)``, with the argmax.

    Returns ``(value, frozenset of attaining shapes)``.  Raises
    :class:`CapExceededError` when the search space (compositions of ``n - 2``
    into ``t + 1`` parts) exceeds ``max_shapes``.
    """
    _check_range(n, t)
    space = comb(n - 2 + t, t)
    if space > max_shapes:
        raise CapExceededError(
            f"shape space for (n={n}, t={t}) has {space} points, cap {max_shapes}"
        )
    return _max_edges_cached(n, t)


@lru_cache(maxsize=None)
def _max_edges_cached(n, t):
    arr = _valid_shape_rows(n, t)
    bounds = _edge_bound_per_row(arr)
    mx = int(bounds.max())
    rows = arr[bounds == mx]
    shapes = frozenset(
        PartitionShape(tuple(int(x) for x in row)) for row in rows
    )
    # Internal cross-check: every near-equal attaining shape must agree with
    # the closed-form count (the b-copies-plus-overflow decomposition).
    for s in shapes:
        if spread(s) <= 1:
            assert edge_bound(s) == _equitable_closed_form(s)
    return mx, shapes


def _clear_caches():
    """Reset memoised search state (the shape-row cache can hold ~100 MB)."""
    _COMP_CACHE.clear()
    _max_edges_cached.cache_clear()
    _CENSUS_CACHE.clear()


# ---------------------------------------------------------------------------
# predicted attaining shapes
# ---------------------------------------------------------------------------

def _equitable_min_k_shapes(n, t):
    """Near-equal shapes whose adjacent large pairs are fewest possible."""
    b, r = divmod(n, t + 1)
    assert r >= 1
    best_k = None
    best = []
    for pos in combinations(range(t + 1), r):
        k = sum(1 for a, c in zip(pos, pos[1:]) if c == a + 1)
        if best_k is None or k < best_k:
            best_k, best = k, [pos]
        elif k == best_k:
            best.append(pos)
    out = []
    for pos in best:
        chosen = set(pos)
        out.append(PartitionShape(
            tuple(b + 1 if i in chosen else b for i in range(t + 1))
        ))
    return out


#: Sporadic families (span, tag) -> size pattern in a parameter k, as offsets.
#: Pattern value at index i is k + offset.  Only spans 3 and 4 have any.
_SPORADIC_PATTERNS = {
    3: {
        "a": (0, -1, -2, 0),
        "b": (-1, 0, -2, 0),
        "c": (0, -2, 0, 0),
        "d": (0, -3, 0, 0),
    },
    4: {
        "f": (0, -2, 0, -1, 0),
        "g": (0, -2, 0, -2, 0),
        "h": (0, 0, -2, 0, 0),  # never maximal; kept for tag matching only
    },
}


def _sporadic_shape(t, tag, n):
    """The tag's shape for ``(n, t)`` if the parameter works out, else None."""
    offsets = _SPORADIC_PATTERNS.get(t, {}).get(tag)
    if offsets is None:
        return None
    base = sum(offsets)
    if (n - base) % (t + 1):
        return None
    k = (n - base) // (t + 1)
    sizes = tuple(k + o for o in offsets)
    if any(s < 0 for s in sizes):
        return None
    shape = PartitionShape(sizes)
    return shape if is_valid_shape(shape) else None


def predicted_shapes(n, t):
    """The attaining-shape set the classification predicts for ``(n, t)``.

    Divisible ``n``: the single all-equal shape.  Otherwise: all minimum-K
    near-equal shapes, plus (for spans 3 and 4) the sporadic patterns that
    exist at this ``n`` and their reversals — excluding tag ``h``, which is
    stationary but always one edge short of the maximum.
    """
    _check_range(n, t)
    b, r = divmod(n, t + 1)
    if r == 0:
        return frozenset({PartitionShape((b,) * (t + 1))})
    out = set(_equitable_min_k_shapes(n, t))
    for tag in _SPORADIC_PATTERNS.get(t, {}):
        if tag == "h":
            continue
        s = _sporadic_shape(t, tag, n)
        if s is not None:
            out.add(s)
            out.add(dual_shape(s))
    return frozenset(out)


# ---------------------------------------------------------------------------
# stationary graphs
# ---------------------------------------------------------------------------

class Case(Enum):
    """Which branch of the classification a maximal graph falls under."""

    DIVISIBLE = "DIVISIBLE"
    EQUITABLE_MIN_K = "EQUITABLE_MIN_K"
    SPORADIC = "SPORADIC"
    NOT_MAXIMAL = "NOT_MAXIMAL"


@dataclass(frozen=True)
class StationaryType:
    """Which shape condition a stationary partition matches.

    ``tag`` is ``"EQUITABLE"`` (sizes pairwise within 1) or a sporadic letter
    (``a``–``d`` at span 3, ``f``–``h`` at span 4); ``dual_flag`` records that
    the match was against the reversed shape.
    """

    tag: str
    dual_flag: bool


@dataclass(frozen=True)
class ClassificationReport:
    case: Case
    witness_shape: PartitionShape
    max_edges: int
    stationary: object  # StationaryType | None


def _sporadic_tag_of(shape):
    """Sporadic letter matching this exact orientation, or None."""
    patterns = _SPORADIC_PATTERNS.get(shape.t)
    if not patterns:
        return None
    for tag, offsets in patterns.items():
        diffs = {s - o for s, o in zip(shape.sizes, offsets)}
        if len(diffs) == 1:
            return tag
    return None


def _stationary_type_of(shape):
    """Tag + orientation for a shape, or None when nothing matches."""
    if spread(shape) <= 1:
        return StationaryType("EQUITABLE", False)
    tag = _sporadic_tag_of(shape)
    if tag is not None:
        return StationaryType(tag, False)
    tag = _sporadic_tag_of(dual_shape(shape))
    if tag is not None:
        return StationaryType(tag, True)
    return None


def build_stationary(shape: PartitionShape, matchings="canonical"):
    """Materialise a graph realising ``shape`` with the stationary edge rules.

    Every noncontiguous class pair gets a matching saturating its smaller
    class; nothing else.  ``matchings`` maps a pair ``(m, p)`` (``p >= m+2``,
    both classes non-empty) to an injection: a tuple of distinct larger-class
    ranks, one per smaller-class rank (ties broken toward ``m`` as "smaller").
    ``"canonical"`` aligns equal ranks, reproducing the standardised graph.
    Returns ``(graph, partition)``; the class map is a valid colouring of
    span exactly the shape's top index.
    """
    if not is_valid_shape(shape):
        raise ValueError(f"not a valid shape: {shape.sizes}")
    sg = StandardisedGraph(shape)
    if matchings == "canonical" or matchings is None:
        g = sg.graph()
    else:
        s = shape.sizes
        edges = set()
        for m in range(len(s) - 2):
            for p in range(m + 2, len(s)):
                lo = min(s[m], s[p])
                if lo == 0:
                    continue
                small, big = (m, p) if s[m] <= s[p] else (p, m)
                inj = matchings.get((m, p))
                if inj is None:
                    inj = tuple(range(lo))
                inj = tuple(inj)
                if len(inj) != lo or len(set(inj)) != lo or \
                        any(not 0 <= x < s[big] for x in inj):
                    raise ValueError(
                        f"matching for pair {(m, p)} is not an injection of "
                        f"0..{lo - 1} into 0..{s[big] - 1}: {inj}"
                    )
                for i in range(lo):
                    u = sg.vertex(small, i)
                    v = sg.vertex(big, inj[i])
                    edges.add((min(u, v), max(u, v)))
        g = Graph(shape.n, frozenset(edges))
    assert g.m == edge_bound(shape)
    part = sg.partition()
    labels = Colouring(sg.class_labels)
    assert is_lambda_colouring(g, labels) and labels.span == shape.t
    return g, part


def is_stationary(g: Graph, partition: ColouredPartition):
    """Decide the stationary property for ``g`` under ``partition``.

    Returns ``(False, None)`` or ``(True, StationaryType)``.  The partition
    must cover exactly ``g``'s vertices (error otherwise).  Checks, in order:
    the shape discipline (non-empty ends, no adjacent empty classes), the
    edge distribution (no intra-class or adjacent-class edges; noncontiguous
    pairs matched, saturating the smaller class), then the shape condition
    (near-equal, or a sporadic letter on the shape or its reversal).
    """
    covered = set()
    for cl in partition.classes:
        covered |= set(cl)
    if covered != set(range(g.n)):
        raise ValueError("partition does not cover exactly the graph's vertices")
    shape = shape_of(partition)
    if not is_valid_shape(shape):
        return False, None
    t = partition.t
    class_of = {}
    for m, cl in enumerate(partition.classes):
        for v in cl:
            class_of[v] = m
    partner = {}
    for u, v in g.edges:
        cu, cv = class_of[u], class_of[v]
        if abs(cu - cv) < 2:
            return False, None
        partner[u, cv] = partner.get((u, cv), 0) + 1
        partner[v, cu] = partner.get((v, cu), 0) + 1
    if any(k > 1 for k in partner.values()):
        return False, None
    s = shape.sizes
    for m in range(t - 1):
        for p in range(m + 2, t + 1):
            if min(s[m], s[p]) == 0:
                continue
            small = m if s[m] <= s[p] else p
            other = p if small == m else m
            if any(partner.get((v, other), 0) != 1
                   for v in partition.classes[small]):
                return False, None
    st = _stationary_type_of(shape)
    if st is None:
        return False, None
    return True, st


# ---------------------------------------------------------------------------
# classification of a concrete graph
# ---------------------------------------------------------------------------

def classify(g: Graph, cap=DEFAULT_SOLVER_CAP,
             max_shapes=DEFAULT_MAX_SHAPES) -> ClassificationReport:
    """Where ``g`` stands among graphs of its order and span.

    Solves the span exactly (so ``g.n`` must be within the solver cap),
    requires span >= 3 and ``n >= span + 1``, and reports either
    ``NOT_MAXIMAL`` or the classification case: ``DIVISIBLE`` when
    ``(span+1) | n``, else ``EQUITABLE_MIN_K`` or ``SPORADIC`` according to
    the witness shape.  For maximal graphs the optimal witness partition is
    checked to be stationary; the case tag is derived from the solver's
    deterministic lexicographic witness, with a bounded re-search over
    optimal colourings as a fallback if that witness's shape were somehow
    not attaining (unreachable in theory, guarded in code).
    """
    report = lambda_number(g, cap=cap)
    t = report.lambda_value
    if t < 3:
        raise ValueError(f"classification needs span >= 3, got {t}")
    _check_range(g.n, t)
    mx, argmax = max_edges(g.n, t, max_shapes=max_shapes)
    assert g.m <= mx, "edge bound violated — solver or shape oracle broken"
    witness = report.witness
    part = partition_of(g, witness)
    shape = shape_of(part)
    if g.m < mx:
        return ClassificationReport(Case.NOT_MAXIMAL, shape, mx, None)
    ok, st = is_stationary(g, part)
    if not ok or shape not in argmax:
        witness, part, shape, st = _research_witness(g, t, argmax)
    if g.n % (t + 1) == 0:
        case = Case.DIVISIBLE
    elif spread(shape) <= 1:
        case = Case.EQUITABLE_MIN_K
    else:
        case = Case.SPORADIC
    return ClassificationReport(case, shape, mx, st)


def _research_witness(g, t, argmax):
    """Fallback scan over optimal colourings for a stationary witness.

    Maximal graphs always yield a stationary partition from *any* optimal
    colouring (equality in the edge bound forces the matchings), so this
    only runs if that argument is somehow violated; it raises if the scan
    comes up empty rather than misreport.
    """
    for labels in iter_optimal_colourings(g, t):
        if max(labels) != t or min(labels) != 0:
            continue
        c = Colouring(labels)
        part = partition_of(g, c)
        shape = shape_of(part)
        if shape not in argmax:
            continue
        ok, st = is_stationary(g, part)
        if ok:
            return c, part, shape, st
    raise RuntimeError(
        "maximal graph admits no stationary optimal partition — "
        "this contradicts the classification and indicates a bug"
    )


# ---------------------------------------------------------------------------
# independent oracle: full labelled-graph census
# ---------------------------------------------------------------------------

_CENSUS_CACHE = {}


def brute_force_graph_census(n, cap=CENSUS_CAP):
    """Exact span of every labelled graph on ``n`` vertices, summarised.

    Returns {span: max edge count over graphs attaining that span}.  The
    enumeration is over all ``2^C(n,2)`` labelled graphs, so ``n`` is capped
    (7 means ~2M exact solves — minutes).  Results are memoised per process.
    """
    if n > cap:
        raise CapExceededError(f"census limited to n <= {cap}, got {n}")
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    if n in _CENSUS_CACHE:
        return dict(_CENSUS_CACHE[n])
    pairs = list(combinations(range(n), 2))
    best = {}
    for mask in range(1 << len(pairs)):
        d1 = [0] * n
        m = mask
        while m:
            b = m & -m
            m ^= b
            u, v = pairs[b.bit_length() - 1]
            d1[u] |= 1 << v
            d1[v] |= 1 << u
        edges = mask.bit_count()
        if edges == 0:
            lam = 0
        else:
            lam = _min_span_masks(n, tuple(d1), _second_neighbourhoods(d1))
        if best.get(lam, -1) < edges:
            best[lam] = edges
    _CENSUS_CACHE[n] = best
    return dict(best)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    """Everything checked for one ``(n, t)`` point.

    ``passed`` covers the classification claims: attaining shapes equal the
    predicted set, near-equal-only for spans >= 5, census agreement when the
    second oracle ran.  The window fields report the approximation corollary
    separately — ``inner_ok`` (every non-empty class size at least
    ``floor(n/(t+1))``) fails for sporadic shapes (first at ``n=9, t=3``),
    and keeping it out of ``passed`` keeps the two stories distinguishable.
    """

    n: int
    t: int
    max_edges: int
    attaining: int
    argmax_equals_predicted: bool
    equitable_only_ok: object  # bool | None (spans < 5)
    census_ok: object  # bool | None (not run)
    inner_ok: bool
    outer_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.argmax_equals_predicted
            and self.equitable_only_ok in (None, True)
            and self.census_ok in (None, True)
        )

    def line(self) -> str:
        def word(x):
            return "skip" if x is None else ("PASS" if x else "FAIL")

        return (
            f"n={self.n} t={self.t} {'PASS' if self.passed else 'FAIL'} "
            f"max={self.max_edges} attaining={self.attaining} "
            f"census={word(self.census_ok)} "
            f"inner={word(self.inner_ok)} outer={word(self.outer_ok)}"
        )


def verify_classification(n, t, census_limit=6,
                          max_shapes=DEFAULT_MAX_SHAPES) -> VerificationReport:
    """Check the classification story at one ``(n, t)`` point.

    Compares the shape oracle's attaining set with :func:`predicted_shapes`;
    for spans >= 5 additionally checks all attaining shapes are near-equal;
    for ``n <= census_limit`` cross-checks the maximum against the
    labelled-graph census; and evaluates the approximation window (all
    non-empty class sizes within ``[floor(n/(t+1)), floor(n/(t+1)) + 3]``),
    reported separately from ``passed``.
    """
    mx, argmax = max_edges(n, t, max_shapes=max_shapes)
    predicted = predicted_shapes(n, t)
    eq_ok = None
    if t >= 5:
        eq_ok = all(spread(s) <= 1 for s in argmax)
    census_ok = None
    if n <= min(census_limit, CENSUS_CAP):
        census_ok = brute_force_graph_census(n).get(t) == mx
    b = n // (t + 1)
    inner_ok = all(
        min(sz for sz in s.sizes if sz) >= b for s in argmax
    )
    outer_ok = all(max(s.sizes) <= b + 3 for s in argmax)
    return VerificationReport(
        n=n,
        t=t,
        max_edges=mx,
        attaining=len(argmax),
        argmax_equals_predicted=(argmax == predicted),
        equitable_only_ok=eq_ok,
        census_ok=census_ok,
        inner_ok=inner_ok,
        outer_ok=outer_ok,
    )
