"""Universal graphs for a given span: layered members and the embedding.

Two constructions anchor everything here.

The first, :func:`path_complement`, builds for each ``n >= 3`` a graph on
``n + 1`` vertices with ``C(n, 2)`` edges and span exactly ``n``: start from
the 4-vertex base with edges 02, 03, 13 and, for each new vertex ``k``, join
it to all of ``0..k-2`` (everything except its predecessor).  The result is
the complement of the path ``0-1-...-n``, and labelling vertex ``i`` with
``i`` is an optimal colouring without holes.

The second is the *layer family*: fix a span ``t >= 3`` and width ``l >= 1``,
take ``t + 1`` disjoint classes of ``l`` vertices, and join two classes by a
perfect matching exactly when their indices differ by at least 2 (consecutive
classes and class interiors stay edgeless).  Every choice of matchings gives a
graph on ``(t+1)*l`` vertices with ``C(t, 2)*l`` edges and span exactly ``t``;
the class map itself is a valid colouring.  Width-1 members are exactly the
:func:`path_complement` graphs.

The family is universal: any graph with a valid colouring of span ``t`` sits
inside some member with ``l`` equal to its largest colour class.
:func:`embed_universal` performs that construction — pad every class to size
``l`` with fresh vertices, then for each noncontiguous class pair match up
the vertices still missing a neighbour across the pair, in ascending vertex
order.  This works because a valid colouring never gives a vertex two
neighbours in one other class, so the cross-class edges already present form
a partial matching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, is_subgraph
from .solver import Colouring, is_lambda_colouring


class EmbeddingConsistencyError(RuntimeError):
    """An identity the embedding relies on failed at runtime.

    Both checked identities (unmatched sets of a class pair having equal
    sizes; no vertex with two neighbours in one other class) are theorems for
    valid colourings, so this error indicates a bug, not bad input.
    """


@dataclass(frozen=True)
class FamilyAssignment:
    """Partition of ``(t+1)*l`` vertices into classes ``0..t`` of size ``l``.

    ``class_of[v]`` is the class of vertex ``v``.  The constructor enforces
    the size discipline, so instances always describe a legal layer layout;
    whether the *edges* of a graph respect it is :func:`is_family_member`'s
    question.
    """

    t: int
    l: int
    class_of: tuple

    def __post_init__(self):
        if self.t < 3:
            raise ValueError(f"need t >= 3, got {self.t}")
        if self.l < 1:
            raise ValueError(f"need l >= 1, got {self.l}")
        if len(self.class_of) != (self.t + 1) * self.l:
            raise ValueError(
                f"expected {(self.t + 1) * self.l} vertices, got {len(self.class_of)}"
            )
        counts = [0] * (self.t + 1)
        for m in self.class_of:
            if not 0 <= m <= self.t:
                raise ValueError(f"class index {m} out of range 0..{self.t}")
            counts[m] += 1
        if any(k != self.l for k in counts):
            raise ValueError(f"class sizes {counts} are not all {self.l}")

    def members(self, m) -> list:
        """Vertices of class ``m``, ascending."""
        return [v for v, cm in enumerate(self.class_of) if cm == m]


def class_colouring(fa: FamilyAssignment) -> Colouring:
    """The class map read as a labelling (valid on every member graph)."""
    return Colouring(tuple(fa.class_of))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def path_complement(n: int) -> Graph:
    """The recursive ``n + 1``-vertex graph of span ``n`` (``n >= 3``).

    Base: vertices 0..3 with edges 02, 03, 13.  Step: vertex ``k`` joined to
    ``0..k-2``.  Equivalently the complement of the path on ``n + 1``
    vertices, whence the name.
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    edges = {(0, 2), (0, 3), (1, 3)}
    for k in range(4, n + 1):
        for i in range(k - 1):
            edges.add((i, k))
    g = Graph(n + 1, frozenset(edges))
    assert g.m == n * (n - 1) // 2
    return g


def _normalise_matchings(t, l, matchings):
    """Expand a matching spec into a per-pair permutation dict."""
    pairs = [(m, p) for m in range(t + 1) for p in range(m + 2, t + 1)]
    if matchings is None or matchings == "canonical":
        return {pair: tuple(range(l)) for pair in pairs}
    out = {}
    for pair in pairs:
        perm = matchings.get(pair)
        if perm is None:
            out[pair] = tuple(range(l))
            continue
        perm = tuple(perm)
        if sorted(perm) != list(range(l)):
            raise ValueError(
                f"matching for class pair {pair} is not a bijection of 0..{l - 1}: {perm}"
            )
        out[pair] = perm
    extra = set(matchings) - set(pairs)
    if extra:
        raise ValueError(f"matchings given for non-noncontiguous pairs: {sorted(extra)}")
    return out


def family_member(t: int, l: int, matchings="canonical"):
    """Build one member of the width-``l`` layer family for span ``t``.

    Vertices are numbered class-major (``class * l + index``).  ``matchings``
    maps a noncontiguous class pair ``(m, p)`` to a permutation ``sigma`` of
    ``0..l-1``, joining index ``i`` of class ``m`` to index ``sigma[i]`` of
    class ``p``; pairs not mentioned (or the string ``"canonical"``) use the
    identity.  Returns ``(graph, assignment)``.
    """
    if t < 3:
        raise ValueError(f"need t >= 3, got {t}")
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")
    perms = _normalise_matchings(t, l, matchings)
    edges = set()
    for (m, p), perm in perms.items():
        for i in range(l):
            u = m * l + i
            v = p * l + perm[i]
            edges.add((min(u, v), max(u, v)))
    g = Graph((t + 1) * l, frozenset(edges))
    assert g.m == t * (t - 1) // 2 * l
    fa = FamilyAssignment(t, l, tuple(m for m in range(t + 1) for _ in range(l)))
    return g, fa


def is_family_member(g: Graph, fa: FamilyAssignment) -> bool:
    """Return ``True`` when ``g``'s edges realise the layer structure of ``fa``.

    Requires: no edge inside a class or between consecutive classes, and a
    perfect matching between every pair of classes at index distance >= 2.
    Class sizes are rechecked defensively even though the assignment type
    enforces them.
    """
    if len(fa.class_of) != g.n:
        raise ValueError(
            f"assignment covers {len(fa.class_of)} vertices, graph has {g.n}"
        )
    classes = [fa.members(m) for m in range(fa.t + 1)]
    if any(len(cl) != fa.l for cl in classes):
        return False
    # partner count per vertex per noncontiguous class
    partner = {}
    for u, v in g.edges:
        cu, cv = fa.class_of[u], fa.class_of[v]
        if abs(cu - cv) < 2:
            return False
        partner[u, cv] = partner.get((u, cv), 0) + 1
        partner[v, cu] = partner.get((v, cu), 0) + 1
    if any(k > 1 for k in partner.values()):
        return False
    # each vertex must be matched into every noncontiguous class
    for m, cl in enumerate(classes):
        for p in range(fa.t + 1):
            if abs(m - p) < 2:
                continue
            if any(partner.get((v, p), 0) != 1 for v in cl):
                return False
    return True


# ---------------------------------------------------------------------------
# the universality embedding
# ---------------------------------------------------------------------------

def embed_universal(g: Graph, c: Colouring):
    """Embed ``g`` into a layer member via the colouring ``c``.

    ``c`` must be a valid colouring of ``g`` with span ``t >= 3`` (optimality
    is the caller's business — the construction only needs validity).  Returns
    ``(gstar, assignment, injection)`` where ``gstar`` contains ``g`` as a
    labelled subgraph under ``injection`` (the identity: original vertices
    keep their ids, padding takes fresh ids in class order) and passes
    :func:`is_family_member` with width ``l`` = largest colour class of ``c``.
    """
    if not is_lambda_colouring(g, c):
        raise ValueError("colouring is not valid on the graph")
    t = c.span
    if t < 3:
        raise ValueError(f"embedding needs span >= 3, got {t}")
    classes = [[] for _ in range(t + 1)]
    for v, x in enumerate(c.labels):
        classes[x].append(v)
    width = max(len(cl) for cl in classes)

    # A valid colouring never gives a vertex two neighbours in one other
    # class (they would be distance <= 2 apart with equal labels).  The
    # embedding's matchings rely on this, so verify rather than trust.
    for u in range(g.n):
        seen = set()
        for w in g.adjacency[u]:
            p = c.labels[w]
            if p in seen:
                raise EmbeddingConsistencyError(
                    f"vertex {u} has two neighbours labelled {p}"
                )
            seen.add(p)

    next_id = g.n
    padded = []
    for m in range(t + 1):
        members = list(classes[m])
        while len(members) < width:
            members.append(next_id)
            next_id += 1
        padded.append(members)
    total = next_id
    assert total == (t + 1) * width
    class_of = [0] * total
    for m, members in enumerate(padded):
        for v in members:
            class_of[v] = m

    edges = set(g.edges)
    for m in range(t + 1):
        for p in range(m + 2, t + 1):
            z_mp = sorted(
                v for v in padded[m]
                if v >= g.n or all(c.labels[w] != p for w in g.adjacency[v])
            )
            z_pm = sorted(
                v for v in padded[p]
                if v >= g.n or all(c.labels[w] != m for w in g.adjacency[v])
            )
            if len(z_mp) != len(z_pm):
                raise EmbeddingConsistencyError(
                    f"unmatched sets of classes {m} and {p} differ in size: "
                    f"{len(z_mp)} vs {len(z_pm)}"
                )
            for a, b in zip(z_mp, z_pm):
                edges.add((min(a, b), max(a, b)))

    gstar = Graph(total, frozenset(edges))
    fa = FamilyAssignment(t, width, tuple(class_of))
    assert is_family_member(gstar, fa)
    assert is_subgraph(g, gstar)
    return gstar, fa, tuple(range(g.n))
