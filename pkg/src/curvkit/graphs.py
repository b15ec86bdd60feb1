"""Finite simple graphs: parsing, metrics, named families, enumeration.

Vertices are the integers 0..n-1.  Graph objects are immutable after
construction and every function in this module is pure, so all of it is safe
to use concurrently.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "AdjacencyParseError",
    "BallDecomposition",
    "Graph",
    "GraphFamily",
    "are_isomorphic",
    "ball_decomposition",
    "canonical_form",
    "complete",
    "complete_bipartite",
    "cycle",
    "distance",
    "distances_from",
    "enumerate_cubic",
    "generate",
    "girth_through_edge",
    "ladder",
    "mobius",
    "parse_adjacency",
    "petersen",
    "prism",
]


class AdjacencyParseError(ValueError):
    """Malformed adjacency text; ``location`` is the offending (row, col) if known."""

    def __init__(self, message: str, location: tuple[int, int] | None = None):
        super().__init__(message)
        self.location = location


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Adjacency is stored as one bitmask per vertex, which keeps breadth-first
    searches and neighbourhood intersections cheap for the graph sizes this
    package targets (a few hundred vertices at most).
    """

    __slots__ = ("n", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._masks = tuple(masks)
        self._edges = tuple(
            (u, v) for u in range(n) for v in _bits(masks[u] >> u << u) if u < v
        )

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._masks = tuple(masks)
        g._edges = tuple(
            (u, v) for u in range(g.n) for v in _bits(masks[u]) if u < v
        )
        return g

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edge set as (u, v) pairs with u < v, lexicographically sorted."""
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise ValueError(f"invalid vertex index {v} for {self.n} vertices")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return tuple(_bits(self._masks[v]))

    def neighbor_mask(self, v: int) -> int:
        return self._masks[v]

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._masks[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._masks)

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self._masks[u] >> v & 1)

    def is_regular(self, k: int) -> bool:
        return all(m.bit_count() == k for m in self._masks)

    def adjacency_rows(self) -> list[list[int]]:
        return [
            [1 if self._masks[i] >> j & 1 else 0 for j in range(self.n)]
            for i in range(self.n)
        ]

    def to_text(self) -> str:
        """Serialize to the adjacency text form, e.g. ``[[0,1],[1,0]]``."""
        return json.dumps(self.adjacency_rows(), separators=(",", ":"))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]; perm must be a permutation."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabelling must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self._edges])

    def components(self) -> list[tuple[int, ...]]:
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in _bits(frontier):
                    nxt |= self._masks[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(tuple(_bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={len(self._edges)})"


def parse_adjacency(text: str) -> Graph:
    """Parse the adjacency text form: a square, symmetric, zero-diagonal 0/1
    nested array literal such as ``[[0,1],[1,0]]``.  Whitespace-insensitive.

    Raises AdjacencyParseError naming the offending entry on invalid input.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AdjacencyParseError(f"adjacency text is not a nested array literal: {exc}")
    if not isinstance(data, list) or not data:
        raise AdjacencyParseError("adjacency matrix must be a non-empty array of rows")
    n = len(data)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else "not an array"
            raise AdjacencyParseError(
                f"matrix is not square: row {i} has length {got}, expected {n}",
                location=(i, 0),
            )
        for j, entry in enumerate(row):
            if isinstance(entry, bool) or not isinstance(entry, int) or entry not in (0, 1):
                raise AdjacencyParseError(
                    f"entry ({i}, {j}) must be 0 or 1, got {entry!r}", location=(i, j)
                )
    for i in range(n):
        if data[i][i] != 0:
            raise AdjacencyParseError(
                f"nonzero diagonal entry at ({i}, {i})", location=(i, i)
            )
    for i in range(n):
        for j in range(i + 1, n):
            if data[i][j] != data[j][i]:
                raise AdjacencyParseError(
                    f"asymmetric at ({j}, {i}): entry ({i}, {j})={data[i][j]} "
                    f"but entry ({j}, {i})={data[j][i]}",
                    location=(j, i),
                )
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if data[i][j] == 1]
    return Graph(n, edges)


def distances_from(g: Graph, source: int) -> list[int | None]:
    """Breadth-first hop counts from ``source``; None for unreachable vertices."""
    g.check_vertex(source)
    dist: list[int | None] = [None] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.neighbor_mask(u)
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        for u in _bits(frontier):
            dist[u] = d
    return dist

def distance(g: Graph, x: int, y: int) -> int | None:
    """Shortest-path length between x and y; None if in different components."""
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        return 0
    return distances_from(g, x)[y]


@dataclass(frozen=True)
class BallDecomposition:
    """Shells S0, S1, S2 around a centre plus per-vertex directed degrees.

    ``directed_degrees[v]`` is (out, spherical, in): the number of neighbours
    of v strictly further from / as far from / strictly closer to the centre,
    measured with full-graph distances.  Covers every vertex of the 2-ball.
    """

    centre: int
    s0: tuple[int, ...]
    s1: tuple[int, ...]
    s2: tuple[int, ...]
    directed_degrees: dict[int, tuple[int, int, int]]

    @property
    def shells(self) -> tuple[tuple[int, ...], ...]:
        return (self.s0, self.s1, self.s2)

    def ball(self) -> tuple[int, ...]:
        return self.s0 + self.s1 + self.s2


def ball_decomposition(g: Graph, x: int) -> BallDecomposition:
    dist = distances_from(g, x)
    s1 = tuple(v for v in range(g.n) if dist[v] == 1)
    s2 = tuple(v for v in range(g.n) if dist[v] == 2)
    degrees: dict[int, tuple[int, int, int]] = {}
    for v in (x, *s1, *s2):
        dv = dist[v]
        out = sph = inn = 0
        for u in _bits(g.neighbor_mask(v)):
            du = dist[u]
            assert du is not None  # neighbours of reachable vertices are reachable
            if du > dv:
                out += 1
            elif du == dv:
                sph += 1
            else:
                inn += 1
        degrees[v] = (out, sph, inn)
    return BallDecomposition(x, (x,), s1, s2, degrees)


def girth_through_edge(g: Graph, edge: tuple[int, int]) -> int | None:
    """Length of the shortest cycle containing ``edge``; None for a bridge."""
    u, v = edge
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    # shortest u-v path avoiding the edge itself, plus the edge
    dist = [None] * g.n
    dist[u] = 0
    seen = 1 << u
    frontier = seen
    d = 0
    while frontier:
        nxt = 0
        for w in _bits(frontier):
            m = g.neighbor_mask(w)
            if w == u:
                m &= ~(1 << v)
            elif w == v:
                m &= ~(1 << u)
            nxt |= m
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
        if frontier >> v & 1:
            return d + 1
    return None


# -- named families ----------------------------------------------------------
#
# Deterministic labellings:
#   prism(n):  outer ring 0..n-1, inner ring n..2n-1, rung i <-> n+i
#   mobius(n): cycle 0..2n-1 plus the n chords i <-> i+n
#   ladder(n): top rail 0..n-1, bottom rail n..2n-1, rung i <-> n+i
#   complete_bipartite(n): parts {0..n-1} and {n..2n-1}
#   petersen:  outer 5-cycle 0..4, spokes i <-> 5+i, inner pentagram step 2

_FAMILY_TAGS = (
    "prism",
    "mobius",
    "cycle",
    "ladder",
    "complete",
    "complete_bipartite",
    "petersen",
)
_FAMILY_MIN = {
    "prism": 3,
    "mobius": 2,
    "cycle": 3,
    "ladder": 2,
    "complete": 1,
    "complete_bipartite": 1,
}


@dataclass(frozen=True)
class GraphFamily:
    """A named generator tag plus its size parameter (None for petersen)."""

    tag: str
    n: int | None = None


def prism(n: int) -> Graph:
    if n < 3:
        raise ValueError("prism requires n >= 3")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))
        edges.append((n + i, n + (i + 1) % n))
        edges.append((i, n + i))
    return Graph(2 * n, edges)


def mobius(n: int) -> Graph:
    if n < 2:
        raise ValueError("mobius requires n >= 2")
    m = 2 * n
    edges = [(i, (i + 1) % m) for i in range(m)]
    edges += [(i, i + n) for i in range(n)]
    return Graph(m, edges)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def ladder(n: int) -> Graph:
    if n < 2:
        raise ValueError("ladder requires n >= 2")
    edges = [(i, n + i) for i in range(n)]
    edges += [(i, i + 1) for i in range(n - 1)]
    edges += [(n + i, n + i + 1) for i in range(n - 1)]
    return Graph(2 * n, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_bipartite requires n >= 1")
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n)])


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges)


def generate(family: GraphFamily) -> Graph:
    """Build a named-family graph, validating the size parameter."""
    tag = family.tag
    if tag not in _FAMILY_TAGS:
        raise ValueError(f"unknown family {tag!r}; expected one of {_FAMILY_TAGS}")
    if tag == "petersen":
        if family.n is not None:
            raise ValueError("petersen takes no size parameter")
        return petersen()
    if family.n is None:
        raise ValueError(f"family {tag!r} requires a size parameter")
    if family.n < _FAMILY_MIN[tag]:
        raise ValueError(f"family {tag!r} requires n >= {_FAMILY_MIN[tag]}")
    builder = {
        "prism": prism,
        "mobius": mobius,
        "cycle": cycle,
        "ladder": ladder,
        "complete": complete,
        "complete_bipartite": complete_bipartite,
    }[tag]
    return builder(family.n)


# -- isomorphism and canonical forms -----------------------------------------


def _vertex_profiles(masks: Sequence[int], n: int) -> list[tuple]:
    """Per-vertex isomorphism-invariant fingerprints.

    (degree, incident triangle pair count, bfs layer sizes) -- cheap and exact,
    collisions are resolved by explicit backtracking.
    """
    profs = []
    for v in range(n):
        mv = masks[v]
        tri = 0
        for u in _bits(mv):
            tri += (mv & masks[u]).bit_count()
        seen = 1 << v
        frontier = seen
        layers = []
        while True:
            nxt = 0
            for u in _bits(frontier):
                nxt |= masks[u]
            frontier = nxt & ~seen
            if not frontier:
                break
            seen |= frontier
            layers.append(frontier.bit_count())
        profs.append((mv.bit_count(), tri, tuple(layers)))
    return profs


def _match_order(masks: Sequence[int], n: int, profs: list[tuple]) -> list[int]:
    # rarest fingerprint first, then greedily maximise anchoring to placed vertices
    freq: dict[tuple, int] = {}
    for p in profs:
        freq[p] = freq.get(p, 0) + 1
    seed = min(range(n), key=lambda v: (freq[profs[v]], v))
    order = [seed]
    placed = 1 << seed
    while len(order) < n:
        best = None
        best_key = None
        for v in range(n):
            if placed >> v & 1:
                continue
            key = (-(masks[v] & placed).bit_count(), freq[profs[v]], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


def _isomorphic_masks(
    m1: Sequence[int], m2: Sequence[int], n: int,
    p1: list[tuple], p2: list[tuple],
) -> bool:
    candidates: dict[tuple, list[int]] = {}
    for w in range(n):
        candidates.setdefault(p2[w], []).append(w)
    order = _match_order(m1, n, p1)
    image = [-1] * n

    def extend(k: int, used2: int) -> bool:
        if k == n:
            return True
        v = order[k]
        required = 0
        for u in _bits(m1[v]):
            if image[u] >= 0:
                required |= 1 << image[u]
        for w in candidates[p1[v]]:
            if used2 >> w & 1:
                continue
            if (m2[w] & used2) != required:
                continue
            image[v] = w
            if extend(k + 1, used2 | 1 << w):
                return True
            image[v] = -1
        return False

    return extend(0, 0)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test: invariant pruning plus backtracking search.

    Adequate for the package's working range (a few dozen vertices); this is
    deliberately not a nauty-class algorithm.
    """
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    n = g1.n
    if n == 0:
        return True
    p1 = _vertex_profiles(g1._masks, n)
    p2 = _vertex_profiles(g2._masks, n)
    if sorted(p1) != sorted(p2):
        return False
    return _isomorphic_masks(g1._masks, g2._masks, n, p1, p2)


def canonical_form(g: Graph) -> bytes:
    """Lexicographically minimal upper-triangle adjacency bit string.

    The minimum over all vertex orderings is found row by row with an ordered
    partition of the unplaced vertices: the vertex for the current position
    is drawn from the first cell, and placing it splits every cell into
    non-neighbours followed by neighbours, which is the unique row-minimal
    arrangement.  Each level therefore fixes one complete row of the upper
    triangle, so branches are pruned against the best string found as soon
    as a row prefix exceeds it.  Equal labelled graphs, and only they, share
    a canonical form.
    """
    n = g.n
    if n <= 1:
        return b""
    masks = g._masks
    nbits = n * (n - 1) // 2
    best: int | None = None

    def dfs(partition: list[tuple[int, ...]], key: int, bits: int) -> None:
        nonlocal best
        if not partition:
            if best is None or key < best:
                best = key
            return
        first = partition[0]
        width = sum(len(c) for c in partition) - 1
        for v in first:
            mv = masks[v]
            # row pattern and refined partition for placing v at this position
            row = 0
            refined: list[tuple[int, ...]] = []
            for cell in ([tuple(u for u in first if u != v)] + partition[1:]):
                if not cell:
                    continue
                non = tuple(u for u in cell if not mv >> u & 1)
                nbr = tuple(u for u in cell if mv >> u & 1)
                row = (row << len(cell)) | ((1 << len(nbr)) - 1)
                if non:
                    refined.append(non)
                if nbr:
                    refined.append(nbr)
            nkey = (key << width) | row
            nbits_done = bits + width
            if best is not None and nkey > (best >> (nbits - nbits_done)):
                continue
            dfs(refined, nkey, nbits_done)

    dfs([tuple(range(n))], 0, 0)
    assert best is not None
    return best.to_bytes((nbits + 7) // 8, "big")


# -- exhaustive enumeration of connected cubic graphs -------------------------


def enumerate_cubic(n: int) -> list[Graph]:
    """All connected 3-regular graphs on n vertices, one per isomorphism class.

    Candidates are generated by orderly augmentation: the smallest
    degree-incomplete vertex is completed in one step, choosing neighbours
    among already-discovered unsaturated vertices or freshly labelled ones
    (fresh vertices are taken in label order, which collapses their
    symmetry).  Every connected labelled cubic graph with discovery-ordered
    labels is produced exactly once; duplicates across labellings are
    removed by canonical form, and the result is sorted by canonical form,
    so output order is deterministic.  Chosen for simplicity at this scale,
    not asymptotic efficiency.
    """
    if n % 2 != 0:
        raise ValueError(f"no cubic graph exists on an odd number of vertices ({n})")
    if not 4 <= n <= 12:
        raise ValueError("enumeration budget is 4 <= n <= 12")

    adj = [0] * n
    deg = [0] * n
    classes: dict[bytes, Graph] = {}

    def emit() -> None:
        g = Graph.from_masks(tuple(adj))
        form = canonical_form(g)
        if form not in classes:
            classes[form] = g

    def dfs(next_fresh: int) -> None:
        v = -1
        for u in range(next_fresh):
            if deg[u] < 3:
                v = u
                break
        if v == -1:
            if next_fresh == n:
                emit()
            return  # closed 3-regular component before using all vertices
        need = 3 - deg[v]
        eligible = [
            u
            for u in range(v + 1, next_fresh)
            if deg[u] < 3 and not adj[v] >> u & 1
        ]
        fresh_avail = n - next_fresh
        for k_new in range(max(0, need - len(eligible)), min(need, fresh_avail) + 1):
            fresh = list(range(next_fresh, next_fresh + k_new))
            for chosen in combinations(eligible, need - k_new):
                nbrs = list(chosen) + fresh
                for u in nbrs:
                    adj[v] |= 1 << u
                    adj[u] |= 1 << v
                    deg[u] += 1
                deg[v] += need
                dfs(next_fresh + k_new)
                deg[v] -= need
                for u in nbrs:
                    adj[v] &= ~(1 << u)
                    adj[u] &= ~(1 << v)
                    deg[u] -= 1

    dfs(1)
    return [classes[form] for form in sorted(classes)]
