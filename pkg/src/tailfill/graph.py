"""Immutable simple graphs and small induced-pattern search.

Vertices are dense integer ids ``0..n-1``.  A :class:`Graph` is frozen after
construction, so values can be shared freely between recognizers, solvers and
tests without defensive copies.
"""

from __future__ import annotations

import enum
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised when graph text input is malformed."""


class Graph:
    """Finite undirected simple graph on vertices ``0..n-1``.

    Edges are unordered pairs with no loops and no duplicates.  Adjacency is
    kept per vertex as a frozenset; ``degree(v) == len(neighbors(v))`` and the
    edge count equals half the degree sum by construction.
    """

    __slots__ = ("n", "edges", "_adj", "_degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj: list[set[int]] = [set() for _ in range(n)]
        norm: set[tuple[int, int]] = set()
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a},{b}) out of range for n={n}")
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            e = (a, b) if a < b else (b, a)
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", tuple(frozenset(s) for s in adj))
        object.__setattr__(self, "_degree", tuple(len(s) for s in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._degree[v]

    def adjacent(self, a: int, b: int) -> bool:
        return b in self._adj[a]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """New graph with ``extra`` non-edges added (same vertex set)."""
        return Graph(self.n, list(self.edges) + [tuple(e) for e in extra])

    def with_tail(self, u: int) -> "Graph":
        """New graph with one extra vertex ``n`` joined to ``u`` only."""
        if not 0 <= u < self.n:
            raise ValueError(f"vertex {u} out of range")
        return Graph(self.n + 1, list(self.edges) + [(u, self.n)])

    def complement(self) -> "Graph":
        miss = [
            (a, b)
            for a in range(self.n)
            for b in range(a + 1, self.n)
            if b not in self._adj[a]
        ]
        return Graph(self.n, miss)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


class PatternKind(enum.Enum):
    """Fixed graphs on at most 5 vertices, matched as induced subgraphs."""

    P3 = "P3"
    P4 = "P4"
    C4 = "C4"
    C5 = "C5"
    P5 = "P5"
    TwoK2 = "2K2"


# pattern templates: vertex count and edge set on 0..k-1
_PATTERNS: dict[PatternKind, tuple[int, frozenset[tuple[int, int]]]] = {
    PatternKind.P3: (3, frozenset({(0, 1), (1, 2)})),
    PatternKind.P4: (4, frozenset({(0, 1), (1, 2), (2, 3)})),
    PatternKind.C4: (4, frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})),
    PatternKind.C5: (5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)})),
    PatternKind.P5: (5, frozenset({(0, 1), (1, 2), (2, 3), (3, 4)})),
    PatternKind.TwoK2: (4, frozenset({(0, 1), (2, 3)})),
}


def pattern_graph(kind: PatternKind) -> Graph:
    """The template graph of ``kind`` on vertices ``0..k-1``."""
    k, es = _PATTERNS[kind]
    return Graph(k, es)


def find_induced(G: Graph, kind: PatternKind) -> tuple[int, ...] | None:
    """First occurrence of ``kind`` as an induced subgraph, or ``None``.

    The returned tuple lists graph vertices in pattern order, so consecutive
    path/cycle positions are adjacent and all remaining pairs are non-edges.
    Search is backtracking over pattern positions with degree pruning;
    candidate vertices are tried in ascending order, which makes the result
    deterministic.
    """
    k, pedges = _PATTERNS[kind]
    if G.n < k:
        return None
    pdeg = [0] * k
    for a, b in pedges:
        pdeg[a] += 1
        pdeg[b] += 1
    # adjacency of the partial pattern: for position i, which earlier
    # positions must be neighbors / non-neighbors
    earlier_adj = [
        [j for j in range(i) if ((j, i) in pedges or (i, j) in pedges)]
        for i in range(k)
    ]
    earlier_non = [
        [j for j in range(i) if j not in earlier_adj[i]] for i in range(k)
    ]
    assign: list[int] = []
    used = [False] * G.n

    def extend() -> bool:
        i = len(assign)
        if i == k:
            return True
        for v in range(G.n):
            if used[v] or G.degree(v) < pdeg[i]:
                continue
            nv = G.neighbors(v)
            if any(assign[j] not in nv for j in earlier_adj[i]):
                continue
            if any(assign[j] in nv for j in earlier_non[i]):
                continue
            assign.append(v)
            used[v] = True
            if extend():
                return True
            assign.pop()
            used[v] = False
        return False

    if extend():
        return tuple(assign)
    return None


def enumerate_induced(G: Graph, kind: PatternKind) -> Iterator[frozenset[int]]:
    """All vertex sets inducing ``kind``, by full subset scan.

    Exhaustive and slow; intended as the reference matcher at small n.
    """
    k, pedges = _PATTERNS[kind]
    template = pattern_graph(kind)
    for subset in combinations(range(G.n), k):
        sub, _ = induced_subgraph(G, subset)
        if _isomorphic_small(sub, template):
            yield frozenset(subset)


def _isomorphic_small(a: Graph, b: Graph) -> bool:
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    if sorted(a._degree) != sorted(b._degree):
        return False
    for perm in permutations(range(a.n)):
        if all(
            ((perm[x], perm[y]) in b.edges or (perm[y], perm[x]) in b.edges)
            for x, y in a.edges
        ):
            return True
    return False


def induced_subgraph(
    G: Graph, S: Iterable[int]
) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``S`` plus the new-id -> old-id vertex map.

    Vertices of the result are ``0..|S|-1`` in ascending order of the
    originals; ``map[i]`` is the original id of new vertex ``i``.
    """
    order = sorted(set(S))
    for v in order:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[a], index[b])
        for a, b in G.edges
        if a in index and b in index
    ]
    return Graph(len(order), edges), tuple(order)


def is_induced_p4(G: Graph, quad: Sequence[int]) -> bool:
    """True iff the 4 distinct vertices of ``quad`` induce a chordless path."""
    a, b, c, d = quad
    sub = [
        G.adjacent(a, b),
        G.adjacent(a, c),
        G.adjacent(a, d),
        G.adjacent(b, c),
        G.adjacent(b, d),
        G.adjacent(c, d),
    ]
    if sum(sub) != 3:
        return False
    # 3 edges on 4 vertices: P4 has degrees 1,1,2,2; the star peaks at 3 and
    # the triangle-plus-isolated-vertex dips to 0
    degs = (
        sub[0] + sub[1] + sub[2],
        sub[0] + sub[3] + sub[4],
        sub[1] + sub[3] + sub[5],
        sub[2] + sub[4] + sub[5],
    )
    return max(degs) == 2 and min(degs) == 1


def count_induced_p4_in_5set(G: Graph, S: Iterable[int]) -> int:
    """Number of 4-subsets of the 5-vertex set ``S`` inducing a P4."""
    vs = sorted(set(S))
    if len(vs) != 5:
        raise ValueError(f"expected a 5-vertex set, got {len(vs)} vertices")
    return sum(1 for quad in combinations(vs, 4) if is_induced_p4(G, quad))


def connected_components(G: Graph) -> list[frozenset[int]]:
    """Vertex sets of connected components, ordered by smallest member."""
    seen = [False] * G.n
    comps: list[frozenset[int]] = []
    for start in range(G.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        part = []
        while stack:
            v = stack.pop()
            part.append(v)
            for w in G.neighbors(v):
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(frozenset(part))
    return comps


def components_within(G: Graph, vertices: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the subgraph induced by ``vertices``."""
    vset = set(vertices)
    seen: set[int] = set()
    comps: list[frozenset[int]] = []
    for start in sorted(vset):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        part = []
        while stack:
            v = stack.pop()
            part.append(v)
            for w in G.neighbors(v):
                if w in vset and w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(frozenset(part))
    return comps


def co_components_within(G: Graph, vertices: Iterable[int]) -> list[frozenset[int]]:
    """Components of the complement of ``G`` restricted to ``vertices``.

    Runs BFS on complement adjacency using set subtraction, without ever
    materializing the complement graph.
    """
    remaining = set(vertices)
    comps: list[frozenset[int]] = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        part = {start}
        frontier = {start}
        while frontier:
            v = frontier.pop()
            reach = remaining - G.neighbors(v)
            remaining -= reach
            part |= reach
            frontier |= reach
        comps.append(frozenset(part))
    return sorted(comps, key=min)


def parse_graph(text: str) -> Graph:
    """Parse the shared graph text format.

    Lines starting with ``#`` and blank lines are ignored.  The first data
    line is ``n m``; the next ``m`` data lines are edges ``a b`` with
    ``0 <= a < b < n``, one per line, no duplicates.
    """
    data = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise GraphFormatError("no data lines")
    head = data[0][1].split()
    if len(head) != 2:
        raise GraphFormatError(f"line {data[0][0]}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"line {data[0][0]}: expected integers") from exc
    if len(data) - 1 != m:
        raise GraphFormatError(f"expected {m} edge lines, found {len(data) - 1}")
    edges = []
    for lineno, line in data[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'a b'")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: expected integers") from exc
        if not (0 <= a < b < n):
            raise GraphFormatError(f"line {lineno}: edge ({a},{b}) violates 0 <= a < b < n")
        edges.append((a, b))
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_graph(G: Graph) -> str:
    """Render a graph in the shared text format; edges sorted lexicographically."""
    lines = [f"{G.n} {len(G.edges)}"]
    lines.extend(f"{a} {b}" for a, b in sorted(G.edges))
    return "\n".join(lines) + "\n"
