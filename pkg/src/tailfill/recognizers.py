"""Class recognizers and the canonical structures the tail solvers consume.

Each recognizer either returns a certificate structure (partition, level
structure, bag tree, or decomposition tree) or raises a ``Not*Error`` that
carries a concrete forbidden-subgraph witness.  Every accepted structure is
validated eagerly by expanding it back to a graph and comparing edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    Graph,
    PatternKind,
    components_within,
    co_components_within,
    connected_components,
    count_induced_p4_in_5set,
    find_induced,
)


class NotInClassError(Exception):
    """Input graph is not a member of the target class."""

    class_name = "?"


class NotSplitError(NotInClassError):
    class_name = "split"

    def __init__(self, kind: PatternKind, vertices: tuple[int, ...]):
        self.kind = kind
        self.vertices = vertices
        super().__init__(f"not split: induced {kind.value} on {vertices}")


class NotThresholdError(NotInClassError):
    class_name = "threshold"

    def __init__(self, kind: PatternKind, vertices: tuple[int, ...]):
        self.kind = kind
        self.vertices = vertices
        super().__init__(f"not threshold: induced {kind.value} on {vertices}")


class NotQTError(NotInClassError):
    class_name = "qt"

    def __init__(self, kind: PatternKind, vertices: tuple[int, ...]):
        self.kind = kind
        self.vertices = vertices
        super().__init__(f"not quasi-threshold: induced {kind.value} on {vertices}")


class NotP4SparseError(NotInClassError):
    class_name = "p4sparse"

    def __init__(self, five_set: tuple[int, ...]):
        self.five_set = five_set
        super().__init__(
            f"not P4-sparse: 5-set {five_set} induces two or more P4s"
        )


def _first_forbidden(G: Graph, kinds: tuple[PatternKind, ...]):
    for kind in kinds:
        hit = find_induced(G, kind)
        if hit is not None:
            return kind, hit
    return None


# ---------------------------------------------------------------------------
# split graphs


@dataclass(frozen=True)
class SplitPartition:
    """Clique/independent bipartition of a split graph.

    ``attached_clique`` holds the clique vertices having at least one
    neighbor on the independent side.  Unless the independent side is empty,
    at most one clique vertex lies outside ``attached_clique``; the
    constructor-side normalization in :func:`split_partition` guarantees it.
    """

    clique: frozenset[int]
    independent: frozenset[int]
    attached_clique: frozenset[int]

    def serialize(self) -> str:
        k = ",".join(str(v) for v in sorted(self.clique))
        s = ",".join(str(v) for v in sorted(self.independent))
        return f"K:{{{k}}} S:{{{s}}}"

    def validate(self, G: Graph) -> None:
        if self.clique | self.independent != frozenset(range(G.n)):
            raise ValueError("partition does not cover the vertex set")
        if self.clique & self.independent:
            raise ValueError("partition sides overlap")
        for a, b in combinations(sorted(self.clique), 2):
            if not G.adjacent(a, b):
                raise ValueError(f"clique side misses edge ({a},{b})")
        for a, b in combinations(sorted(self.independent), 2):
            if G.adjacent(a, b):
                raise ValueError(f"independent side contains edge ({a},{b})")
        derived = frozenset(
            x for x in self.clique if G.neighbors(x) & self.independent
        )
        if derived != self.attached_clique:
            raise ValueError("attached_clique does not match the graph")


def split_partition(G: Graph) -> SplitPartition:
    """Clique/independent partition via the degree-sequence test.

    Vertices sorted by descending degree; with ``m`` the largest index such
    that ``d_m >= m - 1``, the graph is split iff the first ``m`` degrees sum
    to ``m(m-1)`` plus the remaining degrees.  The construction is then
    cross-checked directly, and normalized so that at most one clique vertex
    has no independent neighbor whenever the independent side is nonempty.
    """
    order = sorted(range(G.n), key=lambda v: (-G.degree(v), v))
    degs = [G.degree(v) for v in order]
    m = 0
    for i in range(1, G.n + 1):
        if degs[i - 1] >= i - 1:
            m = i
    if sum(degs[:m]) != m * (m - 1) + sum(degs[m:]):
        found = _first_forbidden(G, (PatternKind.C4, PatternKind.C5, PatternKind.TwoK2))
        assert found is not None
        raise NotSplitError(*found)
    clique = set(order[:m])
    indep = set(order[m:])
    # direct cross-check of the degree-sequence construction
    for a, b in combinations(sorted(clique), 2):
        if not G.adjacent(a, b):
            raise AssertionError("degree-sequence clique side is not a clique")
    for a, b in combinations(sorted(indep), 2):
        if G.adjacent(a, b):
            raise AssertionError("degree-sequence independent side has an edge")
    detached = sorted(x for x in clique if not (G.neighbors(x) & indep))
    if indep and len(detached) >= 2:
        # such a vertex has all its neighbors inside the clique, so moving it
        # across keeps both sides valid and re-attaches the rest
        mover = detached[0]
        clique.discard(mover)
        indep.add(mover)
    attached = frozenset(x for x in clique if G.neighbors(x) & indep)
    return SplitPartition(frozenset(clique), frozenset(indep), attached)


# ---------------------------------------------------------------------------
# threshold graphs


class ThresholdTree:
    """Level structure of a threshold graph.

    ``clique_levels[d]`` are the vertices forming level ``d`` of the clique
    spine; all spine vertices are pairwise adjacent.  ``indep_groups[d]``
    are the vertices adjacent to exactly the spine levels ``0..d-1``, so
    ``indep_groups[0]`` is the isolated vertices.  Both tuples have length
    ``h + 1``; every spine level before the last is nonempty, the last may be
    empty when the deepest vertices are independent.
    """

    __slots__ = ("clique_levels", "indep_groups", "n", "_where")

    def __init__(
        self,
        clique_levels: tuple[frozenset[int], ...],
        indep_groups: tuple[frozenset[int], ...],
    ):
        if len(clique_levels) != len(indep_groups):
            raise ValueError("level lists must have equal length")
        self.clique_levels = clique_levels
        self.indep_groups = indep_groups
        where: dict[int, tuple[int, bool]] = {}
        for d, vs in enumerate(clique_levels):
            for v in vs:
                where[v] = (d, True)
        for d, vs in enumerate(indep_groups):
            for v in vs:
                if v in where:
                    raise ValueError(f"vertex {v} appears twice")
                where[v] = (d, False)
        self._where = where
        self.n = len(where)

    @property
    def h(self) -> int:
        return len(self.clique_levels) - 1

    def locate(self, v: int) -> tuple[int, bool]:
        """Level of ``v`` and whether it lies on the clique spine."""
        return self._where[v]

    def expand(self) -> Graph:
        spine = sorted(v for vs in self.clique_levels for v in vs)
        edges = list(combinations(spine, 2))
        for d, group in enumerate(self.indep_groups):
            upper = [v for vs in self.clique_levels[:d] for v in vs]
            for x in sorted(group):
                edges.extend((x, c) if x < c else (c, x) for c in upper)
        return Graph(self.n, edges)

    def serialize(self) -> str:
        parts = []
        for d in range(self.h + 1):
            c = ",".join(str(v) for v in sorted(self.clique_levels[d]))
            i = ",".join(str(v) for v in sorted(self.indep_groups[d]))
            parts.append(f"C{d}:{{{c}}} I{d}:{{{i}}}")
        return " | ".join(parts)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ThresholdTree)
            and self.clique_levels == other.clique_levels
            and self.indep_groups == other.indep_groups
        )

    def __repr__(self) -> str:
        return f"ThresholdTree({self.serialize()})"


def threshold_tree(G: Graph) -> ThresholdTree:
    """Canonical level structure, built by alternately peeling isolated and
    universal vertices; rejects with a forbidden-subgraph witness."""
    if G.n == 0:
        return ThresholdTree((frozenset(),), (frozenset(),))
    if G.n == 1:
        return ThresholdTree((frozenset({0}),), (frozenset(),))
    remaining = set(range(G.n))
    cliques: list[frozenset[int]] = []
    indeps: list[frozenset[int]] = []
    while remaining:
        k = len(remaining)
        iso = frozenset(
            v for v in remaining if not (G.neighbors(v) & remaining)
        ) if k > 1 else frozenset()
        indeps.append(iso)
        remaining -= iso
        if not remaining:
            cliques.append(frozenset())
            break
        k = len(remaining)
        univ = frozenset(
            v for v in remaining if len(G.neighbors(v) & remaining) == k - 1
        )
        if not univ:
            found = _first_forbidden(
                G, (PatternKind.C4, PatternKind.P4, PatternKind.TwoK2)
            )
            assert found is not None
            raise NotThresholdError(*found)
        cliques.append(univ)
        remaining -= univ
    tree = ThresholdTree(tuple(cliques), tuple(indeps))
    assert tree.expand() == G, "level structure does not expand to the input"
    return tree


# ---------------------------------------------------------------------------
# quasi-threshold graphs


@dataclass(eq=False)
class QTNode:
    bag: frozenset[int]
    children: tuple["QTNode", ...] = ()


class QTTree:
    """Rooted tree of clique bags; root-to-node bag unions induce cliques.

    Each node's bag is exactly the set of vertices universal within its own
    subtree, which makes the shape canonical.  A disconnected graph gets a
    synthetic empty root whose children are the component trees.
    """

    __slots__ = ("root", "n", "_parent", "_node_of")

    def __init__(self, root: QTNode):
        self.root = root
        parent: dict[int, QTNode | None] = {id(root): None}
        node_of: dict[int, QTNode] = {}
        count = 0
        stack = [root]
        while stack:
            node = stack.pop()
            for v in node.bag:
                if v in node_of:
                    raise ValueError(f"vertex {v} appears in two bags")
                node_of[v] = node
            count += len(node.bag)
            for ch in node.children:
                if not ch.bag and not ch.children:
                    raise ValueError("empty non-root bag")
                parent[id(ch)] = node
                stack.append(ch)
        self._parent = parent
        self._node_of = node_of
        self.n = count

    def node_of(self, v: int) -> QTNode:
        return self._node_of[v]

    def parent(self, node: QTNode) -> QTNode | None:
        return self._parent[id(node)]

    def path_to(self, v: int) -> list[QTNode]:
        """Nodes from the root down to the bag containing ``v``."""
        path = []
        node: QTNode | None = self.node_of(v)
        while node is not None:
            path.append(node)
            node = self.parent(node)
        path.reverse()
        return path

    def expand(self) -> Graph:
        edges: list[tuple[int, int]] = []
        stack: list[tuple[QTNode, list[int]]] = [(self.root, [])]
        while stack:
            node, above = stack.pop()
            bag = sorted(node.bag)
            edges.extend(combinations(bag, 2))
            for x in bag:
                edges.extend((x, a) if x < a else (a, x) for a in above)
            below = above + bag
            for ch in node.children:
                stack.append((ch, below))
        return Graph(self.n, edges)

    def serialize(self) -> str:
        def render(node: QTNode) -> str:
            bag = " ".join(str(v) for v in sorted(node.bag))
            inner = " ".join(render(c) for c in node.children)
            return f"({{{bag}}}{' ' + inner if inner else ''})"

        return render(self.root)

    def __eq__(self, other) -> bool:
        return isinstance(other, QTTree) and self.serialize() == other.serialize()

    def __repr__(self) -> str:
        return f"QTTree({self.serialize()})"


def _min_vertex_qt(node: QTNode) -> int:
    best = min(node.bag) if node.bag else None
    for ch in node.children:
        sub = _min_vertex_qt(ch)
        best = sub if best is None else min(best, sub)
    assert best is not None
    return best


def qt_tree(G: Graph) -> QTTree:
    """Canonical bag tree: peel universal vertices of each component."""

    def build(vertices: frozenset[int]) -> QTNode:
        k = len(vertices)
        bag = frozenset(
            v for v in vertices if len(G.neighbors(v) & vertices) == k - 1
        )
        if not bag:
            found = _first_forbidden(G, (PatternKind.C4, PatternKind.P4))
            assert found is not None
            raise NotQTError(*found)
        rest = vertices - bag
        children = [build(c) for c in components_within(G, rest)]
        children.sort(key=_min_vertex_qt)
        return QTNode(bag, tuple(children))

    comps = connected_components(G)
    if len(comps) == 1 and G.n > 0:
        root = build(comps[0])
    else:
        children = [build(c) for c in comps]
        children.sort(key=_min_vertex_qt)
        root = QTNode(frozenset(), tuple(children))
    tree = QTTree(root)
    assert tree.expand() == G, "bag tree does not expand to the input"
    return tree


# ---------------------------------------------------------------------------
# spiders and P4-sparse trees


@dataclass(frozen=True)
class SpiderDescriptor:
    """Spider partition: independent ``legs``, clique ``body``, ``head``.

    ``legs`` and ``body`` are aligned: ``body[i]`` is the partner of
    ``legs[i]``.  Thin means each leg touches exactly its partner; thick
    means it touches everything in the body except its partner.  Head
    vertices see the whole body and no leg.  ``len(body) == 2`` is stored as
    thin (the two readings coincide there); thick implies ``len(body) >= 3``.
    """

    legs: tuple[int, ...]
    body: tuple[int, ...]
    head: frozenset[int]
    thin: bool

    @property
    def size(self) -> int:
        return 2 * len(self.body) + len(self.head)

    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.legs) | frozenset(self.body) | self.head

    def partner_of_leg(self, s: int) -> int:
        return self.body[self.legs.index(s)]

    def partner_of_body(self, k: int) -> int:
        return self.legs[self.body.index(k)]


def _extract_spider(G: Graph, vertices: frozenset[int]) -> SpiderDescriptor | None:
    k = len(vertices)
    if k < 4:
        return None
    deg = {v: len(G.neighbors(v) & vertices) for v in vertices}
    mindeg = min(deg.values())
    if mindeg == 0:
        return None
    if mindeg == 1:
        legs = sorted(v for v in vertices if deg[v] == 1)
        body = [min(G.neighbors(s) & vertices) for s in legs]
        thin = True
    else:
        legs = sorted(v for v in vertices if deg[v] == mindeg)
        body_set = set()
        for s in legs:
            body_set |= G.neighbors(s) & vertices
        body_set -= set(legs)
        body = []
        for s in legs:
            missing = body_set - G.neighbors(s)
            if len(missing) != 1:
                return None
            body.append(missing.pop())
        thin = False
    if len(set(body)) != len(legs) or len(legs) < 2:
        return None
    if not thin and len(body) < 3:
        return None
    head = vertices - set(legs) - set(body)
    cand = SpiderDescriptor(tuple(legs), tuple(body), frozenset(head), thin)
    return cand if _spider_valid(G, cand) else None


def _spider_valid(G: Graph, sp: SpiderDescriptor) -> bool:
    legs, body, head = sp.legs, sp.body, sp.head
    if len(legs) != len(body) or len(legs) < 2:
        return False
    if not sp.thin and len(body) < 3:
        return False
    body_set = frozenset(body)
    for a, b in combinations(body, 2):
        if not G.adjacent(a, b):
            return False
    for a, b in combinations(legs, 2):
        if G.adjacent(a, b):
            return False
    for i, s in enumerate(legs):
        seen = G.neighbors(s) & body_set
        want = frozenset({body[i]}) if sp.thin else body_set - {body[i]}
        if seen != want:
            return False
    for r in head:
        nr = G.neighbors(r)
        if not body_set <= nr:
            return False
        if nr & frozenset(legs):
            return False
    return True


def spider_partition(G: Graph) -> SpiderDescriptor | None:
    """Spider decomposition of the whole graph, or ``None``.

    Callers are expected to pass a connected, co-connected graph; both are
    re-checked here since a spider is always connected in both senses.
    """
    allv = frozenset(range(G.n))
    if G.n < 4:
        return None
    if len(components_within(G, allv)) != 1:
        return None
    if len(co_components_within(G, allv)) != 1:
        return None
    return _extract_spider(G, allv)


@dataclass(eq=False)
class Leaf:
    vertex: int


@dataclass(eq=False)
class Inner:
    label: int  # 0 disjoint union, 1 join, 2 spider
    children: tuple = ()
    spider: SpiderDescriptor | None = None


PTreeNode = Leaf | Inner


class P4SparseTree:
    """Rooted decomposition tree: leaves are vertices; 0-nodes are disjoint
    unions, 1-nodes joins, 2-nodes spiders whose legs and body are direct
    leaf children and whose head (if any) is one child subtree.

    Construction runs one iterative pass computing, per node: parent link,
    subtree size, minimum vertex, and the smallest vertex that is universal
    (resp. isolated) within the subtree's induced subgraph, if any.  Those
    witnesses be read off the labels alone: a join has a universal vertex
    iff some child does, a union has an isolated vertex iff some child does,
    and a spider subtree never has either.
    """

    __slots__ = ("root", "n", "_parent", "_leaf_of", "_size", "_min_v",
                 "_univ", "_iso")

    def __init__(self, root: PTreeNode):
        self.root = root
        parent: dict[int, Inner | None] = {id(root): None}
        leaf_of: dict[int, Leaf] = {}
        size: dict[int, int] = {}
        min_v: dict[int, int] = {}
        univ: dict[int, int | None] = {}
        iso: dict[int, int | None] = {}
        # iterative post-order
        stack: list[tuple[PTreeNode, bool]] = [(root, False)]
        while stack:
            node, done = stack.pop()
            if isinstance(node, Leaf):
                v = node.vertex
                if v in leaf_of:
                    raise ValueError(f"vertex {v} appears twice")
                leaf_of[v] = node
                size[id(node)] = 1
                min_v[id(node)] = v
                univ[id(node)] = v
                iso[id(node)] = v
                continue
            if not done:
                stack.append((node, True))
                for ch in node.children:
                    parent[id(ch)] = node
                    stack.append((ch, False))
                continue
            size[id(node)] = sum(size[id(c)] for c in node.children)
            min_v[id(node)] = min(min_v[id(c)] for c in node.children)
            if node.label == 1:
                cands = [univ[id(c)] for c in node.children if univ[id(c)] is not None]
                univ[id(node)] = min(cands) if cands else None
                iso[id(node)] = None
            elif node.label == 0:
                cands = [iso[id(c)] for c in node.children if iso[id(c)] is not None]
                iso[id(node)] = min(cands) if cands else None
                univ[id(node)] = None
            else:
                univ[id(node)] = None
                iso[id(node)] = None
        self._parent = parent
        self._leaf_of = leaf_of
        self._size = size
        self._min_v = min_v
        self._univ = univ
        self._iso = iso
        self.n = len(leaf_of)

    def leaf(self, v: int) -> Leaf:
        return self._leaf_of[v]

    def parent(self, node: PTreeNode) -> Inner | None:
        return self._parent[id(node)]

    def subtree_size(self, node: PTreeNode) -> int:
        return self._size[id(node)]

    def min_vertex(self, node: PTreeNode) -> int:
        return self._min_v[id(node)]

    def universal_witness(self, node: PTreeNode) -> int | None:
        """Smallest vertex universal in the subtree's induced subgraph."""
        return self._univ[id(node)]

    def isolated_witness(self, node: PTreeNode) -> int | None:
        """Smallest vertex isolated in the subtree's induced subgraph."""
        return self._iso[id(node)]

    def leaves_under(self, node: PTreeNode) -> list[int]:
        out: list[int] = []
        stack = [node]
        while stack:
            cur = stack.pop()
            if isinstance(cur, Leaf):
                out.append(cur.vertex)
            else:
                stack.extend(cur.children)
        return out

    def path_to_leaf(self, v: int) -> list[Inner]:
        """Internal nodes from the root down to the parent of ``v``'s leaf."""
        path: list[Inner] = []
        node: PTreeNode | None = self._parent[id(self.leaf(v))]
        while node is not None:
            path.append(node)
            node = self._parent[id(node)]
        path.reverse()
        return path

    def expand(self) -> Graph:
        def edges_of(node: PTreeNode) -> tuple[list[int], list[tuple[int, int]]]:
            if isinstance(node, Leaf):
                return [node.vertex], []
            parts = [edges_of(c) for c in node.children]
            verts = [v for vs, _ in parts for v in vs]
            edges = [e for _, es in parts for e in es]
            if node.label == 1:
                for i in range(len(parts)):
                    for j in range(i + 1, len(parts)):
                        for a in parts[i][0]:
                            for b in parts[j][0]:
                                edges.append((a, b) if a < b else (b, a))
            elif node.label == 2:
                # child edges are exactly the head-internal ones; add the
                # spider edges on top
                sp = node.spider
                assert sp is not None
                for a, b in combinations(sorted(sp.body), 2):
                    edges.append((a, b))
                for i, s in enumerate(sp.legs):
                    mates = [sp.body[i]] if sp.thin else [
                        k for k in sp.body if k != sp.body[i]
                    ]
                    for k in mates:
                        edges.append((s, k) if s < k else (k, s))
                for r in sorted(sp.head):
                    for k in sp.body:
                        edges.append((r, k) if r < k else (k, r))
            return verts, edges

        verts, edges = edges_of(self.root)
        assert sorted(verts) == list(range(self.n))
        return Graph(self.n, set(edges))

    def serialize(self) -> str:
        def render(node: PTreeNode) -> str:
            if isinstance(node, Leaf):
                return str(node.vertex)
            inner = " ".join(render(c) for c in node.children)
            if node.label == 2:
                sp = node.spider
                assert sp is not None
                flavor = "thin" if sp.thin else "thick"
                s_ids = " ".join(str(v) for v in sp.legs)
                k_ids = " ".join(str(v) for v in sp.body)
                return f"(2 {flavor} [S: {s_ids}][K: {k_ids}] {inner})"
            return f"({node.label} {inner})"

        return render(self.root)

    def __eq__(self, other) -> bool:
        return isinstance(other, P4SparseTree) and self.serialize() == other.serialize()

    def __repr__(self) -> str:
        return f"P4SparseTree({self.serialize()})"


def _violating_five_set(G: Graph, vertices: frozenset[int]) -> tuple[int, ...]:
    for five in combinations(sorted(vertices), 5):
        if count_induced_p4_in_5set(G, five) >= 2:
            return five
    raise AssertionError("no violating 5-set in a rejected subgraph")


def p4_sparse_tree(G: Graph) -> P4SparseTree:
    """Decomposition tree built by splitting on components, co-components,
    then spider partitions; rejects with a two-P4 5-set witness."""
    if G.n == 0:
        raise ValueError("empty graph has no decomposition tree")

    def build(vertices: frozenset[int]) -> PTreeNode:
        if len(vertices) == 1:
            return Leaf(min(vertices))
        comps = components_within(G, vertices)
        if len(comps) > 1:
            children = sorted((build(c) for c in comps), key=_node_min)
            return Inner(0, tuple(children))
        cocomps = co_components_within(G, vertices)
        if len(cocomps) > 1:
            children = sorted((build(c) for c in cocomps), key=_node_min)
            return Inner(1, tuple(children))
        sp = _extract_spider(G, vertices)
        if sp is None:
            raise NotP4SparseError(_violating_five_set(G, vertices))
        children: list[PTreeNode] = [Leaf(v) for v in sp.legs]
        children.extend(Leaf(v) for v in sp.body)
        if sp.head:
            children.append(build(sp.head))
        children.sort(key=_node_min)
        return Inner(2, tuple(children), spider=sp)

    def _node_min(node: PTreeNode) -> int:
        while isinstance(node, Inner):
            node = min(node.children, key=_node_min)
        return node.vertex

    tree = P4SparseTree(build(frozenset(range(G.n))))
    assert tree.expand() == G, "decomposition tree does not expand to the input"
    return tree


# ---------------------------------------------------------------------------
# path partitions


@dataclass(frozen=True)
class PathPartition:
    """Root-to-vertex path through a structure tree, with branch tallies.

    ``branches[i]`` holds the vertices hanging off path node ``i`` (for the
    last node, the vertex ``u`` itself is excluded); together with ``u`` the
    branches partition the vertex set.  ``neighbors_above[i]`` counts
    ``u``-neighbors in branches ``0..i-1`` and ``nonneighbors_from[i]``
    counts non-neighbors in branches ``i..h``; both have length ``h + 2``.
    """

    u: int
    nodes: tuple
    branches: tuple[tuple[int, ...], ...]
    neighbors_in: tuple[int, ...]
    neighbors_above: tuple[int, ...]
    nonneighbors_from: tuple[int, ...]

    @property
    def h(self) -> int:
        return len(self.nodes) - 1

    @property
    def branch_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(b) for b in self.branches)


def _tallies(
    u: int, nodes: tuple, branches: list[tuple[int, ...]], nbr_in: list[int]
) -> PathPartition:
    h = len(nodes) - 1
    above = [0] * (h + 2)
    for i in range(h + 1):
        above[i + 1] = above[i] + nbr_in[i]
    nonfrom = [0] * (h + 2)
    for i in range(h, -1, -1):
        nonfrom[i] = nonfrom[i + 1] + (len(branches[i]) - nbr_in[i])
    return PathPartition(
        u,
        tuple(nodes),
        tuple(branches),
        tuple(nbr_in),
        tuple(above),
        tuple(nonfrom),
    )


def _p4_neighbor_count(tree: P4SparseTree, node: Inner, u: int, is_parent: bool) -> int:
    """Count of u-neighbors in the branch at ``node``, from labels alone."""
    if node.label == 0:
        return 0
    sp = node.spider
    if node.label == 1:
        return -1  # sentinel: whole branch
    assert sp is not None
    if not is_parent:
        # u is inside the head subtree: the branch is legs + body
        return len(sp.body)
    legs = sp.legs
    body = sp.body
    if u in body:
        mates = 1 if sp.thin else len(legs) - 1
        return (len(body) - 1) + mates + len(sp.head)
    if u in legs:
        return 1 if sp.thin else len(body) - 1
    # u is the single head vertex whose leaf hangs off the 2-node directly
    return len(body)


def path_partition(tree, u: int) -> PathPartition:
    """Path, branch sets and prefix tallies for ``u`` in a structure tree.

    Dispatches on the tree type; everything is derived in one traversal
    without consulting the original graph.
    """
    if isinstance(tree, P4SparseTree):
        if u not in tree._leaf_of:
            raise ValueError(f"vertex {u} not in tree")
        path = tree.path_to_leaf(u)
        uleaf = tree.leaf(u)
        branches: list[tuple[int, ...]] = []
        nbr_in: list[int] = []
        for i, node in enumerate(path):
            skip = path[i + 1] if i + 1 < len(path) else uleaf
            sibs = [c for c in node.children if c is not skip]
            verts: list[int] = []
            for s in sibs:
                verts.extend(tree.leaves_under(s))
            verts.sort()
            branches.append(tuple(verts))
            cnt = _p4_neighbor_count(tree, node, u, is_parent=(i + 1 == len(path)))
            nbr_in.append(len(verts) if cnt == -1 else cnt)
        return _tallies(u, tuple(path), branches, nbr_in)

    if isinstance(tree, QTTree):
        if u not in tree._node_of:
            raise ValueError(f"vertex {u} not in tree")
        path = tree.path_to(u)
        branches = []
        nbr_in = []
        for i, node in enumerate(path):
            if i + 1 < len(path):
                off: list[int] = []
                skip = path[i + 1]
                stack = [c for c in node.children if c is not skip]
                while stack:
                    cur = stack.pop()
                    off.extend(cur.bag)
                    stack.extend(cur.children)
                verts = sorted(node.bag) + sorted(off)
                branches.append(tuple(sorted(verts)))
                nbr_in.append(len(node.bag))
            else:
                below: list[int] = []
                stack = list(node.children)
                while stack:
                    cur = stack.pop()
                    below.extend(cur.bag)
                    stack.extend(cur.children)
                verts = sorted((node.bag - {u}) | set(below))
                branches.append(tuple(verts))
                nbr_in.append(len(verts))
        return _tallies(u, tuple(path), branches, nbr_in)

    if isinstance(tree, ThresholdTree):
        level, on_spine = tree.locate(u)
        h = tree.h
        branches = []
        nbr_in = []
        for d in range(h + 1):
            vs = sorted((tree.clique_levels[d] | tree.indep_groups[d]) - {u})
            branches.append(tuple(vs))
            if on_spine:
                cnt = len(tree.clique_levels[d] - {u})
                if d > level:
                    cnt += len(tree.indep_groups[d])
            else:
                cnt = len(tree.clique_levels[d]) if d < level else 0
            nbr_in.append(cnt)
        return _tallies(u, tuple(range(h + 1)), branches, nbr_in)

    raise TypeError(f"unsupported structure: {type(tree).__name__}")
