"""Seeded random instances for each graph class, with certificates.

All randomness flows through :class:`SplitMix64`, so identical specs produce
byte-identical graphs on any platform.  Certificates are whatever structure
drove the construction (partition, creation sequence, bag tree, decomposition
tree); they expand to the emitted graph but are not necessarily canonical.

The ``bench_*`` builders construct deep chain-shaped structures directly,
without materializing the (possibly dense) graph, for timing the tail
solvers at large n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .oracles import GraphClass
from .recognizers import (
    Inner,
    Leaf,
    P4SparseTree,
    QTNode,
    QTTree,
    SpiderDescriptor,
    SplitPartition,
    ThresholdTree,
)

_MASK = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 stream.

    State advances by 0x9E3779B97F4A7C15 per draw; the output is the state
    xor-shifted by 30, 27 and 31 bits with multipliers 0xBF58476D1CE4E5B9 and
    0x94D049BB133111EB, all modulo 2**64.  ``below(n)`` reduces a draw with a
    plain modulo.  These exact rules are part of the reproducibility
    contract.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def chance(self, pct: int) -> bool:
        return self.below(100) < pct

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


@dataclass(frozen=True)
class GenSpec:
    graph_class: GraphClass
    n: int
    seed: int
    max_bag: int = 3
    spider_pct: int = 60
    head_keep_pct: int = 55
    density_pct: int = 50

    def validate(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.max_bag < 1:
            raise ValueError("max_bag must be at least 1")
        for knob in (self.spider_pct, self.head_keep_pct, self.density_pct):
            if not 0 <= knob <= 100:
                raise ValueError("percent knobs must lie in 0..100")


def generate(spec: GenSpec):
    """Seeded instance of the requested class plus its certificate."""
    spec.validate()
    rng = SplitMix64(spec.seed)
    if spec.graph_class is GraphClass.SPLIT:
        return _gen_split(spec, rng)
    if spec.graph_class is GraphClass.THRESHOLD:
        return _gen_threshold(spec, rng)
    if spec.graph_class is GraphClass.QT:
        return _gen_qt(spec, rng)
    if spec.graph_class is GraphClass.P4SPARSE:
        return _gen_p4sparse(spec, rng)
    raise ValueError(spec.graph_class)


def _gen_split(spec: GenSpec, rng: SplitMix64):
    n = spec.n
    order = rng.shuffle(list(range(n)))
    ksize = rng.below(n + 1)
    clique = sorted(order[:ksize])
    indep = sorted(order[ksize:])
    edges = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    for s in indep:
        for k in clique:
            if rng.chance(spec.density_pct):
                edges.append((min(s, k), max(s, k)))
    G = Graph(n, edges)
    attached = frozenset(k for k in clique if G.neighbors(k) & set(indep))
    cert = SplitPartition(frozenset(clique), frozenset(indep), attached)
    return G, cert


def _gen_threshold(spec: GenSpec, rng: SplitMix64):
    n = spec.n
    ops = ["i"]
    ops += ["d" if rng.chance(50) else "i" for _ in range(n - 1)]
    edges = []
    for v in range(1, n):
        if ops[v] == "d":
            edges.extend((x, v) for x in range(v))
    return Graph(n, edges), "".join(ops)


def _gen_qt(spec: GenSpec, rng: SplitMix64):
    n = spec.n
    order = rng.shuffle(list(range(n)))
    bags: list[list[int]] = []
    pos = 0
    while pos < n:
        size = 1 + rng.below(min(spec.max_bag, n - pos))
        bags.append(sorted(order[pos:pos + size]))
        pos += size
    parents: list[int | None] = [None]
    for i in range(1, len(bags)):
        # occasional extra roots exercise the synthetic-root shape
        parents.append(None if rng.chance(15) else rng.below(i))
    kids: list[list[int]] = [[] for _ in bags]
    roots = []
    for i, p in enumerate(parents):
        if p is None:
            roots.append(i)
        else:
            kids[p].append(i)

    def build(i: int) -> QTNode:
        return QTNode(frozenset(bags[i]), tuple(build(c) for c in kids[i]))

    if len(roots) == 1:
        root = build(roots[0])
    else:
        root = QTNode(frozenset(), tuple(build(r) for r in roots))
    tree = QTTree(root)
    return tree.expand(), tree


def _gen_p4sparse(spec: GenSpec, rng: SplitMix64):
    def gen(ids: list[int], forbid: int | None):
        if len(ids) == 1:
            return Leaf(ids[0])
        if len(ids) >= 4 and rng.chance(spec.spider_pct):
            return gen_spider(ids)
        label = forbid ^ 1 if forbid in (0, 1) else rng.below(2)
        parts = 2 + (rng.below(2) if len(ids) > 2 else 0)
        parts = min(parts, len(ids))
        pool = rng.shuffle(list(ids))
        cuts = sorted(rng.shuffle(list(range(1, len(ids))))[: parts - 1])
        chunks, prev = [], 0
        for c in cuts + [len(ids)]:
            chunks.append(pool[prev:c])
            prev = c
        return Inner(label, tuple(gen(ch, label) for ch in chunks))

    def gen_spider(ids: list[int]):
        pool = rng.shuffle(list(ids))
        thick = len(ids) >= 6 and rng.chance(40)
        min_k = 3 if thick else 2
        max_k = len(ids) // 2
        if rng.chance(spec.head_keep_pct) and max_k > min_k:
            k = min_k + rng.below(max_k - min_k)
        else:
            k = max_k
        k = max(min_k, min(k, max_k))
        legs = tuple(sorted(pool[:k]))
        body = tuple(pool[k:2 * k])
        head = pool[2 * k:]
        sp = SpiderDescriptor(legs, body, frozenset(head), thin=not thick)
        children = [Leaf(v) for v in legs + body]
        if head:
            children.append(gen(head, None))
        children.sort(key=_node_min)
        return Inner(2, tuple(children), spider=sp)

    def _node_min(node):
        while isinstance(node, Inner):
            node = min(node.children, key=_node_min)
        return node.vertex

    if spec.n == 1:
        tree = P4SparseTree(Leaf(0))
    else:
        tree = P4SparseTree(gen(list(range(spec.n)), None))
    return tree.expand(), tree


def pick_tail_vertex(G: Graph, seed: int) -> int:
    """Uniform seeded choice of the attachment vertex."""
    if G.n < 1:
        raise ValueError("graph has no vertices")
    return SplitMix64(seed).below(G.n)


def gnp_graph(n: int, edge_pct: int, seed: int) -> Graph:
    """Seeded G(n, p) with p expressed as an integer percentage."""
    rng = SplitMix64(seed)
    edges = [
        (a, b)
        for a in range(n)
        for b in range(a + 1, n)
        if rng.chance(edge_pct)
    ]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# large chain-shaped structures for timing


def bench_threshold_tree(n: int, seed: int) -> tuple[ThresholdTree, int]:
    """Deep threshold level structure on n vertices; returns it with a tail
    vertex placed at the deepest level."""
    rng = SplitMix64(seed)
    cliques: list[frozenset[int]] = []
    indeps: list[frozenset[int]] = []
    nxt = 0
    while nxt < n:
        isize = rng.below(2)
        icount = min(isize, n - nxt)
        group = frozenset(range(nxt, nxt + icount))
        nxt += icount
        if nxt >= n:
            indeps.append(group)
            cliques.append(frozenset())
            break
        csize = 1 + rng.below(2)
        ccount = min(csize, n - nxt)
        spine = frozenset(range(nxt, nxt + ccount))
        nxt += ccount
        indeps.append(group)
        cliques.append(spine)
    tree = ThresholdTree(tuple(cliques), tuple(indeps))
    return tree, n - 1


def bench_qt_tree(n: int, seed: int) -> tuple[QTTree, int]:
    """Deep caterpillar of singleton bags; tail vertex at the bottom."""
    rng = SplitMix64(seed)
    u = n - 1
    node = QTNode(frozenset({u}))
    nxt = 0
    while nxt < u:
        if rng.chance(50) and nxt + 1 < u:
            off = QTNode(frozenset({nxt + 1}))
            node = QTNode(frozenset({nxt}), (off, node))
            nxt += 2
        else:
            node = QTNode(frozenset({nxt}), (node,))
            nxt += 1
    return QTTree(node), u


def bench_p4_tree(n: int, seed: int) -> tuple[P4SparseTree, int]:
    """Alternating join/union chain with leaf branches; tail at the bottom.

    Built bottom-up so the path from the root to the tail vertex has depth
    proportional to n.
    """
    rng = SplitMix64(seed)
    u = n - 1
    node = Leaf(u)
    label = rng.below(2)
    nxt = 0
    while nxt < u:
        take = min(1 + rng.below(2), u - nxt)
        branch_leaves = [Leaf(v) for v in range(nxt, nxt + take)]
        nxt += take
        node = Inner(label, tuple(branch_leaves + [node]))
        label ^= 1
    return P4SparseTree(node), u
