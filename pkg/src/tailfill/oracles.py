"""Definitional membership tests and the exhaustive minimum-completion oracle.

Membership is decided straight from the class definitions: forbidden induced
patterns for split, threshold and quasi-threshold graphs, and the at most one
induced P4 per 5 vertices rule for P4-sparse graphs.  The oracle explores fill
sets by iterative deepening over all k-subsets of non-edges in lexicographic
order, so its answers are minimum by construction and fully reproducible.

The deepening loop evaluates candidates in vectorized batches (one numpy pass
classifies every 4- and 5-subset of a candidate graph); tests pin the batch
evaluator to the scalar definitional test.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, islice

import numpy as np

from .graph import (
    Graph,
    PatternKind,
    count_induced_p4_in_5set,
    find_induced,
)


class GraphClass(enum.Enum):
    SPLIT = "split"
    THRESHOLD = "threshold"
    QT = "qt"
    P4SPARSE = "p4sparse"


FORBIDDEN: dict[GraphClass, tuple[PatternKind, ...]] = {
    GraphClass.SPLIT: (PatternKind.C4, PatternKind.C5, PatternKind.TwoK2),
    GraphClass.THRESHOLD: (PatternKind.C4, PatternKind.P4, PatternKind.TwoK2),
    GraphClass.QT: (PatternKind.C4, PatternKind.P4),
}


class InstanceTooLargeError(ValueError):
    """Oracle input exceeds the configured exhaustive-search bound."""


class LimitExceededError(RuntimeError):
    """No completion found within the requested fill budget."""


def is_member(G: Graph, c: GraphClass) -> bool:
    """Membership by definition: pattern scan, or the 5-set P4 bound."""
    if c is GraphClass.P4SPARSE:
        if G.n < 5:
            return True
        return all(
            count_induced_p4_in_5set(G, five) <= 1
            for five in combinations(range(G.n), 5)
        )
    return all(find_induced(G, kind) is None for kind in FORBIDDEN[c])


@dataclass(frozen=True)
class OracleResult:
    fill_count: int
    fill_edges: tuple[tuple[int, int], ...]
    explored: int


# incidence of the 6 within-subset pairs on the 4 positions, pairs in
# combinations order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3)
_INC4 = np.array(
    [
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ],
    dtype=np.uint8,
)
# likewise for the 10 pairs of a 5-subset
_INC5 = np.array(
    [
        [1, 1, 0, 0, 0],
        [1, 0, 1, 0, 0],
        [1, 0, 0, 1, 0],
        [1, 0, 0, 0, 1],
        [0, 1, 1, 0, 0],
        [0, 1, 0, 1, 0],
        [0, 1, 0, 0, 1],
        [0, 0, 1, 1, 0],
        [0, 0, 1, 0, 1],
        [0, 0, 0, 1, 1],
    ],
    dtype=np.uint8,
)


class _SubsetTables:
    """Per-n index tables driving the batch membership evaluator."""

    _cache: dict[int, "_SubsetTables"] = {}

    def __init__(self, n: int):
        self.n = n
        pairs = list(combinations(range(n), 2))
        self.pair_index = {p: i for i, p in enumerate(pairs)}
        self.pair_count = len(pairs)
        quads = list(combinations(range(n), 4))
        quad_index = {q: i for i, q in enumerate(quads)}
        self.quad_pairs = np.array(
            [[self.pair_index[p] for p in combinations(q, 2)] for q in quads],
            dtype=np.int32,
        ).reshape(len(quads), 6)
        fives = list(combinations(range(n), 5))
        self.five_pairs = np.array(
            [[self.pair_index[p] for p in combinations(f, 2)] for f in fives],
            dtype=np.int32,
        ).reshape(len(fives), 10)
        self.five_quads = np.array(
            [[quad_index[q] for q in combinations(f, 4)] for f in fives],
            dtype=np.int32,
        ).reshape(len(fives), 5)

    @classmethod
    def for_n(cls, n: int) -> "_SubsetTables":
        if n not in cls._cache:
            cls._cache[n] = cls(n)
        return cls._cache[n]

    def edge_bits(self, G: Graph) -> np.ndarray:
        bits = np.zeros(self.pair_count, dtype=np.uint8)
        for e in G.edges:
            bits[self.pair_index[e]] = 1
        return bits

    def member_batch(self, bits: np.ndarray, c: GraphClass) -> np.ndarray:
        """Membership verdicts for a [B, pair_count] batch of edge vectors."""
        B = bits.shape[0]
        if self.quad_pairs.size:
            qe = bits[:, self.quad_pairs]  # [B, M, 6]
            esum = qe.sum(axis=2, dtype=np.int16)
            deg = qe @ _INC4  # [B, M, 4]
            maxdeg = deg.max(axis=2)
            mindeg = deg.min(axis=2)
            p4 = (esum == 3) & (maxdeg == 2) & (mindeg == 1)
            c4 = (esum == 4) & (maxdeg == 2)
            two_k2 = (esum == 2) & (maxdeg == 1)
        else:
            p4 = c4 = two_k2 = np.zeros((B, 0), dtype=bool)
        if c is GraphClass.QT:
            return ~(c4 | p4).any(axis=1)
        if c is GraphClass.THRESHOLD:
            return ~(c4 | p4 | two_k2).any(axis=1)
        if c is GraphClass.SPLIT:
            if self.five_pairs.size:
                fe = bits[:, self.five_pairs]  # [B, Q, 10]
                deg5 = fe @ _INC5
                c5 = (deg5 == 2).all(axis=2)
                has_c5 = c5.any(axis=1)
            else:
                has_c5 = np.zeros(B, dtype=bool)
            return ~(c4.any(axis=1) | two_k2.any(axis=1) | has_c5)
        if c is GraphClass.P4SPARSE:
            if self.five_quads.size:
                counts = p4.astype(np.int16)[
                    np.arange(B)[:, None, None], self.five_quads[None, :, :]
                ].sum(axis=2)
                return (counts <= 1).all(axis=1)
            return np.ones(B, dtype=bool)
        raise ValueError(c)


_CHUNK = 512


def min_completion(
    G: Graph,
    c: GraphClass,
    protected: tuple[int, int],
    limit: int | None = None,
    max_n: int = 10,
) -> OracleResult:
    """Smallest fill set making ``G`` a member of ``c``, by exhaustive search.

    ``G`` already contains the protected tail edge; that edge is present from
    the start and can never occur among the candidate fills, which are drawn
    from the non-edges only.  Deepening k = 0, 1, 2, ... enumerates k-subsets
    of non-edges in lexicographic order and returns the first member found,
    which breaks ties toward the lexicographically smallest edge list.
    """
    if G.n > max_n:
        raise InstanceTooLargeError(
            f"n={G.n} exceeds the oracle bound {max_n}"
        )
    pu, pw = protected
    pe = (pu, pw) if pu < pw else (pw, pu)
    if pe not in G.edges:
        raise ValueError(f"protected edge {protected} is not an edge of G")
    tables = _SubsetTables.for_n(G.n)
    base = tables.edge_bits(G)
    non_edges = [
        p for p in combinations(range(G.n), 2) if p not in G.edges
    ]
    ne_pids = np.array(
        [tables.pair_index[p] for p in non_edges], dtype=np.int32
    )
    budget = len(non_edges) if limit is None else min(limit, len(non_edges))
    explored = 0
    for k in range(budget + 1):
        combos = combinations(range(len(non_edges)), k)
        while True:
            chunk = list(islice(combos, _CHUNK))
            if not chunk:
                break
            B = len(chunk)
            bits = np.repeat(base[None, :], B, axis=0)
            if k:
                idx = np.array(chunk, dtype=np.int32)
                bits[np.arange(B)[:, None], ne_pids[idx]] = 1
            ok = tables.member_batch(bits, c)
            if ok.any():
                first = int(np.argmax(ok))
                fills = tuple(non_edges[i] for i in chunk[first])
                return OracleResult(k, fills, explored + first + 1)
            explored += B
    raise LimitExceededError(
        f"no {c.value} completion within {budget} fill edges"
    )


def min_completion_for_tail(
    G: Graph,
    c: GraphClass,
    u: int,
    limit: int | None = None,
    max_n: int = 10,
) -> OracleResult:
    """Oracle for the tail instance: attach vertex ``n`` to ``u`` and solve."""
    H = G.with_tail(u)
    return min_completion(H, c, (u, G.n), limit=limit, max_n=max_n)
